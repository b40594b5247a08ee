"""Command line surface for the involution-module toolkit.

Conventions shared by every subcommand:
  - tabular commands print TSV and switch to JSON with --json; rs and
    model commands print JSON always
  - JSON payloads carry a schema version field
  - exact values render in cyclotomic monomial form
  - exit status 0 on success, 1 when a verification reports failure,
    2 on usage errors and resource-guard violations

For involutions and model subcommands, --r/--p/--q/--n describe the
group whose absolute involutions span the module; that module is a
representation of the dual group, obtained by exchanging p and q.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .characters import character_table, irreducible_count, label_degree
from .classes import (
    InvolutionClassType,
    class_size,
    enumerate_classes,
    enumerate_involution_classes,
    normal_element,
    predicted_shapes,
)
from .colored import check_group_parameters, group_order, parse_window
from .errors import (
    InconsistencyError,
    ResourceLimitError,
    UnsupportedGroupError,
)
from .model import gelfand_check, verify_class_decomposition
from .rs import rs
from .shapes import multitableau_json, multitableau_shape, shape_str

SCHEMA = 1
DEFAULT_MAX_ORDER = 10**6


def _resolve_max_order(args) -> int:
    if getattr(args, "max_group_order", None) is not None:
        return args.max_group_order
    env = os.environ.get("MODEL_MAX_ORDER")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError("MODEL_MAX_ORDER must be an integer, got %r" % env)
    return DEFAULT_MAX_ORDER


def _emit_rows(rows) -> None:
    for row in rows:
        sys.stdout.write("\t".join(str(cell) for cell in row) + "\n")


def _emit_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _group_dict(r, p, q, n) -> dict:
    return {"r": r, "p": p, "q": q, "n": n}


def _cmd_group_info(args) -> int:
    check_group_parameters(args.r, args.p, args.q, args.n)
    order = group_order(args.r, args.p, args.q, args.n)
    # for any finite group these two counts agree; both come from labels
    count = irreducible_count(args.r, args.p, args.q, args.n)
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA,
                "group": _group_dict(args.r, args.p, args.q, args.n),
                "order": order,
                "classes": count,
                "irreducibles": count,
            }
        )
    else:
        _emit_rows(
            [("order", order), ("classes", count), ("irreducibles", count)]
        )
    return 0


def _involution_classes(args):
    check_group_parameters(args.r, args.p, args.q, args.n)
    # elements live in G(r,p,q,n); the enumerator takes the dual's view
    return enumerate_involution_classes(
        args.r, args.q, args.p, args.n, _resolve_max_order(args)
    )


def _cmd_involutions_list(args) -> int:
    classes = _involution_classes(args)
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA,
                "group": _group_dict(args.r, args.p, args.q, args.n),
                "classes": [
                    {
                        "type": str(ctype),
                        "size": len(members),
                        "members": [v.rep.window_str() for v in members],
                    }
                    for ctype, members in classes
                ],
                "dimension": sum(len(members) for _, members in classes),
            }
        )
    else:
        _emit_rows(
            (v.rep.window_str(), str(ctype))
            for ctype, members in classes
            for v in members
        )
    return 0


def _cmd_involutions_types(args) -> int:
    classes = _involution_classes(args)
    predicted = {
        ctype: sorted(predicted_shapes(ctype)) for ctype, _ in classes
    }
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA,
                "group": _group_dict(args.r, args.p, args.q, args.n),
                "types": [
                    {
                        "type": str(ctype),
                        "size": len(members),
                        "predicted": [str(orbit) for orbit in predicted[ctype]],
                    }
                    for ctype, members in classes
                ],
            }
        )
    else:
        _emit_rows(
            (
                str(ctype),
                len(members),
                " ".join(str(orbit) for orbit in predicted[ctype]),
            )
            for ctype, members in classes
        )
    return 0


def _cmd_rs_apply(args) -> int:
    g = parse_window(args.window, args.r)
    p_tab, q_tab = rs(g)
    _emit_json(
        {
            "schema": SCHEMA,
            "r": args.r,
            "window": g.window_str(),
            "p": multitableau_json(p_tab),
            "q": multitableau_json(q_tab),
            "shape": shape_str(multitableau_shape(p_tab)),
        }
    )
    return 0


def _cmd_classes_list(args) -> int:
    labels = enumerate_classes(args.r, args.p, args.n)
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA,
                "group": {"r": args.r, "p": args.p, "n": args.n},
                "classes": [
                    {
                        "label": str(label),
                        "size": class_size(label),
                        "normal": normal_element(label).window_str(),
                    }
                    for label in labels
                ],
            }
        )
    else:
        _emit_rows(
            (str(label), class_size(label), normal_element(label).window_str())
            for label in labels
        )
    return 0


def _cmd_chartable(args) -> int:
    table = character_table(args.r, args.p, args.q, args.n)
    labels = enumerate_classes(args.r, args.p, args.n)
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA,
                "group": _group_dict(args.r, args.p, args.q, args.n),
                "classes": [
                    {"label": str(c), "size": class_size(c)} for c in labels
                ],
                "rows": [
                    {
                        "label": str(row_label),
                        "degree": label_degree(row_label),
                        "values": [str(row(c)) for c in labels],
                    }
                    for row_label, row in table
                ],
            }
        )
    else:
        rows = [
            ("class",) + tuple(str(c) for c in labels),
            ("size",) + tuple(class_size(c) for c in labels),
        ]
        rows += [
            (str(row_label),) + tuple(str(row(c)) for c in labels)
            for row_label, row in table
        ]
        _emit_rows(rows)
    return 0


def _cmd_model_decompose(args) -> int:
    if args.threads < 1:
        raise ValueError("--threads must be at least 1")
    only = None
    if args.cls is not None:
        only = InvolutionClassType.parse(args.cls, args.r, args.q)
    report = verify_class_decomposition(
        args.r,
        args.q,
        args.p,
        args.n,
        max_order=_resolve_max_order(args),
        threads=args.threads,
        only=only,
    )
    payload = {"schema": SCHEMA}
    payload.update(report.to_json())
    _emit_json(payload)
    return 0 if report.passed else 1


def _cmd_model_gelfand_check(args) -> int:
    rows, passed = gelfand_check(
        args.r, args.q, args.p, args.n, _resolve_max_order(args)
    )
    _emit_json(
        {
            "schema": SCHEMA,
            "acting_group": _group_dict(args.r, args.q, args.p, args.n),
            "basis_group": _group_dict(args.r, args.p, args.q, args.n),
            "irreducibles": [
                {
                    "label": str(label),
                    "degree": label_degree(label),
                    "multiplicity": mult,
                }
                for label, mult in rows
            ],
            "pass": passed,
        }
    )
    return 0 if passed else 1


def _add_group_flags(cmd, with_q: bool = True) -> None:
    cmd.add_argument("--r", type=int, required=True, help="color order")
    cmd.add_argument("--p", type=int, required=True, help="color-sum divisor")
    if with_q:
        cmd.add_argument(
            "--q", type=int, required=True, help="scalar quotient order"
        )
    cmd.add_argument("--n", type=int, required=True, help="number of letters")


def _add_guard_flag(cmd) -> None:
    cmd.add_argument(
        "--max-group-order",
        type=int,
        default=None,
        help="enumeration guard on r^n*n! (default %d, or MODEL_MAX_ORDER)"
        % DEFAULT_MAX_ORDER,
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gelfand",
        description="exact involution-module computations for complex "
        "reflection groups G(r,p,q,n)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    group = sub.add_parser("group", help="group-level facts")
    group_sub = group.add_subparsers(dest="subcommand", required=True)
    info = group_sub.add_parser(
        "info", help="order, class count and irreducible count"
    )
    _add_group_flags(info)
    info.add_argument("--json", action="store_true")
    info.set_defaults(handler=_cmd_group_info)

    inv = sub.add_parser(
        "involutions",
        help="absolute involutions of G(r,p,q,n) and their class types",
    )
    inv_sub = inv.add_subparsers(dest="subcommand", required=True)
    inv_list = inv_sub.add_parser("list", help="one row per involution")
    inv_types = inv_sub.add_parser(
        "types", help="one row per class type, with predicted shapes"
    )
    for cmd in (inv_list, inv_types):
        _add_group_flags(cmd)
        _add_guard_flag(cmd)
        cmd.add_argument("--json", action="store_true")
    inv_list.set_defaults(handler=_cmd_involutions_list)
    inv_types.set_defaults(handler=_cmd_involutions_types)

    rs_cmd = sub.add_parser("rs", help="insertion correspondence")
    rs_sub = rs_cmd.add_subparsers(dest="subcommand", required=True)
    rs_apply = rs_sub.add_parser(
        "apply", help="insert a window, print the tableau pair as JSON"
    )
    rs_apply.add_argument("window", help="window notation, e.g. [2^0,1^1]")
    rs_apply.add_argument("--r", type=int, required=True, help="color order")
    rs_apply.set_defaults(handler=_cmd_rs_apply)

    classes_cmd = sub.add_parser("classes", help="conjugacy classes of G(r,p,n)")
    classes_sub = classes_cmd.add_subparsers(dest="subcommand", required=True)
    classes_list = classes_sub.add_parser(
        "list", help="label, size and canonical representative per class"
    )
    _add_group_flags(classes_list, with_q=False)
    classes_list.add_argument("--json", action="store_true")
    classes_list.set_defaults(handler=_cmd_classes_list)

    chartable = sub.add_parser(
        "chartable", help="exact irreducible character table of G(r,p,q,n)"
    )
    _add_group_flags(chartable)
    chartable.add_argument("--json", action="store_true")
    chartable.set_defaults(handler=_cmd_chartable)

    model = sub.add_parser(
        "model",
        help="build the involution module and verify its decomposition",
    )
    model_sub = model.add_subparsers(dest="subcommand", required=True)
    decompose_cmd = model_sub.add_parser(
        "decompose",
        help="per-class-type decomposition report, checked against the "
        "predicted constituents",
    )
    _add_group_flags(decompose_cmd)
    _add_guard_flag(decompose_cmd)
    decompose_cmd.add_argument(
        "--class",
        dest="cls",
        default=None,
        help="restrict to one class type, e.g. 'sym[1,1;1,1]'",
    )
    decompose_cmd.add_argument(
        "--threads", type=int, default=1, help="parallel class verifications"
    )
    decompose_cmd.set_defaults(handler=_cmd_model_decompose)
    check_cmd = model_sub.add_parser(
        "gelfand-check",
        help="multiplicity of every irreducible in the full module",
    )
    _add_group_flags(check_cmd)
    _add_guard_flag(check_cmd)
    check_cmd.set_defaults(handler=_cmd_model_gelfand_check)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except (UnsupportedGroupError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print("resource limit: %s" % exc, file=sys.stderr)
        return 2
    except InconsistencyError as exc:
        print("inconsistency: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
