"""End-to-end command line checks: output formats, exit codes,
determinism, and the guard/env-var plumbing."""

import json

import pytest

from gelfand.cli import main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_group_info_tsv(capsys):
    code, out, _ = run(capsys, ["group", "info", "--r", "1", "--p", "1", "--q", "1", "--n", "3"])
    assert code == 0
    rows = [line.split("\t") for line in out.strip().splitlines()]
    assert rows == [["order", "6"], ["classes", "3"], ["irreducibles", "3"]]


def test_group_info_json(capsys):
    code, out, _ = run(
        capsys,
        ["group", "info", "--r", "2", "--p", "2", "--q", "1", "--n", "4", "--json"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["order"] == 192
    assert payload["classes"] == payload["irreducibles"] == 13
    assert payload["group"] == {"r": 2, "p": 2, "q": 1, "n": 4}


def test_group_info_rejects_bad_parameters(capsys):
    code, _, err = run(capsys, ["group", "info", "--r", "4", "--p", "3", "--q", "1", "--n", "2"])
    assert code == 2
    assert "error" in err


def test_usage_error_exit_code(capsys):
    code, _, _ = run(capsys, ["group", "info", "--r", "2"])
    assert code == 2
    code, _, _ = run(capsys, ["no-such-command"])
    assert code == 2


def test_rs_apply_golden(capsys):
    code, out, _ = run(
        capsys, ["rs", "apply", "[3^0,4^1,6^1,2^0,5^2,1^2]", "--r", "3"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["p"] == [[[2], [3]], [[4, 6]], [[1], [5]]]
    assert payload["q"] == [[[1], [4]], [[2, 3]], [[5], [6]]]
    assert payload["shape"] == "((1,1),(2),(1,1))"


def test_rs_apply_malformed_window(capsys):
    code, _, err = run(capsys, ["rs", "apply", "[1^0,1^0]", "--r", "2"])
    assert code == 2
    assert "error" in err


def test_classes_list_tsv(capsys):
    code, out, _ = run(capsys, ["classes", "list", "--r", "2", "--p", "1", "--n", "2"])
    assert code == 0
    rows = [line.split("\t") for line in out.strip().splitlines()]
    assert len(rows) == 5
    assert sum(int(size) for _, size, _ in rows) == 8
    assert ["((1,1),())", "1", "[1^0,2^0]"] in rows


def test_classes_list_json_round_trip(capsys):
    code, out, _ = run(
        capsys, ["classes", "list", "--r", "2", "--p", "2", "--n", "4", "--json"]
    )
    assert code == 0
    payload = json.loads(out)
    halves = [c for c in payload["classes"] if "]^" in c["label"] or c["label"].endswith("^0") or c["label"].endswith("^1")]
    assert len(halves) == 4
    assert sum(c["size"] for c in payload["classes"]) == 192


def test_involutions_list(capsys):
    code, out, _ = run(
        capsys, ["involutions", "list", "--r", "2", "--p", "1", "--q", "1", "--n", "1"]
    )
    assert code == 0
    rows = sorted(line.split("\t") for line in out.strip().splitlines())
    assert [w for w, _ in rows] == ["[1^0]", "[1^1]"]


def test_involutions_list_json_dimension(capsys):
    code, out, _ = run(
        capsys,
        ["involutions", "list", "--r", "2", "--p", "1", "--q", "2", "--n", "4", "--json"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["dimension"] == sum(c["size"] for c in payload["classes"])
    # involutions of B4/+-I: 38 symmetric cosets, 6 antisymmetric
    assert payload["dimension"] == 44
    asym = [c for c in payload["classes"] if c["type"].startswith("asym")]
    assert sum(c["size"] for c in asym) == 6


def test_involutions_types(capsys):
    code, out, _ = run(
        capsys,
        ["involutions", "types", "--r", "2", "--p", "1", "--q", "2", "--n", "6"],
    )
    assert code == 0
    rows = [line.split("\t") for line in out.strip().splitlines()]
    by_type = {row[0]: row for row in rows}
    target = by_type["sym[1,1;1,1]"]
    assert target[1] == "90"
    shapes = set(target[2].split())
    assert shapes == {
        "[((2,1),(2,1))]",
        "[((2,1),(1,1,1))]",
        "[((1,1,1),(1,1,1))]",
    }


def test_chartable_tsv_shape(capsys):
    code, out, _ = run(
        capsys, ["chartable", "--r", "2", "--p", "1", "--q", "1", "--n", "2"]
    )
    assert code == 0
    rows = [line.split("\t") for line in out.strip().splitlines()]
    assert rows[0][0] == "class"
    assert rows[1][0] == "size"
    assert len(rows) == 2 + 5
    assert all(len(row) == 6 for row in rows)


def test_chartable_json(capsys):
    code, out, _ = run(
        capsys,
        ["chartable", "--r", "2", "--p", "2", "--q", "1", "--n", "2", "--json"],
    )
    assert code == 0
    payload = json.loads(out)
    assert sum(row["degree"] ** 2 for row in payload["rows"]) == 4
    for row in payload["rows"]:
        assert len(row["values"]) == len(payload["classes"])


def test_model_decompose_single_class(capsys):
    code, out, _ = run(
        capsys,
        [
            "model", "decompose",
            "--r", "2", "--p", "1", "--q", "2", "--n", "6",
            "--class", "sym[1,1;1,1]",
        ],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    assert payload["acting_group"] == {"r": 2, "p": 2, "q": 1, "n": 6}
    assert payload["basis_group"] == {"r": 2, "p": 1, "q": 2, "n": 6}
    (entry,) = payload["classes"]
    assert entry["class_size"] == 90
    assert entry["pass"] is True
    assert entry["predicted"] == [
        "[((2,1),(2,1))]^0",
        "[((2,1),(1,1,1))]",
        "[((1,1,1),(1,1,1))]^0",
    ]
    assert [row["label"] for row in entry["computed"]] == entry["predicted"]


def test_model_decompose_full_small(capsys):
    code, out, _ = run(
        capsys, ["model", "decompose", "--r", "2", "--p", "2", "--q", "1", "--n", "4"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    assert all(entry["pass"] for entry in payload["classes"])


def test_model_decompose_threads_flag(capsys):
    code_serial, out_serial, _ = run(
        capsys, ["model", "decompose", "--r", "3", "--p", "1", "--q", "1", "--n", "3"]
    )
    code_threaded, out_threaded, _ = run(
        capsys,
        ["model", "decompose", "--r", "3", "--p", "1", "--q", "1", "--n", "3", "--threads", "4"],
    )
    assert code_serial == code_threaded == 0
    assert out_serial == out_threaded
    code_bad, _, _ = run(
        capsys,
        ["model", "decompose", "--r", "2", "--p", "1", "--q", "1", "--n", "2", "--threads", "0"],
    )
    assert code_bad == 2


def test_model_decompose_unknown_class(capsys):
    code, _, err = run(
        capsys,
        [
            "model", "decompose",
            "--r", "2", "--p", "2", "--q", "1", "--n", "4",
            "--class", "sym[3,1;0,0]",  # odd color sum: not in the dual
        ],
    )
    assert code == 2
    assert "error" in err


def test_model_gelfand_check(capsys):
    code, out, _ = run(
        capsys, ["model", "gelfand-check", "--r", "2", "--p", "2", "--q", "1", "--n", "4"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    assert payload["acting_group"] == {"r": 2, "p": 1, "q": 2, "n": 4}
    assert all(row["multiplicity"] == 1 for row in payload["irreducibles"])
    assert sum(row["degree"] for row in payload["irreducibles"]) == 44


def test_guard_flag(capsys):
    code, _, err = run(
        capsys,
        [
            "involutions", "list",
            "--r", "2", "--p", "1", "--q", "1", "--n", "4",
            "--max-group-order", "10",
        ],
    )
    assert code == 2
    assert "resource limit" in err


def test_guard_env_variable(capsys, monkeypatch):
    monkeypatch.setenv("MODEL_MAX_ORDER", "10")
    code, _, err = run(
        capsys, ["involutions", "list", "--r", "2", "--p", "1", "--q", "1", "--n", "4"]
    )
    assert code == 2
    assert "resource limit" in err
    # explicit flag wins over the environment
    monkeypatch.setenv("MODEL_MAX_ORDER", "10")
    code, out, _ = run(
        capsys,
        [
            "involutions", "list",
            "--r", "2", "--p", "1", "--q", "1", "--n", "4",
            "--max-group-order", "1000000",
        ],
    )
    assert code == 0 and out
    monkeypatch.setenv("MODEL_MAX_ORDER", "not-a-number")
    code, _, err = run(
        capsys, ["involutions", "list", "--r", "2", "--p", "1", "--q", "1", "--n", "4"]
    )
    assert code == 2


def test_output_is_deterministic(capsys):
    argv = ["involutions", "types", "--r", "2", "--p", "2", "--q", "1", "--n", "4", "--json"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second


def test_gcd_guard_exit_code(capsys):
    code, _, err = run(
        capsys, ["chartable", "--r", "3", "--p", "3", "--q", "1", "--n", "3"]
    )
    assert code == 2
    assert "error" in err
