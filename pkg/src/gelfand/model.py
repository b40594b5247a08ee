"""The involution module of G(r,p,q,n) and its exact decomposition.

The module has one basis vector per absolute involution of the dual group
G(r,q,p,n).  A group element acts by conjugating the basis involution with
its underlying permutation and scaling by a root of unity built from a
color pairing, an inversion count (symmetric case) or a color transfer
statistic (antisymmetric case).  Everything here is verified rather than
assumed: traces are decomposed against the exact character table and
compared with the combinatorially predicted constituents.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .characters import (
    ClassFunction,
    IrreducibleLabel,
    character_table,
    decompose,
    inner_product,
    label_degree,
)
from .classes import (
    ConjugacyClass,
    InvolutionClassType,
    class_size,
    enumerate_classes,
    enumerate_involution_classes,
    involution_type,
    normal_element,
    predicted_shapes,
)
from .colored import (
    ColoredPermutation,
    ProjectiveElement,
    absolute_conjugate,
    antisymmetric_elements,
    check_group_parameters,
    group_order,
    projective_conjugate,
)
from .cyclotomic import Cyclotomic
from .errors import InconsistencyError, ResourceLimitError

ENUMERATION_GUARD = 10**6


def _lift(x) -> ColoredPermutation:
    return x.rep if isinstance(x, ProjectiveElement) else x


def pairing(g, v) -> int:
    """Color pairing sum_i z_i(g)z_i(v) mod r, computed on lifts.

    Well defined on cosets because each argument's color sum satisfies the
    divisibility the other side's scalar shifts need; that requirement is
    checked, not assumed.
    """
    gl, vl = _lift(g), _lift(v)
    if gl.r != vl.r or gl.n != vl.n:
        raise ValueError("elements live in different groups")
    r = gl.r
    if isinstance(v, ProjectiveElement):
        if (gl.color_sum() * (r // v.q)) % r != 0:
            raise ValueError("pairing is not lift-independent for this pair")
    if isinstance(g, ProjectiveElement):
        if (vl.color_sum() * (r // g.q)) % r != 0:
            raise ValueError("pairing is not lift-independent for this pair")
    return sum(a * b for a, b in zip(gl.colors, vl.colors)) % r


def inv_statistic(g, v) -> int:
    """Number of inversions of |g| located on the 2-cycles of |v|."""
    gl, vl = _lift(g), _lift(v)
    count = 0
    for i in range(1, vl.n + 1):
        j = vl.perm[i - 1]
        if i < j and gl.perm[i - 1] > gl.perm[j - 1]:
            count += 1
    return count


def a_statistic(g, v) -> int:
    """Color transferred past position 1: z_1(v) - z_{|g|^{-1}(1)}(v) mod r."""
    gl, vl = _lift(g), _lift(v)
    source = gl.perm.index(1) + 1
    return (vl.colors[0] - vl.colors[source - 1]) % vl.r


class ModelBasis:
    """Ordered basis of the involution module of G(r,p,q,n).

    elements are the absolute involutions of the dual group G(r,q,p,n) as
    scalar cosets, grouped into blocks by conjugation type; the blocks are
    the submodules M(c), and the symmetric/antisymmetric split gives M0
    and M1.
    """

    __slots__ = ("r", "p", "q", "n", "elements", "types", "blocks", "_index")

    def __init__(self, r, p, q, n, max_order: int = ENUMERATION_GUARD) -> None:
        check_group_parameters(r, p, q, n)
        classes = enumerate_involution_classes(r, p, q, n, max_order)
        elements = []
        blocks = {}
        for ctype, members in classes:
            blocks[ctype] = tuple(
                range(len(elements), len(elements) + len(members))
            )
            elements.extend(members)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "elements", tuple(elements))
        object.__setattr__(self, "types", tuple(ctype for ctype, _ in classes))
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(
            self, "_index", {v: i for i, v in enumerate(elements)}
        )

    def __setattr__(self, *args):
        raise AttributeError("ModelBasis is immutable")

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def scope_indices(self, scope) -> tuple[int, ...]:
        """Basis indices for a scope: 'all', 'M0', 'M1', or one type."""
        if isinstance(scope, InvolutionClassType):
            if scope not in self.blocks:
                raise ValueError("no block with type %s" % scope)
            return self.blocks[scope]
        if scope == "all":
            return tuple(range(self.dimension))
        if scope in ("M0", "M1"):
            kind = "sym" if scope == "M0" else "asym"
            return tuple(
                i
                for ctype in self.types
                if ctype.kind == kind
                for i in self.blocks[ctype]
            )
        raise ValueError("scope must be 'all', 'M0', 'M1' or a type")


class ModelAction:
    """Monomial matrix of one group element on a ModelBasis: basis index i
    maps to perm[i] with coefficient scalars[i]."""

    __slots__ = ("basis", "perm", "scalars")

    def __init__(self, basis, perm, scalars) -> None:
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "perm", tuple(perm))
        object.__setattr__(self, "scalars", tuple(scalars))

    def __setattr__(self, *args):
        raise AttributeError("ModelAction is immutable")

    def compose(self, other: "ModelAction") -> "ModelAction":
        """Action of (this element) * (other element): apply other first."""
        if self.basis is not other.basis:
            raise ValueError("actions live on different bases")
        perm = tuple(self.perm[j] for j in other.perm)
        scalars = tuple(
            other.scalars[i] * self.scalars[other.perm[i]]
            for i in range(len(other.perm))
        )
        return ModelAction(self.basis, perm, scalars)

    def trace(self, indices=None) -> Cyclotomic:
        if indices is None:
            indices = range(len(self.perm))
        total = Cyclotomic.zero(self.basis.r)
        for i in indices:
            if self.perm[i] == i:
                total = total + self.scalars[i]
        return total

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModelAction)
            and self.basis is other.basis
            and self.perm == other.perm
            and all(a == b for a, b in zip(self.scalars, other.scalars))
        )

    __hash__ = None


def _action_scalar(g: ColoredPermutation, v: ProjectiveElement, twist: bool) -> Cyclotomic:
    r = g.r
    kind = v.rep.symmetry_kind()
    if kind == "symmetric":
        value = Cyclotomic.root(r, pairing(g, v))
        if inv_statistic(g, v) % 2:
            value = -value
        return value
    if kind == "antisymmetric":
        exponent = pairing(g, v)
        if twist:
            exponent = (exponent + a_statistic(g, v)) % r
        return Cyclotomic.root(r, exponent)
    raise ValueError("basis element is neither symmetric nor antisymmetric")


def model_action(g, basis: ModelBasis, twist: bool = True) -> ModelAction:
    """The monomial action of g (an element of G(r,p,n) or of the quotient)
    on the involution module."""
    gl = _lift(g)
    if gl.color_sum() % basis.p != 0:
        raise ValueError("element does not lie in the acting group")
    perm = []
    scalars = []
    for v in basis.elements:
        image = projective_conjugate(gl, v)
        perm.append(basis._index[image])
        # the scalar rides on the image so that composition follows the
        # left-first group product; at fixed points image == v, so traces
        # are unaffected
        scalars.append(_action_scalar(gl, image, twist))
    return ModelAction(basis, perm, scalars)


def model_character(basis: ModelBasis, scope="all", twist: bool = True) -> ClassFunction:
    """Trace of the action on a block, as a class function on G(r,p,n).

    Evaluated at the canonical representative of each class; only basis
    vectors fixed by the conjugation contribute their scalar.
    """
    indices = basis.scope_indices(scope)
    values = {}
    for label in enumerate_classes(basis.r, basis.p, basis.n):
        g = normal_element(label)
        total = Cyclotomic.zero(basis.r)
        for i in indices:
            v = basis.elements[i]
            if projective_conjugate(g, v) == v:
                total = total + _action_scalar(g, v, twist)
        values[label] = total
    return ClassFunction(basis.r, basis.p, basis.n, values)


def predicted_labels(ctype: InvolutionClassType) -> tuple[IrreducibleLabel, ...]:
    """Predicted irreducible constituents of the block M(c): the shapes
    combinatorially attached to the type, taking the 0-half on symmetric
    blocks and the 1-half on antisymmetric ones."""
    j = 0 if ctype.kind == "sym" else 1
    labels = [
        IrreducibleLabel(orbit, j if orbit.m > 1 else 0)
        for orbit in predicted_shapes(ctype)
    ]
    labels.sort(key=IrreducibleLabel.sort_key)
    return tuple(labels)


class ClassVerification:
    """Outcome of checking one block M(c) against its prediction."""

    __slots__ = ("ctype", "size", "predicted", "computed", "passed")

    def __init__(self, ctype, size, predicted, computed) -> None:
        object.__setattr__(self, "ctype", ctype)
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "predicted", tuple(predicted))
        object.__setattr__(self, "computed", tuple(computed))
        object.__setattr__(
            self,
            "passed",
            tuple((label, 1) for label in predicted) == tuple(computed),
        )

    def __setattr__(self, *args):
        raise AttributeError("ClassVerification is immutable")

    def to_json(self) -> dict:
        return {
            "class_type": str(self.ctype),
            "class_size": self.size,
            "predicted": [str(label) for label in self.predicted],
            "computed": [
                {"label": str(label), "multiplicity": mult}
                for label, mult in self.computed
            ],
            "pass": self.passed,
        }


class VerificationReport:
    __slots__ = ("r", "p", "q", "n", "entries")

    def __init__(self, r, p, q, n, entries) -> None:
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", tuple(entries))

    def __setattr__(self, *args):
        raise AttributeError("VerificationReport is immutable")

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def to_json(self) -> dict:
        return {
            "acting_group": {"r": self.r, "p": self.p, "q": self.q, "n": self.n},
            "basis_group": {"r": self.r, "p": self.q, "q": self.p, "n": self.n},
            "classes": [entry.to_json() for entry in self.entries],
            "pass": self.passed,
        }


def verify_class_decomposition(
    r: int,
    p: int,
    q: int,
    n: int,
    max_order: int = ENUMERATION_GUARD,
    threads: int = 1,
    only: InvolutionClassType | None = None,
) -> VerificationReport:
    """Decompose every block M(c) and compare with the predicted list.

    Also checks the global consistency anchors: the basis size equals the
    sum of the irreducible degrees, and block sizes sum to the dimension.
    Pass only=type to restrict the report to one block.
    """
    basis = ModelBasis(r, p, q, n, max_order)
    table = character_table(r, p, q, n)
    degree_sum = sum(label_degree(label) for label, _ in table)
    if degree_sum != basis.dimension:
        raise InconsistencyError(
            "model dimension %d differs from total degree %d"
            % (basis.dimension, degree_sum)
        )
    if only is None:
        targets = basis.types
    elif only in basis.blocks:
        targets = (only,)
    else:
        raise ValueError("no involution class of type %s" % only)

    def verify_one(ctype):
        block_char = model_character(basis, ctype)
        computed = decompose(block_char, table)
        return ClassVerification(
            ctype,
            len(basis.blocks[ctype]),
            predicted_labels(ctype),
            computed,
        )

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            entries = list(pool.map(verify_one, targets))
    else:
        entries = [verify_one(ctype) for ctype in targets]
    return VerificationReport(r, p, q, n, entries)


def gelfand_check(
    r: int, p: int, q: int, n: int, max_order: int = ENUMERATION_GUARD
):
    """Multiplicity of every irreducible in the full module.

    Returns (rows, passed): rows lists (IrreducibleLabel, multiplicity) for
    every table row, and passed is True exactly when every multiplicity is 1.
    """
    basis = ModelBasis(r, p, q, n, max_order)
    table = character_table(r, p, q, n)
    full = model_character(basis, "all")
    rows = []
    for label, row in table:
        mult = inner_product(full, row)
        if not mult.is_integer():
            raise InconsistencyError("non-integral multiplicity for %s" % label)
        rows.append((label, mult.integer_value()))
    passed = all(mult == 1 for _, mult in rows)
    return rows, passed


# -- cycle-pairing machinery for the antisymmetric analysis ---------------------------


def pi21_partitions(g: ColoredPermutation):
    """Partitions of g's cycles into singletons and equal-length pairs.

    Each partition is a sorted tuple of parts; a part is a tuple of cycle
    indices into g.cycles().
    """
    cycles = g.cycles()

    def rec(remaining):
        if not remaining:
            yield ()
            return
        first, rest = remaining[0], remaining[1:]
        for tail in rec(rest):
            yield ((first,),) + tail
        for i, other in enumerate(rest):
            if len(cycles[other]) == len(cycles[first]):
                for tail in rec(rest[:i] + rest[i + 1 :]):
                    yield ((first, other),) + tail

    return [tuple(sorted(partition)) for partition in rec(tuple(range(len(cycles))))]


def part_color(g: ColoredPermutation, part) -> int:
    """Total color of the cycles in one part, mod r."""
    cycles = g.cycles()
    return sum(ColoredPermutation.cycle_color(cycles[i]) for i in part) % g.r


def _partition_of(g_cycles, w: ColoredPermutation):
    """The cycle partition an antisymmetric w induces on g's cycles: cycles
    are paired when |w| carries one support onto the other."""
    support_index = {}
    for idx, cyc in enumerate(g_cycles):
        support_index[frozenset(e for e, _ in cyc)] = idx
    parts = set()
    for idx, cyc in enumerate(g_cycles):
        image = frozenset(w.perm[e - 1] for e, _ in cyc)
        other = support_index.get(image)
        if other is None:
            return None
        parts.add(tuple(sorted({idx, other})))
    covered = sorted(i for part in parts for i in part)
    if covered != list(range(len(g_cycles))):
        return None
    return tuple(sorted(parts))


def a_sets(g: ColoredPermutation, eps: int, max_count: int = ENUMERATION_GUARD):
    """Brute-force classification of the antisymmetric elements w with
    |g| w |g|^-1 = (-1)^eps w, grouped by the induced cycle partition.

    Returns a dict partition -> sorted tuple of elements; partitions not
    realized by any w are absent.
    """
    r, n = g.r, g.n
    if r % 2 != 0:
        return {}
    if n % 2 == 0:
        count = r ** (n // 2)
        for k in range(1, n, 2):
            count *= k
        if count > max_count:
            raise ResourceLimitError(
                "antisymmetric enumeration needs %d <= %d" % (count, max_count)
            )
    cycles = g.cycles()
    target_shift = (eps * (r // 2)) % r
    buckets: dict[tuple, list[ColoredPermutation]] = {}
    for w in antisymmetric_elements(r, n):
        conj = absolute_conjugate(g, w)
        if conj.perm != w.perm:
            continue
        if any(
            (cw + target_shift) % r != cc
            for cw, cc in zip(w.colors, conj.colors)
        ):
            continue
        partition = _partition_of(cycles, w)
        if partition is None:
            raise InconsistencyError(
                "an element commuting with |g| must permute its cycles"
            )
        buckets.setdefault(partition, []).append(w)
    return {part: tuple(sorted(ws)) for part, ws in buckets.items()}


def halfway_difference(basis: ModelBasis, label: ConjugacyClass) -> Cyclotomic:
    """Left side of the antisymmetric trace identity: the difference of the
    untwisted and twisted block characters at one class."""
    untwisted = model_character(basis, "M1", twist=False)
    twisted = model_character(basis, "M1", twist=True)
    return untwisted(label) - twisted(label)
