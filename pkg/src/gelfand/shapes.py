"""Multipartitions, shift orbits, and standard multitableaux.

A shape for G(r,n) is an r-tuple of integer partitions with n boxes in
total, stored as a tuple of tuples.  Shapes index both conjugacy classes
and irreducible representations of G(r,n).  For the subgroup and quotient
constructions the relevant index sets are orbits of shapes under the
cyclic shift of components by r/p; ShapeOrbit packages an orbit together
with its stabilizer order m_p.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .errors import ResourceLimitError

Shape = tuple  # tuple of partitions, each a weakly decreasing tuple of ints

STANDARD_ENUMERATION_LIMIT = 12


@lru_cache(maxsize=None)
def partitions(k: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of k as weakly decreasing tuples, lexicographically
    greatest first ((k) first, (1,...,1) last)."""
    if k < 0:
        raise ValueError("cannot partition a negative integer")

    def rec(total, cap):
        if total == 0:
            yield ()
            return
        for first in range(min(total, cap), 0, -1):
            for rest in rec(total - first, first):
                yield (first,) + rest

    return tuple(rec(k, k))


def validate_shape(shape: Shape) -> None:
    for comp in shape:
        for a, b in zip(comp, comp[1:]):
            if a < b:
                raise ValueError("partition parts must be weakly decreasing")
        if comp and comp[-1] < 1:
            raise ValueError("partition parts must be positive")


def shape_size(shape: Shape) -> int:
    return sum(sum(comp) for comp in shape)


def shape_color(shape: Shape) -> int:
    """z(shape) = sum over components of i * |component i|."""
    return sum(i * sum(comp) for i, comp in enumerate(shape))


def shape_key(shape: Shape):
    """Deterministic sort key: component sizes first, then parts with larger
    parts sorting earlier (so ((2,1),(1,1,1)) precedes ((1,1,1),(2,1)))."""
    sizes = tuple(sum(comp) for comp in shape)
    negated = tuple(tuple(-part for part in comp) for comp in shape)
    return (sizes, negated)


def shape_str(shape: Shape) -> str:
    return "(" + ",".join(
        "(" + ",".join(str(part) for part in comp) + ")" for comp in shape
    ) + ")"


def shape_shift(shape: Shape, s: int) -> Shape:
    """Rotate components right by s: component i of the result is
    component (i - s) mod r of the input."""
    r = len(shape)
    return tuple(shape[(i - s) % r] for i in range(r))


def enumerate_shapes(r: int, n: int, q: int = 1) -> list[Shape]:
    """All r-tuples of partitions with n boxes and color divisible by q."""
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")

    def rec(i, remaining):
        if i == r - 1:
            for lam in partitions(remaining):
                yield (lam,)
            return
        for k in range(remaining + 1):
            for lam in partitions(k):
                for rest in rec(i + 1, remaining - k):
                    yield (lam,) + rest

    out = [s for s in rec(0, n) if shape_color(s) % q == 0]
    out.sort(key=shape_key)
    return out


class ShapeOrbit:
    """Orbit of a shape under component shift by r/p steps.

    m is the number of shifts fixing the shape (the stabilizer order in the
    shift group of order p); the orbit has p/m distinct members.
    """

    __slots__ = ("p", "canonical", "members", "m")

    def __init__(self, shape: Shape, p: int) -> None:
        validate_shape(shape)
        r = len(shape)
        if p < 1 or r % p != 0:
            raise ValueError("p must divide the number of components")
        step = r // p
        seen = []
        for k in range(p):
            member = shape_shift(shape, k * step)
            if member not in seen:
                seen.append(member)
        members = tuple(sorted(seen, key=shape_key))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "canonical", members[0])
        object.__setattr__(self, "m", p // len(members))

    def __setattr__(self, *args):
        raise AttributeError("ShapeOrbit is immutable")

    @property
    def r(self) -> int:
        return len(self.canonical)

    @property
    def n(self) -> int:
        return shape_size(self.canonical)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ShapeOrbit)
            and self.p == other.p
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((self.p, self.members))

    def __lt__(self, other: "ShapeOrbit") -> bool:
        return shape_key(self.canonical) < shape_key(other.canonical)

    def __str__(self) -> str:
        return "[" + shape_str(self.canonical) + "]"

    def __repr__(self) -> str:
        return "ShapeOrbit(p=%d, %s)" % (self.p, self)


def orbit_of(shape: Shape, p: int) -> ShapeOrbit:
    return ShapeOrbit(tuple(tuple(comp) for comp in shape), p)


def m_p(shape: Shape, p: int) -> int:
    return ShapeOrbit(shape, p).m


def enumerate_orbits(r: int, n: int, p: int, q: int = 1) -> list[ShapeOrbit]:
    """All shift orbits on the shapes of Fer(r,n) with color divisible by q."""
    seen = set()
    out = []
    for shape in enumerate_shapes(r, n, q):
        orb = ShapeOrbit(shape, p)
        if orb not in seen:
            seen.add(orb)
            out.append(orb)
    out.sort()
    return out


# -- counting ------------------------------------------------------------------


def conjugate_partition(comp) -> tuple[int, ...]:
    if not comp:
        return ()
    return tuple(
        sum(1 for part in comp if part >= j) for j in range(1, comp[0] + 1)
    )


def odd_columns(comp) -> int:
    """Number of columns of odd length in the Young diagram."""
    return sum(1 for col in conjugate_partition(comp) if col % 2 == 1)


def hook_lengths(comp) -> list[list[int]]:
    conj = conjugate_partition(comp)
    return [
        [comp[i] - (j + 1) + conj[j] - (i + 1) + 1 for j in range(comp[i])]
        for i in range(len(comp))
    ]


@lru_cache(maxsize=None)
def count_standard_tableaux(comp: tuple[int, ...]) -> int:
    """Hook length formula for a single partition."""
    m = sum(comp)
    denom = 1
    for row in hook_lengths(comp):
        for h in row:
            denom *= h
    return factorial(m) // denom


def count_standard(shape_or_orbit) -> int:
    """Number of standard fillings.

    For a plain shape: multinomial over component sizes times the product of
    hook-length counts.  For a ShapeOrbit: fillings of the orbit's shapes
    modulo simultaneous component shift; the shift acts freely on fillings,
    so this equals the plain count of any member divided by m.
    """
    if isinstance(shape_or_orbit, ShapeOrbit):
        total = count_standard(shape_or_orbit.canonical)
        if total % shape_or_orbit.m != 0:
            raise ArithmeticError("orbit filling count was not divisible by m")
        return total // shape_or_orbit.m
    shape = shape_or_orbit
    validate_shape(shape)
    n = shape_size(shape)
    count = factorial(n)
    for comp in shape:
        count //= factorial(sum(comp))
    for comp in shape:
        count *= count_standard_tableaux(tuple(comp))
    return count


# -- standard multitableaux -------------------------------------------------------


def enumerate_standard(shape: Shape) -> list[tuple]:
    """All standard fillings of the shape with 1..n, rows and columns
    increasing within every component.

    Each filling is a tuple of components, a component being a tuple of row
    tuples.  Guarded to n <= 12.
    """
    validate_shape(shape)
    n = shape_size(shape)
    if n > STANDARD_ENUMERATION_LIMIT:
        raise ResourceLimitError(
            "standard filling enumeration is limited to %d boxes (asked for %d)"
            % (STANDARD_ENUMERATION_LIMIT, n)
        )

    def corners(rows_filled, comp_shape):
        """Row indices where the next-smaller entry could be removed: cells
        (i, rows_filled[i]-1) with rows_filled[i] > rows_filled[i+1]."""
        out = []
        for i, filled in enumerate(rows_filled):
            if filled == 0:
                continue
            if i + 1 < len(rows_filled) and rows_filled[i + 1] == filled:
                continue
            out.append(i)
        return out

    def rec(entry, profiles):
        # profiles: per component, tuple of filled-row lengths
        if entry == 0:
            yield tuple(() for _ in shape)
            return
        for c, prof in enumerate(profiles):
            for i in corners(prof, shape[c]):
                new_prof = list(prof)
                new_prof[i] -= 1
                new_profiles = profiles[:c] + (tuple(new_prof),) + profiles[c + 1 :]
                for partial in rec(entry - 1, new_profiles):
                    # place `entry` at the end of row i of component c
                    comp_rows = [list(row) for row in partial[c]]
                    while len(comp_rows) <= i:
                        comp_rows.append([])
                    comp_rows[i].append(entry)
                    filled = tuple(tuple(row) for row in comp_rows)
                    yield partial[:c] + (filled,) + partial[c + 1 :]

    # profiles hold the row lengths still to fill, starting at the full shape
    start = tuple(tuple(comp) for comp in shape)
    result = []
    for filling in rec(n, start):
        fixed = tuple(
            tuple(tuple(row) for row in compo if row) for compo in filling
        )
        result.append(fixed)
    result.sort()
    return result


def tableau_shape(component) -> tuple[int, ...]:
    return tuple(len(row) for row in component)


def multitableau_shape(tab) -> Shape:
    return tuple(tableau_shape(comp) for comp in tab)


def multitableau_shift(tab, s: int):
    r = len(tab)
    return tuple(tab[(i - s) % r] for i in range(r))


def multitableau_str(tab) -> str:
    return "(" + ",".join(
        "[" + ";".join(",".join(str(e) for e in row) for row in comp) + "]"
        for comp in tab
    ) + ")"


def multitableau_json(tab):
    return [[list(row) for row in comp] for comp in tab]
