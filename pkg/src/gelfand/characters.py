"""Exact character theory for G(r,p,n) and its quotients.

Symmetric-group characters come from the border-strip recursion on beta
numbers.  Characters of the wreath product G(r,n) are evaluated by running
the induced-character sum over ordered set partitions, grouped by the
assignment of cycles to color components.  For split representations of
G(r,p,n) (stabilized shapes when GCD(p,n) = 2) the two constituents are
reconstructed from the restricted character and the closed-form difference
character.

All values are exact elements of Q(zeta_r).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd

from .classes import ConjugacyClass, class_size, enumerate_classes
from .colored import check_group_parameters
from .cyclotomic import Cyclotomic
from .errors import InconsistencyError, UnsupportedGroupError
from .shapes import (
    Shape,
    ShapeOrbit,
    count_standard,
    enumerate_orbits,
    shape_key,
    shape_size,
    validate_shape,
)


def _beta_to_partition(beta: tuple[int, ...]) -> tuple[int, ...]:
    length = len(beta)
    parts = tuple(b - (length - 1 - i) for i, b in enumerate(beta))
    return tuple(part for part in parts if part > 0)


@lru_cache(maxsize=None)
def sym_character(lam: tuple[int, ...], alpha: tuple[int, ...]) -> int:
    """Symmetric-group character value chi_lam(alpha), by removing a border
    strip of the largest cycle length at each step."""
    if sum(lam) != sum(alpha):
        raise ValueError("partition sizes differ")
    if not alpha:
        return 1
    k, rest = alpha[0], alpha[1:]
    length = len(lam)
    beta = tuple(lam[i] + (length - 1 - i) for i in range(length))
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in beta:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = tuple(sorted((c for c in beta if c != b), reverse=True))
        new_beta = tuple(sorted(new_beta + (nb,), reverse=True))
        total += (-1) ** height * sym_character(_beta_to_partition(new_beta), rest)
    return total


def _cycle_items(alpha: Shape) -> list[tuple[int, int, int]]:
    """Distinct (length, color, multiplicity) triples of a class label."""
    items = []
    for color, comp in enumerate(alpha):
        mult: dict[int, int] = {}
        for part in comp:
            mult[part] = mult.get(part, 0) + 1
        for length, m in sorted(mult.items(), reverse=True):
            items.append((length, color, m))
    return items


@lru_cache(maxsize=None)
def _wreath_character_raw(lam: Shape, alpha: Shape) -> tuple:
    """Exponent -> integer weight table for the induced-character sum.

    The sum runs over ordered set partitions of [n] into color blocks of
    sizes |lam^(i)| that are unions of cycles; grouping by which cycles land
    in which block turns it into a sum over distributions of the cycle
    multiset, weighted by multinomial coefficients.  Each distribution
    contributes zeta_r^(sum_i i*colors_i) times the product of
    symmetric-group characters on the per-block cycle lengths.
    """
    r = len(lam)
    capacities = [sum(comp) for comp in lam]
    items = _cycle_items(alpha)
    weights: dict[int, int] = {}
    lengths: list[list[int]] = [[] for _ in range(r)]
    color_sums = [0] * r

    def push(i, length, color, count):
        capacities[i] -= count * length
        lengths[i].extend([length] * count)
        color_sums[i] += count * color

    def pop(i, length, color, count):
        capacities[i] += count * length
        if count:
            del lengths[i][-count:]
        color_sums[i] -= count * color

    def terminal(coefficient):
        factor = coefficient
        for i in range(r):
            factor *= sym_character(
                tuple(lam[i]), tuple(sorted(lengths[i], reverse=True))
            )
            if factor == 0:
                return
        exponent = sum(i * color_sums[i] for i in range(r)) % r
        weights[exponent] = weights.get(exponent, 0) + factor

    def assign(idx, coefficient):
        if idx == len(items):
            terminal(coefficient)
            return
        length, color, mult = items[idx]

        def distribute(i, left, coeff):
            if i == r - 1:
                if left * length > capacities[i]:
                    return
                push(i, length, color, left)
                assign(idx + 1, coeff)
                pop(i, length, color, left)
                return
            for take in range(min(left, capacities[i] // length) + 1):
                push(i, length, color, take)
                distribute(i + 1, left - take, coeff * comb(left, take))
                pop(i, length, color, take)

        distribute(0, mult, coefficient)

    assign(0, 1)
    return tuple(sorted(weights.items()))


def wreath_character(lam: Shape, alpha) -> Cyclotomic:
    """Character of the irreducible G(r,n)-representation indexed by lam at
    the class labeled alpha (a shape, or a class label whose shape is
    taken)."""
    if isinstance(alpha, ConjugacyClass):
        alpha = alpha.alpha
    validate_shape(lam)
    validate_shape(alpha)
    if len(lam) != len(alpha):
        raise ValueError("label and class need the same number of colors")
    if shape_size(lam) != shape_size(alpha):
        raise ValueError("label and class sizes differ")
    r = len(lam)
    value = Cyclotomic.zero(r)
    for exponent, weight in _wreath_character_raw(lam, alpha):
        value = value + Cyclotomic.root(r, exponent) * weight
    return value


def delta1(mu: Shape, label: ConjugacyClass) -> Cyclotomic:
    """Difference character attached to a half-turn-symmetric shape,
    evaluated at a class of G(r,p,n): zero off the split classes, and
    (-1)^half 2^(number of cycles) times a smaller wreath character value on
    them."""
    r = label.r
    if r % 2 != 0:
        raise ValueError("difference character needs an even color count")
    rp = r // 2
    if len(mu) != rp:
        raise ValueError("expected one component per even color")
    if 2 * shape_size(mu) != label.n:
        raise ValueError("shape size must be half the class size")
    if label.half is None:
        return Cyclotomic.zero(r)
    halved = tuple(
        tuple(part // 2 for part in label.alpha[2 * i]) for i in range(rp)
    )
    cycle_count = sum(len(comp) for comp in halved)
    value = wreath_character(tuple(mu), halved).to_order(r)
    return value * ((-1) ** label.half * 2**cycle_count)


class ClassFunction:
    """Exact class function on G(r,p,n), stored by class label."""

    __slots__ = ("r", "p", "n", "values")

    def __init__(self, r: int, p: int, n: int, values: dict) -> None:
        domain = set(enumerate_classes(r, p, n))
        if set(values) != domain:
            raise ValueError("values must cover every class exactly once")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "values", dict(values))

    def __setattr__(self, *args):
        raise AttributeError("ClassFunction is immutable")

    def __call__(self, label: ConjugacyClass) -> Cyclotomic:
        return self.values[label]

    def _same_group(self, other: "ClassFunction") -> None:
        if (self.r, self.p, self.n) != (other.r, other.p, other.n):
            raise ValueError("class functions live on different groups")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._same_group(other)
        return ClassFunction(
            self.r, self.p, self.n,
            {c: v + other.values[c] for c, v in self.values.items()},
        )

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._same_group(other)
        return ClassFunction(
            self.r, self.p, self.n,
            {c: v - other.values[c] for c, v in self.values.items()},
        )

    def scale(self, factor) -> "ClassFunction":
        return ClassFunction(
            self.r, self.p, self.n,
            {c: v * factor for c, v in self.values.items()},
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return (
            (self.r, self.p, self.n) == (other.r, other.p, other.n)
            and all(v == other.values[c] for c, v in self.values.items())
        )

    __hash__ = None

    def degree(self) -> Cyclotomic:
        identity = ConjugacyClass(
            self.r, self.p, (((1,) * self.n,) + ((),) * (self.r - 1))
        )
        return self.values[identity]


class IrreducibleLabel:
    """Name of an irreducible representation of G(r,p,q,n): a shift orbit
    of shapes plus an index distinguishing split constituents."""

    __slots__ = ("orbit", "j")

    def __init__(self, orbit: ShapeOrbit, j: int = 0) -> None:
        if not 0 <= j < orbit.m:
            raise ValueError("split index out of range for this orbit")
        object.__setattr__(self, "orbit", orbit)
        object.__setattr__(self, "j", j)

    def __setattr__(self, *args):
        raise AttributeError("IrreducibleLabel is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IrreducibleLabel)
            and self.orbit == other.orbit
            and self.j == other.j
        )

    def __hash__(self) -> int:
        return hash((self.orbit, self.j))

    def sort_key(self):
        return (shape_key(self.orbit.canonical), self.j)

    def __lt__(self, other: "IrreducibleLabel") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        text = str(self.orbit)
        if self.orbit.m > 1:
            text += "^%d" % self.j
        return text

    def __repr__(self) -> str:
        return "IrreducibleLabel(%s)" % self


def character_table(r: int, p: int, q: int, n: int):
    """Irreducible characters of G(r,p,q,n), as class functions on the
    subgroup G(r,p,n) (constant on scalar cosets, so no information is
    lost in the quotient).

    Returns a list of (IrreducibleLabel, ClassFunction) pairs.  Unsplit
    rows restrict a wreath-product character; split rows are cut out of the
    restriction with the difference character.
    """
    check_group_parameters(r, p, q, n)
    if gcd(p, n) not in (1, 2):
        raise UnsupportedGroupError(
            "character tables require GCD(p,n) in {1,2}, got %d" % gcd(p, n)
        )
    classes = enumerate_classes(r, p, n)
    rows = []
    for orbit in enumerate_orbits(r, n, p, q):
        lam = orbit.canonical
        restricted = {c: wreath_character(lam, c.alpha) for c in classes}
        if orbit.m == 1:
            rows.append(
                (
                    IrreducibleLabel(orbit, 0),
                    ClassFunction(r, p, n, restricted),
                )
            )
            continue
        mu = lam[: r // 2]
        difference = {c: delta1(mu, c) for c in classes}
        half = Fraction(1, 2)
        for j in (0, 1):
            sign = (-1) ** j
            values = {
                c: (restricted[c] + difference[c] * sign) * half for c in classes
            }
            rows.append((IrreducibleLabel(orbit, j), ClassFunction(r, p, n, values)))
    expected_squares = r**n * factorial(n) // (p * q)
    total_squares = 0
    for label, row in rows:
        degree = row.degree()
        if not degree.is_integer():
            raise InconsistencyError("non-integral degree for %s" % label)
        deg = degree.integer_value()
        if deg != count_standard(label.orbit):
            raise InconsistencyError(
                "degree of %s differs from its standard filling count" % label
            )
        total_squares += deg * deg
    if total_squares != expected_squares:
        raise InconsistencyError(
            "degree squares sum to %d, expected the group order %d"
            % (total_squares, expected_squares)
        )
    if q == 1 and len(rows) != len(classes):
        raise InconsistencyError(
            "table is not square: %d rows, %d classes" % (len(rows), len(classes))
        )
    return rows


def inner_product(f: ClassFunction, g: ClassFunction) -> Cyclotomic:
    """Hermitian inner product (1/|G|) sum over classes of size*f*conj(g),
    taken over G(r,p,n)."""
    f._same_group(g)
    order = f.r**f.n * factorial(f.n) // f.p
    total = Cyclotomic.zero(f.r)
    for label, value in f.values.items():
        total = total + value * g.values[label].conjugate() * class_size(label)
    return total / order


def decompose(f: ClassFunction, table) -> list[tuple[IrreducibleLabel, int]]:
    """Multiplicities of each irreducible in a character, with exactness
    checks: every multiplicity must be a nonnegative integer and the
    weighted rows must reassemble f."""
    result = []
    reassembled = None
    for label, row in table:
        product = inner_product(f, row)
        if not product.is_integer():
            raise InconsistencyError(
                "non-integral multiplicity %s for %s" % (product, label)
            )
        mult = product.integer_value()
        if mult < 0:
            raise InconsistencyError("negative multiplicity %d for %s" % (mult, label))
        if mult:
            result.append((label, mult))
            contribution = row.scale(mult)
            reassembled = (
                contribution if reassembled is None else reassembled + contribution
            )
    zero = ClassFunction(
        f.r, f.p, f.n,
        {c: Cyclotomic.zero(f.r) for c in enumerate_classes(f.r, f.p, f.n)},
    )
    if reassembled is None:
        reassembled = zero
    if not all((f.values[c] - reassembled.values[c]).is_zero() for c in f.values):
        raise InconsistencyError("multiplicities do not reassemble the character")
    result.sort(key=lambda pair: pair[0].sort_key())
    return result


def label_degree(label: IrreducibleLabel) -> int:
    return count_standard(label.orbit)


def irreducible_count(r: int, p: int, q: int, n: int) -> int:
    """Number of irreducible representations of G(r,p,q,n), counted from
    labels alone."""
    check_group_parameters(r, p, q, n)
    if gcd(p, n) not in (1, 2):
        raise UnsupportedGroupError(
            "irreducible counting requires GCD(p,n) in {1,2}"
        )
    return sum(orbit.m for orbit in enumerate_orbits(r, n, p, q))
