"""Conjugacy classes of G(r,p,n) and S_n-classes of absolute involutions.

Classes of the full wreath product G(r,n) are labeled by r-tuples of
partitions: component i collects the lengths of the cycles of color i.
Inside G(r,p,n) a label is admissible when its total color is divisible
by p, and an admissible class either stays whole or (exactly when
GCD(p,n) = 2 and every cycle has even length and even color) breaks into
two classes of equal size, told apart by the signature statistic.

The second half of the module classifies absolute involutions of a
quotient group up to conjugation by plain permutations: the classifying
datum is a count vector of fixed-point and 2-cycle colors, read off a
lift and canonicalized over the scalar shifts.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial, gcd

from .colored import (
    ColoredPermutation,
    ProjectiveElement,
    antisymmetric_elements,
    check_group_parameters,
    symmetric_elements,
)
from .errors import ResourceLimitError, UnsupportedGroupError
from .shapes import (
    Shape,
    ShapeOrbit,
    odd_columns,
    partitions,
    shape_key,
    shape_str,
    validate_shape,
)

ENUMERATION_GUARD = 10**6


def _alpha_of(g: ColoredPermutation) -> Shape:
    by_color = [[] for _ in range(g.r)]
    for cyc in g.cycles():
        by_color[ColoredPermutation.cycle_color(cyc) % g.r].append(len(cyc))
    return tuple(tuple(sorted(lens, reverse=True)) for lens in by_color)


def label_color(alpha: Shape) -> int:
    """Total color of any element with cycle data alpha: Σ i·(number of
    color-i cycles)."""
    return sum(i * len(comp) for i, comp in enumerate(alpha))


def splits(alpha: Shape, p: int, n: int) -> bool:
    """Whether the G(r,n)-class with this label breaks in two inside
    G(r,p,n): needs GCD(p,n) = 2, every cycle of even length, every cycle
    of even color."""
    if gcd(p, n) != 2:
        return False
    for i, comp in enumerate(alpha):
        if i % 2 == 1 and comp:
            return False
        if any(length % 2 == 1 for length in comp):
            return False
    return True


class ConjugacyClass:
    """Label of a conjugacy class of G(r,p,n).

    half is None for unsplit classes, 0 or 1 for the two halves of a split
    class (the half containing elements of that signature).
    """

    __slots__ = ("r", "p", "alpha", "half")

    def __init__(self, r: int, p: int, alpha: Shape, half=None) -> None:
        validate_shape(alpha)
        if len(alpha) != r:
            raise ValueError("label needs one component per color")
        if r % p != 0:
            raise ValueError("p must divide r")
        if label_color(alpha) % p != 0:
            raise ValueError("label color is not divisible by p")
        n = sum(sum(comp) for comp in alpha)
        if half is not None and not splits(alpha, p, n):
            raise ValueError("label does not split; half must be None")
        if half not in (None, 0, 1):
            raise ValueError("half must be None, 0 or 1")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "half", half)

    def __setattr__(self, *args):
        raise AttributeError("ConjugacyClass is immutable")

    @property
    def n(self) -> int:
        return sum(sum(comp) for comp in self.alpha)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ConjugacyClass)
            and (self.r, self.p, self.alpha, self.half)
            == (other.r, other.p, other.alpha, other.half)
        )

    def __hash__(self) -> int:
        return hash((self.r, self.p, self.alpha, self.half))

    def sort_key(self):
        return (shape_key(self.alpha), -1 if self.half is None else self.half)

    def __lt__(self, other: "ConjugacyClass") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        text = shape_str(self.alpha)
        if self.half is not None:
            text += "^%d" % self.half
        return text

    def __repr__(self) -> str:
        return "ConjugacyClass(r=%d, p=%d, %s)" % (self.r, self.p, self)


def class_of(g: ColoredPermutation, p: int = 1) -> ConjugacyClass:
    """The G(r,p,n)-class of g."""
    if g.color_sum() % p != 0:
        raise ValueError("element does not lie in the subgroup")
    alpha = _alpha_of(g)
    if splits(alpha, p, g.n):
        return ConjugacyClass(g.r, p, alpha, g.signature())
    return ConjugacyClass(g.r, p, alpha)


def class_size(label: ConjugacyClass) -> int:
    """Order of the class: r^n n! over the wreath centralizer order,
    halved for split halves."""
    n = label.n
    centralizer = 1
    for comp in label.alpha:
        mult: dict[int, int] = {}
        for part in comp:
            mult[part] = mult.get(part, 0) + 1
        for part, m in mult.items():
            centralizer *= factorial(m) * (part * label.r) ** m
    size, rem = divmod(label.r**n * factorial(n), centralizer)
    if rem:
        raise ArithmeticError("centralizer does not divide the group order")
    if label.half is not None:
        size, rem = divmod(size, 2)
        if rem:
            raise ArithmeticError("split class of odd size")
    return size


@lru_cache(maxsize=None)
def enumerate_classes(r: int, p: int, n: int) -> tuple[ConjugacyClass, ...]:
    """All classes of G(r,p,n), deterministically ordered."""
    if r % p != 0:
        raise ValueError("p must divide r")
    if gcd(p, n) not in (1, 2):
        raise UnsupportedGroupError(
            "class enumeration requires GCD(p,n) in {1,2}, got %d" % gcd(p, n)
        )

    def alphas(i, remaining):
        if i == r - 1:
            for comp in partitions(remaining):
                yield (comp,)
            return
        for k in range(remaining + 1):
            for comp in partitions(k):
                for rest in alphas(i + 1, remaining - k):
                    yield (comp,) + rest

    out = []
    for alpha in alphas(0, n):
        if label_color(alpha) % p != 0:
            continue
        if splits(alpha, p, n):
            out.append(ConjugacyClass(r, p, alpha, 0))
            out.append(ConjugacyClass(r, p, alpha, 1))
        else:
            out.append(ConjugacyClass(r, p, alpha))
    out.sort(key=ConjugacyClass.sort_key)
    return tuple(out)


def normal_element(label: ConjugacyClass) -> ColoredPermutation:
    """Canonical class representative: cycles with consecutive supports,
    ordered by increasing color then decreasing length, colors placed on
    cycle maxima; the half-1 representative moves one color unit from the
    last cycle's maximum onto the previous position."""
    r = label.r
    cycles = []
    next_support = 1
    cycle_list = [
        (color, length)
        for color, comp in enumerate(label.alpha)
        for length in comp
    ]
    cycle_list.sort(key=lambda cl: (cl[0], -cl[1]))
    for color, length in cycle_list:
        support = list(range(next_support, next_support + length))
        next_support += length
        colors = [0] * length
        colors[-1] = color
        cycles.append(tuple(zip(support, colors)))
    if label.half == 1:
        last = list(cycles[-1])
        elem, color = last[-1]
        last[-1] = (elem, (color - 1) % r)
        elem2, color2 = last[-2]
        last[-2] = (elem2, (color2 + 1) % r)
        cycles[-1] = tuple(last)
    g = ColoredPermutation.from_cycles(r, label.n, cycles)
    if class_of(g, label.p) != label:
        raise ArithmeticError("normal element fell outside its class")
    return g


# -- S_n-classes of absolute involutions ------------------------------------------


def _rotations(vec: tuple[int, ...], step: int, count: int):
    size = len(vec)
    for k in range(count):
        s = (k * step) % size if size else 0
        yield tuple(vec[(i - s) % size] for i in range(size))


class InvolutionClassType:
    """S_n-conjugation invariant of an absolute involution in a quotient
    group: color multiplicities of fixed points and 2-cycles, up to the
    color rotation induced by scalar lift changes.

    kind is "sym" (fixed vector f and 2-cycle vector q, both length r) or
    "asym" (2-cycle color-residue vector t, length r/2).  shift_order is
    the order of the scalar group quotiented away; the stored vectors are
    the lexicographically least rotation.
    """

    __slots__ = ("r", "shift_order", "kind", "fixed", "pair", "twist")

    def __init__(self, r, shift_order, kind, fixed=None, pair=None, twist=None):
        if r % shift_order != 0:
            raise ValueError("shift order must divide the color order")
        if kind == "sym":
            if twist is not None or fixed is None or pair is None:
                raise ValueError("symmetric type takes fixed and pair vectors")
            if len(fixed) != r or len(pair) != r:
                raise ValueError("vectors must have one entry per color")
            step = r // shift_order
            best = min(
                (f + q)
                for f, q in zip(
                    _rotations(tuple(fixed), step, shift_order),
                    _rotations(tuple(pair), step, shift_order),
                )
            )
            fixed, pair = best[:r], best[r:]
            twist = None
        elif kind == "asym":
            if fixed is not None or pair is not None or twist is None:
                raise ValueError("antisymmetric type takes the twist vector")
            if r % 2 != 0 or len(twist) != r // 2:
                raise ValueError("twist vector must have one entry per color pair")
            step = (r // shift_order) % (r // 2) if r // 2 else 0
            twist = min(_rotations(tuple(twist), step, shift_order))
            fixed = pair = None
        else:
            raise ValueError("kind must be 'sym' or 'asym'")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "shift_order", shift_order)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "fixed", fixed)
        object.__setattr__(self, "pair", pair)
        object.__setattr__(self, "twist", twist)

    def __setattr__(self, *args):
        raise AttributeError("InvolutionClassType is immutable")

    @property
    def n(self) -> int:
        if self.kind == "sym":
            return sum(self.fixed) + 2 * sum(self.pair)
        return 2 * sum(self.twist)

    def _key(self):
        return (self.r, self.shift_order, self.kind, self.fixed, self.pair, self.twist)

    def __eq__(self, other) -> bool:
        return isinstance(other, InvolutionClassType) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __lt__(self, other: "InvolutionClassType") -> bool:
        return self._key() < other._key()

    def __str__(self) -> str:
        if self.kind == "sym":
            return "sym[%s;%s]" % (
                ",".join(str(x) for x in self.fixed),
                ",".join(str(x) for x in self.pair),
            )
        return "asym[%s]" % ",".join(str(x) for x in self.twist)

    def __repr__(self) -> str:
        return "InvolutionClassType(r=%d, shift=%d, %s)" % (
            self.r,
            self.shift_order,
            self,
        )

    @staticmethod
    def parse(text: str, r: int, shift_order: int) -> "InvolutionClassType":
        text = text.strip()
        if text.startswith("sym[") and text.endswith("]"):
            body = text[4:-1]
            parts = body.split(";")
            if len(parts) != 2:
                raise ValueError("expected sym[f...;q...]")
            fixed = tuple(int(x) for x in parts[0].split(",")) if parts[0] else ()
            pair = tuple(int(x) for x in parts[1].split(",")) if parts[1] else ()
            return InvolutionClassType(r, shift_order, "sym", fixed=fixed, pair=pair)
        if text.startswith("asym[") and text.endswith("]"):
            body = text[5:-1]
            twist = tuple(int(x) for x in body.split(",")) if body else ()
            return InvolutionClassType(r, shift_order, "asym", twist=twist)
        raise ValueError("unrecognized type text: %r" % text)


def involution_type(v) -> InvolutionClassType:
    """Type of an absolute involution (plain element or scalar coset)."""
    if isinstance(v, ProjectiveElement):
        shift_order = v.q
        lift = v.rep
        if not v.is_absolute_involution():
            raise ValueError("element is not an absolute involution")
    else:
        shift_order = 1
        lift = v
        if not v.is_absolute_involution():
            raise ValueError("element is not an absolute involution")
    kind = lift.symmetry_kind()
    r = lift.r
    if kind == "symmetric":
        fixed = [0] * r
        pair = [0] * r
        for cyc in lift.cycles():
            if len(cyc) == 1:
                fixed[cyc[0][1]] += 1
            else:
                pair[cyc[0][1]] += 1
        return InvolutionClassType(
            r, shift_order, "sym", fixed=tuple(fixed), pair=tuple(pair)
        )
    if kind == "antisymmetric":
        twist = [0] * (r // 2)
        for cyc in lift.cycles():
            twist[cyc[0][1] % (r // 2)] += 1
        return InvolutionClassType(r, shift_order, "asym", twist=tuple(twist))
    raise ValueError("element is neither symmetric nor antisymmetric")


def predicted_shapes(ctype: InvolutionClassType, p: int | None = None) -> frozenset:
    """Shape orbits predicted to index the irreducible constituents of the
    submodule spanned by one S_n-class of absolute involutions.

    Symmetric type: all orbits whose component i has f_i + 2q_i boxes and
    exactly f_i columns of odd length.  Antisymmetric type: all orbits of
    half-turn-symmetric shapes whose component i has t_i boxes.
    """
    if p is None:
        p = ctype.shift_order
    elif p != ctype.shift_order:
        raise ValueError("orbit parameter must match the type's shift order")
    r = ctype.r
    out = set()
    if ctype.kind == "sym":
        choices = []
        for f_i, q_i in zip(ctype.fixed, ctype.pair):
            choices.append(
                [lam for lam in partitions(f_i + 2 * q_i) if odd_columns(lam) == f_i]
            )
        def rec(i, acc):
            if i == r:
                out.add(ShapeOrbit(tuple(acc), p))
                return
            for lam in choices[i]:
                rec(i + 1, acc + [lam])
        rec(0, [])
    else:
        half = r // 2
        choices = [partitions(t_i) for t_i in ctype.twist]
        def rec(i, acc):
            if i == half:
                orbit = ShapeOrbit(tuple(acc) + tuple(acc), p)
                if orbit.m < 2:
                    raise ArithmeticError("doubled shape failed to be shift-fixed")
                out.add(orbit)
                return
            for lam in choices[i]:
                rec(i + 1, acc + [lam])
        rec(0, [])
    return frozenset(out)


def enumerate_involution_classes(
    r: int, p: int, q: int, n: int, max_order: int = ENUMERATION_GUARD
) -> tuple[tuple[InvolutionClassType, tuple[ProjectiveElement, ...]], ...]:
    """S_n-classes of absolute involutions of the group dual to
    G(r,p,q,n), i.e. of G(r,q,p,n), grouped by type.

    The parameters name the acting group; the enumerated involutions form
    the basis of its model.  Guarded by r^n·n! <= max_order.
    """
    check_group_parameters(r, p, q, n)
    if r**n * factorial(n) > max_order:
        raise ResourceLimitError(
            "involution enumeration needs r^n*n! <= %d (got %d)"
            % (max_order, r**n * factorial(n))
        )
    lifts = [w for w in symmetric_elements(r, n) if w.color_sum() % q == 0]
    if p % 2 == 0:
        lifts += [w for w in antisymmetric_elements(r, n) if w.color_sum() % q == 0]
    cosets = sorted(set(ProjectiveElement(w, p) for w in lifts))
    buckets: dict[InvolutionClassType, list[ProjectiveElement]] = {}
    for v in cosets:
        buckets.setdefault(involution_type(v), []).append(v)
    return tuple(
        (ctype, tuple(sorted(buckets[ctype]))) for ctype in sorted(buckets)
    )
