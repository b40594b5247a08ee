"""The involution module: pairing and statistics, the monomial action as
a genuine homomorphism, block structure, character verification, and the
antisymmetric cycle-pairing machinery."""

import random
from math import factorial

import pytest

from gelfand.characters import character_table, label_degree
from gelfand.classes import (
    ConjugacyClass,
    InvolutionClassType,
    enumerate_classes,
    normal_element,
)
from gelfand.colored import (
    ColoredPermutation,
    ProjectiveElement,
    parse_window,
    subgroup_elements,
)
from gelfand.cyclotomic import Cyclotomic
from gelfand.errors import ResourceLimitError
from gelfand.model import (
    ModelBasis,
    a_sets,
    a_statistic,
    gelfand_check,
    halfway_difference,
    inv_statistic,
    model_action,
    model_character,
    pairing,
    part_color,
    pi21_partitions,
    predicted_labels,
    verify_class_decomposition,
)


def test_pairing_hand_values():
    g = parse_window("[2^1,1^0,3^1]", 2)
    v = parse_window("[1^1,3^1,2^1]", 2)
    # 1*1 + 0*1 + 1*1 = 2 = 0 mod 2
    assert pairing(g, v) == 0
    assert pairing(ColoredPermutation.identity(2, 3), v) == 0


def test_pairing_lift_independent_on_cosets():
    basis = ModelBasis(2, 2, 1, 4)
    acting = [g for g in subgroup_elements(2, 2, 4)]
    for v in basis.elements[:10]:
        lifts = v.lifts()
        assert len(lifts) == 2
        for g in acting[:20]:
            values = {pairing(g, lift) for lift in lifts}
            assert values == {pairing(g, v)}


def test_pairing_rejects_lift_dependent_pair():
    odd = parse_window("[1^1,2^0,3^0,4^0]", 2)  # color sum 1
    v = ProjectiveElement(parse_window("[2^1,1^1,3^0,4^0]", 2), 2)
    with pytest.raises(ValueError):
        pairing(odd, v)


def test_inv_statistic_hand_values():
    v = parse_window("[2^0,1^0,4^0,3^0]", 2)  # pairs {1,2},{3,4}
    assert inv_statistic(parse_window("[3^0,1^0,4^0,2^0]", 2), v) == 2
    assert inv_statistic(ColoredPermutation.identity(2, 4), v) == 0
    diagonal = ColoredPermutation.identity(2, 4)
    g = parse_window("[4^0,3^0,2^0,1^0]", 2)
    assert inv_statistic(g, diagonal) == 0


def test_inv_statistic_matches_set_intersection():
    rng = random.Random(5)
    from gelfand.colored import symmetric_elements

    vs = list(symmetric_elements(1, 6))
    gs = list(subgroup_elements(1, 1, 6))
    for _ in range(200):
        g, v = rng.choice(gs), rng.choice(vs)
        pairs = {
            frozenset((i, v.perm[i - 1]))
            for i in range(1, 7)
            if v.perm[i - 1] != i
        }
        inversions = {
            frozenset((i, j))
            for i in range(1, 7)
            for j in range(i + 1, 7)
            if g.perm[i - 1] > g.perm[j - 1]
        }
        assert inv_statistic(g, v) == len(pairs & inversions)


def test_a_statistic_hand_values():
    v = parse_window("[2^0,1^1,4^0,3^1]", 2)
    g = parse_window("[2^0,3^0,4^0,1^0]", 2)
    # |g|^{-1}(1) = 4, so colors z_1(v) - z_4(v) = 0 - 1
    assert a_statistic(g, v) == 1
    assert a_statistic(ColoredPermutation.identity(2, 4), v) == 0


def test_a_statistic_values_on_a_sets():
    # on elements conjugated to +-w the statistic can only be 0 or r/2
    for g in list(subgroup_elements(2, 2, 4))[:40]:
        for eps in (0, 1):
            for ws in a_sets(g, eps).values():
                for w in ws:
                    assert a_statistic(g, w) in (0, 1)


def test_model_basis_dimension_and_blocks():
    basis = ModelBasis(2, 2, 1, 4)
    table = character_table(2, 2, 1, 4)
    assert basis.dimension == sum(label_degree(label) for label, _ in table)
    covered = sorted(i for ids in basis.blocks.values() for i in ids)
    assert covered == list(range(basis.dimension))
    m0 = basis.scope_indices("M0")
    m1 = basis.scope_indices("M1")
    assert sorted(m0 + m1) == list(range(basis.dimension))
    assert all(
        basis.elements[i].rep.symmetry_kind() == "antisymmetric" for i in m1
    )
    assert basis.scope_indices("all") == tuple(range(basis.dimension))


def test_action_is_homomorphism():
    rng = random.Random(3)
    for r, p, n in [(2, 2, 4), (3, 1, 3)]:
        basis = ModelBasis(r, p, 1, n)
        pool = list(subgroup_elements(r, p, n))
        for _ in range(150):
            g, h = rng.choice(pool), rng.choice(pool)
            left = model_action(g * h, basis)
            right = model_action(g, basis).compose(model_action(h, basis))
            assert left == right


def test_action_identity_and_scalar_lift():
    basis = ModelBasis(2, 1, 2, 4)
    identity = model_action(ColoredPermutation.identity(2, 4), basis)
    assert identity.perm == tuple(range(basis.dimension))
    assert all(s == Cyclotomic.one(2) for s in identity.scalars)
    assert identity.trace() == Cyclotomic.from_rational(basis.dimension)
    scalar = parse_window("[1^1,2^1,3^1,4^1]", 2)
    assert model_action(scalar, basis) == identity


def test_action_preserves_blocks():
    rng = random.Random(9)
    basis = ModelBasis(2, 2, 1, 4)
    pool = list(subgroup_elements(2, 2, 4))
    for _ in range(10):
        act = model_action(rng.choice(pool), basis)
        for ids in basis.blocks.values():
            assert {act.perm[i] for i in ids} == set(ids)


def test_action_rejects_outsider():
    basis = ModelBasis(2, 2, 1, 4)
    outsider = parse_window("[1^1,2^0,3^0,4^0]", 2)
    with pytest.raises(ValueError):
        model_action(outsider, basis)


def test_character_matches_explicit_trace():
    basis = ModelBasis(2, 1, 1, 3)
    full = model_character(basis, "all")
    for label in enumerate_classes(2, 1, 3):
        act = model_action(normal_element(label), basis)
        assert full(label) == act.trace()
    m1_indices = basis.scope_indices("M1")
    assert m1_indices == ()  # p odd: no antisymmetric involutions


def test_block_characters_sum_to_full():
    basis = ModelBasis(2, 2, 1, 4)
    total = None
    for ctype in basis.types:
        block = model_character(basis, ctype)
        total = block if total is None else total + block
    assert total == model_character(basis, "all")


def test_predicted_labels_shape():
    sym = InvolutionClassType.parse("sym[4,0;0,0]", 2, 2)
    labels = predicted_labels(sym)
    assert all(label.j == 0 for label in labels)
    asym = InvolutionClassType.parse("asym[2]", 2, 2)
    for label in predicted_labels(asym):
        assert label.orbit.m == 2
        assert label.j == 1
        assert str(label).endswith("^1")


def test_verify_small_group():
    report = verify_class_decomposition(2, 1, 1, 3)
    assert report.passed
    assert len(report.entries) == len(ModelBasis(2, 1, 1, 3).types)
    payload = report.to_json()
    assert payload["pass"] is True
    assert payload["acting_group"]["p"] == 1
    assert payload["basis_group"]["q"] == 1
    for entry in payload["classes"]:
        assert entry["pass"] is True
        assert entry["predicted"] == [
            row["label"] for row in entry["computed"]
        ]
        assert all(row["multiplicity"] == 1 for row in entry["computed"])


def test_verify_single_block_and_bad_type():
    only = InvolutionClassType.parse("asym[2]", 2, 2)
    report = verify_class_decomposition(2, 2, 1, 4, only=only)
    assert len(report.entries) == 1
    assert report.entries[0].passed
    with pytest.raises(ValueError):
        verify_class_decomposition(
            2, 2, 1, 4, only=InvolutionClassType.parse("sym[0,2;1,1]", 2, 2)
        )


def test_verify_threaded_matches_serial():
    serial = verify_class_decomposition(2, 2, 1, 4)
    threaded = verify_class_decomposition(2, 2, 1, 4, threads=4)
    assert serial.to_json() == threaded.to_json()


def test_gelfand_check_small():
    rows, passed = gelfand_check(3, 1, 1, 3)
    assert passed
    assert all(mult == 1 for _, mult in rows)
    assert len(rows) == len(character_table(3, 1, 1, 3))


def test_pi21_partition_counts():
    two_two = ColoredPermutation.from_cycles(
        2, 4, [((1, 0), (2, 0)), ((3, 0), (4, 0))]
    )
    assert len(pi21_partitions(two_two)) == 2
    three_fixed = ColoredPermutation.identity(2, 3)
    assert len(pi21_partitions(three_fixed)) == 4
    mixed = ColoredPermutation.from_cycles(2, 3, [((1, 0), (2, 0)), ((3, 0),)])
    assert len(pi21_partitions(mixed)) == 1


def test_part_color():
    g = ColoredPermutation.from_cycles(
        4, 4, [((1, 1), (2, 2)), ((3, 0), (4, 3))]
    )
    cycles = g.cycles()
    assert part_color(g, (0,)) == 3
    assert part_color(g, (1,)) == 3
    assert part_color(g, (0, 1)) == 2


def test_a_sets_bucket_sizes():
    g = ColoredPermutation.from_cycles(
        4, 4, [((1, 0), (2, 0)), ((3, 0), (4, 0))]
    )
    buckets = a_sets(g, 1)
    by_parts = {
        tuple(sorted(len(part) for part in key)): ws
        for key, ws in buckets.items()
    }
    # two singleton parts: 4 choices each; the paired part: 4*2 elements
    assert len(by_parts[(1, 1)]) == 16
    assert len(by_parts[(2,)]) == 8


def test_a_sets_pair_bucket_golden():
    g = ColoredPermutation.from_cycles(
        4, 4, [((1, 0), (2, 0)), ((3, 0), (4, 0))]
    )
    buckets = a_sets(g, 1)
    pair_key = next(k for k in buckets if len(k) == 1)
    expected = set()
    for k in range(4):
        expected.add(
            ColoredPermutation.from_cycles(
                4, 4, [((1, (k + 2) % 4), (3, k)), ((2, k), (4, (k + 2) % 4))]
            )
        )
        expected.add(
            ColoredPermutation.from_cycles(
                4, 4, [((1, (k + 2) % 4), (4, k)), ((2, k), (3, (k + 2) % 4))]
            )
        )
    assert set(buckets[pair_key]) == expected


def test_a_sets_independent_of_colors():
    plain = ColoredPermutation.from_cycles(
        4, 4, [((1, 0), (2, 0)), ((3, 0), (4, 0))]
    )
    colored = ColoredPermutation.from_cycles(
        4, 4, [((1, 3), (2, 1)), ((3, 2), (4, 2))]
    )
    assert a_sets(plain, 1) == a_sets(colored, 1)


def test_a_sets_odd_cycle_empty():
    g = ColoredPermutation.from_cycles(
        4, 4, [((1, 0), (2, 0), (3, 0)), ((4, 0),)]
    )
    assert a_sets(g, 1) == {}


def test_a_sets_identity_eps0():
    buckets = a_sets(ColoredPermutation.identity(4, 4), 0)
    assert len(buckets) == 3  # one bucket per perfect matching
    assert sum(len(ws) for ws in buckets.values()) == 48
    assert all(len(ws) == 16 for ws in buckets.values())


def test_a_sets_guard():
    big = ColoredPermutation.identity(6, 14)
    with pytest.raises(ResourceLimitError):
        a_sets(big, 1, max_count=1000)


def test_halfway_difference_is_cyclotomic():
    basis = ModelBasis(2, 2, 1, 4)
    for label in enumerate_classes(2, 2, 4):
        value = halfway_difference(basis, label)
        assert isinstance(value, Cyclotomic)
