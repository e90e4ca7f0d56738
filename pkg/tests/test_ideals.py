"""Ideal layer: an independent subset-sweep oracle, frozen lattices, closures."""

import pytest

from sbspec.bitsets import bits, elements, full_mask, mask_of, popcount
from sbspec.enumeration import enumerate_braces
from sbspec.ideals import (
    additive_subgroups,
    all_ideals,
    generated_ideal,
    huq_commutator,
    ideal_check,
    ideal_lattice,
    ideal_weight,
    is_ideal,
    multiplicative_lattice_check,
    star_ideal,
    star_set,
    star_subgroup,
    sum_ideals,
)


def naive_is_ideal(brace, subset: set) -> bool:
    """The ideal conditions, written out directly from the definitions:

    nonempty additive subgroup, normal in both groups, and invariant
    under every twist map b -> -a + a∘b.
    """
    n = brace.order
    if not subset or 0 not in subset:
        return False
    add, mul, neg, inv = brace.add, brace.mul, brace.neg, brace.inv
    for i in subset:
        if neg[i] not in subset:
            return False
        for j in subset:
            if add[i][j] not in subset:
                return False
            if mul[i][j] not in subset:
                return False
    for a in range(n):
        for i in subset:
            if add[add[a][i]][neg[a]] not in subset:
                return False
            if mul[mul[a][i]][inv[a]] not in subset:
                return False
            if brace.lam[a][i] not in subset:
                return False
    return True


def brace_corpus():
    out = []
    for n in range(1, 5):
        out.extend(enumerate_braces(n))
    return out


@pytest.mark.parametrize("brace", brace_corpus(), ids=lambda b: b.describe())
def test_is_ideal_agrees_with_naive_sweep(brace):
    n = brace.order
    expected = set()
    for mask in range(1, 1 << n):
        subset = set(bits(mask))
        if naive_is_ideal(brace, subset):
            expected.add(mask)
        assert is_ideal(brace, mask) == (mask in expected)
    assert set(all_ideals(brace)) == expected


def test_ideal_check_flags(z4_radical):
    chk = ideal_check(z4_radical, mask_of([0, 2]))
    assert chk.ok
    # {0, 1}: 1+1 = 2 escapes, so it is not even an additive subgroup
    chk = ideal_check(z4_radical, mask_of([0, 1]))
    assert not chk.ok
    assert not chk.add_subgroup
    assert chk.witness is not None


def test_ideal_check_normality_flag(s3_trivial):
    # {0, 1} is an order-2 subgroup of S3 but is not normal
    chk = ideal_check(s3_trivial, mask_of([0, 1]))
    assert chk.add_subgroup
    assert not chk.ok
    assert not (chk.add_normal and chk.mul_normal)


def test_frozen_lattices(z2_trivial, z3_trivial, z4_radical, s3_almost, v4_trivial):
    assert all_ideals(z2_trivial) == (mask_of([0]), mask_of([0, 1]))
    assert all_ideals(z3_trivial) == (mask_of([0]), mask_of([0, 1, 2]))
    assert all_ideals(z4_radical) == (
        mask_of([0]),
        mask_of([0, 2]),
        mask_of([0, 1, 2, 3]),
    )
    assert all_ideals(s3_almost) == (
        mask_of([0]),
        mask_of([0, 3, 4]),
        full_mask(6),
    )
    # trivial Klein brace: every subgroup is an ideal
    assert len(all_ideals(v4_trivial)) == 5
    assert set(all_ideals(v4_trivial)) == set(additive_subgroups(v4_trivial))


def test_additive_subgroup_counts(z4_radical, s3_trivial, v4_trivial):
    assert len(additive_subgroups(z4_radical)) == 3
    assert len(additive_subgroups(v4_trivial)) == 5
    # S3: trivial, three order-2, one order-3, whole
    assert len(additive_subgroups(s3_trivial)) == 6


def test_generated_ideal_routes(z4_radical, s3_almost):
    for brace in (z4_radical, s3_almost):
        lat = ideal_lattice(brace)
        for seed in range(1 << brace.order):
            assert generated_ideal(brace, seed) == lat.generated(seed | 1)
    # single 3-cycle generates the alternating ideal
    assert generated_ideal(s3_almost, mask_of([3])) == mask_of([0, 3, 4])
    # single transposition generates everything
    assert generated_ideal(s3_almost, mask_of([1])) == full_mask(6)
    assert generated_ideal(z4_radical, 0) == mask_of([0])


def test_star_products(z4_radical, s3_almost, v4_trivial):
    a4 = full_mask(4)
    assert star_set(z4_radical, a4, a4) == mask_of([0, 2])
    assert star_subgroup(z4_radical, a4, a4) == mask_of([0, 2])
    assert star_ideal(z4_radical, a4, a4) == mask_of([0, 2])
    two = mask_of([0, 2])
    assert star_ideal(z4_radical, two, two) == mask_of([0])

    a6 = full_mask(6)
    assert star_ideal(s3_almost, a6, a6) == mask_of([0, 3, 4])
    assert star_ideal(v4_trivial, full_mask(4), full_mask(4)) == mask_of([0])


def test_star_chain_shrinks(z4_radical):
    # iterated squares: A ⊇ A*A ⊇ (A*A)*(A*A) ⊇ ...
    cur = full_mask(4)
    seen = [cur]
    for _ in range(3):
        cur = star_ideal(z4_radical, cur, cur)
        seen.append(cur)
    assert seen == [0b1111, 0b0101, 0b0001, 0b0001]


def test_huq_commutator(s3_almost):
    a6 = full_mask(6)
    a3 = mask_of([0, 3, 4])
    assert huq_commutator(s3_almost, a6, a6) == a3
    # the alternating ideal is abelian in both operations
    assert huq_commutator(s3_almost, a3, a3) == mask_of([0])


def test_ideal_weights(z4_radical, s3_almost, v4_trivial):
    assert ideal_weight(z4_radical, full_mask(4)) == 1
    assert ideal_weight(z4_radical, mask_of([0, 2])) == 1
    # zero ideal: generated by the single element 0
    assert ideal_weight(z4_radical, mask_of([0])) == 1
    assert ideal_weight(s3_almost, full_mask(6)) == 1
    assert ideal_weight(s3_almost, mask_of([0, 3, 4])) == 1
    # the full Klein ideal needs two generators
    assert ideal_weight(v4_trivial, full_mask(4)) == 2
    lat = ideal_lattice(v4_trivial)
    assert lat.weights == (1, 1, 1, 1, 2)


def test_lattice_ops(v4_trivial):
    lat = ideal_lattice(v4_trivial)
    a = mask_of([0, 1])
    b = mask_of([0, 2])
    assert lat.meet(a, b) == mask_of([0])
    assert lat.join(a, b) == full_mask(4)
    assert lat.join(a, b) == sum_ideals(v4_trivial, a, b)
    assert lat.star(a, b) == mask_of([0])
    assert lat.leq(a, full_mask(4))
    assert not lat.leq(a, b)
    assert lat.maximal_ideals() == (mask_of([0, 1]), mask_of([0, 2]), mask_of([0, 3]))
    assert len(lat.proper_members()) == 4


def test_join_is_smallest_containing_ideal(s3_almost):
    lat = ideal_lattice(s3_almost)
    for x in lat.members:
        for y in lat.members:
            j = lat.join(x, y)
            assert is_ideal(s3_almost, j)
            for z in lat.members:
                if x | y == (x | y) & z:
                    assert lat.leq(j, z)


@pytest.mark.parametrize("brace", brace_corpus(), ids=lambda b: b.describe())
def test_multiplicative_lattice_laws(brace):
    report = multiplicative_lattice_check(ideal_lattice(brace))
    assert report.ok
    # informational flag, but at these orders it always holds
    assert report.join_distributive


def test_star_monotone_and_below_meet(z4_radical, s3_almost):
    for brace in (z4_radical, s3_almost):
        lat = ideal_lattice(brace)
        for x in lat.members:
            for y in lat.members:
                st = lat.star(x, y)
                assert lat.leq(st, lat.meet(x, y))
                for z in lat.members:
                    if lat.leq(y, z):
                        assert lat.leq(st, lat.star(x, z))


def test_weight_matches_minimal_generating_sets(v4_trivial):
    # brute-force the defining minimum for the Klein brace: fewest
    # nonzero generators, with the zero ideal pinned at one generator
    lat = ideal_lattice(v4_trivial)
    for pos, member in enumerate(lat.members):
        if member == mask_of([0]):
            assert lat.weights[pos] == 1
            continue
        best = None
        for seed in range(1 << 4):
            if seed & 1 == 0 and generated_ideal(v4_trivial, seed) == member:
                size = popcount(seed)
                best = size if best is None else min(best, size)
        assert best == lat.weights[pos]
    assert elements(mask_of([0, 3])) == (0, 3)
