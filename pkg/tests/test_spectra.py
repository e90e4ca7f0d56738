"""Prime ideals: definitions, witnesses, radicals, and the emptiness finding."""

import pytest

from sbspec.bitsets import full_mask, is_subset, mask_of
from sbspec.enumeration import enumerate_braces
from sbspec.errors import NotMaximalError, NotProperError
from sbspec.ideals import ideal_lattice, star_set
from sbspec.spectra import (
    PRIME_KINDS,
    brace_square,
    compare_definitions,
    is_prime,
    is_prime_star_by_subsets,
    maximal_prime_criterion,
    nil_radical,
    radical,
    spectrum,
)
from sbspec.topology import lattice_spectrum


def all_braces():
    out = []
    for n in range(1, 7):
        for i, b in enumerate(enumerate_braces(n)):
            out.append((f"{n}-{i}", b))
    return out


CORPUS = all_braces()


def test_brace_squares(z4_radical, s3_almost, v4_trivial):
    assert brace_square(z4_radical) == mask_of([0, 2])
    assert brace_square(z4_radical, "subgroup") == mask_of([0, 2])
    assert brace_square(s3_almost) == mask_of([0, 3, 4])
    assert brace_square(v4_trivial) == mask_of([0])


def test_star_prime_witness_is_checkable(s3_almost):
    # the alternating ideal is not star-prime: the witness elements lie
    # outside it yet their star product lands inside
    a3 = mask_of([0, 3, 4])
    ok, witness = is_prime(s3_almost, a3, "star")
    assert not ok
    tag, a, b = witness
    assert tag == "elements"
    assert not a3 >> a & 1 and not a3 >> b & 1
    assert a3 >> s3_almost.star[a][b] & 1


def test_ideal_witness_for_ksv_and_huq(z4_radical):
    two = mask_of([0, 2])
    for kind in ("ksv", "huq"):
        ok, witness = is_prime(z4_radical, two, kind)
        assert not ok
        tag, x, y = witness
        assert tag == "ideals"
        assert not is_subset(x, two) and not is_subset(y, two)


def test_not_proper(z4_radical):
    with pytest.raises(NotProperError):
        is_prime(z4_radical, full_mask(4), "star")
    with pytest.raises(NotProperError):
        is_prime_star_by_subsets(z4_radical, full_mask(4))


def test_unknown_kind(z4_radical):
    with pytest.raises(ValueError):
        is_prime(z4_radical, 1, "weird")
    with pytest.raises(ValueError):
        spectrum(z4_radical, "weird")


@pytest.mark.parametrize("bid,brace", CORPUS, ids=[bid for bid, _ in CORPUS])
def test_all_spectra_empty_up_to_order_six(bid, brace):
    """Central computational finding: no brace of order <= 6 has any
    prime ideal, under any of the three definitions, and the lattice
    spectrum is empty as well.  Everything topological downstream is
    exercised on genuinely empty spaces plus synthetic positive cases."""
    for kind in PRIME_KINDS:
        spec = spectrum(brace, kind)
        assert spec.primes == ()
        assert spec.empty
        assert spec.minimal == ()
        # every proper ideal is rejected with a witness
        assert len(spec.rejected) == len(ideal_lattice(brace).proper_members())
    assert lattice_spectrum(brace).primes == ()


SMALL = [t for t in CORPUS if t[1].order <= 5]


@pytest.mark.parametrize("bid,brace", SMALL, ids=[bid for bid, _ in SMALL])
def test_star_prime_subset_oracle_agreement(bid, brace):
    for m in ideal_lattice(brace).proper_members():
        lhs, _ = is_prime(brace, m, "star")
        rhs, _ = is_prime_star_by_subsets(brace, m)
        assert lhs == rhs


def test_subset_oracle_witness_shape(z4_radical):
    ok, witness = is_prime_star_by_subsets(z4_radical, mask_of([0, 2]))
    assert not ok
    tag, x, y = witness
    assert tag == "subsets"
    assert is_subset(star_set(z4_radical, x, y), mask_of([0, 2]))


def test_radical_with_no_primes_is_whole(z4_radical):
    # no prime contains anything, so every radical collapses to the top
    for m in ideal_lattice(z4_radical).members:
        assert radical(z4_radical, m) == full_mask(4)
    assert nil_radical(z4_radical) == full_mask(4)


def test_radical_laws_hold_degenerately(s3_almost):
    lat = ideal_lattice(s3_almost)
    for m in lat.members:
        r = radical(s3_almost, m)
        assert is_subset(m, r)
        assert radical(s3_almost, r) == r


def test_maximal_prime_criterion(z4_radical, s3_almost, v4_trivial, zero_brace):
    # z4_radical: A*A = {0,2} sits inside the unique maximal ideal {0,2}
    assert maximal_prime_criterion(z4_radical, mask_of([0, 2])) is False
    assert maximal_prime_criterion(s3_almost, mask_of([0, 3, 4])) is False
    for m in ideal_lattice(v4_trivial).maximal_ideals():
        assert maximal_prime_criterion(v4_trivial, m) is False
    # criterion must match star-primality wherever it is defined
    for brace in (z4_radical, s3_almost, v4_trivial):
        for m in ideal_lattice(brace).maximal_ideals():
            assert maximal_prime_criterion(brace, m) == is_prime(brace, m, "star")[0]
    assert ideal_lattice(zero_brace).maximal_ideals() == ()


def test_maximal_criterion_rejects_non_maximal(z4_radical):
    with pytest.raises(NotMaximalError):
        maximal_prime_criterion(z4_radical, mask_of([0]))
    with pytest.raises(NotMaximalError):
        maximal_prime_criterion(z4_radical, full_mask(4))


@pytest.mark.parametrize("bid,brace", CORPUS, ids=[bid for bid, _ in CORPUS])
def test_definitions_compared(bid, brace):
    cmp = compare_definitions(brace)
    assert cmp.all_agree
    assert tuple(s.kind for s in cmp.spectra) == PRIME_KINDS
    for mask, flags in cmp.membership:
        assert len(set(flags)) == 1


def test_rejection_reasons_are_stable(z4_radical):
    spec = spectrum(z4_radical, "star")
    assert spec == spectrum(z4_radical, "star")
    assert dict(spec.rejected).keys() == {mask_of([0]), mask_of([0, 2])}
