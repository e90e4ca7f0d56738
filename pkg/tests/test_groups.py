"""Group-table layer: enumeration counts, canonical forms, automorphisms."""

import pytest

from sbspec.errors import NotAGroupError, OrderBoundError
from sbspec.groups import (
    all_group_tables,
    automorphisms,
    canonical_group_table,
    check_group,
    cyclic_table,
    find_identity,
    group_fingerprint,
    group_representatives,
    group_violation,
    identity_fixing_perms,
    is_group_table,
    klein_table,
    product_table,
    relabel_table,
    symmetric_table,
)

# Number of group tables on {0..n-1} with identity 0, and the number of
# isomorphism classes among them.  Both are recomputed from scratch by
# the library; the values here were verified against independent
# hand counts (n! / |Aut| summed over classes).
TABLE_COUNTS = [1, 1, 1, 4, 6, 80]
CLASS_COUNTS = [1, 1, 1, 2, 1, 2]


@pytest.mark.parametrize("n", range(1, 7))
def test_table_counts(n):
    assert len(all_group_tables(n)) == TABLE_COUNTS[n - 1]


@pytest.mark.parametrize("n", range(1, 7))
def test_class_counts(n):
    reps = group_representatives(n)
    assert len(reps) == CLASS_COUNTS[n - 1]
    # representatives are canonical and pairwise distinct
    assert len(set(reps)) == len(reps)
    for rep in reps:
        assert canonical_group_table(rep) == rep


def test_burnside_count_identity():
    # Sum over classes of n!/(n-1)... the orbit of each class under
    # identity-fixing relabellings has size (n-1)!/|Aut|, so the total
    # table count must equal sum of (n-1)!/|Aut(G)|.
    import math

    for n in range(1, 7):
        total = 0
        for rep in group_representatives(n):
            auts = len(automorphisms(rep))
            assert math.factorial(n - 1) % auts == 0
            total += math.factorial(n - 1) // auts
        assert total == TABLE_COUNTS[n - 1]


@pytest.mark.parametrize(
    "table,expected",
    [
        (cyclic_table(2), 1),
        (cyclic_table(3), 2),
        (cyclic_table(4), 2),
        (cyclic_table(5), 4),
        (cyclic_table(6), 2),
        (klein_table(), 6),
        (symmetric_table(3), 6),
    ],
)
def test_automorphism_counts(table, expected):
    auts = automorphisms(table)
    assert len(auts) == expected
    for perm in auts:
        assert perm[0] == 0
        for a in range(len(table)):
            for b in range(len(table)):
                assert perm[table[a][b]] == table[perm[a]][perm[b]]


def test_constructors_are_groups():
    for table in [
        cyclic_table(1),
        cyclic_table(6),
        klein_table(),
        symmetric_table(3),
        product_table(cyclic_table(2), cyclic_table(3)),
    ]:
        assert is_group_table(table)
        assert find_identity(table) == 0


def test_symmetric_table_shape():
    s3 = symmetric_table(3)
    assert len(s3) == 6
    # nonabelian
    assert any(s3[a][b] != s3[b][a] for a in range(6) for b in range(6))


def test_z2_times_z3_is_z6():
    prod = product_table(cyclic_table(2), cyclic_table(3))
    assert canonical_group_table(prod) == canonical_group_table(cyclic_table(6))


def test_canonical_is_relabel_invariant():
    z4 = cyclic_table(4)
    perm = (0, 2, 1, 3)
    relabeled = relabel_table(z4, perm)
    assert relabeled != z4
    assert canonical_group_table(relabeled) == canonical_group_table(z4)
    # idempotent
    canon = canonical_group_table(z4)
    assert canonical_group_table(canon) == canon


def test_group_violation_witnesses():
    z3 = cyclic_table(3)
    # overwrite 1+1 (= 2) with 1; associativity then fails
    broken = tuple(
        tuple(1 if (a, b) == (1, 1) else z3[a][b] for b in range(3)) for a in range(3)
    )
    assert group_violation(broken) is not None
    assert group_violation(z3) is None
    with pytest.raises(NotAGroupError):
        check_group(broken)


def test_identity_must_be_zero():
    # Z2 relabelled so the identity sits at position 1 is still a group
    # table, but the enumeration and brace layers insist on identity 0.
    shifted = ((1, 0), (0, 1))
    assert find_identity(shifted) == 1
    assert group_violation(shifted) is not None


def test_identity_fixing_perms_count():
    import math

    for n in range(1, 6):
        perms = list(identity_fixing_perms(n))
        assert len(perms) == math.factorial(n - 1)
        assert all(p[0] == 0 for p in perms)


def test_fingerprint_separates_and_unifies():
    z4 = cyclic_table(4)
    v4 = klein_table()
    assert group_fingerprint(z4) != group_fingerprint(v4)
    assert group_fingerprint(relabel_table(z4, (0, 3, 2, 1))) == group_fingerprint(z4)
    assert len(group_fingerprint(z4)) == 12


def test_enumeration_bound():
    with pytest.raises(OrderBoundError):
        all_group_tables(7)
    with pytest.raises(OrderBoundError):
        group_representatives(7)
