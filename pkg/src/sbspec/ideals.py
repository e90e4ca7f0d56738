"""Ideals of a finite skew brace and their lattice.

Subsets are int bitmasks over element indices.  An ideal is a subgroup
of both group structures, normal in both, and closed under every twist
map.  For additively normal subgroups this is equivalent to absorbing
star products on both sides; ideal_check evaluates both routes and
treats disagreement as an internal defect.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .bitsets import bits, full_mask, is_subset, mask_of, popcount
from .braces import SkewBrace
from .errors import ConsistencyError

Mask = int


@dataclass(frozen=True)
class IdealCheck:
    """Outcome of the ideal test with per-condition flags and a witness.

    witness names the first failing condition and the elements involved.
    """

    add_subgroup: bool
    add_normal: bool
    mul_subgroup: bool
    mul_normal: bool
    twist_invariant: bool
    witness: tuple | None

    @property
    def ok(self) -> bool:
        return (
            self.add_subgroup
            and self.add_normal
            and self.mul_subgroup
            and self.mul_normal
            and self.twist_invariant
        )


def _closed_under(table, mask: Mask) -> tuple | None:
    for i in bits(mask):
        row = table[i]
        for j in bits(mask):
            if not mask >> row[j] & 1:
                return (i, j)
    return None


def _subgroup_flags(mask: Mask, table, invs) -> tuple | None:
    """First failure of the subgroup conditions for one operation."""
    if not mask & 1:
        return ("missing-identity", 0)
    bad = _closed_under(table, mask)
    if bad is not None:
        return ("product", *bad)
    for i in bits(mask):
        if not mask >> invs[i] & 1:
            return ("inverse", i)
    return None


def _normal_witness(brace: SkewBrace, mask: Mask, conj) -> tuple | None:
    for a in range(brace.order):
        for i in bits(mask):
            if not mask >> conj(a, i) & 1:
                return (a, i)
    return None


def ideal_check(brace: SkewBrace, mask: Mask) -> IdealCheck:
    add, mul, neg, inv, lam = brace.add, brace.mul, brace.neg, brace.inv, brace.lam
    witness = None

    bad = _subgroup_flags(mask, add, neg)
    add_subgroup = bad is None
    if not add_subgroup:
        witness = ("add-subgroup",) + bad

    bad = _normal_witness(brace, mask, lambda a, i: add[add[a][i]][neg[a]])
    add_normal = bad is None
    if not add_normal and witness is None:
        witness = ("add-normal",) + bad

    bad = _subgroup_flags(mask, mul, inv)
    mul_subgroup = bad is None
    if not mul_subgroup and witness is None:
        witness = ("mul-subgroup",) + bad

    bad = _normal_witness(brace, mask, lambda a, i: mul[mul[a][i]][inv[a]])
    mul_normal = bad is None
    if not mul_normal and witness is None:
        witness = ("mul-normal",) + bad

    bad = _normal_witness(brace, mask, lambda a, i: lam[a][i])
    twist_invariant = bad is None
    if not twist_invariant and witness is None:
        witness = ("twist",) + bad

    check = IdealCheck(
        add_subgroup, add_normal, mul_subgroup, mul_normal, twist_invariant, witness
    )

    if add_subgroup and add_normal:
        # cross-check: for additively normal subgroups, being an ideal is
        # the same as absorbing star products on both sides
        whole = full_mask(brace.order)
        absorbs = is_subset(star_set(brace, whole, mask), mask) and is_subset(
            star_set(brace, mask, whole), mask
        )
        direct = mul_subgroup and mul_normal and twist_invariant
        if absorbs != direct:
            raise ConsistencyError(
                f"ideal criteria disagree on mask {mask:#x}: "
                f"star absorption {absorbs}, direct definition {direct}"
            )
    return check


def is_ideal(brace: SkewBrace, mask: Mask) -> bool:
    return ideal_check(brace, mask).ok


def add_closure(brace: SkewBrace, mask: Mask) -> Mask:
    """Least additive subgroup containing the masked set (and 0)."""
    add = brace.add
    closed = mask | 1
    while True:
        grown = closed
        members = list(bits(closed))
        for i in members:
            row = add[i]
            grown |= 1 << brace.neg[i]
            for j in members:
                grown |= 1 << row[j]
        if grown == closed:
            return closed
        closed = grown


@lru_cache(maxsize=None)
def additive_subgroups(brace: SkewBrace) -> tuple[Mask, ...]:
    """Every subgroup of the additive group, grown one generator at a time."""
    n = brace.order
    found = {add_closure(brace, 1)}
    frontier = list(found)
    while frontier:
        base = frontier.pop()
        for x in range(1, n):
            if base >> x & 1:
                continue
            grown = add_closure(brace, base | 1 << x)
            if grown not in found:
                found.add(grown)
                frontier.append(grown)
    return tuple(sorted(found, key=lambda m: (popcount(m), m)))


@lru_cache(maxsize=None)
def all_ideals(brace: SkewBrace) -> tuple[Mask, ...]:
    """All ideals, sorted by size then mask.  Sweeps additive subgroups only."""
    return tuple(m for m in additive_subgroups(brace) if is_ideal(brace, m))


def generated_ideal(brace: SkewBrace, seed: Mask) -> Mask:
    """Least ideal containing the masked set.

    Iterative closure under addition, negation, both conjugations and all
    twist maps; multiplicative closure follows from those on finite sets.
    """
    add, mul, neg, inv, lam = brace.add, brace.mul, brace.neg, brace.inv, brace.lam
    n = brace.order
    closed = seed | 1
    while True:
        grown = closed
        members = list(bits(closed))
        for i in members:
            grown |= 1 << neg[i]
            row = add[i]
            for j in members:
                grown |= 1 << row[j]
        for a in range(n):
            add_a, mul_a, lam_a = add[a], mul[a], lam[a]
            na, ia = neg[a], inv[a]
            for i in members:
                grown |= 1 << add[add_a[i]][na]
                grown |= 1 << mul[mul_a[i]][ia]
                grown |= 1 << lam_a[i]
        if grown == closed:
            return closed
        closed = grown


def sum_ideals(brace: SkewBrace, x: Mask, y: Mask) -> Mask:
    """Join of two ideals: the additive subgroup generated by their union."""
    total = add_closure(brace, x | y)
    if not is_ideal(brace, total):
        raise ConsistencyError(f"sum of ideals {x:#x} and {y:#x} is not an ideal")
    return total


def family_sum(brace: SkewBrace, masks) -> Mask:
    """Join of a family of ideals; the empty family sums to the zero ideal."""
    total: Mask = 1
    for m in masks:
        total |= m
    if total == 1:
        return 1
    total = add_closure(brace, total)
    if not is_ideal(brace, total):
        raise ConsistencyError("family sum is not an ideal")
    return total


def star_set(brace: SkewBrace, x: Mask, y: Mask) -> Mask:
    """Pointwise star products {i * j : i in x, j in y} as a mask."""
    star = brace.star
    out = 0
    for i in bits(x):
        row = star[i]
        for j in bits(y):
            out |= 1 << row[j]
    return out


def star_subgroup(brace: SkewBrace, x: Mask, y: Mask) -> Mask:
    """Additive subgroup generated by the pointwise star products."""
    return add_closure(brace, star_set(brace, x, y))


def star_ideal(brace: SkewBrace, x: Mask, y: Mask) -> Mask:
    """Ideal generated by the pointwise star products."""
    return generated_ideal(brace, star_set(brace, x, y))


def huq_commutator(brace: SkewBrace, x: Mask, y: Mask) -> Mask:
    """Ideal generated by both kinds of commutators and the mixed words.

    Generators, over i in x and j in y:
      i + j - i - j
      i ∘ j ∘ i' ∘ j'   (primes are multiplicative inverses)
      i ∘ j - j - i
    """
    add, mul, neg, inv = brace.add, brace.mul, brace.neg, brace.inv
    gens = 0
    for i in bits(x):
        for j in bits(y):
            gens |= 1 << add[add[add[i][j]][neg[i]]][neg[j]]
            gens |= 1 << mul[mul[mul[i][j]][inv[i]]][inv[j]]
            gens |= 1 << add[add[mul[i][j]][neg[j]]][neg[i]]
    return generated_ideal(brace, gens)


def ideal_weight(brace: SkewBrace, mask: Mask) -> int:
    """Least size of a generating subset; the zero ideal has weight 1."""
    if mask == 1:
        return 1
    gens = [i for i in bits(mask) if i != 0]
    for k in range(1, len(gens) + 1):
        for combo in itertools.combinations(gens, k):
            if generated_ideal(brace, mask_of(combo)) == mask:
                return k
    raise ConsistencyError(f"mask {mask:#x} does not generate itself")


class IdealLattice:
    """All ideals of one brace with meet, join and star product tables.

    Members are kept sorted by size then mask; tables are indexed by the
    member positions.  Instances are immutable after construction.
    """

    def __init__(self, brace: SkewBrace):
        self.brace = brace
        self.members: tuple[Mask, ...] = all_ideals(brace)
        self.index: dict[Mask, int] = {m: i for i, m in enumerate(self.members)}
        self.bottom: Mask = 1
        self.top: Mask = full_mask(brace.order)
        if self.members[0] != self.bottom or self.members[-1] != self.top:
            raise ConsistencyError("ideal lattice lacks bottom or top")
        k = len(self.members)
        meet = [[0] * k for _ in range(k)]
        join = [[0] * k for _ in range(k)]
        star = [[0] * k for _ in range(k)]
        for i, x in enumerate(self.members):
            for j, y in enumerate(self.members):
                meet[i][j] = self.index[x & y]
                join[i][j] = self.index[sum_ideals(brace, x, y)]
                star[i][j] = self.index[star_ideal(brace, x, y)]
        self.meet_table = tuple(tuple(r) for r in meet)
        self.join_table = tuple(tuple(r) for r in join)
        self.star_table = tuple(tuple(r) for r in star)
        self.weights: tuple[int, ...] = tuple(
            ideal_weight(brace, m) for m in self.members
        )

    def __len__(self) -> int:
        return len(self.members)

    def leq(self, x: Mask, y: Mask) -> bool:
        return is_subset(x, y)

    def meet(self, x: Mask, y: Mask) -> Mask:
        return self.members[self.meet_table[self.index[x]][self.index[y]]]

    def join(self, x: Mask, y: Mask) -> Mask:
        return self.members[self.join_table[self.index[x]][self.index[y]]]

    def star(self, x: Mask, y: Mask) -> Mask:
        return self.members[self.star_table[self.index[x]][self.index[y]]]

    def generated(self, seed: Mask) -> Mask:
        """Least member containing the seed, via intersection of members."""
        out = self.top
        for m in self.members:
            if is_subset(seed, m):
                out &= m
        if out not in self.index:
            raise ConsistencyError("intersection of members left the lattice")
        return out

    def proper_members(self) -> tuple[Mask, ...]:
        return tuple(m for m in self.members if m != self.top)

    def maximal_ideals(self) -> tuple[Mask, ...]:
        proper = self.proper_members()
        return tuple(
            m
            for m in proper
            if not any(m != other and is_subset(m, other) for other in proper)
        )


@lru_cache(maxsize=None)
def ideal_lattice(brace: SkewBrace) -> IdealLattice:
    return IdealLattice(brace)


@dataclass(frozen=True)
class LatticeLawReport:
    """multiplicative-lattice verdicts; join distributivity is informational."""

    meets_are_glb: bool
    joins_are_lub: bool
    bounds_ok: bool
    star_monotone: bool
    star_below_meet: bool
    join_distributive: bool
    counterexample: tuple | None

    @property
    def ok(self) -> bool:
        return (
            self.meets_are_glb
            and self.joins_are_lub
            and self.bounds_ok
            and self.star_monotone
            and self.star_below_meet
        )


def multiplicative_lattice_check(lat: IdealLattice) -> LatticeLawReport:
    """Verify the lattice laws and the order behaviour of the star product.

    A finite poset with correct pairwise meets and joins plus both bounds
    is a complete lattice, so the pairwise checks suffice here.
    """
    ms = lat.members
    meets_glb = True
    joins_lub = True
    for x in ms:
        for y in ms:
            mt = lat.meet(x, y)
            if not (is_subset(mt, x) and is_subset(mt, y)):
                meets_glb = False
            jn = lat.join(x, y)
            if not (is_subset(x, jn) and is_subset(y, jn)):
                joins_lub = False
            for z in ms:
                if is_subset(z, x) and is_subset(z, y) and not is_subset(z, mt):
                    meets_glb = False
                if is_subset(x, z) and is_subset(y, z) and not is_subset(jn, z):
                    joins_lub = False
    bounds_ok = ms[0] == 1 and ms[-1] == full_mask(lat.brace.order)

    monotone = True
    below_meet = True
    for x in ms:
        for y in ms:
            if not is_subset(lat.star(x, y), x & y):
                below_meet = False
            for x2 in ms:
                for y2 in ms:
                    if is_subset(x, x2) and is_subset(y, y2):
                        if not is_subset(lat.star(x, y), lat.star(x2, y2)):
                            monotone = False

    distributive = True
    counterexample = None
    for x in ms:
        for y in ms:
            for z in ms:
                left = lat.star(lat.join(x, y), z)
                right = lat.join(lat.star(x, z), lat.star(y, z))
                if left != right:
                    distributive = False
                    counterexample = ("left", x, y, z)
                left = lat.star(z, lat.join(x, y))
                right = lat.join(lat.star(z, x), lat.star(z, y))
                if left != right:
                    distributive = False
                    counterexample = ("right", x, y, z)
    return LatticeLawReport(
        meets_glb, joins_lub, bounds_ok, monotone, below_meet, distributive,
        counterexample,
    )
