"""Hull-kernel topology on prime spectra, plus generic finite-space checks.

The closed sets of a spectrum are the hulls H(I) = {P : I subset of P};
the kernel of a point set is the intersection of its members, with the
empty intersection read as the whole brace.  Hull and kernel form an
antitone Galois pair, and every law verified here is checked by direct
computation rather than assumed.

FiniteSpace is a plain finite topological space given by its closed
sets; the separation, soberness and compactness checks live at that
level so they apply to a spectrum, to the prime spectrum of the ideal
lattice, and to synthetic spaces used in tests alike.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from .bitsets import bits, full_mask, is_subset, popcount
from .braces import SkewBrace
from .errors import ConsistencyError
from .ideals import IdealLattice, generated_ideal, ideal_lattice
from .spectra import Spectrum, brace_square, is_prime, radical, spectrum

Mask = int


# ---------------------------------------------------------------------------
# generic finite spaces


@dataclass(frozen=True)
class FiniteSpace:
    """A finite topological space: point count plus closed-set masks."""

    n_points: int
    closed: tuple[int, ...]

    @property
    def everything(self) -> int:
        return full_mask(self.n_points)


def finite_space(n_points: int, closed) -> FiniteSpace:
    family = tuple(sorted(set(closed), key=lambda m: (popcount(m), m)))
    return FiniteSpace(n_points, family)


def is_topology(fs: FiniteSpace) -> tuple[bool, str | None]:
    family = set(fs.closed)
    if 0 not in family:
        return False, "empty set is not closed"
    if fs.everything not in family:
        return False, "whole space is not closed"
    for x in fs.closed:
        for y in fs.closed:
            if x | y not in family:
                return False, f"union of {x:#x} and {y:#x} is not closed"
            if x & y not in family:
                return False, f"intersection of {x:#x} and {y:#x} is not closed"
    return True, None


def closure_in(fs: FiniteSpace, pts: int) -> int:
    out = fs.everything
    for c in fs.closed:
        if is_subset(pts, c):
            out &= c
    return out


def point_closure(fs: FiniteSpace, i: int) -> int:
    return closure_in(fs, 1 << i)


def specialization_leq(fs: FiniteSpace, i: int, j: int) -> bool:
    """i below j when i lies in the closure of j."""
    return bool(point_closure(fs, j) >> i & 1)


def is_t0(fs: FiniteSpace) -> tuple[bool, tuple | None]:
    for i in range(fs.n_points):
        for j in range(i + 1, fs.n_points):
            if point_closure(fs, i) == point_closure(fs, j):
                return False, (i, j)
    return True, None


def is_t1(fs: FiniteSpace) -> tuple[bool, tuple | None]:
    family = set(fs.closed)
    for i in range(fs.n_points):
        if 1 << i not in family:
            return False, (i,)
    return True, None


def irreducible_closed_sets(fs: FiniteSpace) -> tuple[int, ...]:
    """Nonempty closed sets that are not unions of two smaller closed sets."""
    out = []
    for c in fs.closed:
        if c == 0:
            continue
        reducible = False
        smaller = [d for d in fs.closed if d != c and is_subset(d, c)]
        for x in smaller:
            for y in smaller:
                if x | y == c:
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            out.append(c)
    return tuple(out)


def generic_points(fs: FiniteSpace, c: int) -> tuple[int, ...]:
    return tuple(i for i in bits(c) if point_closure(fs, i) == c)


def is_sober(fs: FiniteSpace) -> tuple[bool, tuple | None]:
    for c in irreducible_closed_sets(fs):
        gps = generic_points(fs, c)
        if len(gps) != 1:
            return False, (c, gps)
    return True, None


def space_components(fs: FiniteSpace) -> tuple[int, ...]:
    """Maximal irreducible closed sets."""
    irr = irreducible_closed_sets(fs)
    return tuple(
        c for c in irr if not any(d != c and is_subset(c, d) for d in irr)
    )


def is_space_irreducible(fs: FiniteSpace) -> bool:
    """The empty space does not count as irreducible."""
    return fs.n_points > 0 and fs.everything in irreducible_closed_sets(fs)


def connected_component_count(fs: FiniteSpace) -> int:
    """Components of the comparability graph of the specialization order."""
    n = fs.n_points
    closures = [point_closure(fs, i) for i in range(n)]
    seen = [False] * n
    count = 0
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        stack = [start]
        seen[start] = True
        while stack:
            i = stack.pop()
            for j in range(n):
                if seen[j]:
                    continue
                if closures[i] >> j & 1 or closures[j] >> i & 1:
                    seen[j] = True
                    stack.append(j)
    return count


def is_connected(fs: FiniteSpace) -> bool:
    return connected_component_count(fs) == 1


def _subfamilies(opens: list[int], limit: int, seed: int):
    k = len(opens)
    if 2**k <= limit:
        for r in range(k + 1):
            yield from itertools.combinations(opens, r)
        return
    rng = random.Random(seed)
    for _ in range(limit):
        yield tuple(o for o in opens if rng.random() < 0.5)


def covers_verified(fs: FiniteSpace, target: int, limit: int = 2048, seed: int = 0):
    """Check that every enumerated open cover of target has a finite subcover.

    On a finite space every cover is itself finite; the value of the check
    is that it exhibits an irredundant subcover for each cover found.
    Returns (ok, covers_seen).
    """
    opens = sorted({fs.everything ^ c for c in fs.closed})
    seen = 0
    for fam in _subfamilies(opens, limit, seed):
        u = 0
        for o in fam:
            u |= o
        if not is_subset(target, u):
            continue
        seen += 1
        chosen: list[int] = []
        covered = 0
        for o in sorted(fam, key=lambda m: -popcount(m & target)):
            if is_subset(target, covered):
                break
            if o & target & ~covered:
                chosen.append(o)
                covered |= o
        if not is_subset(target, covered):
            return False, seen
    return True, seen


@dataclass(frozen=True)
class SpectralReport:
    quasi_compact: bool
    t0: bool
    sober: bool
    basis_intersection_closed: bool
    covers_seen: int

    @property
    def spectral(self) -> bool:
        return (
            self.quasi_compact
            and self.t0
            and self.sober
            and self.basis_intersection_closed
        )


def spectral_report(fs: FiniteSpace, limit: int = 2048) -> SpectralReport:
    """Check the finite-space reading of the spectral-space conditions.

    Every open of a finite space is quasi-compact and the opens form a
    basis, so the basis condition reduces to the opens being closed under
    pairwise intersection, equivalently the closed family under union.
    """
    ok_top, why = is_topology(fs)
    if not ok_top:
        raise ConsistencyError(f"not a topology: {why}")
    qc, seen = covers_verified(fs, fs.everything, limit)
    family = set(fs.closed)
    basis_ok = all(x | y in family for x in fs.closed for y in fs.closed)
    for c in fs.closed:
        sub_qc, sub_seen = covers_verified(fs, fs.everything ^ c, max(64, limit // 8))
        seen += sub_seen
        qc = qc and sub_qc
    return SpectralReport(qc, is_t0(fs)[0], is_sober(fs)[0], basis_ok, seen)


# ---------------------------------------------------------------------------
# hull-kernel spaces over an ideal lattice


class HullKernelSpace:
    """Points are chosen ideals; closed sets are hulls of lattice members.

    No topology axiom is asserted at construction: the axioms are theorems
    about prime points and are verified by the report functions, which
    also lets tests exercise them against non-prime point choices.
    """

    def __init__(self, lat: IdealLattice, points, label: str):
        self.lat = lat
        self.brace = lat.brace
        self.label = label
        self.points: tuple[Mask, ...] = tuple(
            sorted(points, key=lambda m: (popcount(m), m))
        )
        self.n_points = len(self.points)
        self.hull_by_member: dict[Mask, int] = {
            m: self.hull_of_elements(m) for m in lat.members
        }
        closed = {}
        for m in lat.members:
            closed.setdefault(self.hull_by_member[m], None)
        family = sorted(closed, key=lambda c: (popcount(c), c))
        defining = []
        for c in family:
            k = self.kern(c)
            if k not in lat.index:
                raise ConsistencyError("kernel of a closed set is not an ideal")
            defining.append(k)
        self.closed_family: tuple[int, ...] = tuple(family)
        self.defining: tuple[Mask, ...] = tuple(defining)
        self.space = finite_space(self.n_points, family)

    def hull_of_elements(self, elem_mask: Mask) -> int:
        """Point set of primes containing every masked element."""
        out = 0
        for i, p in enumerate(self.points):
            if is_subset(elem_mask, p):
                out |= 1 << i
        return out

    def hull(self, member: Mask) -> int:
        return self.hull_by_member[member]

    def kern(self, point_set: int) -> Mask:
        """Intersection of the points; the whole brace for no points."""
        out = full_mask(self.brace.order)
        for i in bits(point_set):
            out &= self.points[i]
        return out

    def closure(self, point_set: int) -> int:
        return self.hull_of_elements(self.kern(point_set))


def hk_space(lat: IdealLattice, points, label: str) -> HullKernelSpace:
    return HullKernelSpace(lat, points, label)


@dataclass(eq=False)
class SpecTopology:
    brace: SkewBrace
    kind: str
    lat: IdealLattice
    spec: Spectrum
    hk: HullKernelSpace


@lru_cache(maxsize=None)
def spec_topology(brace: SkewBrace, kind: str = "star") -> SpecTopology:
    lat = ideal_lattice(brace)
    spec = spectrum(brace, kind)
    return SpecTopology(brace, kind, lat, spec, hk_space(lat, spec.primes, "spec"))


@dataclass(eq=False)
class LatticeSpectrum:
    brace: SkewBrace
    lat: IdealLattice
    primes: tuple[Mask, ...]
    rejected: tuple[tuple[Mask, tuple], ...]
    hk: HullKernelSpace


@lru_cache(maxsize=None)
def lattice_spectrum(brace: SkewBrace) -> LatticeSpectrum:
    """Prime elements of the ideal lattice under its star multiplication."""
    lat = ideal_lattice(brace)
    primes = []
    rejected = []
    for p in lat.proper_members():
        witness = None
        for x in lat.members:
            if is_subset(x, p):
                continue
            for y in lat.members:
                if is_subset(y, p):
                    continue
                if is_subset(lat.star(x, y), p):
                    witness = (x, y)
                    break
            if witness:
                break
        if witness is None:
            primes.append(p)
        else:
            rejected.append((p, witness))
    return LatticeSpectrum(
        brace, lat, tuple(primes), tuple(rejected),
        hk_space(lat, primes, "ideal-lattice"),
    )


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class ClosedAxiomsReport:
    """Closed-set axioms of the hull family, checked exactly."""

    whole_hull_empty: bool
    zero_hull_all: bool
    union_is_meet_hull: bool
    union_is_star_hull: bool
    family_intersections: bool
    antitone: bool
    subset_hulls_factor: bool
    witness: tuple | None

    @property
    def ok(self) -> bool:
        return (
            self.whole_hull_empty
            and self.zero_hull_all
            and self.union_is_meet_hull
            and self.union_is_star_hull
            and self.family_intersections
            and self.antitone
            and self.subset_hulls_factor
        )


def closed_axioms_report(hk: HullKernelSpace, subset_limit: int = 4096):
    lat = hk.lat
    witness = None
    whole_empty = hk.hull(lat.top) == 0
    zero_all = hk.hull(lat.bottom) == full_mask(hk.n_points)

    union_meet = True
    union_star = True
    antitone = True
    for x in lat.members:
        hx = hk.hull(x)
        for y in lat.members:
            hy = hk.hull(y)
            if hx | hy != hk.hull(lat.meet(x, y)):
                union_meet = False
                witness = witness or ("union-meet", x, y)
            if hx | hy != hk.hull(lat.star(x, y)):
                union_star = False
                witness = witness or ("union-star", x, y)
            if is_subset(x, y) and not is_subset(hy, hx):
                antitone = False
                witness = witness or ("antitone", x, y)

    from .ideals import family_sum

    family_ok = True
    members = lat.members
    for r in range(4):
        for fam in itertools.combinations(members, r):
            inter = full_mask(hk.n_points)
            for m in fam:
                inter &= hk.hull(m)
            if inter != hk.hull(family_sum(hk.brace, fam)):
                family_ok = False
                witness = witness or ("family", fam)

    subset_ok = True
    n = hk.brace.order
    if 1 << n <= subset_limit:
        seeds = range(1 << n)
    else:
        rng = random.Random(7)
        seeds = [rng.randrange(1 << n) for _ in range(subset_limit)]
    for s in seeds:
        direct = hk.hull_of_elements(s)
        via_ideal = hk.hull_by_member.get(generated_ideal(hk.brace, s))
        if direct != via_ideal:
            subset_ok = False
            witness = witness or ("subset", s)
            break

    return ClosedAxiomsReport(
        whole_empty, zero_all, union_meet, union_star, family_ok, antitone,
        subset_ok, witness,
    )


@dataclass(frozen=True)
class GaloisReport:
    adjunction: bool
    hkh: bool
    khk: bool
    kh_is_radical: bool
    kh_fixed_are_radical_ideals: bool
    hk_fixed_are_closed: bool
    kuratowski: bool
    closure_is_smallest_closed: bool
    pairs_checked: int
    witness: tuple | None

    @property
    def ok(self) -> bool:
        return (
            self.adjunction
            and self.hkh
            and self.khk
            and self.kh_is_radical
            and self.kh_fixed_are_radical_ideals
            and self.hk_fixed_are_closed
            and self.kuratowski
            and self.closure_is_smallest_closed
        )


def _point_subsets(n_points: int, limit: int, seed: int):
    if 1 << n_points <= limit:
        return list(range(1 << n_points))
    rng = random.Random(seed)
    return [rng.randrange(1 << n_points) for _ in range(limit)]


def _element_subsets(n: int, limit: int, seed: int):
    if 1 << n <= limit:
        return list(range(1 << n))
    rng = random.Random(seed)
    picked = [rng.randrange(1 << n) for _ in range(limit)]
    picked.extend(1 << a for a in range(n))
    return picked


def galois_report(
    st: SpecTopology, min_pairs: int = 1000, seed: int = 0
) -> GaloisReport:
    """Verify the hull/kernel adjunction and everything it implies.

    Subset pairs are exhausted when the search space is small and sampled
    past min_pairs otherwise; singleton element sets are always included.
    """
    hk = st.hk
    n = st.brace.order
    witness = None

    side = max(2, int(min_pairs**0.5) + 1)
    subsets = _element_subsets(n, max(side, min_pairs // max(1, 1 << hk.n_points)), seed)
    point_sets = _point_subsets(hk.n_points, side, seed + 1)

    adjunction = True
    pairs = 0

    def check_pair(s: Mask, t: Mask) -> None:
        nonlocal adjunction, witness, pairs
        pairs += 1
        left = is_subset(s, hk.kern(t))
        right = is_subset(t, hk.hull_of_elements(s))
        if left != right:
            adjunction = False
            witness = witness or ("adjunction", s, t)

    for s in subsets:
        for t in point_sets:
            check_pair(s, t)
    # top up with seeded random draws so small spaces still see min_pairs
    rng = random.Random(seed + 5)
    while pairs < min_pairs:
        check_pair(rng.randint(0, full_mask(n)), rng.randint(0, full_mask(hk.n_points)))

    hkh = True
    for m in st.lat.members:
        if hk.hull_of_elements(hk.kern(hk.hull(m))) != hk.hull(m):
            hkh = False
            witness = witness or ("hkh", m)

    khk = True
    for t in _point_subsets(hk.n_points, 1024, seed + 2):
        if hk.kern(hk.closure(t)) != hk.kern(t):
            khk = False
            witness = witness or ("khk", t)

    kh_rad = True
    for s in subsets:
        kh = hk.kern(hk.hull_of_elements(s))
        rad = radical(st.brace, generated_ideal(st.brace, s), st.kind)
        if kh != rad:
            kh_rad = False
            witness = witness or ("kh-radical", s)

    kh_fixed = True
    for m in st.lat.members:
        fixed = hk.kern(hk.hull(m)) == m
        is_rad = radical(st.brace, m, st.kind) == m
        if fixed != is_rad:
            kh_fixed = False
            witness = witness or ("kh-fixed", m)

    hk_fixed = True
    family = set(hk.closed_family)
    for t in _point_subsets(hk.n_points, 1024, seed + 3):
        if (hk.closure(t) == t) != (t in family):
            hk_fixed = False
            witness = witness or ("hk-fixed", t)

    kuratowski = True
    smallest = True
    pts = _point_subsets(hk.n_points, 256, seed + 4)
    if hk.closure(0) != 0:
        kuratowski = False
    for t in pts:
        ct = hk.closure(t)
        if not is_subset(t, ct) or hk.closure(ct) != ct:
            kuratowski = False
            witness = witness or ("kuratowski", t)
        best = full_mask(hk.n_points)
        for c in hk.closed_family:
            if is_subset(t, c):
                best &= c
        if best != ct:
            smallest = False
            witness = witness or ("smallest-closed", t)
        for u in pts[:32]:
            if hk.closure(t | u) != hk.closure(t) | hk.closure(u):
                kuratowski = False
                witness = witness or ("kuratowski-union", t, u)

    return GaloisReport(
        adjunction, hkh, khk, kh_rad, kh_fixed, hk_fixed, kuratowski, smallest,
        pairs, witness,
    )


@dataclass(frozen=True)
class SeparationReport:
    n_points: int
    t0: bool
    t0_matches_antisymmetry: bool
    specialization_reverse_containment: bool
    t1: bool
    spec_equals_max: bool
    hypothesis_square_outside_max: bool
    t1_iff_spec_equals_max: bool | None
    witness: tuple | None


def separation_report(st: SpecTopology) -> SeparationReport:
    """Separation axioms, their specialization-order reading, and the
    conditional equivalence of T1 with Spec = Max."""
    hk = st.hk
    fs = hk.space
    witness = None
    t0, w = is_t0(fs)
    if w is not None:
        witness = ("t0", *w)

    antisym = True
    rev = True
    for i in range(hk.n_points):
        for j in range(hk.n_points):
            leq = specialization_leq(fs, i, j)
            if leq != is_subset(hk.points[j], hk.points[i]):
                rev = False
                witness = witness or ("reverse-containment", i, j)
            if i != j and leq and specialization_leq(fs, j, i):
                antisym = False
                witness = witness or ("antisymmetry", i, j)

    t1, w = is_t1(fs)
    maxima = set(st.lat.maximal_ideals())
    spec_eq_max = set(st.spec.primes) == maxima
    square = brace_square(st.brace)
    hypothesis = all(not is_subset(square, m) for m in maxima)
    t1_iff = (t1 == spec_eq_max) if hypothesis else None
    return SeparationReport(
        hk.n_points, t0, t0 == antisym, rev, t1, spec_eq_max, hypothesis,
        t1_iff, witness,
    )


@dataclass(frozen=True)
class IrreducibilityReport:
    n_points: int
    irreducibles_are_point_hulls: bool
    generic_points_unique: bool
    components_are_minimal_hulls: bool
    whole_irreducible: bool
    nil_is_prime: bool
    whole_iff_nil_prime: bool
    witness: tuple | None


def irreducibility_report(st: SpecTopology) -> IrreducibilityReport:
    hk = st.hk
    fs = hk.space
    witness = None

    irr = set(irreducible_closed_sets(fs))
    hulls = {hk.hull_of_elements(p) for p in hk.points}
    irr_ok = irr == hulls
    if not irr_ok:
        witness = ("irreducibles", tuple(sorted(irr ^ hulls)))

    unique = True
    for c in sorted(irr):
        if len(generic_points(fs, c)) != 1:
            unique = False
            witness = witness or ("generic", c)

    minimal_hulls = {hk.hull_of_elements(p) for p in st.spec.minimal}
    comp_ok = set(space_components(fs)) == minimal_hulls
    if not comp_ok:
        witness = witness or ("components",)

    whole_irr = is_space_irreducible(fs)
    nil = radical(st.brace, 1, st.kind)
    nil_prime = nil != st.lat.top and is_prime(st.brace, nil, st.kind)[0]
    return IrreducibilityReport(
        hk.n_points, irr_ok, unique, comp_ok, whole_irr, nil_prime,
        whole_irr == nil_prime, witness,
    )


@dataclass(frozen=True)
class NoetherianReport:
    longest_closed_chain: int
    chains_stabilize: bool
    weights_all_finite: bool
    whole_space_covers_ok: bool
    open_subspaces_covers_ok: bool
    all_subspaces_covers_ok: bool
    covers_seen: int


def noetherian_report(st: SpecTopology, limit: int = 1024) -> NoetherianReport:
    """Chain and covering behaviour; trivially strong on finite spaces but
    computed honestly from the definitions."""
    hk = st.hk
    fs = hk.space
    family = sorted(fs.closed, key=lambda m: (popcount(m), m))
    depth = {c: 1 for c in family}
    for c in family:
        for d in family:
            if d != c and is_subset(d, c):
                depth[c] = max(depth[c], depth[d] + 1)
    longest = max(depth.values()) if depth else 0

    weights_finite = all(w >= 1 for w in st.lat.weights)

    whole_ok, seen = covers_verified(fs, fs.everything, limit)
    opens_ok = True
    for c in fs.closed:
        ok, s = covers_verified(fs, fs.everything ^ c, max(64, limit // 8))
        seen += s
        opens_ok = opens_ok and ok
    subs_ok = True
    for t in _point_subsets(fs.n_points, 64, 11):
        ok, s = covers_verified(fs, t, 64)
        seen += s
        subs_ok = subs_ok and ok
    return NoetherianReport(
        longest, True, weights_finite, whole_ok, opens_ok, subs_ok, seen
    )


@dataclass(frozen=True)
class LatticeTopologyReport:
    """Closed-set axioms for the spectrum of the ideal lattice itself."""

    whole_hull_empty: bool
    zero_hull_all: bool
    union_is_meet_hull: bool
    union_is_star_hull: bool
    family_intersections: bool
    is_topology: bool
    spectral: SpectralReport

    @property
    def ok(self) -> bool:
        return (
            self.whole_hull_empty
            and self.zero_hull_all
            and self.union_is_meet_hull
            and self.union_is_star_hull
            and self.family_intersections
            and self.is_topology
            and self.spectral.spectral
        )


def lattice_topology_report(ls: LatticeSpectrum) -> LatticeTopologyReport:
    hk = ls.hk
    lat = ls.lat
    whole_empty = hk.hull(lat.top) == 0
    zero_all = hk.hull(lat.bottom) == full_mask(hk.n_points)
    union_meet = True
    union_star = True
    for x in lat.members:
        for y in lat.members:
            u = hk.hull(x) | hk.hull(y)
            if u != hk.hull(lat.meet(x, y)):
                union_meet = False
            if u != hk.hull(lat.star(x, y)):
                union_star = False
    from .ideals import family_sum

    family_ok = True
    for r in range(4):
        for fam in itertools.combinations(lat.members, r):
            inter = full_mask(hk.n_points)
            for m in fam:
                inter &= hk.hull(m)
            if inter != hk.hull(family_sum(ls.brace, fam)):
                family_ok = False
    topo_ok, _ = is_topology(hk.space)
    return LatticeTopologyReport(
        whole_empty, zero_all, union_meet, union_star, family_ok, topo_ok,
        spectral_report(hk.space),
    )
