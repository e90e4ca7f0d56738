"""Brace homomorphisms, quotients, and the induced maps between spectra.

A homomorphism preserves both operations; its kernel is an ideal, its
image a subbrace, and contraction/extension move ideals across it.
Quotients are taken by additive cosets (the multiplicative cosets agree,
and that is checked rather than assumed).  A homomorphism f pulls primes
of the target back to the source, and the reports below certify, by
direct computation, how that point map interacts with the hull-kernel
topology: continuity, the surjective/injective criteria, the kernel-hull
homeomorphism for surjections, density, and the square induced between
quotient spectra.  Certificates over empty spectra are reported as
vacuous, never silently folded into a pass.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .bitsets import bits, full_mask, is_subset
from .braces import SkewBrace, validate
from .errors import (
    ConsistencyError,
    NotAHomomorphismError,
    NotAnIdealError,
    ParseError,
)
from .ideals import generated_ideal, ideal_lattice, is_ideal, star_set
from .spectra import is_prime, nil_radical, spectrum
from .topology import spec_topology

Mask = int


@dataclass(frozen=True)
class Hom:
    """A validated homomorphism between two braces."""

    source: SkewBrace
    target: SkewBrace
    mapping: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    def image_of(self, mask: Mask) -> Mask:
        out = 0
        for a in bits(mask):
            out |= 1 << self.mapping[a]
        return out

    def preimage_of(self, mask: Mask) -> Mask:
        out = 0
        for a in range(self.source.order):
            if mask >> self.mapping[a] & 1:
                out |= 1 << a
        return out


def validate_hom(source: SkewBrace, target: SkewBrace, mapping) -> Hom:
    """Check both preservation laws exhaustively and return the hom."""
    m = tuple(mapping)
    if len(m) != source.order:
        raise ParseError(
            f"mapping has {len(m)} entries for a source of order {source.order}"
        )
    for v in m:
        if not isinstance(v, int) or not 0 <= v < target.order:
            raise ParseError(f"mapping value {v!r} is not a target element")
    for a in range(source.order):
        for b in range(source.order):
            if m[source.add[a][b]] != target.add[m[a]][m[b]]:
                raise NotAHomomorphismError("add", a, b)
            if m[source.mul[a][b]] != target.mul[m[a]][m[b]]:
                raise NotAHomomorphismError("mul", a, b)
    if m[0] != 0:
        # forced by f(0+0)=f(0)+f(0); reaching here means a bug above
        raise ConsistencyError("homomorphism passed both laws but moves 0")
    return Hom(source, target, m)


def identity_hom(brace: SkewBrace) -> Hom:
    return Hom(brace, brace, tuple(range(brace.order)))


def zero_hom(source: SkewBrace, target: SkewBrace) -> Hom:
    """The constant map onto the identity; a homomorphism for any pair."""
    return Hom(source, target, (0,) * source.order)


def compose(g: Hom, f: Hom) -> Hom:
    """g after f."""
    if f.target is not g.source and f.target != g.source:
        raise ParseError("composition mismatch: target of f is not source of g")
    return Hom(f.source, g.target, tuple(g.mapping[v] for v in f.mapping))


def kernel(f: Hom) -> Mask:
    """Preimage of the identity, asserted to be an ideal of the source."""
    k = f.preimage_of(1)
    if not is_ideal(f.source, k):
        raise ConsistencyError(f"kernel {k:#x} of a valid hom is not an ideal")
    return k


def image(f: Hom) -> Mask:
    """Image element set, asserted to be a subbrace of the target."""
    im = f.image_of(full_mask(f.source.order))
    t = f.target
    for a in bits(im):
        for b in bits(im):
            if not im >> t.add[a][b] & 1 or not im >> t.mul[a][b] & 1:
                raise ConsistencyError("image of a valid hom is not a subbrace")
    return im


def is_surjective(f: Hom) -> bool:
    return image(f) == full_mask(f.target.order)


def is_injective(f: Hom) -> bool:
    return len(set(f.mapping)) == f.source.order


def contraction(f: Hom, target_ideal: Mask) -> Mask:
    """Preimage of a target ideal, asserted to be an ideal of the source."""
    c = f.preimage_of(target_ideal)
    if not is_ideal(f.source, c):
        raise ConsistencyError(
            f"contraction of ideal {target_ideal:#x} is not an ideal"
        )
    return c


def extension(f: Hom, source_ideal: Mask) -> Mask:
    """The target ideal generated by the image of a source ideal."""
    return generated_ideal(f.target, f.image_of(source_ideal))


# ---------------------------------------------------------------------------
# quotients


@dataclass(frozen=True)
class Quotient:
    """A brace modulo an ideal, with its coset data and projection map."""

    base: SkewBrace
    ideal: Mask
    reps: tuple[int, ...]
    coset_of: tuple[int, ...]
    brace: SkewBrace
    projection: Hom


def _additive_coset(brace: SkewBrace, a: int, ideal: Mask) -> Mask:
    out = 0
    for i in bits(ideal):
        out |= 1 << brace.add[a][i]
    return out


def quotient(brace: SkewBrace, ideal: Mask) -> Quotient:
    """Quotient by additive cosets; multiplicative cosets must agree.

    Coset representatives are the minimal elements, so the identity coset
    always sits at index 0.  Well-definedness of both induced operations
    is checked over every pair of representatives before the quotient
    tables are validated as a brace in their own right.
    """
    if not is_ideal(brace, ideal):
        raise NotAnIdealError("quotient-input", ideal)
    n = brace.order

    coset_masks: list[Mask] = []
    coset_of = [-1] * n
    for a in range(n):
        if coset_of[a] >= 0:
            continue
        cm = _additive_coset(brace, a, ideal)
        mul_cm = 0
        for i in bits(ideal):
            mul_cm |= 1 << brace.mul[a][i]
        if mul_cm != cm:
            raise ConsistencyError(
                f"additive and multiplicative cosets of {a} differ"
            )
        idx = len(coset_masks)
        coset_masks.append(cm)
        for x in bits(cm):
            coset_of[x] = idx

    order = [i for i, _ in sorted(enumerate(coset_masks), key=lambda p: p[1] & -p[1])]
    rank = {old: new for new, old in enumerate(order)}
    coset_of = [rank[c] for c in coset_of]
    reps = tuple(min(bits(coset_masks[old])) for old in order)

    k = len(reps)
    qadd = [[0] * k for _ in range(k)]
    qmul = [[0] * k for _ in range(k)]
    for x, y in itertools.product(range(k), range(k)):
        qadd[x][y] = coset_of[brace.add[reps[x]][reps[y]]]
        qmul[x][y] = coset_of[brace.mul[reps[x]][reps[y]]]
    # representative independence: the tables must describe every element pair
    for a in range(n):
        for b in range(n):
            if coset_of[brace.add[a][b]] != qadd[coset_of[a]][coset_of[b]]:
                raise ConsistencyError("quotient addition is not well defined")
            if coset_of[brace.mul[a][b]] != qmul[coset_of[a]][coset_of[b]]:
                raise ConsistencyError("quotient circle is not well defined")

    qbrace = validate(qadd, qmul)
    projection = validate_hom(brace, qbrace, coset_of)
    return Quotient(brace, ideal, reps, tuple(coset_of), qbrace, projection)


@dataclass(frozen=True)
class CorrespondenceReport:
    """Ideals of A/I versus ideals of A containing I."""

    over_count: int
    quotient_count: int
    down_images_are_ideals: bool
    up_preimages_contain: bool
    mutually_inverse: bool
    witness: tuple | None

    @property
    def bijective(self) -> bool:
        return (
            self.over_count == self.quotient_count
            and self.down_images_are_ideals
            and self.up_preimages_contain
            and self.mutually_inverse
        )


def ideal_correspondence(q: Quotient) -> CorrespondenceReport:
    """Certify the bijection J <-> pi(J) between the two ideal families."""
    pi = q.projection
    over = [m for m in ideal_lattice(q.base).members if is_subset(q.ideal, m)]
    over_set = set(over)
    below = set(ideal_lattice(q.brace).members)
    witness = None

    down_ok = True
    up_ok = True
    inverse_ok = True
    for m in over:
        img = pi.image_of(m)
        if img not in below:
            down_ok = False
            witness = witness or ("down-not-ideal", m)
        if pi.preimage_of(img) != m:
            inverse_ok = False
            witness = witness or ("down-up", m)
    for j in below:
        pre = pi.preimage_of(j)
        if not is_subset(q.ideal, pre) or pre not in over_set:
            up_ok = False
            witness = witness or ("up-not-over", j)
        if pi.image_of(pre) != j:
            inverse_ok = False
            witness = witness or ("up-down", j)
    return CorrespondenceReport(
        len(over), len(below), down_ok, up_ok, inverse_ok, witness
    )


# ---------------------------------------------------------------------------
# images of star products


@dataclass(frozen=True)
class StarImageReport:
    pairs_checked: int
    exact: bool
    witness: tuple | None


def star_image_check(f: Hom) -> StarImageReport:
    """f(I * J) = f(I) * f(J) elementwise, over all source ideal pairs."""
    members = ideal_lattice(f.source).members
    pairs = 0
    witness = None
    exact = True
    for i in members:
        for j in members:
            pairs += 1
            lhs = f.image_of(star_set(f.source, i, j))
            rhs = star_set(f.target, f.image_of(i), f.image_of(j))
            if lhs != rhs:
                exact = False
                witness = witness or (i, j, lhs, rhs)
    return StarImageReport(pairs, exact, witness)


@dataclass(frozen=True)
class ExtContReport:
    """Extension/contraction as a monotone Galois pair on ideal lattices."""

    extension_monotone: bool
    contraction_monotone: bool
    unit_holds: bool
    counit_holds: bool
    adjunction: bool
    ece_collapses: bool
    witness: tuple | None

    @property
    def ok(self) -> bool:
        return (
            self.extension_monotone
            and self.contraction_monotone
            and self.unit_holds
            and self.counit_holds
            and self.adjunction
            and self.ece_collapses
        )


def ext_cont_report(f: Hom) -> ExtContReport:
    src = ideal_lattice(f.source).members
    tgt = ideal_lattice(f.target).members
    ext = {i: extension(f, i) for i in src}
    con = {j: contraction(f, j) for j in tgt}
    witness = None

    ext_mono = True
    for i1, i2 in itertools.product(src, src):
        if is_subset(i1, i2) and not is_subset(ext[i1], ext[i2]):
            ext_mono = False
            witness = witness or ("ext-monotone", i1, i2)
    con_mono = True
    for j1, j2 in itertools.product(tgt, tgt):
        if is_subset(j1, j2) and not is_subset(con[j1], con[j2]):
            con_mono = False
            witness = witness or ("con-monotone", j1, j2)
    unit = True
    for i in src:
        if not is_subset(i, con[ext[i]]):
            unit = False
            witness = witness or ("unit", i)
    counit = True
    for j in tgt:
        if not is_subset(extension(f, con[j]), j):
            counit = False
            witness = witness or ("counit", j)
    adj = True
    for i in src:
        for j in tgt:
            if is_subset(ext[i], j) != is_subset(i, con[j]):
                adj = False
                witness = witness or ("adjunction", i, j)
    ece = True
    for i in src:
        if extension(f, contraction(f, ext[i])) != ext[i]:
            ece = False
            witness = witness or ("ece", i)
    return ExtContReport(ext_mono, con_mono, unit, counit, adj, ece, witness)


# ---------------------------------------------------------------------------
# induced maps between spectra


@dataclass(frozen=True)
class SurjectiveCase:
    """Certificates specific to a surjective homomorphism."""

    image_is_kernel_hull: bool
    closed_images_match: bool
    point_map_injective: bool
    vacuous: bool

    @property
    def ok(self) -> bool:
        return (
            self.image_is_kernel_hull
            and self.closed_images_match
            and self.point_map_injective
        )


@dataclass(frozen=True)
class SpecMapReport:
    """Pullback of target primes along a hom, with topology certificates.

    point_map lists (target prime, its contraction) pairs.  Certificates
    that quantify over an empty spectrum carry their own vacuous flag.
    Certificates that need the contractions to be prime are None when
    some contraction fails primality under the chosen definition.
    """

    kind: str
    point_map: tuple[tuple[Mask, Mask], ...]
    contractions_prime: bool
    points_vacuous: bool
    continuity_exact: bool | None
    continuity_vacuous: bool
    surjectivity_matches_contractions: bool | None
    all_target_primes_extended: bool
    injectivity_certificate: bool | None
    surjective_case: SurjectiveCase | None
    density: bool | None
    kernel_in_nil: bool
    density_matches_kernel: bool | None
    density_vacuous: bool
    witness: tuple | None


def induced_spec_map(f: Hom, kind: str = "star") -> SpecMapReport:
    source_primes = spectrum(f.source, kind).primes
    target_primes = spectrum(f.target, kind).primes
    witness = None

    point_map = tuple((p, f.preimage_of(p)) for p in target_primes)
    contractions_prime = True
    for p, c in point_map:
        ok, why = is_prime(f.source, c, kind)
        if not ok:
            contractions_prime = False
            witness = witness or ("contraction-not-prime", p, c, why)

    src_members = ideal_lattice(f.source).members
    continuity = None
    if contractions_prime:
        continuity = True
        for i in src_members:
            lhs = frozenset(p for p, c in point_map if is_subset(i, c))
            e = extension(f, i)
            rhs = frozenset(p for p in target_primes if is_subset(e, p))
            if lhs != rhs:
                continuity = False
                witness = witness or ("continuity", i, lhs, rhs)

    contracted = {c for _, c in point_map}
    surj_iff = None
    if contractions_prime:
        every_contracted = all(p in contracted for p in source_primes)
        map_surjective = set(source_primes) <= contracted
        surj_iff = every_contracted == map_surjective
        if not surj_iff:
            witness = witness or ("surjectivity", every_contracted, map_surjective)

    extensions = {extension(f, i) for i in src_members}
    all_extended = all(q in extensions for q in target_primes)
    injectivity = None
    if all_extended and contractions_prime:
        injectivity = len(contracted) == len(point_map)
        if not injectivity:
            witness = witness or ("injectivity",)

    ker = kernel(f)
    surjective_case = None
    if is_surjective(f) and contractions_prime:
        im_points = contracted
        kernel_hull = {p for p in source_primes if is_subset(ker, p)}
        img_ok = im_points == kernel_hull
        closed_ok = True
        for j in ideal_lattice(f.target).members:
            fwd = frozenset(f.preimage_of(q) for q in target_primes if is_subset(j, q))
            cj = contraction(f, j)
            back = frozenset(p for p in source_primes if is_subset(cj, p))
            if fwd != back:
                closed_ok = False
                witness = witness or ("closed-image", j, fwd, back)
        inj = len(contracted) == len(point_map)
        surjective_case = SurjectiveCase(
            img_ok, closed_ok, inj, not target_primes and not source_primes
        )
        if not img_ok:
            witness = witness or ("kernel-hull", im_points, kernel_hull)

    kernel_in_nil = is_subset(ker, nil_radical(f.source, kind))
    density = None
    density_match = None
    if contractions_prime:
        st = spec_topology(f.source, kind)
        index = {p: i for i, p in enumerate(st.hk.points)}
        im_mask = 0
        for c in contracted:
            im_mask |= 1 << index[c]
        density = st.hk.closure(im_mask) == full_mask(st.hk.n_points)
        density_match = density == kernel_in_nil
        if not density_match:
            witness = witness or ("density", density, kernel_in_nil)

    return SpecMapReport(
        kind=kind,
        point_map=point_map,
        contractions_prime=contractions_prime,
        points_vacuous=not target_primes,
        continuity_exact=continuity,
        continuity_vacuous=not target_primes,
        surjectivity_matches_contractions=surj_iff,
        all_target_primes_extended=all_extended,
        injectivity_certificate=injectivity,
        surjective_case=surjective_case,
        density=density,
        kernel_in_nil=kernel_in_nil,
        density_matches_kernel=density_match,
        density_vacuous=not source_primes,
        witness=witness,
    )


@dataclass(frozen=True)
class NilQuotientReport:
    """Spectrum of A against the spectrum of A modulo its nil radical."""

    kind: str
    nil: Mask
    bijective: bool
    closed_sets_match: bool
    vacuous: bool
    witness: tuple | None

    @property
    def homeomorphic(self) -> bool:
        return self.bijective and self.closed_sets_match


def nil_quotient_homeo(brace: SkewBrace, kind: str = "star") -> NilQuotientReport:
    """Projection onto A/nil induces a one-to-one, bi-closed point map."""
    nil = nil_radical(brace, kind)
    q = quotient(brace, nil)
    rep = induced_spec_map(q.projection, kind)

    base_primes = set(spectrum(brace, kind).primes)
    contracted = {c for _, c in rep.point_map}
    bijective = (
        rep.contractions_prime
        and len(contracted) == len(rep.point_map)
        and contracted == base_primes
    )
    closed_match = bool(
        rep.surjective_case is not None and rep.surjective_case.closed_images_match
    ) and rep.continuity_exact is True
    vacuous = not base_primes and not rep.point_map
    witness = rep.witness
    if not bijective and witness is None:
        witness = ("nil-quotient-points", contracted, base_primes)
    return NilQuotientReport(kind, nil, bijective, closed_match, vacuous, witness)


@dataclass(frozen=True)
class RestrictionSquareReport:
    """Spectra of two quotients sitting over a homomorphism.

    Given f: A -> A' and an ideal I of A, the target-side ideal J is
    generated by the image of I, which is the choice that makes the
    induced map between the quotients exist.  The report certifies that
    contraction carries the hull of J into the hull of I and that going
    quotient-then-contract agrees with contract-then-quotient on every
    prime of A'/J.
    """

    kind: str
    source_ideal: Mask
    target_ideal: Mask
    left_square: bool
    hull_containment: bool
    square_commutes: bool
    vacuous: bool
    witness: tuple | None

    @property
    def ok(self) -> bool:
        return self.left_square and self.hull_containment and self.square_commutes


def restriction_square(f: Hom, ideal: Mask, kind: str = "star") -> RestrictionSquareReport:
    j = extension(f, ideal)
    qi = quotient(f.source, ideal)
    qj = quotient(f.target, j)
    witness = None

    # induced map on cosets, then representative independence
    induced = tuple(qj.coset_of[f(r)] for r in qi.reps)
    left_square = True
    for a in range(f.source.order):
        if qj.coset_of[f(a)] != induced[qi.coset_of[a]]:
            left_square = False
            witness = witness or ("left-square", a)
    phi_bar = validate_hom(qi.brace, qj.brace, induced)

    target_primes = spectrum(f.target, kind).primes
    hull_containment = True
    for p in target_primes:
        if is_subset(j, p) and not is_subset(ideal, f.preimage_of(p)):
            hull_containment = False
            witness = witness or ("hull-containment", p)

    quotient_primes = spectrum(qj.brace, kind).primes
    square = True
    for k in quotient_primes:
        via_target = f.preimage_of(qj.projection.preimage_of(k))
        via_quotient = qi.projection.preimage_of(phi_bar.preimage_of(k))
        if via_target != via_quotient:
            square = False
            witness = witness or ("square", k, via_target, via_quotient)

    return RestrictionSquareReport(
        kind=kind,
        source_ideal=ideal,
        target_ideal=j,
        left_square=left_square,
        hull_containment=hull_containment,
        square_commutes=square,
        vacuous=not quotient_primes,
        witness=witness,
    )


# ---------------------------------------------------------------------------
# corpus helpers


def quotient_projections(brace: SkewBrace) -> tuple[Hom, ...]:
    """Projections onto the quotient by every ideal, zero and full included."""
    return tuple(
        quotient(brace, m).projection for m in ideal_lattice(brace).members
    )


@lru_cache(maxsize=None)
def endomorphisms(brace: SkewBrace) -> tuple[Hom, ...]:
    """Every self-map preserving both operations, found by brute force."""
    n = brace.order
    add, mul = brace.add, brace.mul
    out = []
    for tail in itertools.product(range(n), repeat=n - 1):
        m = (0,) + tail
        if all(
            m[add[a][b]] == add[m[a]][m[b]] and m[mul[a][b]] == mul[m[a]][m[b]]
            for a in range(n)
            for b in range(n)
        ):
            out.append(Hom(brace, brace, m))
    return tuple(out)
