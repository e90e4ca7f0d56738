"""The property suite: every verified statement, run over a catalog.

Each check produces SuiteResult rows with a three-way verdict.  A row
is a fail only when a computed statement is false, and every fail
carries a witness in its detail.  A row is vacuous when the statement's
quantified domain is empty for that brace (an empty spectrum, a missing
hypothesis); vacuous rows are counted separately from passes so that
trivially-true instances are never mistaken for evidence.

Checks are grouped per brace plus a handful of catalog-level rows
(enumeration cross-validation, isomorphism freeness, determinism).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import is_subset, popcount
from .braces import is_isomorphic, validate, SkewBrace
from .catalog import catalog_lines, generate_catalog, verify_record
from .enumeration import enumerate_braces, enumerate_braces_raw
from .errors import SbspecError
from .ideals import (
    additive_subgroups,
    generated_ideal,
    ideal_check,
    ideal_lattice,
    is_ideal,
    multiplicative_lattice_check,
    star_ideal,
    star_set,
    star_subgroup,
)
from .morphisms import (
    endomorphisms,
    ext_cont_report,
    ideal_correspondence,
    induced_spec_map,
    kernel,
    image,
    contraction,
    nil_quotient_homeo,
    quotient,
    quotient_projections,
    restriction_square,
    star_image_check,
)
from .spectra import (
    PRIME_KINDS,
    brace_square,
    is_prime,
    is_prime_star_by_subsets,
    maximal_prime_criterion,
    nil_radical,
    radical,
    spectrum,
)
from .topology import (
    closed_axioms_report,
    galois_report,
    irreducibility_report,
    lattice_spectrum,
    lattice_topology_report,
    noetherian_report,
    separation_report,
    spec_topology,
    spectral_report,
)

Mask = int

SUBSET_ORACLE_BOUND = 5
ENDOMORPHISM_BOUND = 4


@dataclass(frozen=True)
class SuiteResult:
    brace_id: str
    check: str
    verdict: str  # "pass" | "fail" | "vacuous"
    detail: str = ""


def _row(brace_id: str, check: str, ok: bool, vacuous: bool = False, detail: str = ""):
    if not ok:
        return SuiteResult(brace_id, check, "fail", detail)
    if vacuous:
        return SuiteResult(brace_id, check, "vacuous", detail)
    return SuiteResult(brace_id, check, "pass", detail)


def _guard(out: list, brace_id: str, check: str, fn) -> None:
    """Run one check; any library error becomes a fail row, not a crash."""
    try:
        result = fn()
    except SbspecError as exc:
        out.append(SuiteResult(brace_id, check, "fail", f"{type(exc).__name__}: {exc}"))
        return
    if isinstance(result, SuiteResult):
        out.append(result)
    else:
        out.extend(result)


# ---------------------------------------------------------------------------
# per-brace checks


def _check_axioms(bid: str, brace: SkewBrace):
    validate(brace.add, brace.mul)
    return _row(bid, "brace-axioms", True)


def _check_lambda(bid: str, brace: SkewBrace):
    n = brace.order
    ok = brace.lam[0] == tuple(range(n))
    witness = None if ok else ("lambda-at-identity",)
    for a in range(n):
        for b in range(n):
            if brace.mul[a][b] != brace.add[a][brace.lam[a][b]]:
                ok = False
                witness = witness or ("circle-via-lambda", a, b)
            if brace.star[a][b] != brace.add[brace.lam[a][b]][brace.neg[b]]:
                ok = False
                witness = witness or ("star-via-lambda", a, b)
            composed = tuple(brace.lam[a][brace.lam[b][c]] for c in range(n))
            if brace.lam[brace.mul[a][b]] != composed:
                ok = False
                witness = witness or ("lambda-cocycle", a, b)
    return _row(bid, "lambda-maps", ok, detail=str(witness) if witness else "")


def _check_ideal_criteria(bid: str, brace: SkewBrace):
    # the elementwise criterion is cross-checked against the star-product
    # absorption criterion inside ideal_check; a disagreement raises
    count = 0
    for m in additive_subgroups(brace):
        if ideal_check(brace, m).ok:
            count += 1
    lat = ideal_lattice(brace)
    ok = count == len(lat.members)
    return _row(bid, "ideal-criteria", ok, detail=f"ideals={count}")


def _check_lattice_laws(bid: str, brace: SkewBrace):
    lat = ideal_lattice(brace)
    rep = multiplicative_lattice_check(lat)
    detail = f"join_distributive={rep.join_distributive}"
    if rep.counterexample is not None and not rep.ok:
        detail += f" witness={rep.counterexample}"
    return _row(bid, "multiplicative-lattice", rep.ok, detail=detail)


def _check_generated_routes(bid: str, brace: SkewBrace):
    lat = ideal_lattice(brace)
    ok = True
    witness = None
    for seed in range(1 << brace.order):
        direct = generated_ideal(brace, seed)
        via_lattice = lat.generated(seed | 1)
        if direct != via_lattice:
            ok = False
            witness = witness or seed
            break
    return _row(bid, "generated-ideal-routes", ok, detail=f"seed={witness}" if witness is not None else "")


def _check_star_chain(bid: str, brace: SkewBrace):
    lat = ideal_lattice(brace)
    ok = True
    witness = None
    for i in lat.members:
        for j in lat.members:
            s0 = star_set(brace, i, j)
            s1 = star_subgroup(brace, i, j)
            s2 = star_ideal(brace, i, j)
            if not (is_subset(s0, s1) and is_subset(s1, s2) and is_subset(s2, i & j)):
                ok = False
                witness = witness or (i, j)
    return _row(bid, "star-chain", ok, detail=str(witness) if witness else "")


def _check_subset_oracle(bid: str, brace: SkewBrace):
    if brace.order > SUBSET_ORACLE_BOUND:
        return _row(
            bid, "star-prime-subset-oracle", True, vacuous=True,
            detail=f"oracle bounded to order {SUBSET_ORACLE_BOUND}",
        )
    lat = ideal_lattice(brace)
    ok = True
    witness = None
    for m in lat.proper_members():
        fast = is_prime(brace, m, "star")[0]
        slow = is_prime_star_by_subsets(brace, m)[0]
        if fast != slow:
            ok = False
            witness = witness or m
    return _row(bid, "star-prime-subset-oracle", ok, detail=str(witness) if witness else "")


def _check_prime_implication(bid: str, brace: SkewBrace):
    """Elementwise primality forces the ideal-pair implication."""
    lat = ideal_lattice(brace)
    primes = spectrum(brace, "star").primes
    ok = True
    witness = None
    for p in primes:
        for i in lat.members:
            for j in lat.members:
                if is_subset(star_set(brace, i, j), p):
                    if not is_subset(i, p) and not is_subset(j, p):
                        ok = False
                        witness = witness or (p, i, j)
    return _row(
        bid, "prime-ideal-implication", ok, vacuous=not primes,
        detail=str(witness) if witness else f"primes={len(primes)}",
    )


def _check_radical_laws(bid: str, brace: SkewBrace, kind: str):
    lat = ideal_lattice(brace)
    st = spec_topology(brace, kind)
    primes = spectrum(brace, kind).primes
    ok = True
    witness = None
    for m in lat.members:
        rad = radical(brace, m, kind)
        if not is_ideal(brace, rad):
            ok = False
            witness = witness or ("radical-not-ideal", m)
        if not is_subset(m, rad):
            ok = False
            witness = witness or ("not-extensive", m)
        if radical(brace, rad, kind) != rad:
            ok = False
            witness = witness or ("not-idempotent", m)
        if st.hk.hull(m) != st.hk.hull_of_elements(rad):
            ok = False
            witness = witness or ("hull-of-radical", m)
    nil = nil_radical(brace, kind)
    for p in primes:
        if not is_subset(nil, p):
            ok = False
            witness = witness or ("nil-not-below-prime", p)
    return _row(
        bid, f"radical-laws-{kind}", ok, detail=str(witness) if witness else ""
    )


def _check_maximal_prime(bid: str, brace: SkewBrace):
    lat = ideal_lattice(brace)
    maxima = lat.maximal_ideals()
    primes = set(spectrum(brace, "star").primes)
    square_ideal = brace_square(brace, "ideal")
    square_subgroup = brace_square(brace, "subgroup")
    ok = True
    witness = None
    for m in maxima:
        criterion = maximal_prime_criterion(brace, m)
        if (m in primes) != criterion:
            ok = False
            witness = witness or m
    detail = f"maximal={len(maxima)} square_closures_agree={square_ideal == square_subgroup}"
    if witness is not None:
        detail += f" witness={witness}"
    return _row(bid, "maximal-prime-criterion", ok, vacuous=not maxima, detail=detail)


def _check_closed_axioms(bid: str, brace: SkewBrace, kind: str):
    st = spec_topology(brace, kind)
    rep = closed_axioms_report(st.hk)
    ok = (
        rep.whole_hull_empty
        and rep.zero_hull_all
        and rep.union_is_meet_hull
        and rep.union_is_star_hull
        and rep.family_intersections
        and rep.antitone
        and rep.subset_hulls_factor
    )
    return _row(
        bid, f"closed-axioms-{kind}", ok,
        detail=str(rep.witness) if rep.witness else "",
    )


def _check_galois(bid: str, brace: SkewBrace, kind: str):
    st = spec_topology(brace, kind)
    rep = galois_report(st)
    ok = (
        rep.adjunction
        and rep.hkh
        and rep.khk
        and rep.kh_is_radical
        and rep.kh_fixed_are_radical_ideals
        and rep.hk_fixed_are_closed
        and rep.kuratowski
        and rep.closure_is_smallest_closed
    )
    detail = f"pairs={rep.pairs_checked}"
    if rep.witness is not None:
        detail += f" witness={rep.witness}"
    return _row(bid, f"galois-{kind}", ok, detail=detail)


def _check_separation(bid: str, brace: SkewBrace, kind: str):
    st = spec_topology(brace, kind)
    rep = separation_report(st)
    rows = []
    t0_ok = (
        rep.t0
        and rep.t0_matches_antisymmetry
        and rep.specialization_reverse_containment
    )
    rows.append(
        _row(
            bid, f"t0-specialization-{kind}", t0_ok, vacuous=rep.n_points < 2,
            detail=f"points={rep.n_points}" + (f" witness={rep.witness}" if not t0_ok else ""),
        )
    )
    if kind == "star":
        if not rep.hypothesis_square_outside_max:
            rows.append(
                SuiteResult(
                    bid, "t1-iff-spec-equals-max", "vacuous",
                    "square inside some maximal ideal",
                )
            )
        else:
            rows.append(
                _row(
                    bid, "t1-iff-spec-equals-max",
                    rep.t1_iff_spec_equals_max is True,
                    detail=f"t1={rep.t1} spec_equals_max={rep.spec_equals_max}",
                )
            )
    return rows


def _check_irreducibility(bid: str, brace: SkewBrace, kind: str):
    st = spec_topology(brace, kind)
    rep = irreducibility_report(st)
    rows = [
        _row(
            bid, f"irreducibles-are-hulls-{kind}", rep.irreducibles_are_point_hulls,
            detail=str(rep.witness) if rep.witness else "",
        ),
        _row(
            bid, f"generic-points-unique-{kind}", rep.generic_points_unique,
            vacuous=rep.n_points == 0,
        ),
        _row(
            bid, f"components-minimal-primes-{kind}", rep.components_are_minimal_hulls,
            vacuous=rep.n_points == 0,
        ),
        _row(
            bid, f"irreducible-iff-nil-prime-{kind}", rep.whole_iff_nil_prime,
            detail=f"irreducible={rep.whole_irreducible} nil_prime={rep.nil_is_prime}",
        ),
    ]
    return rows


def _check_noetherian(bid: str, brace: SkewBrace, kind: str):
    st = spec_topology(brace, kind)
    rep = noetherian_report(st)
    ok = (
        rep.chains_stabilize
        and rep.weights_all_finite
        and rep.whole_space_covers_ok
        and rep.open_subspaces_covers_ok
        and rep.all_subspaces_covers_ok
    )
    return _row(
        bid, f"noetherian-compact-{kind}", ok,
        detail=f"chain={rep.longest_closed_chain} covers={rep.covers_seen}",
    )


def _check_spectral(bid: str, brace: SkewBrace):
    st = spec_topology(brace, "star")
    rep = spectral_report(st.hk.space)
    rows = [
        _row(
            bid, "spectral-space-spec", rep.spectral,
            detail=(
                f"qc={rep.quasi_compact} t0={rep.t0} sober={rep.sober} "
                f"basis={rep.basis_intersection_closed}"
            ),
        )
    ]
    ls = lattice_spectrum(brace)
    lrep = lattice_topology_report(ls)
    srep = spectral_report(ls.hk.space)
    axioms_ok = (
        lrep.whole_hull_empty
        and lrep.zero_hull_all
        and lrep.union_is_meet_hull
        and lrep.union_is_star_hull
        and lrep.family_intersections
        and lrep.is_topology
    )
    rows.append(_row(bid, "closed-axioms-lattice", axioms_ok))
    rows.append(
        _row(
            bid, "spectral-space-idl", srep.spectral,
            detail=f"points={len(ls.primes)}",
        )
    )
    return rows


def _corpus(brace: SkewBrace):
    homs = list(quotient_projections(brace))
    if brace.order <= ENDOMORPHISM_BOUND:
        homs.extend(endomorphisms(brace))
    return homs


def _check_hom_basics(bid: str, brace: SkewBrace):
    ok = True
    witness = None
    count = 0
    for f in _corpus(brace):
        count += 1
        k = kernel(f)
        image(f)
        for j in ideal_lattice(f.target).members:
            contraction(f, j)
        if f.mapping == tuple(range(brace.order)) and k != 1:
            ok = False
            witness = witness or ("identity-kernel", k)
    return _row(bid, "hom-kernel-image", ok, detail=f"homs={count}" + (f" witness={witness}" if witness else ""))


def _check_quotients(bid: str, brace: SkewBrace):
    lat = ideal_lattice(brace)
    ok = True
    witness = None
    for m in lat.members:
        q = quotient(brace, m)
        if q.brace.order * popcount(m) != brace.order:
            ok = False
            witness = witness or ("coset-count", m)
        if kernel(q.projection) != m:
            ok = False
            witness = witness or ("projection-kernel", m)
    return _row(bid, "quotient-construction", ok, detail=str(witness) if witness else "")


def _check_correspondence(bid: str, brace: SkewBrace):
    ok = True
    witness = None
    for m in ideal_lattice(brace).members:
        rep = ideal_correspondence(quotient(brace, m))
        if not rep.bijective:
            ok = False
            witness = witness or (m, rep.witness)
    return _row(bid, "ideal-correspondence", ok, detail=str(witness) if witness else "")


def _check_star_image(bid: str, brace: SkewBrace):
    ok = True
    witness = None
    pairs = 0
    for f in _corpus(brace):
        rep = star_image_check(f)
        pairs += rep.pairs_checked
        if not rep.exact:
            ok = False
            witness = witness or (f.mapping, rep.witness)
    return _row(bid, "star-image-exact", ok, detail=f"pairs={pairs}" + (f" witness={witness}" if witness else ""))


def _check_ext_cont(bid: str, brace: SkewBrace):
    ok = True
    witness = None
    for f in _corpus(brace):
        rep = ext_cont_report(f)
        if not rep.ok:
            ok = False
            witness = witness or (f.mapping, rep.witness)
    return _row(bid, "extension-contraction-galois", ok, detail=str(witness) if witness else "")


def _check_spec_maps(bid: str, brace: SkewBrace):
    rows = []
    continuity_ok, continuity_vac = True, True
    surj_ok, surj_vac = True, True
    inj_ok, inj_vac = True, True
    khull_ok, khull_vac = True, True
    dens_ok, dens_vac = True, True
    witness = None
    for f in _corpus(brace):
        rep = induced_spec_map(f, "star")
        if not rep.contractions_prime:
            continuity_ok = False
            witness = witness or ("contraction-not-prime", f.mapping, rep.witness)
            continue
        if rep.continuity_exact is False:
            continuity_ok = False
            witness = witness or ("continuity", f.mapping, rep.witness)
        if not rep.continuity_vacuous:
            continuity_vac = False
        if rep.surjectivity_matches_contractions is False:
            surj_ok = False
            witness = witness or ("surjectivity", f.mapping)
        if not (rep.points_vacuous and rep.density_vacuous):
            surj_vac = False
        if rep.injectivity_certificate is False:
            inj_ok = False
            witness = witness or ("injectivity", f.mapping)
        elif rep.injectivity_certificate is True and not rep.points_vacuous:
            inj_vac = False
        if rep.surjective_case is not None:
            if not rep.surjective_case.ok:
                khull_ok = False
                witness = witness or ("kernel-hull", f.mapping, rep.witness)
            if not rep.surjective_case.vacuous:
                khull_vac = False
        if rep.density_matches_kernel is False:
            dens_ok = False
            witness = witness or ("density", f.mapping, rep.witness)
        if not rep.density_vacuous:
            dens_vac = False
    detail = str(witness) if witness else ""
    rows.append(_row(bid, "spec-map-continuity", continuity_ok, vacuous=continuity_vac, detail=detail))
    rows.append(_row(bid, "spec-map-surjectivity", surj_ok, vacuous=surj_vac, detail=detail))
    rows.append(_row(bid, "spec-map-injectivity", inj_ok, vacuous=inj_vac, detail=detail))
    rows.append(_row(bid, "spec-map-kernel-hull", khull_ok, vacuous=khull_vac, detail=detail))
    rows.append(_row(bid, "spec-map-density", dens_ok, vacuous=dens_vac, detail=detail))
    return rows


def _check_nil_quotient(bid: str, brace: SkewBrace):
    rep = nil_quotient_homeo(brace, "star")
    return _row(
        bid, "nil-quotient-homeomorphic", rep.homeomorphic, vacuous=rep.vacuous,
        detail=str(rep.witness) if rep.witness and not rep.homeomorphic else "",
    )


def _check_restriction_squares(bid: str, brace: SkewBrace):
    ok = True
    vacuous = True
    witness = None
    count = 0
    for f in _corpus(brace):
        for m in ideal_lattice(f.source).members:
            count += 1
            rep = restriction_square(f, m, "star")
            if not rep.ok:
                ok = False
                witness = witness or (f.mapping, m, rep.witness)
            if not rep.vacuous:
                vacuous = False
    return _row(
        bid, "restriction-square", ok, vacuous=vacuous,
        detail=f"squares={count}" + (f" witness={witness}" if witness else ""),
    )


def run_brace_suite(brace_id: str, brace: SkewBrace) -> list[SuiteResult]:
    out: list[SuiteResult] = []
    _guard(out, brace_id, "brace-axioms", lambda: _check_axioms(brace_id, brace))
    _guard(out, brace_id, "lambda-maps", lambda: _check_lambda(brace_id, brace))
    _guard(out, brace_id, "ideal-criteria", lambda: _check_ideal_criteria(brace_id, brace))
    _guard(out, brace_id, "multiplicative-lattice", lambda: _check_lattice_laws(brace_id, brace))
    _guard(out, brace_id, "generated-ideal-routes", lambda: _check_generated_routes(brace_id, brace))
    _guard(out, brace_id, "star-chain", lambda: _check_star_chain(brace_id, brace))
    _guard(out, brace_id, "star-prime-subset-oracle", lambda: _check_subset_oracle(brace_id, brace))
    _guard(out, brace_id, "prime-ideal-implication", lambda: _check_prime_implication(brace_id, brace))
    for kind in PRIME_KINDS:
        _guard(out, brace_id, f"radical-laws-{kind}", lambda k=kind: _check_radical_laws(brace_id, brace, k))
        _guard(out, brace_id, f"closed-axioms-{kind}", lambda k=kind: _check_closed_axioms(brace_id, brace, k))
        _guard(out, brace_id, f"galois-{kind}", lambda k=kind: _check_galois(brace_id, brace, k))
        _guard(out, brace_id, f"t0-specialization-{kind}", lambda k=kind: _check_separation(brace_id, brace, k))
        _guard(out, brace_id, f"irreducibles-are-hulls-{kind}", lambda k=kind: _check_irreducibility(brace_id, brace, k))
        _guard(out, brace_id, f"noetherian-compact-{kind}", lambda k=kind: _check_noetherian(brace_id, brace, k))
    _guard(out, brace_id, "maximal-prime-criterion", lambda: _check_maximal_prime(brace_id, brace))
    _guard(out, brace_id, "spectral-space-spec", lambda: _check_spectral(brace_id, brace))
    _guard(out, brace_id, "hom-kernel-image", lambda: _check_hom_basics(brace_id, brace))
    _guard(out, brace_id, "quotient-construction", lambda: _check_quotients(brace_id, brace))
    _guard(out, brace_id, "ideal-correspondence", lambda: _check_correspondence(brace_id, brace))
    _guard(out, brace_id, "star-image-exact", lambda: _check_star_image(brace_id, brace))
    _guard(out, brace_id, "extension-contraction-galois", lambda: _check_ext_cont(brace_id, brace))
    _guard(out, brace_id, "spec-map-continuity", lambda: _check_spec_maps(brace_id, brace))
    _guard(out, brace_id, "nil-quotient-homeomorphic", lambda: _check_nil_quotient(brace_id, brace))
    _guard(out, brace_id, "restriction-square", lambda: _check_restriction_squares(brace_id, brace))
    return out


# ---------------------------------------------------------------------------
# catalog-level checks


def run_catalog_checks(records) -> list[SuiteResult]:
    out: list[SuiteResult] = []
    orders = sorted({rec.order for rec in records})
    max_order = max(orders) if orders else 0

    for n in orders:
        if n > SUBSET_ORACLE_BOUND:
            out.append(
                SuiteResult(
                    f"order-{n}", "enumeration-raw-agreement", "vacuous",
                    f"raw sweep bounded to order {SUBSET_ORACLE_BOUND}",
                )
            )
            continue
        def check(n=n):
            fast = enumerate_braces(n)
            slow = enumerate_braces_raw(n)
            same = len(fast) == len(slow) and all(
                x.add == y.add and x.mul == y.mul for x, y in zip(fast, slow)
            )
            return _row(
                f"order-{n}", "enumeration-raw-agreement", same,
                detail=f"twist={len(fast)} raw={len(slow)}",
            )
        _guard(out, f"order-{n}", "enumeration-raw-agreement", check)

    for n in orders:
        def check(n=n):
            braces = enumerate_braces(n)
            ok = True
            witness = None
            for i in range(len(braces)):
                for j in range(i + 1, len(braces)):
                    if is_isomorphic(braces[i], braces[j]) is not None:
                        ok = False
                        witness = witness or (i, j)
            return _row(
                f"order-{n}", "catalog-isomorphism-free", ok,
                detail=f"classes={len(braces)}" + (f" witness={witness}" if witness else ""),
            )
        _guard(out, f"order-{n}", "catalog-isomorphism-free", check)

    def check_complete():
        expected = []
        for n in orders:
            for i, brace in enumerate(enumerate_braces(n)):
                expected.append((f"{n}-{i}", brace.add, brace.mul))
        actual = [(rec.brace_id, rec.add, rec.mul) for rec in records]
        return _row(
            "catalog", "catalog-matches-enumeration", expected == actual,
            detail=f"records={len(actual)}",
        )
    _guard(out, "catalog", "catalog-matches-enumeration", check_complete)

    def check_deterministic():
        fresh = generate_catalog(max_order) if max_order else ()
        return _row(
            "catalog", "catalog-deterministic",
            catalog_lines(records) == catalog_lines(fresh),
        )
    _guard(out, "catalog", "catalog-deterministic", check_deterministic)

    return out


def run_records(records) -> list[SuiteResult]:
    """Integrity plus the full per-brace suite for every catalog record."""
    out: list[SuiteResult] = []
    for rec in records:
        try:
            bad = verify_record(rec)
        except SbspecError as exc:
            out.append(
                SuiteResult(
                    rec.brace_id, "record-integrity", "fail",
                    f"{type(exc).__name__}: {exc}",
                )
            )
            continue
        out.append(
            _row(
                rec.brace_id, "record-integrity", not bad,
                detail=f"stale fields: {bad}" if bad else "",
            )
        )
        brace = validate(rec.add, rec.mul)
        out.extend(run_brace_suite(rec.brace_id, brace))
    out.extend(run_catalog_checks(records))
    return out


_VERDICT_SLOT = {"pass": 0, "fail": 1, "vacuous": 2}


def summarize(results) -> list[tuple[str, int, int, int]]:
    """Per-check (pass, fail, vacuous) counts, in first-seen order."""
    order: list[str] = []
    counts: dict[str, list[int]] = {}
    for r in results:
        if r.check not in counts:
            counts[r.check] = [0, 0, 0]
            order.append(r.check)
        counts[r.check][_VERDICT_SLOT[r.verdict]] += 1
    return [(c, *counts[c]) for c in order]


def failures(results) -> list[SuiteResult]:
    return [r for r in results if r.verdict == "fail"]
