"""Catalog records and the property-suite verdict machinery."""

import dataclasses

import pytest

from sbspec.braces import SkewBrace
from sbspec.catalog import (
    build_record,
    catalog_lines,
    generate_catalog,
    read_catalog,
    record_from_dict,
    record_to_dict,
    verify_record,
    write_catalog,
)
from sbspec.errors import ParseError
from sbspec.suite import (
    SuiteResult,
    failures,
    run_brace_suite,
    run_catalog_checks,
    run_records,
    summarize,
)


def test_generate_catalog_shape(catalog4):
    assert [rec.brace_id for rec in catalog4] == [
        "1-0",
        "2-0",
        "3-0",
        "4-0",
        "4-1",
        "4-2",
        "4-3",
    ]
    for rec in catalog4:
        assert rec.order == len(rec.add) == len(rec.mul)
        assert rec.ideal_count >= 2 or rec.order == 1
        assert verify_record(rec) == []


def test_catalog_of_six_has_fourteen(catalog6):
    assert len(catalog6) == 14
    assert [rec.brace_id for rec in catalog6][-6:] == [
        "6-0",
        "6-1",
        "6-2",
        "6-3",
        "6-4",
        "6-5",
    ]
    # all spectra empty across the catalog, under every definition
    for rec in catalog6:
        assert dict(rec.spec_sizes) == {"star": 0, "ksv": 0, "huq": 0}
        assert rec.lattice_spec_size == 0
        assert rec.spec_spectral and rec.idl_spectral
        assert rec.t0 and rec.t1
        assert rec.components == 0


def test_record_roundtrip(catalog4):
    for rec in catalog4:
        assert record_from_dict(record_to_dict(rec)) == rec


def test_record_from_dict_structural_only(catalog4):
    doc = record_to_dict(catalog4[3])
    doc["ideal_count"] = 77
    # parses fine: summary fields are only verified later
    rec = record_from_dict(doc)
    assert rec.ideal_count == 77
    assert "ideal_count" in verify_record(rec)


def test_record_from_dict_rejects_junk(catalog4):
    good = record_to_dict(catalog4[0])
    with pytest.raises(ParseError):
        record_from_dict([])
    for field in ("id", "order", "add", "mul", "weights", "spec_sizes"):
        doc = dict(good)
        del doc[field]
        with pytest.raises(ParseError):
            record_from_dict(doc)
    doc = dict(good)
    doc["t0"] = 1
    with pytest.raises(ParseError):
        record_from_dict(doc)
    doc = dict(good)
    doc["weights"] = [True]
    with pytest.raises(ParseError):
        record_from_dict(doc)


def test_catalog_file_roundtrip(tmp_path, catalog4):
    path = tmp_path / "cat.jsonl"
    write_catalog(catalog4, str(path))
    assert read_catalog(str(path)) == catalog4
    assert catalog_lines(catalog4) == path.read_text()


def test_read_catalog_reports_line_numbers(tmp_path, catalog4):
    path = tmp_path / "cat.jsonl"
    lines = catalog_lines(catalog4).strip().split("\n")
    lines[2] = "{broken"
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(ParseError) as err:
        read_catalog(str(path))
    assert ":3" in str(err.value)


def test_build_record_consistency(z4_radical, catalog4):
    rec = build_record("4-x", z4_radical)
    assert rec.order == 4
    assert rec.ideal_count == 3
    assert rec.weights == (1, 1, 1)
    assert dict(rec.spec_sizes) == {"star": 0, "ksv": 0, "huq": 0}
    # the same brace appears in the catalog under its canonical labels
    twin = [r for r in catalog4 if r.add_group != r.mul_group and r.order == 4]
    assert len(twin) == 2


def test_run_brace_suite_clean(z4_radical):
    rows = run_brace_suite("z4r", z4_radical)
    assert failures(rows) == []
    checks = {r.check for r in rows}
    assert "brace-axioms" in checks
    assert "galois-star" in checks
    assert "spec-map-continuity" in checks
    assert "restriction-square" in checks
    by_check = {r.check: r for r in rows}
    assert by_check["t1-iff-spec-equals-max"].verdict == "vacuous"
    assert "square inside some maximal ideal" in by_check["t1-iff-spec-equals-max"].detail
    assert by_check["star-prime-subset-oracle"].verdict == "pass"
    assert by_check["maximal-prime-criterion"].verdict == "pass"


def test_zero_brace_suite_vacuities(zero_brace):
    rows = run_brace_suite("1-0", zero_brace)
    assert failures(rows) == []
    by_check = {r.check: r for r in rows}
    # no maximal ideals at all in the one-element brace
    assert by_check["maximal-prime-criterion"].verdict == "vacuous"
    # the equivalence hypothesis holds vacuously, both sides are checked
    assert by_check["t1-iff-spec-equals-max"].verdict == "pass"


def test_subset_oracle_becomes_vacuous_at_order_six(catalog6):
    braces = {rec.brace_id: SkewBrace(rec.add, rec.mul) for rec in catalog6}
    rows = run_brace_suite("6-0", braces["6-0"])
    by_check = {r.check: r for r in rows}
    assert by_check["star-prime-subset-oracle"].verdict == "vacuous"
    rows = run_brace_suite("5-0", braces["5-0"])
    by_check = {r.check: r for r in rows}
    assert by_check["star-prime-subset-oracle"].verdict == "pass"


def test_run_records_full(catalog4):
    rows = run_records(catalog4)
    assert failures(rows) == []
    assert len(rows) == 381
    # every record contributes a record-integrity row
    integ = [r for r in rows if r.check == "record-integrity"]
    assert len(integ) == 7
    assert all(r.verdict == "pass" for r in integ)


def test_run_records_catches_stale_field(catalog4):
    stale = list(catalog4)
    stale[3] = dataclasses.replace(stale[3], ideal_count=99)
    rows = run_records(tuple(stale))
    bad = failures(rows)
    # the stale summary field is flagged, and the catalog no longer
    # matches a fresh deterministic regeneration
    assert sorted(r.check for r in bad) == [
        "catalog-deterministic",
        "record-integrity",
    ]
    integ = [r for r in bad if r.check == "record-integrity"]
    assert "ideal_count" in integ[0].detail
    # the rest of the suite still ran for that brace
    assert any(r.brace_id == stale[3].brace_id and r.check == "galois-star" for r in rows)


def test_run_records_catches_broken_tables(catalog4):
    broken_mul = tuple(
        tuple(row) for row in (catalog4[2].mul[:2] + (catalog4[2].mul[1],))
    )
    broken = dataclasses.replace(catalog4[2], mul=broken_mul)
    rows = run_records((broken,))
    bad = failures(rows)
    assert bad and bad[0].check == "record-integrity"
    # with unusable tables, no per-brace checks run for that record
    assert all(r.check == "record-integrity" for r in rows if r.brace_id == "3-0")


def test_catalog_checks(catalog6):
    rows = run_catalog_checks(catalog6)
    assert failures(rows) == []
    by_check = {}
    for r in rows:
        by_check.setdefault(r.check, []).append(r)
    agreement = by_check["enumeration-raw-agreement"]
    assert sum(1 for r in agreement if r.verdict == "pass") == 5
    # the raw sweep stops at order 5 by design; the order-6 row says so
    assert [r.verdict for r in agreement if r.brace_id == "order-6"] == ["vacuous"]
    assert [r.verdict for r in by_check["catalog-matches-enumeration"]] == ["pass"]
    assert [r.verdict for r in by_check["catalog-deterministic"]] == ["pass"]


def test_summarize_orders_and_counts():
    rows = [
        SuiteResult("a", "x", "pass"),
        SuiteResult("b", "x", "fail", "boom"),
        SuiteResult("c", "y", "vacuous"),
        SuiteResult("d", "x", "pass"),
    ]
    assert summarize(rows) == [("x", 2, 1, 0), ("y", 0, 0, 1)]
    assert [r.brace_id for r in failures(rows)] == ["b"]
