"""Catalog integrity: instantiation, per-entry audits, shipped data file."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from cubicsym import catalog, form_of, solve, verify_killing
from cubicsym.catalog import ENTRIES, KNOWN_DISCREPANCIES, ParameterRangeError, \
    export_catalog, general_subclass, get_entry, projective_table, verify_all, \
    verify_entry

DATA_FILE = Path(__file__).resolve().parent.parent / "src" / "cubicsym" / \
    "data" / "catalog.json"


def test_catalog_has_41_affine_entries():
    assert len(ENTRIES) == 41
    by_tau = {}
    for e in ENTRIES:
        by_tau.setdefault(e.tau, []).append(e.id)
    assert {t: len(v) for t, v in by_tau.items()} == \
        {1: 3, 2: 9, 3: 13, 4: 10, 5: 5, 6: 1}


def test_instantiate_examples():
    assert get_entry("1.1").instantiate() == form_of(F=1)
    assert get_entry("3.8").instantiate({"eps1": 1, "eps2": -1}) == \
        form_of(A1=1, B1=1, B2=-1)
    three = catalog.PROJECTIVE_BY_ID["III"]
    assert three.build({}) == form_of(F=1)


def test_instantiate_validates_parameters():
    with pytest.raises(ParameterRangeError):
        get_entry("3.8").instantiate({"eps1": 2})
    with pytest.raises(ParameterRangeError):
        get_entry("4.1").instantiate({"F": 0})
    with pytest.raises(ParameterRangeError):
        get_entry("4.1").instantiate({"bogus": 1})
    # the one rational parameter whose vanishing is itself a catalogued case
    assert get_entry("4.10").instantiate({"B": 0}) == form_of(B2=1, C1=1, C2=1)


def test_unknown_id():
    with pytest.raises(KeyError):
        get_entry("9.9")


def test_affine_type_matches_tau_at_defaults():
    for entry in ENTRIES:
        assert entry.instantiate().affine_type() == entry.tau, entry.id


def test_transcribed_generators_live_in_kernels():
    # at the first branch of each entry: every generator that verifies must
    # lie in the computed kernel span
    for entry in ENTRIES:
        branch = entry.branches()[0]
        reports = catalog.verify_branch(entry, branch)
        for check in reports.generator_checks:
            if check.passes:
                assert check.in_kernel, (entry.id, check.source, check.index)


def test_verify_entry_match_cases():
    for report in verify_entry("2.1"):
        assert report.status == "MATCH"
        assert report.series_ok is True
    for report in verify_entry("1.2"):
        assert report.status == "MATCH"
        assert report.computed_infinite and report.computed_finite == 1
        assert report.computed_class == "3(3)"


def test_verify_entry_known_discrepancy():
    reports = verify_entry("2.6")
    assert all(r.status == "DISCREPANCY" for r in reports)
    assert all(not r.unknown_issues for r in reports)
    assert any("dimension" in issue for r in reports for issue in r.known_issues)
    # oracle truth is still reproduced exactly
    assert all(r.oracle_ok for r in reports)
    assert all(r.computed_finite == 2 for r in reports)


def test_verify_entry_custom_parameters():
    reports = verify_entry("6.1", {"F": Fraction(1, 2)})
    assert len(reports) == 1
    assert reports[0].computed_class == "6"


def test_full_audit_is_clean():
    audit = verify_all()
    assert audit.unknown_discrepancies == []
    passed, total = audit.generator_tally()
    assert total == 74
    assert passed == 69
    failing = {(r.entry_id, c.source)
               for r in audit.branch_reports
               for c in r.generator_checks if not c.passes}
    assert failing == {("3.5", "field"), ("3.9", "field"), ("3.11", "field"),
                       ("4.5", "invariant-matrix"), ("4.6", "invariant-matrix")}


def test_known_discrepancy_ledger_is_minimal():
    # every recorded known discrepancy actually occurs in the audit
    audit = verify_all()
    seen = set()
    for r in audit.branch_reports:
        for issue in r.known_issues:
            kind = issue.split(":")[0]
            seen.add((r.entry_id, kind))
    for r in audit.projective_reports:
        if r.known_issues:
            seen.add((r.entry_id, "table"))
    assert seen == set(KNOWN_DISCREPANCIES)


def test_dimension_discrepancies_are_within_budget():
    ids = {key[0] for key in KNOWN_DISCREPANCIES if key[1] == "dimension"}
    assert ids == {"2.4", "2.5", "2.6", "3.3"}
    assert len(ids) <= 5


def test_projective_table_rows():
    rows, deviations = projective_table()
    assert rows["1"]["computed"] == ["III", "XII"]
    assert rows["2"]["computed"] == ["V"]
    assert rows["3(1)"]["computed"] == ["VIII"]
    assert rows["3(2)"]["computed"] == ["VI", "XIII"]
    assert rows["3(3)"]["computed"] == ["VII"]
    assert rows["4"]["computed"] == ["IV"]
    assert rows["5"]["computed"] == ["II"]
    assert rows["6"]["computed"] == ["X", "XI"]
    assert rows["8"]["computed"] == ["general", "I", "IX"]
    assert all(d["known"] for d in deviations)
    assert {d["projective"] for d in deviations} == {"X", "XI"}


def test_general_subclass_predicates():
    assert general_subclass(-2) == "F < -(sqrt(3)+1)/2"
    assert general_subclass(-1) == "-(sqrt(3)+1)/2 < F < -1/2"
    assert general_subclass(Fraction(-1, 4)) == "-1/2 < F < 0"
    assert general_subclass(0) == "F = 0"
    assert general_subclass(Fraction(1, 4)) == "0 < F < (sqrt(3)-1)/2"
    assert general_subclass(Fraction(1, 2)) == "(sqrt(3)-1)/2 < F < 1"
    assert general_subclass(1) == "F = 1"
    assert general_subclass(3) == "F > 1"
    assert "degenerate" in general_subclass(Fraction(-1, 2))


def test_exported_data_file_is_current():
    with open(DATA_FILE) as fh:
        shipped = json.load(fh)
    assert shipped == export_catalog()


def test_data_file_forms_reparse():
    from cubicsym import CubicForm
    with open(DATA_FILE) as fh:
        shipped = json.load(fh)
    n = 0
    for entry in shipped["affine"]:
        for branch in entry["branches"]:
            CubicForm.from_json(branch["form"])
            n += 1
    assert n >= 41


def test_boundary_branches_have_expected_classes():
    checks = [
        ("4.1", {"F": 1, "eps1": 1, "eps2": 1}, "3(2)"),
        ("4.3", {"F": 1, "eps": 1}, "2"),
        ("4.10", {"B": 0}, "2"),
        ("5.3", {"C2": 2, "C3": Fraction(1, 2)}, "2"),
        ("5.4", {"C3": 1}, "2"),
        ("6.1", {"C3": 4}, "2"),
    ]
    from cubicsym import classify
    for cid, overrides, label in checks:
        form = get_entry(cid).instantiate(overrides)
        assert classify(form).label == label, cid


def test_recorded_generator_corrections_available():
    # each entry with a failing transcription still has a computed kernel
    # that contains a corrected generator
    for cid in ("3.5", "3.9", "3.11"):
        entry = get_entry(cid)
        branch = entry.branches()[0]
        algebra = solve(entry.build(branch.params))
        assert algebra.generators
        for g in algebra.generators:
            assert verify_killing(entry.build(branch.params), g)
