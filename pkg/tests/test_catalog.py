from fractions import Fraction

import pytest

from liegcs import catalog
from liegcs.catalog import (ConstraintError, CatalogError, complete_structure,
                            count_real_roots, _char_poly_coeffs)
from liegcs.lie import cotangent, validate_algebra, ad_invariance_check, is_unimodular
from liegcs.gcs import verify

F = Fraction


EXPECTED_NAMES = {
    # families without generalized complex structures
    "R x r3", "R x r3,lambda", "r4", "r4,lambda", "r4,mu,lambda",
    # families with symplectic or complex structures
    "aff(R) x aff(R)", "aff(C)", "R x e(2)", "R x h3",
    "R x r3,-1", "R x r3,0", "R x r3,1",
    "r4,-1", "r4,0", "r4,1",
    "r4,mu,1", "r4,mu,mu", "r4,mu,-mu", "r4,-1,lambda", "r4,-1,-1",
    "R x r'3,lambda", "n4", "r'4,mu,lambda", "h4", "d4",
    "d4,lambda", "d'4,lambda",
    # extras
    "aff(R)", "g6",
}


def test_registry_is_complete():
    assert set(catalog.names()) == EXPECTED_NAMES
    # 31 summary-table rows across the dim-4 entries
    assert len(catalog.table_rows()) == 31
    assert all(e.dim == 4 for e, _ in catalog.table_rows())


def test_every_entry_validates_at_every_sample():
    for e in (catalog.entry(n) for n in catalog.names()):
        for sample in e.default_samples():
            L = e.instantiate(sample)
            assert validate_algebra(L) == [], (e.name, sample)


def test_get_examples():
    L = catalog.get("r4,lambda", {"l": F(1, 2)})
    assert L.bracket_basis(0, 3) == {2: F(1), 3: F(1, 2)}
    L = catalog.get("d4")
    assert L.bracket_basis(1, 2) == {3: F(1)}
    with pytest.raises(ConstraintError):
        catalog.get("r4,mu,lambda", {"mu": F(1, 2), "l": F(1, 2)})
    with pytest.raises(ConstraintError):
        catalog.get("r4,lambda", {"l": F(1)})
    with pytest.raises(CatalogError):
        catalog.get("no such algebra")


def test_default_samples_inside_constraints():
    for e in (catalog.entry(n) for n in catalog.names()):
        assert len(e.default_samples()) >= (2 if e.params else 1)
        for sample in e.default_samples():
            e.check_params(sample)  # raises on violation


def test_neutral_form_ad_invariant_on_all_cotangents():
    for e in (catalog.entry(n) for n in catalog.names()):
        sample = e.default_samples()[0]
        ct = cotangent(e.instantiate(sample))
        assert ad_invariance_check(ct.total, ct.gram())
        assert is_unimodular(ct.total)


def test_table1_report_agrees():
    rep = catalog.table1_report()
    assert rep["all_agree"]
    by_entry = {}
    for r in rep["rows"]:
        by_entry.setdefault(r["entry"], r)
    assert by_entry["R x h3"]["b1"] == 5 and by_entry["R x h3"]["b3"] == 31
    assert by_entry["d4"]["b1"] == 2 and by_entry["d4"]["b3"] == 4
    assert by_entry["n4"]["b1"] == 3 and by_entry["n4"]["b3"] == 14
    assert by_entry["r4"]["b1"] == 1 and by_entry["r4"]["b3"] == 2
    assert by_entry["r4"]["types_absent"] == [0, 1, 2]
    assert by_entry["d4"]["types_absent"] == [0, 1]


def test_structures_report_all_verified():
    rep = catalog.structures_report()
    assert rep["all_ok"]
    assert rep["checked"] >= 60


def test_theorem_main_zero_mismatches():
    out = catalog.theorem_main_check()
    assert out["mismatches"] == 0
    assert out["interpretation"] == "centralizer_of_derived"
    # the other reading of the ambiguous subspace fails
    assert out["mismatches_by_interpretation"]["center_of_derived"] > 0


def test_theorem_main_specific_rows():
    out = catalog.theorem_main_check()
    rows = {(r["entry"], tuple(sorted(r["params"].items()))): r for r in out["rows"]}
    r = rows[("R x r3", ())]
    assert r["condition_iii"] and r["no_gcs"]
    r = rows[("r4,mu,lambda", (("l", "1/3"), ("mu", "-1/2")))]
    assert r["condition_iii"] and r["no_gcs"]
    r = rows[("d4,lambda", (("l", "1/2"),))]
    assert not r["condition_iii"] and not r["no_gcs"]


def test_corollary_type1_zero_mismatches():
    out = catalog.corollary_type1_check()
    assert out["mismatches"] == 0
    rows = {(r["entry"], tuple(sorted(r["params"].items()))): r for r in out["rows"]}
    h4 = rows[("h4", ())]
    assert h4["b1"] == 1 and h4["b3"] == 1 and h4["condition"] and h4["no_type1"]
    dp = rows[("d'4,lambda", (("l", "1"),))]
    assert dp["b1"] == 1 and dp["b3"] == 1
    assert not dp["completely_solvable"] and not dp["condition"] and not dp["no_type1"]
    d4 = rows[("d4", ())]
    assert d4["b1"] == 2 and d4["b3"] == 4 and d4["condition"] and d4["no_type1"]


def test_completely_solvable_evidence():
    ev = catalog.completely_solvable_evidence(catalog.get("r4"))
    assert ev["all_real"]
    ev = catalog.completely_solvable_evidence(catalog.get("aff(C)"))
    assert not ev["all_real"]
    from liegcs.lie import abelian
    ev = catalog.completely_solvable_evidence(abelian(3))
    assert ev["all_real"]


def test_evidence_matches_flags_everywhere():
    for e in (catalog.entry(n) for n in catalog.names()):
        sample = e.default_samples()[0]
        ev = catalog.completely_solvable_evidence(e.instantiate(sample))
        assert ev["all_real"] == e.completely_solvable, e.name


def test_aff_c_rotation_charpoly():
    # ad(e1) on aff(C) acts as a rotation: characteristic polynomial
    # t^2 (t^2 + 1) has non-real roots
    L = catalog.get("aff(C)")
    x = [0, 1, 0, 0]
    coeffs = _char_poly_coeffs(L.ad(x))
    assert coeffs == [F(0), F(0), F(1), F(0), F(1)]
    roots, deg = count_real_roots(coeffs)
    assert (roots, deg) == (1, 3)  # squarefree part t(t^2+1): only t=0 real


def test_completion_rejects_conflicts():
    with pytest.raises(CatalogError):
        complete_structure(2, [(0, {1: "1"}), (1, {0: "1"})], {}, [])
    with pytest.raises(CatalogError):
        complete_structure(2, [(0, {2: "1"})], {}, [])  # e0 -> alpha^0


def test_export_round_trip(tmp_path):
    written = catalog.export(str(tmp_path))
    assert any(p.endswith("d4.algebra.json") for p in written)
    import json
    structs = [p for p in written if p.endswith(".structure.json")]
    assert len(structs) >= 60
    doc = json.loads(open(structs[0]).read())
    assert doc["convention"] == catalog.CONVENTION
    assert "matrix" in doc and len(doc["matrix"]) in (8, 4, 12)
