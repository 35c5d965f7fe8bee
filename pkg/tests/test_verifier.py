import pytest

from hmgroups.statistics import Cyclic, Product, SL23
from hmgroups.verifier import (CHECKS, check_c_convention, check_congruences,
                               check_eq_9, check_lemma_2_1, check_prop_2_1_2_2,
                               check_prop_2_6, check_prop_2_9_2_10,
                               check_theorem_2_2, check_theorem_2_5,
                               check_theorem_2_8, run_checks, scan_integer_hm)


class TestTheorem22:
    def test_passes(self, entries):
        res = check_theorem_2_2(entries)
        assert res.passed, res.witnesses

    def test_smax_1_still_consistent(self, entries):
        # with s_max = 1 the scan range shrinks to n <= p, where the only
        # expected integer is n = p itself
        res = check_theorem_2_2(entries, s_max=1)
        assert res.passed

    def test_population_mentions_catalog(self, entries):
        res = check_theorem_2_2(entries)
        assert "prime-power" in res.population


class TestTheorem25:
    def test_passes_with_caveat(self, entries):
        res = check_theorem_2_5(entries)
        assert res.passed
        assert any("exhaustive" in c for c in res.caveats)
        names = [w[0] for w in res.witnesses]
        assert "C4" in names and "D8" in names

    def test_incomplete_catalog_gets_caveat_not_failure(self, entries):
        partial = [e for e in entries if e.order != 8]
        res = check_theorem_2_5(partial)
        assert res.passed
        assert any("population incomplete" in c for c in res.caveats)

    def test_detects_planted_violation(self, entries):
        # removing C4 from a complete catalog is reported as incompleteness,
        # not a failed check
        partial = [e for e in entries if not (e.order == 4 and e.id == 1)]
        res = check_theorem_2_5(partial)
        assert any("population incomplete" in c for c in res.caveats)


class TestTheorem28:
    def test_passes(self, entries):
        res = check_theorem_2_8(entries)
        assert res.passed, res.witnesses
        assert any("min h_m = 4/3" in w[1] for w in res.witnesses)

    def test_expected_class_list(self, entries):
        res = check_theorem_2_8(entries)
        matched = {w[1].split("-> ")[1] for w in res.witnesses
                   if "<= 2" in w[1]}
        assert matched == {"C2", "C2^2", "C2^3", "C2^4", "C3", "S3", "C4", "D8"}


class TestProp26:
    def test_short_scan(self):
        res = check_prop_2_6(3000)
        assert res.passed
        assert [w for w in res.witnesses if w[0] == "D8"]

    def test_window_and_uniqueness_claims(self):
        res = check_prop_2_6(500)
        integer_hits = [w[0] for w in res.witnesses if "h_m = " in w[1]
                        and "outside" not in w[1]]
        assert integer_hits == ["D8"]


class TestProp2910:
    def test_passes(self, entries):
        res = check_prop_2_9_2_10(entries)
        assert res.passed, res.witnesses
        assert any(w[0] == "Dic3" for w in res.witnesses)


class TestLemma21:
    def test_fails_with_documented_witnesses(self, entries):
        # the strong bound is falsified on the catalog; the check reports it
        res = check_lemma_2_1(entries)
        assert not res.passed
        details = dict(res.witnesses)
        assert "S3" in details and "bound violated" in details["S3"]
        assert "C6" in details and "equality at non-prime-power" in details["C6"]

    def test_no_weak_bound_witnesses(self, entries):
        res = check_lemma_2_1(entries)
        assert not any("weak bound violated" in d for _, d in res.witnesses)


class TestEq9:
    def test_passes(self, entries):
        res = check_eq_9(entries)
        assert res.passed
        assert {w[0] for w in res.witnesses} == {"C4", "D8"}


class TestCongruences:
    def test_passes(self, entries):
        res = check_congruences(entries)
        assert res.passed, res.witnesses
        exempt = {w[0] for w in res.witnesses if "maximal class" in w[1]}
        assert exempt == {"D8", "Q8", "D16", "SD16", "Q16"}


class TestCConvention:
    def test_resolves_trivial_included(self):
        res = check_c_convention()
        assert res.passed
        assert any("trivial subgroup included" in c for c in res.caveats)


class TestPropSuite:
    def test_full_suite_passes(self, entries):
        res = check_prop_2_1_2_2(entries, product_cap=256)
        assert res.passed, res.witnesses
        # part (d) runs but finds nothing to flag
        assert any(c.startswith("(d)") for c in res.caveats)


class TestScan:
    def test_default_rows(self, entries):
        rep = scan_integer_hm(entries, cyclic_max=128, dihedral_max=64)
        ints = {(r.label, r.order) for r in rep.rows if r.integer}
        assert ("C4", 4) in ints
        assert ("D8", 8) in ints
        assert ("Dic3", 12) in ints
        assert ("C64", 64) in ints
        assert ("1", 1) in ints

    def test_rows_sorted_and_deterministic(self, entries):
        a = scan_integer_hm(entries, cyclic_max=50, dihedral_max=20)
        b = scan_integer_hm(entries, cyclic_max=50, dihedral_max=20)
        assert [r.label for r in a.rows] == [r.label for r in b.rows]
        orders = [r.order for r in a.rows]
        assert orders == sorted(orders)

    def test_expression_row(self, entries):
        rep = scan_integer_hm(entries, cyclic_max=0, dihedral_max=0,
                              exprs=(Product((SL23(), Cyclic(823543))),))
        row = [r for r in rep.rows if r.source == "expression"][0]
        assert row.h_m == 403368
        assert row.integer

    def test_exhaustiveness_caveat(self, entries):
        rep = scan_integer_hm(entries)
        assert any("exhaustive" in c for c in rep.caveats)

    def test_json_shape(self, entries):
        doc = scan_integer_hm(entries, cyclic_max=4, dihedral_max=0).to_dict()
        assert set(doc) == {"population", "caveats", "rows"}
        assert all(set(r) == {"label", "order", "h_m", "h_m_approx",
                              "integer", "source"} for r in doc["rows"])


class TestRegistry:
    def test_run_all(self, entries):
        results = run_checks(entries, None, nmax=500)
        assert len(results) == len(CHECKS)
        failed = {r.check_id for r in results if not r.passed}
        assert failed == {"lemma2.1"}

    def test_unknown_id(self, entries):
        with pytest.raises(KeyError):
            run_checks(entries, ["nope"])

    def test_selected_subset(self, entries):
        results = run_checks(entries, ["thm2.5", "eq9"])
        assert [r.check_id for r in results] == ["thm2.5", "eq9"]
