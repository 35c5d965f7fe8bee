import json
import math
from fractions import Fraction

import pytest

from hmgroups import families as fam
from hmgroups.groupkernel import CapExceeded, direct_product
from hmgroups.statistics import (CatalogRef, Cyclic, Dicyclic, Dihedral,
                                 ElemAbelian, GenQuaternion, Product, SL23,
                                 SemiDihedral, Symmetric, eval_expr, expr_order,
                                 expr_text, h_m_cyclic_closed,
                                 h_m_dihedral_closed, h_m_of, h_m_pgroup_closed,
                                 lemma_bound, m_cyclic_closed, m_of, realize,
                                 weak_bound)


class TestBasicStatistics:
    def test_m_values(self):
        assert m_of(fam.cyclic(4)) == 2
        assert m_of(fam.dihedral(8)) == 4
        assert m_of(fam.cyclic(2)) == Fraction(3, 2)
        assert m_of(fam.symmetric(3)) == Fraction(19, 6)

    def test_h_m_values(self):
        assert h_m_of(fam.cyclic(1)) == 1
        assert h_m_of(fam.dihedral(8)) == 2
        assert h_m_of(fam.cyclic(2)) == Fraction(4, 3)
        assert h_m_of(fam.sl23()) == Fraction(24, 7)
        assert h_m_of(fam.dicyclic(3)) == 3

    def test_h_times_m_is_order(self, entries):
        for e in entries:
            g = e.group()
            assert h_m_of(g) * m_of(g) == g.size


class TestCyclicClosedForm:
    def test_examples(self):
        assert m_cyclic_closed(4) == 2
        assert m_cyclic_closed(9) == Fraction(7, 3)
        assert m_cyclic_closed(1) == 1

    def test_matches_enumeration(self):
        for n in range(1, 201):
            assert m_cyclic_closed(n) == m_of(fam.cyclic(n)), n

    def test_h_m_cyclic(self):
        assert h_m_cyclic_closed(8) == Fraction(16, 5)
        assert h_m_cyclic_closed(823543) == 7 ** 6


class TestDihedralClosedForm:
    def test_examples(self):
        assert h_m_dihedral_closed(4) == 2
        assert h_m_dihedral_closed(3) == Fraction(36, 19)
        assert h_m_dihedral_closed(2) == Fraction(8, 5)

    def test_matches_enumeration(self):
        for n in range(2, 61):
            assert h_m_dihedral_closed(n) == h_m_of(fam.dihedral(2 * n)), n

    def test_requires_n_at_least_2(self):
        with pytest.raises(ValueError):
            h_m_dihedral_closed(1)


class TestPGroupClosedForm:
    def test_examples(self):
        assert h_m_pgroup_closed(2, 2, 3) == 2
        assert h_m_pgroup_closed(2, 3, 7) == 2
        assert h_m_pgroup_closed(2, 6, 7) == 16

    def test_matches_enumeration_on_p_groups(self):
        cases = [(fam.cyclic(16), 2, 4), (fam.dihedral(8), 2, 3),
                 (fam.generalized_quaternion(16), 2, 4),
                 (fam.elementary_abelian(3, 2), 3, 2),
                 (fam.semidihedral(32), 2, 5)]
        for g, p, n in cases:
            assert h_m_pgroup_closed(p, n, g.cyclic_subgroup_count()) == h_m_of(g)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            h_m_pgroup_closed(1, 2, 3)


class TestBounds:
    def test_p_group_equality(self):
        for g in (fam.dihedral(8), fam.cyclic(9), fam.generalized_quaternion(16),
                  fam.elementary_abelian(2, 4)):
            assert lemma_bound(g) == h_m_of(g)

    def test_s3_bound_exceeds_h_m(self):
        # the claimed bound fails here: |C(S3)| = 5 gives bound 2 > 36/19
        s3 = fam.symmetric(3)
        assert lemma_bound(s3) == 2
        assert h_m_of(s3) < lemma_bound(s3)

    def test_weak_bound_below_h_m(self, entries):
        for e in entries:
            if e.order >= 2:
                assert h_m_of(e.group()) >= weak_bound(e.order)

    def test_trivial_group_rejected(self):
        with pytest.raises(ValueError):
            lemma_bound(fam.cyclic(1))
        with pytest.raises(ValueError):
            weak_bound(1)


class TestExpr:
    def test_orders_without_enumeration(self):
        assert expr_order(Cyclic(7 ** 7)) == 823543
        assert expr_order(Product((SL23(), Cyclic(7 ** 7)))) == 24 * 7 ** 7
        assert expr_order(Symmetric(6)) == 720
        assert expr_order(Dicyclic(5)) == 20
        assert expr_order(ElemAbelian(2, 10)) == 1024
        assert expr_order(CatalogRef(12, 1)) == 12

    def test_text_roundtrip_forms(self):
        exprs = [Cyclic(823543), Dihedral(8), GenQuaternion(16), SemiDihedral(32),
                 ElemAbelian(2, 3), Symmetric(4), SL23(), Dicyclic(3),
                 CatalogRef(12, 1), Product((SL23(), Cyclic(823543)))]
        texts = ["C(823543)", "D(8)", "Q(16)", "SD(32)", "E(2,3)", "S(4)",
                 "SL23", "Dic(3)", "Cat(12,1)", "SL23 x C(823543)"]
        assert [expr_text(e) for e in exprs] == texts

    def test_products_flatten(self):
        e = Product((Product((Cyclic(2), Cyclic(3))), Cyclic(5)))
        assert len(e.factors) == 3

    def test_realize_catalog(self, entries):
        g = realize(CatalogRef(12, 1), entries)
        assert h_m_of(g) == 3


class TestEvalExpr:
    def test_cyclic_closed_form(self):
        rep = eval_expr(Cyclic(7 ** 7))
        assert rep.h_m == 7 ** 6
        assert rep.path == "closed_form"
        assert rep.c_count == 8
        assert rep.m * rep.h_m == rep.order

    def test_multiplicative_product(self):
        rep = eval_expr(Product((SL23(), Cyclic(7 ** 7))))
        assert rep.h_m == 24 * 7 ** 5 == 403368
        assert rep.path == "multiplicative"
        assert rep.integer
        assert rep.order == 24 * 7 ** 7
        assert rep.m * rep.h_m == rep.order
        assert rep.exponent == math.lcm(12, 7 ** 7)

    def test_non_coprime_product_enumerates(self):
        rep = eval_expr(Product((Cyclic(2), Cyclic(2))))
        assert rep.h_m == Fraction(8, 5)
        assert rep.path == "brute"

    def test_non_coprime_product_over_cap(self):
        with pytest.raises(CapExceeded):
            eval_expr(Product((Cyclic(2), Cyclic(2 * 10 ** 6))))

    def test_dihedral_closed_form(self):
        rep = eval_expr(Dihedral(8))
        assert rep.h_m == 2
        assert rep.path == "closed_form"
        assert rep.c_count == 7
        assert rep.spectrum is not None
        assert dict(rep.spectrum.entries) == {1: 1, 2: 5, 4: 2}

    def test_dihedral_closed_form_matches_enumeration(self):
        for order in (4, 6, 8, 12, 20, 30):
            rep = eval_expr(Dihedral(order))
            g = fam.dihedral(order)
            assert rep.spectrum == g.order_spectrum()
            assert rep.c_count == g.cyclic_subgroup_count()
            assert rep.h_m == h_m_of(g)

    def test_brute_paths(self):
        assert eval_expr(CatalogRef(12, 1)).h_m == 3
        assert eval_expr(GenQuaternion(8)).h_m == Fraction(8, 3)
        assert eval_expr(ElemAbelian(2, 3)).h_m == Fraction(16, 9)
        assert eval_expr(Dicyclic(3)).path == "brute"

    def test_convolved_spectrum_matches_enumeration(self):
        rep = eval_expr(Product((Cyclic(3), Cyclic(4))))
        assert rep.path == "multiplicative"
        enumerated = direct_product(fam.cyclic(3), fam.cyclic(4)).order_spectrum()
        assert rep.spectrum == enumerated

    def test_multiplicative_c_count(self):
        rep = eval_expr(Product((SL23(), Cyclic(5))))
        concrete = direct_product(fam.sl23(), fam.cyclic(5))
        assert rep.c_count == concrete.cyclic_subgroup_count()

    def test_trivial_cyclic(self):
        rep = eval_expr(Cyclic(1))
        assert rep.h_m == 1 and rep.integer


class TestStatReportSerialization:
    def test_exact_strings(self):
        d = eval_expr(SL23()).to_dict()
        assert d["h_m"] == "24/7"
        assert d["h_m_approx"] == "3.428571"
        assert d["m"] == "7/1"
        assert d["path"] == "brute"

    def test_json_parses_and_is_stable(self):
        rep = eval_expr(Product((SL23(), Cyclic(7 ** 7))))
        one = rep.to_json()
        two = rep.to_json()
        assert one == two
        parsed = json.loads(one)
        assert parsed["h_m"] == "403368/1"
        assert parsed["integer"] is True

    def test_digits_param(self):
        d = eval_expr(SL23()).to_dict(digits=2)
        assert d["h_m_approx"] == "3.43"


class TestMultiplicativity:
    def test_coprime_catalog_pairs(self, entries):
        small = [e for e in entries if e.order <= 16]
        for i, a in enumerate(small):
            for b in small[i:]:
                if a.order * b.order > 128:
                    continue
                ga, gb = a.group(), b.group()
                prod = direct_product(ga, gb)
                if math.gcd(a.order, b.order) == 1:
                    assert h_m_of(prod) == h_m_of(ga) * h_m_of(gb)
                    assert m_of(prod) == m_of(ga) * m_of(gb)
                else:
                    assert m_of(prod) > m_of(ga) * m_of(gb)
