import random

import pytest

from deltak._rat import QQ
from deltak.classes import (ChowChern, ChowGamma, ChowGammaGeom,
                            LocalizedClass, constant_class, k_polytope,
                            k_wedge_qdual, ogr_o2, ogr_orbit_class,
                            ogr_wedge_qdual, ogr_y_class, psi_eval, w_act)
from deltak.dmat import DeltaMatroid
from deltak.engine import EvalContext, draw_direction, integrate_chow
from deltak.fan import SignedPermutation, enumerate_W, gkm_check
from deltak.laurent import LaurentPoly, TruncSeries


def _w(imgs):
    return SignedPermutation(imgs)


class TestPolytopeClass:
    def test_segment_restrictions(self, segment):
        cls = k_polytope(segment)
        assert cls.restriction(_w((1,))) == LaurentPoly.one(1)
        assert cls.restriction(_w((-1,))) == LaurentPoly.variable(1, 1, -1)

    def test_segment_doubled(self, segment):
        cls = k_polytope(segment, doubled=True)
        assert cls.restriction(_w((1,))) == LaurentPoly.variable(1, 1)
        assert cls.restriction(_w((-1,))) == LaurentPoly.variable(1, 1, -1)

    def test_point_class_is_constant(self):
        D = DeltaMatroid(2, [set()])
        cls = k_polytope(D)
        for w in enumerate_W(2):
            assert cls.restriction(w) == LaurentPoly.one(2)


class TestWedgeClass:
    def test_bottom_and_top(self, segment):
        bottom = k_wedge_qdual(segment, 0)
        for w in enumerate_W(1):
            assert bottom.restriction(w) == LaurentPoly.one(1)
        top = k_wedge_qdual(segment, 2)
        assert top.restriction(_w((1,))) == LaurentPoly.variable(1, 1, -1)
        assert top.restriction(_w((-1,))) == LaurentPoly.variable(1, 1)

    def test_middle(self, segment):
        mid = k_wedge_qdual(segment, 1)
        t = LaurentPoly.variable(1, 1)
        ti = LaurentPoly.variable(1, 1, -1)
        assert mid.restriction(_w((1,))) == 1 + ti
        assert mid.restriction(_w((-1,))) == 1 + t

    def test_out_of_range_warns_and_is_zero(self, segment):
        with pytest.warns(UserWarning):
            cls = k_wedge_qdual(segment, 5)
        assert not cls.entries


class TestChowPrimitives:
    def test_chern_at_zero_is_one(self, ex51):
        ctx = EvalContext(3, (3, 5, 7), order=3)
        node = ChowChern(ex51, 0, "I")
        for w in list(enumerate_W(3))[::5]:
            s = node.series(ctx, w)
            assert s.coeff(0) == 1 and all(s.coeff(k) == 0 for k in (1, 2, 3))

    def test_point_class_dual_chern(self):
        # single feasible set {} on one element: the minimal set is always
        # the barred one, so the dual tautological roots are all +t_1
        D = DeltaMatroid(1, [set()])
        ctx = EvalContext(1, (9,), order=1)
        node = ChowChern(D, 1, "I", dual=True)
        for w in enumerate_W(1):
            assert node.series(ctx, w).coeff(1) == 9

    def test_whitney_product_is_constant(self, ex51):
        ctx = EvalContext(3, (3, 5, 7), order=3)
        want = TruncSeries.constant(1, 3)
        for a in (3, 5, 7):
            want = want * TruncSeries(0, 3, [QQ(1), QQ(0), -QQ(a * a), QQ(0)])
        for w in enumerate_W(3):
            got = (ChowChern(ex51, 1, "I") * ChowChern(ex51, 1, "Q")).series(ctx, w)
            assert got == want

    def test_gamma_values(self):
        ctx = EvalContext(1, (4,), order=1)
        g = ChowGamma()
        assert g.series(ctx, _w((1,))).coeff(1) == 4
        assert g.series(ctx, _w((-1,))).coeff(1) == -4

    def test_geometric_gamma_truncates(self):
        ctx = EvalContext(2, (4, 9), order=2)
        s = ChowGammaGeom(2).series(ctx, _w((2, 1)))
        assert s.coeff(0) == 1 and s.coeff(1) == 9 and s.coeff(2) == 81


class TestPsi:
    def test_constant(self, segment):
        ctx = EvalContext(1, (5,), order=2)
        assert psi_eval(constant_class("X", 1), _w((1,)), ctx) == \
            TruncSeries.constant(1, 2)

    def test_single_variable_series(self):
        # (1+t)/(1-t) = 1 + 2t + 2t^2 + ...
        ctx = EvalContext(1, (1,), order=3)
        cls = LocalizedClass("X", 1, {w: (LaurentPoly.variable(1, 1), ())
                                      for w in enumerate_W(1)})
        s = psi_eval(cls, _w((1,)), ctx)
        assert [s.coeff(k) for k in range(4)] == [1, 2, 2, 2]

    def test_augmentation_ideal(self):
        ctx = EvalContext(1, (7,), order=3)
        cls = LocalizedClass(
            "X", 1, {w: (LaurentPoly.variable(1, 1) - 1, ())
                     for w in enumerate_W(1)})
        s = psi_eval(cls, _w((1,)), ctx)
        assert s.coeff(0) == 0

    def test_doubled_identity(self, ex51):
        # psi of the doubled polytope class times the Chern polynomial of
        # the sub equals the Chern polynomial of the quotient
        ctx = EvalContext(3, (3, 5, 11), order=3)
        doubled = k_polytope(ex51, doubled=True)
        for w in enumerate_W(3):
            lhs = psi_eval(doubled, w, ctx) * ChowChern(ex51, 1, "I").series(ctx, w)
            rhs = ChowChern(ex51, 1, "Q").series(ctx, w)
            assert lhs == rhs


class TestGrassmannianClasses:
    def test_singleton_y_is_full_chart_product(self):
        D = DeltaMatroid(2, [{1, 2}])
        y = ogr_y_class(D)
        from deltak.fan import chart_characters
        expected = LaurentPoly.one(2)
        for v in chart_characters(frozenset({1, 2}), 2):
            expected = expected * (1 - LaurentPoly.monomial(tuple(-x for x in v)))
        assert y.restriction(frozenset({1, 2})) == expected
        assert y.restriction(frozenset()) == LaurentPoly.zero(2)

    def test_segment_y_is_constant_one_on_support(self, segment):
        y = ogr_y_class(segment)
        assert y.restriction(frozenset()) == LaurentPoly.one(1)
        assert y.restriction(frozenset({1})) == LaurentPoly.one(1)

    def test_y_passes_gkm_exhaustively(self, corpus2, corpus3):
        for D in corpus2 + corpus3:
            assert gkm_check(ogr_y_class(D)), D

    def test_orbit_passes_gkm_exhaustively(self, corpus2, corpus3):
        # the vertex-semigroup classes clear to honest Laurent polynomials
        # and satisfy the one-dimensional-orbit congruences
        for D in corpus2 + corpus3:
            assert gkm_check(ogr_orbit_class(D).as_polynomial_class()), D

    def test_orbit_equals_y_for_very_ample(self, segment):
        y = ogr_y_class(segment)
        orbit = ogr_orbit_class(segment).as_polynomial_class()
        for S in segment.feasible:
            assert y.restriction(S) == orbit.restriction(S)

    def test_orbit_differs_from_y_on_first_example(self, ex51):
        y = ogr_y_class(ex51)
        orbit = ogr_orbit_class(ex51)
        S = frozenset({1})
        num, dens = orbit.entries[S]
        assert num == LaurentPoly.one(3)  # free vertex semigroup
        assert len(dens) == 3
        assert orbit.as_polynomial_class().restriction(S) != y.restriction(S)

    def test_singleton_orbit_equals_y(self):
        D = DeltaMatroid(2, [{1}])
        y = ogr_y_class(D)
        orbit = ogr_orbit_class(D).as_polynomial_class()
        assert y.restriction(frozenset({1})) == orbit.restriction(frozenset({1}))

    def test_o2_restriction(self):
        cls = ogr_o2(2)
        assert cls.restriction(frozenset({1, 2})) == \
            LaurentPoly.monomial((-1, -1))
        assert cls.restriction(frozenset()) == LaurentPoly.monomial((1, 1))
        assert gkm_check(cls)

    def test_ogr_wedge_matches_x_side_shape(self):
        cls = ogr_wedge_qdual(1, 1)
        t = LaurentPoly.variable(1, 1)
        assert cls.restriction(frozenset({1})) == 1 + t
        assert cls.restriction(frozenset()) == 1 + LaurentPoly.variable(1, 1, -1)


class TestWAction:
    def test_identity(self, ex51):
        cls = k_polytope(ex51)
        assert w_act(cls, SignedPermutation((1, 2, 3))) == cls

    def test_involution(self, ex51):
        cls = k_polytope(ex51)
        tau = SignedPermutation((1, 2, -3))
        assert w_act(w_act(cls, tau), tau) == cls

    def test_psi_intertwines(self, corpus2):
        rng = random.Random(3)
        n = 2
        for D in corpus2[::3]:
            cls = k_polytope(D)
            for w in (SignedPermutation((-2, 1)), SignedPermutation((2, -1))):
                c = draw_direction(n, rng)
                ctx = EvalContext(n, c, order=n)
                cprime = tuple((1 if w.images[j] > 0 else -1) * c[abs(w.images[j]) - 1]
                               for j in range(n))
                ctx2 = EvalContext(n, cprime, order=n)
                winv = w.inverse()
                moved = w_act(cls, w)
                for wp in enumerate_W(n):
                    assert psi_eval(moved, wp, ctx) == \
                        psi_eval(cls, winv.compose(wp), ctx2)


def test_chern_integral_example(ex51):
    # the dual Chern polynomial at 1 against the anticanonical series
    # integrates to 2^n times the feasible count
    expr = ChowChern(ex51, 1, "I", dual=True) * ChowGammaGeom(3)
    assert integrate_chow(expr, 3) == 32
