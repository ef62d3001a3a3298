import random

import pytest

from deltak.cones import (RationalCone, brute_cone_points, cone_hilbert,
                          extreme_rays, hilbert_basis,
                          parallelepiped_points, span_lattice, tangent_cone)
from deltak.dmat import DeltaMatroid
from deltak.errors import InputError
from deltak.laurent import LaurentPoly
from deltak.lp import positive_functional


class TestCones:
    def test_pointedness_enforced(self):
        with pytest.raises(InputError):
            RationalCone(2, [(1, 0), (-1, 0)])

    def test_tangent_cone_examples(self, ex51, segment):
        assert tangent_cone(DeltaMatroid(2, [{1}]), {1}).gens == ()
        C = tangent_cone(ex51, {1})
        assert sorted(C.gens) == [(-1, 0, 1), (-1, 1, 0), (0, 1, 1)]
        assert tangent_cone(segment, set()).gens == ((1,),)

    def test_tangent_cone_needs_feasible_vertex(self, ex51):
        with pytest.raises(InputError):
            tangent_cone(ex51, {1, 2})

    def test_extreme_ray_reduction(self):
        C = RationalCone(2, [(1, 0), (0, 1), (1, 1), (2, 3)])
        assert sorted(extreme_rays(C)) == [(0, 1), (1, 0)]


class TestConeHilbert:
    def test_ray(self):
        rep = cone_hilbert(RationalCone(1, [(1,)]))
        (num, rays), = rep.pieces
        assert num == LaurentPoly.one(1) and rays == ((1,),)

    def test_index_two(self):
        rep = cone_hilbert(RationalCone(2, [(1, 0), (1, 2)]))
        (num, rays), = rep.pieces
        assert num == LaurentPoly(2, {(0, 0): 1, (-1, -1): 1})
        assert sorted(rays) == [(1, 0), (1, 2)]

    def test_first_example_parallelepiped_point(self, ex51):
        rep = cone_hilbert(tangent_cone(ex51, {1}))
        assert any((1, -1, -1) in num.terms for num, _ in rep.pieces)

    def test_origin_cone(self):
        rep = cone_hilbert(RationalCone(3, []))
        (num, rays), = rep.pieces
        assert num == LaurentPoly.one(3) and rays == ()

    @pytest.mark.parametrize("gens,ell,bound", [
        ([(1, 0), (1, 2)], (2, 1), 10),
        ([(1, 0), (1, 1), (1, 3)], (1, 1), 8),
        ([(2, -1), (0, 1)], (1, 1), 8),
        ([(1, 0, 0), (0, 1, 0), (1, 1, 2)], (1, 1, 1), 6),
        ([(1, 0, 0), (0, 1, 0), (1, 1, 2), (2, 1, 2), (1, 1, 1)], (1, 1, 1), 6),
        ([(1, 1, 0), (1, -1, 0)], (2, 0, 1), 8),
    ])
    def test_against_brute_force(self, gens, ell, bound):
        C = RationalCone(len(gens[0]), gens)
        counts = cone_hilbert(C).counts_below(ell, bound)
        brute = brute_cone_points(C, ell, bound)
        assert set(counts) == brute
        assert all(v == 1 for v in counts.values())

    def test_random_cones_against_brute_force(self):
        rng = random.Random(20260808)
        done = 0
        while done < 6:
            dim = rng.choice((2, 3))
            gens = [tuple(rng.randint(-2, 2) for _ in range(dim))
                    for _ in range(rng.randint(2, 4))]
            gens = [g for g in gens if any(x != 0 for x in g)]
            if not gens:
                continue
            ell = positive_functional(gens)
            if ell is None:
                continue
            C = RationalCone(dim, gens)
            counts = cone_hilbert(C).counts_below(ell, 6)
            brute = brute_cone_points(C, ell, 6)
            assert set(counts) == brute and all(v == 1 for v in counts.values())
            done += 1


class TestParallelepiped:
    def test_index_two(self):
        pts = parallelepiped_points([(1, 0), (1, 2)])
        assert pts == [(0, 0), (1, 1)]

    def test_half_open_shift(self):
        closed = parallelepiped_points([(1, 0), (1, 2)], frozenset())
        opened = parallelepiped_points([(1, 0), (1, 2)], frozenset({0}))
        assert (0, 0) in closed
        assert (0, 0) not in opened
        assert len(opened) == 2


class TestHilbertBasis:
    def test_index_two(self):
        hb = hilbert_basis(RationalCone(2, [(1, 0), (1, 2)]))
        assert sorted(hb) == [(1, 0), (1, 1), (1, 2)]

    def test_unimodular(self):
        hb = hilbert_basis(RationalCone(2, [(1, 0), (0, 1)]))
        assert sorted(hb) == [(0, 1), (1, 0)]

    def test_first_example_gap_generator(self, ex51):
        hb = hilbert_basis(tangent_cone(ex51, {1}))
        assert (-1, 1, 1) in hb

    def test_generates_low_levels(self):
        C = RationalCone(2, [(2, -1), (0, 1)])
        hb = hilbert_basis(C)
        ell = positive_functional(list(C.gens))
        pts = brute_cone_points(C, ell, 6)
        from deltak.toric import member
        for p in pts:
            if any(x != 0 for x in p):
                assert member(p, hb)

    def test_vertex_span_lattice(self, ex51):
        lat = span_lattice([(1, 1, 0), (0, 1, 1)])
        hb = hilbert_basis(RationalCone(3, [(1, 1, 0), (0, 1, 1)]), lattice=lat)
        assert sorted(hb) == [(0, 1, 1), (1, 1, 0)]
