import random

import pytest

from deltak.cones import RationalCone, cone_hilbert
from deltak.errors import InputError, ResourceBudgetExceeded
from deltak.laurent import LaurentPoly
from deltak.toric import (AffineSemigroup, member, minimal_generators,
                          semigroup_counts, semigroup_hilbert, toric_groebner)

EDGE_VECTORS = [
    (1, 1, 0, 0, 0, 0, 0), (1, 0, 1, 0, 0, 0, 0), (0, 1, 1, 0, 0, 0, 0),
    (0, 0, 1, 1, 0, 0, 0), (0, 0, 0, 1, 1, 0, 0), (0, 0, 0, 0, 1, 1, 0),
    (0, 0, 0, 0, 1, 0, 1), (0, 0, 0, 0, 0, 1, 1),
]


class TestSemigroupHilbert:
    def test_numerical_semigroup(self):
        rep = semigroup_hilbert([(2,), (3,)])
        (num, dens), = rep.pieces
        assert num == LaurentPoly(1, {(0,): 1, (-6,): -1})
        assert sorted(dens) == [(2,), (3,)]

    def test_single_relation(self):
        rep = semigroup_hilbert([(1, 0), (0, 1), (1, 1)])
        (num, _), = rep.pieces
        assert num == LaurentPoly(2, {(0, 0): 1, (-1, -1): -1})

    def test_free_generators(self):
        rep = semigroup_hilbert([(-1, 1, 0), (-1, 0, 1), (0, 1, 1)])
        (num, _), = rep.pieces
        assert num == LaurentPoly.one(3)

    def test_generator_budget(self):
        with pytest.raises(ResourceBudgetExceeded):
            semigroup_hilbert([(k, 1) for k in range(20)], max_generators=16)

    def test_mixed_sign_rejected(self):
        with pytest.raises(InputError):
            semigroup_hilbert([(1, 0), (-1, 0)])

    def test_zero_generator_rejected(self):
        with pytest.raises(InputError):
            AffineSemigroup([(0, 0)])

    @pytest.mark.parametrize("gens", [
        [(2,), (3,)],
        [(2,), (5,)],
        [(1, 0), (1, 2)],
        [(1, 0), (1, 1), (1, 3)],
        [(2, 0), (0, 3), (1, 1)],
        [(1, 0, 0), (0, 1, 0), (1, 1, 2), (1, 1, 1)],
    ])
    def test_series_against_enumeration(self, gens):
        sg = AffineSemigroup(gens)
        counts = semigroup_hilbert(gens).counts_below(sg.grading, 12)
        brute = semigroup_counts(gens, 12)
        assert set(counts) == brute
        assert all(v == 1 for v in counts.values())

    def test_saturated_input_matches_cone_series(self):
        # the generators form the Hilbert basis of their cone, so the
        # semigroup series and the cone series agree as series
        gens = [(1, 0), (1, 1), (1, 2)]
        sg = AffineSemigroup(gens)
        lhs = semigroup_hilbert(gens).counts_below(sg.grading, 12)
        rhs = cone_hilbert(RationalCone(2, gens)).counts_below(sg.grading, 12)
        assert lhs == rhs


class TestMember:
    def test_half_sum_point(self):
        A = [(-1, 1, 0), (-1, 0, 1), (0, 1, 1)]
        assert not member((-1, 1, 1), A)

    def test_graph_gap_point(self):
        assert not member((1, 1, 1, 0, 1, 1, 1), EDGE_VECTORS)
        assert member((2, 2, 2, 0, 0, 0, 0), EDGE_VECTORS)

    def test_generators_are_members(self):
        A = [(-1, 1, 0), (-1, 0, 1), (0, 1, 1)]
        for a in A:
            assert member(a, A)

    def test_agrees_with_enumeration(self):
        rng = random.Random(7)
        for gens in ([(2,), (3,)], [(1, 0), (1, 2)], [(2, 0), (0, 3), (1, 1)]):
            sg = AffineSemigroup(gens)
            inside = semigroup_counts(gens, 9)
            # sample points of the right level range, members and not
            from deltak.linalg import dot
            for _ in range(40):
                x = tuple(rng.randint(-2, 6) for _ in gens[0])
                if dot(sg.grading, x) > 9:
                    continue
                assert member(x, gens) == (x in inside), x


class TestMinimalGenerators:
    def test_redundant_dropped(self):
        assert sorted(minimal_generators([(1, 0), (0, 1), (1, 1), (2, 1)])) == \
            [(0, 1), (1, 0)]

    def test_numerical(self):
        assert sorted(minimal_generators([(2,), (3,), (4,), (5,)])) == [(2,), (3,)]

    def test_duplicates_collapse(self):
        assert minimal_generators([(1, 0), (1, 0)]) == [(1, 0)]

    def test_graph_vertex_semigroup_reduces_to_edges(self, ex51):
        # the 31 nonzero vertices of the graph example polytope reduce to
        # the 8 edge vectors
        from deltak.dmat import from_graph, vertex_of
        D, _ = from_graph(7, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5),
                              (5, 6), (5, 7), (6, 7)], check=False)
        diffs = [vertex_of(S, 7) for S in D.sorted_feasible()
                 if S != frozenset()]
        assert sorted(minimal_generators(diffs)) == sorted(EDGE_VECTORS)


def test_groebner_elimination_is_t_free():
    gb = toric_groebner([(2,), (3,)])
    for u, v in gb:
        assert len(u) == 2 and len(v) == 2
    assert any(u == (3, 0) and v == (0, 2) for u, v in gb)
