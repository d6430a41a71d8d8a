import random

import pytest
from hypothesis import given
from test_graph import graphs

from wheelramsey.acceptance import brute_fractional_cover, glued_clusters, min_degree_ok
from wheelramsey.decompositions import (
    FractionalMatching,
    fractional_cover_number,
    max_fractional_matching,
    pulleyblank_decomposition,
    two_connect_reduce,
)
from wheelramsey.detectors import is_two_connected
from wheelramsey.graph import Graph


def two_k5_sharing_vertex():
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    edges += [(u, v) for u in range(4, 9) for v in range(u + 1, 9)]
    return Graph.from_edges(9, edges)


class TestBruteForceOracle:
    @pytest.mark.parametrize(
        "g,p",
        [
            (Graph.complete(3), 3),
            (Graph.cycle(5), 5),
            (Graph.cycle(4), 4),
            (Graph.star(3), 2),
            (Graph.complete(4), 4),
            (Graph.petersen(), 10),
            (Graph.empty(3), 0),
            (Graph.from_edges(3, [(0, 1), (1, 2)]), 2),
        ],
    )
    def test_known_values(self, g, p):
        assert brute_fractional_cover(g) == p


class TestFractionalMatching:
    def test_triangle(self):
        fm = max_fractional_matching(Graph.complete(3))
        assert fm.covered == 3 and fm.odd_cycles == ((0, 1, 2),)

    def test_c4(self):
        fm = max_fractional_matching(Graph.cycle(4))
        assert fm.covered == 4 and not fm.odd_cycles

    def test_star(self):
        assert fractional_cover_number(Graph.star(3)) == 2

    @given(graphs(max_n=10))
    def test_double_cover_equals_exhaustive(self, g):
        assert fractional_cover_number(g) == brute_fractional_cover(g)

    @given(graphs(max_n=12))
    def test_witness_is_valid_and_maximum(self, g):
        fm = max_fractional_matching(g)
        assert fm.is_valid(g)
        assert fm.covered == fractional_cover_number(g)

    @given(graphs(max_n=12))
    def test_vertex_deletion_drops_by_at_most_two(self, g):
        p = fractional_cover_number(g)
        for v in range(g.n):
            assert fractional_cover_number(g, 1 << v) in (p - 2, p - 1, p)

    def test_validity_checks(self):
        g = Graph.cycle(5)
        assert not FractionalMatching(((0, 2),), ()).is_valid(g)
        assert not FractionalMatching(((0, 1),), ((1, 2, 3),)).is_valid(g)
        assert not FractionalMatching((), ((0, 1, 2, 3),)).is_valid(g)
        assert FractionalMatching((), ((0, 1, 2, 3, 4),)).is_valid(g)


class TestDecomposition:
    def test_perfect_fractional_matching(self):
        d = pulleyblank_decomposition(Graph.cycle(5))
        assert (d.p, d.A, d.C, d.D) == (5, frozenset(), frozenset(range(5)), frozenset())
        assert d.check(Graph.cycle(5)) == []

    def test_star(self):
        g = Graph.star(3)
        d = pulleyblank_decomposition(g)
        assert d.p == 2 and d.D == {1, 2, 3} and d.A == {0} and d.C == frozenset()
        assert d.check(g) == []

    def test_min_degree_bound_skipped_without_d(self):
        # K3 and C4 have p = |V|; the |A| >= delta inequality would fail there
        for g in (Graph.complete(3), Graph.cycle(4)):
            d = pulleyblank_decomposition(g)
            assert not d.D and d.check(g) == []

    @given(graphs(max_n=12))
    def test_structure(self, g):
        d = pulleyblank_decomposition(g)
        assert d.check(g) == []

    def test_check_reports_problems(self):
        g = Graph.cycle(4)
        bogus = pulleyblank_decomposition(g).__class__(frozenset(), frozenset(), frozenset(range(4)), 4)
        assert "D not independent" in bogus.check(g)


class TestTwoConnectReduce:
    def test_two_connected_untouched(self):
        assert two_connect_reduce(Graph.complete(5), 3) == frozenset()

    def test_shared_vertex(self):
        assert two_connect_reduce(two_k5_sharing_vertex(), 5) == {4}

    def test_path_terminates(self):
        removed = two_connect_reduce(Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]))
        assert removed  # pieces end up as single vertices or edges

    def test_k_validated(self):
        with pytest.raises(ValueError):
            two_connect_reduce(Graph.complete(3), 1)

    @given(graphs(max_n=12))
    def test_idempotent(self, g):
        removed = two_connect_reduce(g)
        assert two_connect_reduce(g.delete(removed)) == frozenset()

    def test_degree_condition_bound(self):
        rng = random.Random(5)
        seen = 0
        while seen < 60:
            k = rng.choice((3, 4, 5))
            g = glued_clusters(rng, k)
            if not min_degree_ok(g, k):
                continue
            seen += 1
            removed = two_connect_reduce(g, k)
            assert len(removed) <= k - 2
            rest = g.delete(removed)
            assert all(is_two_connected(rest.induced(c)) for c in rest.components())
