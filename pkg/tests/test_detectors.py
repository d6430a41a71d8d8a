import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import naive_has_cycle, naive_matching_number
from test_graph import graphs

from wheelramsey.constructions import multipartite_complete, witness_cycle_wheel_two_cliques
from wheelramsey.detectors import (
    Budget,
    blocks,
    contains_family,
    cycle_spectrum,
    has_cycle_of_length,
    is_bipartite,
    is_two_connected,
    max_matching,
    verify_embedding,
)
from wheelramsey.graph import FamilySpec, Graph, Kind


def random_graph(rng, n, p):
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


def min_degree(g):
    return min((g.degree(v) for v in range(g.n)), default=0)


def random_bipartite(rng, a, b, p):
    edges = [(u, a + v) for u in range(a) for v in range(b) if rng.random() < p]
    return Graph.from_edges(a + b, edges)


class TestCycleSearch:
    def test_triangle_in_k4(self):
        res = has_cycle_of_length(Graph.complete(4), 3)
        assert res.found and verify_embedding(Graph.complete(4), FamilySpec(Kind.CYCLE, 3), res.witness)

    def test_c6_has_no_4_cycle(self):
        assert not has_cycle_of_length(Graph.cycle(6), 4).found

    @pytest.mark.parametrize("ell,expected", [(4, True), (5, False), (6, True)])
    def test_k33(self, ell, expected):
        assert has_cycle_of_length(Graph.complete_bipartite(3, 3), ell).found is expected

    def test_length_below_three_rejected(self):
        with pytest.raises(ValueError):
            has_cycle_of_length(Graph.complete(3), 2)

    def test_longer_than_graph(self):
        assert not has_cycle_of_length(Graph.complete(4), 5).found

    @given(graphs(max_n=7), st.integers(3, 7))
    def test_agrees_with_permutation_search(self, g, ell):
        res = has_cycle_of_length(g, ell)
        assert res.found == naive_has_cycle(g, ell)
        if res.found:
            assert verify_embedding(g, FamilySpec(Kind.CYCLE, ell), res.witness)

    def test_random_sample_n8(self):
        rng = random.Random(1)
        for _ in range(150):
            g = random_graph(rng, 8, rng.uniform(0.2, 0.7))
            for ell in range(3, 9):
                assert has_cycle_of_length(g, ell).found == naive_has_cycle(g, ell)

    @given(graphs(max_n=7), st.integers(3, 7), st.integers(0, 6))
    def test_through_vertex(self, g, ell, v):
        if v >= g.n:
            return
        res = has_cycle_of_length(g, ell, through=v)
        expected = any(naive_has_cycle(g.induced(sorted(keep)), ell) for keep in _subsets_containing(g.n, v, ell))
        assert res.found == expected
        if res.found:
            assert v in res.witness

    def test_budget_exhaustion_is_reported(self):
        # the Petersen graph is not Hamiltonian
        g = Graph.petersen()
        res = has_cycle_of_length(g, 10, budget=5)
        assert res.exhausted and not res.found
        full = has_cycle_of_length(g, 10)
        assert not full.found and not full.exhausted

    def test_shared_budget_object(self):
        bud = Budget(10**6)
        has_cycle_of_length(Graph.complete(7), 7, budget=bud)
        assert bud.used > 0


def _subsets_containing(n, v, size):
    from itertools import combinations

    for rest in combinations([u for u in range(n) if u != v], size - 1):
        yield set(rest) | {v}


class TestFamilies:
    def test_wheel_in_itself(self):
        res = contains_family(Graph.wheel(6), FamilySpec(Kind.WHEEL, 6))
        assert res.found and res.witness[0] == 0

    def test_fan_in_k5(self):
        res = contains_family(Graph.complete(5), FamilySpec(Kind.FAN, 2))
        assert res.found and verify_embedding(Graph.complete(5), FamilySpec(Kind.FAN, 2), res.witness)

    def test_no_fan_in_k4(self):
        assert not contains_family(Graph.complete(4), FamilySpec(Kind.FAN, 2)).found

    def test_two_clique_witness_blue_has_no_w6(self):
        report = witness_cycle_wheel_two_cliques(3, 3)
        assert report.coloring.n == 10
        assert not contains_family(report.coloring.blue, FamilySpec(Kind.WHEEL, 6)).found

    def test_small_wheels(self):
        assert contains_family(Graph.from_edges(2, [(0, 1)]), FamilySpec(Kind.WHEEL, 1)).found
        assert not contains_family(Graph.cycle(4), FamilySpec(Kind.WHEEL, 2)).found
        assert contains_family(Graph.complete(3), FamilySpec(Kind.WHEEL, 2)).found

    def test_star_matching_clique(self):
        g = Graph.star(4)
        assert contains_family(g, FamilySpec(Kind.STAR, 4)).found
        assert not contains_family(g, FamilySpec(Kind.STAR, 5)).found
        assert not contains_family(g, FamilySpec(Kind.MATCHING, 2)).found
        assert contains_family(Graph.petersen(), FamilySpec(Kind.MATCHING, 5)).found
        assert not contains_family(Graph.petersen(), FamilySpec(Kind.CLIQUE, 3)).found
        assert contains_family(Graph.complete(6), FamilySpec(Kind.CLIQUE, 6)).found

    @given(graphs(max_n=9), st.sampled_from(["C4", "C5", "W4", "W5", "F2", "S3", "M2", "K3", "W1", "W2"]))
    def test_witnesses_embed(self, g, text):
        f = FamilySpec.parse(text)
        res = contains_family(g, f)
        if res.found:
            assert verify_embedding(g, f, res.witness)

    @given(graphs(max_n=9), st.sampled_from(["C4", "W4", "F2", "S3", "M2", "K3"]), st.integers(0, 8))
    def test_through_matches_deletion(self, g, text, v):
        if v >= g.n:
            return
        f = FamilySpec.parse(text)
        with_v = contains_family(g, f, through=v).found
        anywhere = contains_family(g, f).found
        without_v = contains_family(g.delete([v]), f).found
        # a copy exists through v, or every copy avoids v
        assert anywhere == (with_v or without_v)
        if with_v:
            assert anywhere

    @given(graphs(max_n=10), st.integers(1, 4))
    def test_wheel_fan_star_chain(self, g, n):
        wheel = contains_family(g, FamilySpec(Kind.WHEEL, 2 * n)).found
        fan = contains_family(g, FamilySpec(Kind.FAN, n)).found
        star = contains_family(g, FamilySpec(Kind.STAR, 2 * n)).found
        assert (not wheel or fan) and (not fan or star)


class TestMatching:
    def test_small_cases(self):
        assert max_matching(Graph.cycle(5)) == 2
        assert max_matching(Graph.complete(6)) == 3
        assert max_matching(Graph.petersen()) == 5

    @given(graphs(max_n=10))
    def test_against_brute_force(self, g):
        assert max_matching(g) == naive_matching_number(g)


class TestSpectrum:
    def test_k5(self):
        s = cycle_spectrum(Graph.complete(5))
        assert s.present == {3, 4, 5} and s.is_pancyclic(5)

    def test_c7(self):
        s = cycle_spectrum(Graph.cycle(7))
        assert s.present == {7} and s.girth == s.circumference == 7

    def test_k34(self):
        s = cycle_spectrum(Graph.complete_bipartite(3, 4))
        assert s.present == {4, 6}
        assert s.longest_even == 6 and s.longest_odd is None
        assert s.is_weakly_pancyclic() is False

    def test_acyclic(self):
        s = cycle_spectrum(Graph.star(5))
        assert s.girth is None and s.circumference is None

    def test_limit(self):
        assert cycle_spectrum(Graph.complete(6), 4).present == {3, 4}
        with pytest.raises(ValueError):
            cycle_spectrum(Graph.complete(4), 5)


class TestBlocks:
    def test_c4(self):
        assert is_two_connected(Graph.cycle(4))

    def test_bowtie(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
        assert not is_two_connected(g)
        assert blocks(g).cut_vertices == {2}

    def test_star_blocks_are_edges(self):
        b = blocks(Graph.star(3))
        assert sorted(map(sorted, b.block_sets())) == [[0, 1], [0, 2], [0, 3]]
        assert b.cut_vertices == {0}

    def test_small_graphs_not_two_connected(self):
        assert not is_two_connected(Graph.complete(2))
        assert not is_two_connected(Graph.empty(3))

    @given(graphs(max_n=9))
    def test_cut_vertices_disconnect(self, g):
        cuts = blocks(g).cut_vertices
        base = len(g.components())
        for v in range(g.n):
            split = len(g.delete([v]).components()) > base - (1 if g.degree(v) == 0 else 0)
            assert (v in cuts) == split


class TestBipartite:
    def test_c6(self):
        b = is_bipartite(Graph.cycle(6))
        assert b and sorted(map(len, b.sides)) == [3, 3]

    def test_c5(self):
        b = is_bipartite(Graph.cycle(5))
        assert not b and len(b.odd_cycle) == 5

    def test_edgeless(self):
        b = is_bipartite(Graph.empty(4))
        assert b and sorted(map(len, b.sides)) == [0, 4]

    @given(graphs(max_n=10))
    def test_certificates(self, g):
        b = is_bipartite(g)
        if b:
            left, right = b.sides
            assert all((u in left) != (v in left) for u, v in g.edges())
            assert left | right == set(range(g.n))
        else:
            cyc = b.odd_cycle
            assert len(cyc) % 2 == 1
            assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


class TestClassicalTheorems:
    """Conclusions of classical cycle theorems, checked on random instances."""

    def test_minimum_degree_half_gives_pancyclic(self):
        rng = random.Random(11)
        checked = 0
        while checked < 120:
            n = rng.randint(3, 14)
            g = random_graph(rng, n, rng.uniform(0.5, 0.95))
            if 2 * min_degree(g) < n:
                continue
            checked += 1
            s = cycle_spectrum(g)
            balanced = n % 2 == 0 and g == _relabel_bipartite(g)
            assert s.is_pancyclic(n) or balanced
        for half in (2, 3, 5, 7):
            s = cycle_spectrum(Graph.complete_bipartite(half, half))
            assert not s.is_pancyclic(2 * half)

    def test_two_connected_even_cycle(self):
        rng = random.Random(12)
        checked = 0
        while checked < 120:
            n = rng.randint(4, 14)
            g = random_graph(rng, n, rng.uniform(0.2, 0.7))
            if not is_two_connected(g):
                continue
            k = min(min_degree(g), n // 2)
            if k < 2:
                continue
            checked += 1
            assert (cycle_spectrum(g).longest_even or 0) >= 2 * k

    def test_two_connected_odd_cycle(self):
        rng = random.Random(13)
        checked = 0
        while checked < 120:
            n = rng.randint(4, 14)
            g = random_graph(rng, n, rng.uniform(0.2, 0.7))
            if not is_two_connected(g) or is_bipartite(g):
                continue
            k = min(min_degree(g), n // 2)
            checked += 1
            assert (cycle_spectrum(g).longest_odd or 0) >= 2 * k - 1

    def test_balanced_bipartite_hamiltonian(self):
        rng = random.Random(14)
        checked = 0
        while checked < 100:
            half = rng.randint(2, 7)
            g = random_bipartite(rng, half, half, rng.uniform(0.55, 0.95))
            if 2 * min_degree(g) <= half:
                continue
            checked += 1
            assert has_cycle_of_length(g, 2 * half).found

    def test_bipartite_even_cycles_up_to_2k(self):
        rng = random.Random(15)
        checked = 0
        while checked < 100:
            k = rng.randint(2, 7)
            x = rng.randint(k, 2 * k - 2)
            y = rng.randint(k, 9)
            edges = []
            for j in range(y):
                for u in rng.sample(range(x), rng.randint(k, x)):
                    edges.append((u, x + j))
            g = Graph.from_edges(x + y, edges)
            checked += 1
            for length in range(4, 2 * k + 1, 2):
                assert has_cycle_of_length(g, length).found

    def test_degree_sequence_condition(self):
        rng = random.Random(16)
        checked = 0
        while checked < 100:
            n = rng.randint(3, 14)
            g = random_graph(rng, n, rng.uniform(0.4, 0.95))
            d = sorted(g.degree(v) for v in range(n))
            ok = all(d[k - 1] > k or d[n - k - 1] >= n - k for k in range(1, n) if Fraction(k) < Fraction(n, 2))
            if not ok:
                continue
            checked += 1
            assert cycle_spectrum(g).is_pancyclic(n) or g == _relabel_bipartite(g)

    def test_multipartite_example(self):
        g = multipartite_complete([2, 2, 2])
        assert g.edge_count() == 12 and cycle_spectrum(g).is_pancyclic(6)


def _relabel_bipartite(g):
    """K_{n/2,n/2} on g's own bipartition if g is bipartite with equal sides, else the empty graph."""
    b = is_bipartite(g)
    if not b or len(b.sides[0]) != len(b.sides[1]):
        return Graph.empty(g.n)
    left, right = b.sides
    return Graph.from_edges(g.n, [(min(u, v), max(u, v)) for u in left for v in right])
