import math

import pytest
from hypothesis import given

from alliances.graph_core import (
    Graph,
    VertexSet,
    boundary,
    degree_stats,
    girth,
    is_connected,
    neighbors_in,
    neighbors_out,
)
from alliances import generators

from strategies import graph_and_proper_subset, graphs


def triangle():
    return Graph(3, [(0, 1), (1, 2), (0, 2)])


class TestGraphConstruction:
    def test_adjacency_is_symmetric_and_sorted(self):
        g = Graph(4, [(2, 0), (3, 1), (0, 3)])
        for u in range(g.n):
            assert list(g.adjacency[u]) == sorted(g.adjacency[u])
            for v in g.adjacency[u]:
                assert u in g.adjacency[v]

    def test_edge_count_is_half_degree_sum(self):
        g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
        assert g.m == sum(g.degree(v) for v in range(g.n)) // 2 == 5

    def test_duplicate_edges_collapse(self):
        g = Graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.m == 1

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(3, [(1, 1)])

    def test_out_of_range_edge_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph(3, [(0, 3)])

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            Graph(0)

    def test_equality_and_hash(self):
        assert triangle() == triangle()
        assert hash(triangle()) == hash(triangle())
        assert triangle() != Graph(3, [(0, 1)])


class TestVertexSet:
    def test_iteration_is_ascending(self):
        s = VertexSet([5, 1, 3])
        assert list(s) == [1, 3, 5]
        assert len(s) == 3
        assert 3 in s and 2 not in s

    def test_from_mask(self):
        assert VertexSet.from_mask(0b1010) == VertexSet([1, 3])

    def test_negative_member_rejected(self):
        with pytest.raises(ValueError):
            VertexSet([-1])


class TestNeighborCounts:
    def test_triangle_split(self):
        s = VertexSet([0, 1])
        assert neighbors_in(triangle(), 0, s) == 1
        assert neighbors_out(triangle(), 0, s) == 1

    def test_empty_set_counts_nothing(self):
        assert neighbors_in(triangle(), 0, VertexSet()) == 0

    def test_full_set_on_petersen(self):
        g = generators.petersen()
        assert neighbors_in(g, 0, VertexSet(range(10))) == 3
        assert neighbors_out(g, 0, VertexSet(range(10))) == 0

    def test_star_center_alone(self):
        star = generators.complete_bipartite(1, 4)
        assert neighbors_out(star, 0, VertexSet([0])) == 4

    def test_vertex_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            neighbors_in(triangle(), 3, VertexSet([0]))

    def test_set_out_of_range(self):
        with pytest.raises(ValueError):
            neighbors_in(triangle(), 0, VertexSet([7]))

    @given(graph_and_proper_subset())
    def test_in_plus_out_is_degree(self, pair):
        g, s = pair
        for v in range(g.n):
            assert neighbors_in(g, v, s) + neighbors_out(g, v, s) == g.degree(v)


class TestBoundary:
    def test_path_center(self):
        p3 = generators.path(3)
        assert boundary(p3, VertexSet([1])) == VertexSet([0, 2])

    def test_complete_graph_boundary_is_rest(self):
        g = generators.complete(5)
        assert boundary(g, VertexSet([1, 3])) == VertexSet([0, 2, 4])

    def test_cycle_segment(self):
        c6 = generators.cycle(6)
        assert boundary(c6, VertexSet([0, 1])) == VertexSet([2, 5])

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            boundary(triangle(), VertexSet())

    @given(graph_and_proper_subset())
    def test_boundary_disjoint_and_dominated(self, pair):
        g, s = pair
        b = boundary(g, s)
        assert b.mask & s.mask == 0
        for v in b:
            assert neighbors_in(g, v, s) >= 1


def _component_count(g):
    seen = [False] * g.n
    count = 0
    for start in range(g.n):
        if seen[start]:
            continue
        count += 1
        stack = [start]
        seen[start] = True
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return count


def _girth_by_edge_removal(g):
    """Independent oracle: shortest cycle through edge (u,v) is the shortest
    u-v path with that edge removed, plus one."""
    from collections import deque

    best = math.inf
    for u, v in g.edges():
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for w in g.adjacency[x]:
                if (x, w) in ((u, v), (v, u)):
                    continue
                if w not in dist:
                    dist[w] = dist[x] + 1
                    queue.append(w)
        if v in dist:
            best = min(best, dist[v] + 1)
    return best


class TestGirth:
    def test_petersen(self):
        assert girth(generators.petersen()) == 5

    def test_cycle(self):
        assert girth(generators.cycle(4)) == 4

    def test_path_is_acyclic(self):
        assert girth(generators.path(5)) == math.inf

    def test_triangle_early_exit(self):
        assert girth(generators.complete(6)) == 3

    @given(graphs())
    def test_infinite_iff_forest(self, g):
        acyclic = math.isinf(girth(g))
        assert acyclic == (g.m <= g.n - _component_count(g))

    @given(graphs(max_n=9))
    def test_matches_edge_removal_oracle(self, g):
        assert girth(g) == _girth_by_edge_removal(g)


class TestConnectivityAndDegrees:
    def test_connected_examples(self):
        assert is_connected(generators.complete(4))
        assert is_connected(Graph(1))
        two_edges = Graph(4, [(0, 1), (2, 3)])
        assert not is_connected(two_edges)

    def test_degree_stats(self):
        assert degree_stats(generators.petersen()) == (3, 3, 3)
        assert degree_stats(generators.complete_bipartite(3, 6)) == (3, 6, None)
        assert degree_stats(Graph(1)) == (0, 0, 0)


class TestCountingClaims:
    """The three double-counting identities every proof in the bounds leans on."""

    @staticmethod
    def _sums(g, s):
        inside_in = sum(neighbors_in(g, v, s) for v in s)
        inside_out = sum(neighbors_out(g, v, s) for v in s)
        comp = [v for v in range(g.n) if v not in s]
        outside_in = sum(neighbors_in(g, v, s) for v in comp)
        outside_out = sum(neighbors_out(g, v, s) for v in comp)
        return inside_in, inside_out, outside_in, outside_out

    @given(graph_and_proper_subset())
    def test_edge_partition(self, pair):
        g, s = pair
        inside_in, inside_out, _, outside_out = self._sums(g, s)
        assert 2 * g.m == inside_in + 2 * inside_out + outside_out

    @given(graph_and_proper_subset())
    def test_cut_counted_from_both_sides(self, pair):
        g, s = pair
        _, inside_out, outside_in, _ = self._sums(g, s)
        assert inside_out == outside_in

    @given(graph_and_proper_subset())
    def test_internal_degree_cap(self, pair):
        g, s = pair
        inside_in, _, _, _ = self._sums(g, s)
        assert inside_in <= s.size * (s.size - 1)
