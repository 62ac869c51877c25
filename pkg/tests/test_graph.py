from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings

from mimkit.generators import complete, complete_bipartite, cycle, empty, exhaustive_graphs, petersen
from mimkit.graph import Graph, VertexSet, bits

from conftest import graphs


def test_invariants_on_construction():
    g = Graph(5, [(0, 1), (1, 0), (3, 4)])
    assert g.edge_count == 2
    assert g.edges() == [(0, 1), (3, 4)]
    assert all(not (row >> v & 1) for v, row in enumerate(g.adj))


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 2)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(ValueError):
        Graph(3, edges)


def test_from_adjacency_checks_symmetry():
    with pytest.raises(ValueError):
        Graph.from_adjacency([0b10, 0b00])
    assert Graph.from_adjacency([0b10, 0b01]) == Graph(2, [(0, 1)])


def test_vertex_set_algebra():
    a = VertexSet.of(6, [0, 2, 4])
    b = VertexSet.of(6, [2, 3])
    assert sorted(a | b) == [0, 2, 3, 4]
    assert sorted(a & b) == [2]
    assert sorted(a - b) == [0, 4]
    assert sorted(a.complement()) == [1, 3, 5]
    assert 2 in a and 3 not in a and 9 not in a
    assert len(a) == 3
    with pytest.raises(ValueError):
        VertexSet.of(3, [3])
    with pytest.raises(ValueError):
        a | VertexSet.of(5, [1])


def test_closed_neighborhood_k33_single_vertex(k33):
    nb = k33.closed_neighborhood([0])
    assert sorted(nb) == [0, 3, 4, 5]
    assert len(nb) == 4


def test_closed_neighborhood_empty(k33):
    assert len(k33.closed_neighborhood([])) == 0


def test_closed_neighborhood_c4_opposite_pair(c4):
    assert sorted(c4.closed_neighborhood([0, 2])) == [0, 1, 2, 3]
    assert sorted(c4.open_neighborhood([0, 2])) == [1, 3]


@given(graphs())
def test_neighbourhood_identities(g):
    for u in range(g.n):
        assert len(g.neighbors(u)) == g.degree(u)
        assert u in g.closed_neighbors(u) and u not in g.neighbors(u)
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.edge_count


def test_delete_vertex_from_c4_gives_p3(c4):
    h, label_map = c4.delete_vertices([0])
    assert h == Graph(3, [(0, 1), (1, 2)])
    assert label_map == [1, 2, 3]


def test_delete_nothing_is_identity(k33):
    h, label_map = k33.delete_vertices([])
    assert h == k33 and label_map == list(range(6))


def test_delete_one_side_of_k33(k33):
    h, _ = k33.delete_vertices([0, 1, 2])
    assert h.n == 3 and h.edge_count == 0


@given(graphs(max_n=7))
def test_delete_vertices_preserves_remaining_edges(g):
    removed = [v for v in range(g.n) if v % 3 == 1]
    h, label_map = g.delete_vertices(removed)
    assert h.n == g.n - len(removed)
    for x, y in combinations(range(h.n), 2):
        assert h.has_edge(x, y) == g.has_edge(label_map[x], label_map[y])


def _triangle_free_brute(g: Graph) -> bool:
    return not any(g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
                   for a, b, c in combinations(range(g.n), 3))


def test_triangle_free_examples(k33):
    assert not complete(3).is_triangle_free()
    assert k33.is_triangle_free()
    p = petersen()
    assert _triangle_free_brute(p)
    assert p.is_triangle_free()


@given(graphs())
def test_triangle_free_matches_triple_scan(g):
    assert g.is_triangle_free() == _triangle_free_brute(g)


def test_twin_partition_k33(k33):
    tp = k33.twin_partition()
    assert tp.tau == 2
    assert [sorted(b) for b in tp] == [[0, 1, 2], [3, 4, 5]]


def test_twin_partition_c5():
    g = cycle(5)
    # pairwise neighbourhood comparison: no two vertices of C5 share N(v)
    assert all(g.adj[u] != g.adj[v] for u, v in combinations(range(5), 2))
    assert g.twin_partition().tau == 5


def test_twin_partition_edgeless():
    tp = empty(4).twin_partition()
    assert tp.tau == 1 and sorted(tp.blocks[0]) == [0, 1, 2, 3]


@pytest.mark.parametrize("n", range(1, 6))
def test_twin_partition_is_neighbourhood_equivalence(n):
    for g in exhaustive_graphs(n):
        tp = g.twin_partition()
        seen = 0
        for block in tp:
            assert not block.mask & seen
            seen |= block.mask
            rows = {g.adj[v] for v in block}
            assert len(rows) == 1
        assert seen == (1 << n) - 1
        assert tp.tau == len({g.adj[v] for v in range(n)})


def test_twin_set(k33):
    assert sorted(k33.twin_set(4)) == [3, 4, 5]
    assert sorted(complete_bipartite(1, 2).twin_set(0)) == [0]


def test_components():
    g = Graph(5, [(0, 1), (3, 4)])
    assert [sorted(c) for c in g.components()] == [[0, 1], [2], [3, 4]]


def test_bits():
    assert list(bits(0b101001)) == [0, 3, 5]
    assert list(bits(0)) == []
