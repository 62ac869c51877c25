from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings

from mimkit.generators import complete, complete_bipartite, disjoint_union, empty, exhaustive_graphs, star
from mimkit.graph import Graph
from mimkit.matchings import (
    ConstraintPair,
    as_matching,
    count_mim_constrained,
    count_mim_oracle,
    enumerate_mim_oracle,
    format_matching,
    is_induced_matching,
    is_maximal_induced_matching,
    matchings_constrained,
    parse_matching,
    partition_by_pair,
)

from conftest import graphs, seeded_random_graphs


def subset_oracle(g: Graph) -> list[tuple]:
    """All maximal induced matchings by filtering every edge subset."""
    edges = g.edges()
    induced = []
    for r in range(len(edges) + 1):
        for subset in combinations(edges, r):
            ends = [v for e in subset for v in e]
            if len(set(ends)) != len(ends):
                continue
            if any(g.has_edge(a, b) for e, f in combinations(subset, 2) for a in e for b in f):
                continue
            induced.append(frozenset(subset))
    maximal = [m for m in induced if not any(m < other for other in induced)]
    return sorted(tuple(sorted(m)) for m in maximal)


def test_induced_matching_on_c6(c6):
    assert is_induced_matching(c6, [(0, 1), (3, 4)])


def test_non_induced_on_p4(p4):
    assert not is_induced_matching(p4, [(0, 1), (2, 3)])


def test_empty_matching_is_induced(p4):
    assert is_induced_matching(p4, [])


def test_shared_endpoint_is_not_a_matching(p4):
    assert not is_induced_matching(p4, [(0, 1), (1, 2)])


def test_missing_edge_is_input_error(p4):
    with pytest.raises(ValueError):
        is_induced_matching(p4, [(0, 2)])


def test_every_single_edge_of_k33_is_maximal(k33):
    assert all(is_maximal_induced_matching(k33, [e]) for e in k33.edges())


def test_empty_matching_maximal_only_without_edges(p4):
    assert is_maximal_induced_matching(empty(3), [])
    assert not is_maximal_induced_matching(p4, [])


def test_single_edge_of_c6_extends(c6):
    assert not is_maximal_induced_matching(c6, [(0, 1)])
    assert is_induced_matching(c6, [(0, 1), (3, 4)])


def test_maximality_requires_induced(p4):
    with pytest.raises(ValueError):
        is_maximal_induced_matching(p4, [(0, 1), (2, 3)])


@pytest.mark.parametrize("g, expected", [
    (complete_bipartite(3, 3), 9),
    (Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), 4),
    (star(5), 5),
    (star(1), 1),
    (complete(5), 10),
    (Graph(4, [(0, 1), (1, 2), (2, 3)]), 3),
])
def test_oracle_counts(g, expected):
    found = list(enumerate_mim_oracle(g))
    assert len(found) == expected == count_mim_oracle(g)
    assert found == sorted(found)


def test_p4_matchings_by_subset_check(p4):
    assert subset_oracle(p4) == [((0, 1),), ((1, 2),), ((2, 3),)]
    assert list(enumerate_mim_oracle(p4)) == subset_oracle(p4)


@pytest.mark.parametrize("n", range(1, 7))
def test_oracle_complete_and_sound_exhaustive(n):
    for g in exhaustive_graphs(n):
        found = list(enumerate_mim_oracle(g))
        assert found == subset_oracle(g)


@pytest.mark.parametrize("n", range(1, 7))
def test_oracle_sound_exhaustive(n):
    for g in exhaustive_graphs(n):
        for m in enumerate_mim_oracle(g):
            assert is_maximal_induced_matching(g, m)


def test_oracle_sound_random():
    for g in seeded_random_graphs(1000, 12, seed=11):
        found = list(enumerate_mim_oracle(g))
        assert len(set(found)) == len(found)
        for m in found:
            assert is_maximal_induced_matching(g, m)


def test_edgeless_graph_has_one_empty_matching():
    assert list(enumerate_mim_oracle(empty(4))) == [()]
    assert list(enumerate_mim_oracle(Graph(0))) == [()]


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_multiplicative_over_disjoint_union(g1, g2):
    assert count_mim_oracle(disjoint_union([g1, g2])) == count_mim_oracle(g1) * count_mim_oracle(g2)


def test_constrained_whole_set(k33):
    assert count_mim_constrained(k33, ConstraintPair()) == 9


def test_constrained_c4_avoiding_a(c4):
    assert list(matchings_constrained(c4, [0], [])) == [((1, 2),), ((2, 3),)]
    assert count_mim_constrained(c4, ConstraintPair({0}, set())) == 2


def test_constrained_k33_cover_u(k33):
    assert count_mim_constrained(k33, ConstraintPair(set(), {0})) == 3


def test_overlapping_constraints_rejected(k33):
    with pytest.raises(ValueError):
        ConstraintPair({1}, {1, 2})
    with pytest.raises(ValueError):
        list(matchings_constrained(k33, [1], [1]))


def test_partition_p4_ends(p4):
    assert partition_by_pair(p4, 0, 3) == (1, 1, 0, 1)


def test_partition_k33_same_side(k33):
    assert partition_by_pair(k33, 0, 1) == (3, 3, 0, 3)


def test_partition_all_avoiding():
    g = Graph(5, [(0, 1)])
    assert partition_by_pair(g, 3, 4) == (0, 0, 0, 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_partition_identity_exhaustive(n):
    for g in exhaustive_graphs(n):
        total = count_mim_oracle(g)
        for u, v in combinations(range(n), 2):
            assert sum(partition_by_pair(g, u, v)) == total


def test_text_form_round_trip():
    m = as_matching([(4, 3), (1, 0)])
    assert format_matching(m) == "0-1 3-4"
    assert parse_matching("3-4 0-1") == m
    assert format_matching(()) == ""
    with pytest.raises(ValueError):
        parse_matching("0:1")
