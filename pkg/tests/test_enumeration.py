import random

import pytest
from hypothesis import given, settings

from helpers import graphs, random_graph
from kdis.enumeration import (
    count_mi,
    degeneracy_order,
    enumerate_kdis,
    is_independent,
    is_k_dominating_independent,
)
from kdis.errors import DomainError
from kdis.graph import Graph, VertexSet, complete_multipartite, disjoint_copies, disjoint_union
from kdis.products import tensor_product
from kdis.search import generate_graphs
from oracles import maximal_independent_sets, naive_kdis

K3XK3 = tensor_product(Graph.complete(3), Graph.complete(3))


def test_predicates():
    k3 = Graph.complete(3)
    assert is_independent(k3, VertexSet.of([0]))
    assert not is_independent(k3, VertexSet.of([0, 1]))
    assert is_independent(K3XK3, VertexSet.of([0, 1, 2]))
    assert is_k_dominating_independent(complete_multipartite([2, 2]), VertexSet.of([0, 1]), 2)
    assert not is_k_dominating_independent(Graph.cycle(4), VertexSet.of([0]), 1)
    assert is_k_dominating_independent(k3, VertexSet.of([0]), 1)


def test_known_counts():
    assert [s.vertices() for s in enumerate_kdis(Graph.complete(3), 1)] == [[0], [1], [2]]
    sets = enumerate_kdis(K3XK3, 2)
    rows = {VertexSet.of(range(3 * i, 3 * i + 3)) for i in range(3)}
    cols = {VertexSet.of(range(j, 9, 3)) for j in range(3)}
    assert set(sets) == rows | cols
    assert count_mi(Graph.cycle(5), 1) == 5
    assert count_mi(disjoint_copies(Graph.complete(3), 3), 1) == 27
    assert count_mi(complete_multipartite([2, 2, 2]), 2) == 3
    assert count_mi(Graph.empty(0), 3) == 1
    assert count_mi(Graph.empty(1), 3) == 1


def test_isolated_vertex_joins_every_set():
    g = K3XK3
    h = disjoint_union(g, Graph.empty(1))
    assert count_mi(h, 2) == count_mi(g, 2)
    assert all(9 in s for s in enumerate_kdis(h, 2))


def test_output_is_ascending():
    rng = random.Random(1)
    for _ in range(50):
        g = random_graph(rng, rng.randint(0, 12))
        for strategy in ("scan", "branch"):
            sets = enumerate_kdis(g, 1, strategy).sets
            assert list(sets) == sorted(sets)


def test_rejects_bad_k():
    with pytest.raises(DomainError):
        enumerate_kdis(Graph.complete(3), 0)
    with pytest.raises(DomainError):
        count_mi(Graph.complete(3), -1)


@settings(max_examples=300)
@given(graphs(max_n=12))
def test_strategies_agree_with_naive_scan(g):
    for k in (1, 2, 3):
        expected = sorted(naive_kdis(g, k), key=lambda s: sum(1 << v for v in s))
        for strategy in ("scan", "branch"):
            found = enumerate_kdis(g, k, strategy)
            assert [frozenset(s) for s in found] == expected
            assert count_mi(g, k, strategy) == len(expected)


@pytest.mark.parametrize("n", range(0, 8))
def test_strategies_agree_on_all_small_graphs(n):
    for g in generate_graphs(n) if n else [Graph.empty(0)]:
        for k in (1, 2, 3):
            assert enumerate_kdis(g, k, "scan").sets == enumerate_kdis(g, k, "branch").sets


def test_maximal_independent_sets_match_clique_enumeration():
    for n in range(1, 9):
        for g in generate_graphs(n):
            assert {frozenset(s) for s in enumerate_kdis(g, 1)} == maximal_independent_sets(g)
    rng = random.Random(9)
    for _ in range(300):
        g = random_graph(rng, rng.randint(9, 10))
        assert {frozenset(s) for s in enumerate_kdis(g, 1)} == maximal_independent_sets(g)


def test_branch_on_larger_graphs():
    rng = random.Random(4)
    for _ in range(20):
        g = random_graph(rng, rng.randint(21, 30), 0.35)
        for k in (1, 2):
            found = enumerate_kdis(g, k)
            assert all(is_k_dominating_independent(g, s, k) for s in found)
    g = disjoint_copies(Graph.complete(3), 8)
    assert count_mi(g, 1) == 3**8


@settings(max_examples=200)
@given(graphs(max_n=10))
def test_higher_k_sets_are_lower_k_sets(g):
    for k in (1, 2, 3):
        assert set(enumerate_kdis(g, k + 1)) <= set(enumerate_kdis(g, k))


@settings(max_examples=300)
@given(graphs(max_n=10))
def test_distinct_sets_differ_by_at_least_k(g):
    for k in (1, 2, 3):
        sets = enumerate_kdis(g, k).sets
        for i, a in enumerate(sets):
            for b in sets[i + 1:]:
                assert (a & ~b).bit_count() >= k and (b & ~a).bit_count() >= k


def test_multiplicative_over_disjoint_union():
    rng = random.Random(5)
    for _ in range(100):
        g = random_graph(rng, rng.randint(0, 6))
        h = random_graph(rng, rng.randint(0, 6))
        for k in (1, 2, 3):
            assert count_mi(disjoint_union(g, h), k) == count_mi(g, k) * count_mi(h, k)


@given(graphs(max_n=12))
def test_degeneracy_order_is_permutation(g):
    assert sorted(degeneracy_order(g)) == list(range(g.n))
