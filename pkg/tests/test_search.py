import networkx as nx
import numpy as np
import pytest

from kdis.canon import are_isomorphic, graph_key
from kdis.errors import BudgetError, DomainError
from kdis.graph import FamilyFilter, Graph, complete_multipartite, disjoint_copies, disjoint_union, is_connected, is_triangle_free
from kdis.graph6 import graph6_decode
from kdis.products import tensor_product
from kdis.search import (
    compute_m,
    compute_mi_table,
    family_keys,
    generate_graphs,
    generate_trees,
    labeled_class_keys,
    level_keys,
)
from oracles import atlas_by_order, graph_class_count, prufer_tree_classes, to_networkx

MOON_MOSER = {1: 1, 2: 2, 3: 3, 4: 4, 5: 6, 6: 9, 7: 12, 8: 18, 9: 27}


@pytest.mark.parametrize("n", range(1, 10))
def test_class_counts_match_burnside(n):
    assert len(level_keys(n)) == graph_class_count(n)


@pytest.mark.parametrize("n", range(0, 8))
def test_generation_matches_labelled_dedupe(n):
    np.testing.assert_array_equal(level_keys(n), labeled_class_keys(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_generated_classes_pairwise_non_isomorphic(n):
    gs = [to_networkx(g) for g in generate_graphs(n)]
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            assert not nx.is_isomorphic(gs[i], gs[j])


@pytest.mark.parametrize("n", range(1, 8))
def test_family_counts_against_atlas(n):
    atlas = [Graph.from_edges(n, list(h.edges())) for h in atlas_by_order(n)]
    assert len(family_keys(n, FamilyFilter.CONNECTED)) == sum(is_connected(g) for g in atlas)
    assert len(family_keys(n, FamilyFilter.TRIANGLE_FREE)) == sum(is_triangle_free(g) for g in atlas)
    tf = {graph_key(g) for g in atlas if is_triangle_free(g)}
    assert set(family_keys(n, FamilyFilter.TRIANGLE_FREE).tolist()) == tf


@pytest.mark.parametrize("n", range(1, 8))
def test_trees_against_prufer(n):
    trees = list(generate_trees(n))
    oracle = prufer_tree_classes(n)
    assert len(trees) == len(oracle)
    for t in oracle:
        assert any(nx.is_isomorphic(t, to_networkx(g)) for g in trees)


def test_tree_counts_to_twelve():
    assert [len(list(generate_trees(n))) for n in range(1, 13)] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]


def test_budgets():
    with pytest.raises(BudgetError):
        level_keys(11)
    with pytest.raises(BudgetError):
        list(generate_trees(13))
    with pytest.raises(DomainError):
        compute_m(2, 1)


def test_small_searches():
    rep = compute_mi_table(3, 1)
    assert rep.optimum == 3 and are_isomorphic(graph6_decode(rep.witnesses[0]), Graph.complete(3))
    rep = compute_mi_table(5, 1)
    assert rep.optimum == 6
    assert any(are_isomorphic(graph6_decode(w), disjoint_union(Graph.complete(3), Graph.complete(2))) for w in rep.witnesses)
    assert compute_mi_table(4, 2).optimum == 2


@pytest.mark.parametrize("n", range(1, 10))
def test_moon_moser_values(n):
    assert compute_mi_table(n, 1).optimum == MOON_MOSER[n]


def test_extremal_witnesses():
    for n in (6, 9):
        rep = compute_mi_table(n, 1)
        assert rep.witness_count == 1
        assert are_isomorphic(graph6_decode(rep.witnesses[0]), disjoint_copies(Graph.complete(3), n // 3))
    got = [graph6_decode(w) for w in compute_mi_table(7, 1).witnesses]
    k3 = Graph.complete(3)
    for want in (disjoint_union(k3, Graph.complete(4)), disjoint_union(k3, disjoint_copies(Graph.complete(2), 2))):
        assert sum(are_isomorphic(want, g) for g in got) == 1


@pytest.mark.parametrize(
    "k,t,m",
    [(1, 2, 2), (1, 3, 3), (2, 2, 4), (2, 3, 6), (2, 4, 8), (2, 6, 9)],
)
def test_m_values(k, t, m):
    res = compute_m(k, t)
    assert res.certified and res.m_value == m
    assert all(v < t for n, v in res.optima.items() if n < m)


def test_m_witnesses():
    res = compute_m(2, 6)
    assert any(are_isomorphic(graph6_decode(w), tensor_product(Graph.complete(3), Graph.complete(3))) for w in res.witnesses)
    res = compute_m(2, 2)
    assert any(are_isomorphic(graph6_decode(w), complete_multipartite([2, 2])) for w in res.witnesses)


def test_m_inconclusive():
    res = compute_m(3, 3, n_budget=5)
    assert res.status == "inconclusive" and res.m_value is None


def test_family_optima():
    assert [compute_mi_table(n, 1, FamilyFilter.TREE).optimum for n in range(2, 11)] == [2, 2, 3, 4, 5, 8, 9, 16, 17]
    assert [compute_mi_table(n, 1, FamilyFilter.TRIANGLE_FREE).optimum for n in range(4, 10)] == [4, 5, 8, 10, 16, 20]
    assert [compute_mi_table(n, 1, FamilyFilter.CONNECTED).optimum for n in range(4, 10)] == [4, 5, 8, 11, 15, 22]


def test_parallel_generation_is_identical():
    from kdis import search

    serial = {n: level_keys(n).copy() for n in range(1, 9)}
    rep1 = compute_mi_table(8, 2).to_dict(timing=False)
    search.clear_caches()
    for n in range(1, 9):
        np.testing.assert_array_equal(level_keys(n, jobs=3), serial[n])
    assert compute_mi_table(8, 2, jobs=3).to_dict(timing=False) == rep1
