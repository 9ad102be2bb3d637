import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import graphs, random_graph
from kdis.canon import are_isomorphic, canonical_form, canonical_labeling, graph_from_key, graph_key
from kdis.graph import Graph, complete_multipartite
from kdis.products import tensor_product
from oracles import atlas_by_order, to_networkx


@settings(max_examples=200)
@given(graphs(max_n=14), st.randoms(use_true_random=False))
def test_canonical_form_is_invariant(g, r):
    perm = list(range(g.n))
    r.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(g) == canonical_form(h)
    assert are_isomorphic(g, h)


@given(graphs(max_n=12))
def test_labeling_is_an_isomorphism(g):
    lab = canonical_labeling(g)
    assert sorted(lab) == list(range(g.n))
    pos = {v: i for i, v in enumerate(lab)}
    c = canonical_form(g)
    assert all(c.has_edge(pos[u], pos[v]) for u, v in g.edges())
    assert c.edge_count == g.edge_count


@pytest.mark.parametrize("n", range(0, 8))
def test_atlas_classes_get_distinct_forms(n):
    forms = {canonical_form(Graph.from_edges(n, list(h.edges()))) for h in atlas_by_order(n)}
    assert len(forms) == len(atlas_by_order(n))


def test_agrees_with_networkx_on_random_pairs():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(1, 9)
        a = random_graph(rng, n, 0.5)
        b = random_graph(rng, n, 0.5)
        if a.edge_count != b.edge_count:
            continue
        assert are_isomorphic(a, b) == nx.is_isomorphic(to_networkx(a), to_networkx(b))


@pytest.mark.parametrize(
    "g",
    [
        Graph.empty(64),
        Graph.complete(40),
        complete_multipartite([8, 8, 8, 8]),
        tensor_product(Graph.complete(4), Graph.complete(4)),
        tensor_product(Graph.cycle(5), Graph.cycle(7)),
    ],
    ids=["E64", "K40", "K8888", "K4xK4", "C5xC7"],
)
def test_highly_symmetric_graphs(g):
    perm = list(range(g.n))
    random.Random(g.n).shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(max_n=11))
def test_key_round_trip(g):
    key = graph_key(g)
    assert graph_from_key(key, g.n) == canonical_form(g)
