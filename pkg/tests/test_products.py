import random

import pytest

from helpers import random_graph
from kdis.canon import are_isomorphic
from kdis.enumeration import enumerate_kdis, is_k_dominating_independent
from kdis.errors import ContractError, DomainError, GraphSizeError
from kdis.graph import Graph, VertexSet, complete_multipartite, disjoint_copies
from kdis.products import lexicographic_product, lift_kdis, paper_cartesian_product, tensor_product
from kdis.search import generate_graphs
from oracles import edge_set


def _lex_by_definition(g, h):
    m = h.n
    return {
        frozenset((u * m + v, x * m + y))
        for u in range(g.n)
        for v in range(m)
        for x in range(g.n)
        for y in range(m)
        if (u, v) != (x, y) and (g.has_edge(u, x) or (u == x and h.has_edge(v, y)))
    }


def _tensor_by_definition(g, h):
    m = h.n
    return {
        frozenset((u * m + v, x * m + y))
        for u in range(g.n)
        for v in range(m)
        for x in range(g.n)
        for y in range(m)
        if g.has_edge(u, x) and h.has_edge(v, y)
    }


def test_products_match_definitions_on_random_pairs():
    rng = random.Random(11)
    for _ in range(60):
        g = random_graph(rng, rng.randint(0, 5))
        h = random_graph(rng, rng.randint(0, 5))
        lex = lexicographic_product(g, h)
        ten = paper_cartesian_product(g, h)
        assert lex.n == ten.n == g.n * h.n
        assert edge_set(lex) == _lex_by_definition(g, h)
        assert edge_set(ten) == _tensor_by_definition(g, h)
        assert ten.edge_count == 2 * g.edge_count * h.edge_count


def test_tensor_commutes_under_coordinate_swap():
    rng = random.Random(12)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 5))
        h = random_graph(rng, rng.randint(1, 5))
        swap = [v * g.n + u for u in range(g.n) for v in range(h.n)]
        assert paper_cartesian_product(g, h).relabel(swap) == paper_cartesian_product(h, g)


def test_lex_examples():
    k4 = Graph.complete(4)
    assert lexicographic_product(k4, Graph.empty(1)) == k4
    two = lexicographic_product(Graph.empty(2), Graph.complete(3))
    assert two == disjoint_copies(Graph.complete(3), 2)
    blow = lexicographic_product(Graph.complete(3), Graph.empty(2))
    assert (blow.n, blow.edge_count) == (6, 12)
    assert are_isomorphic(blow, complete_multipartite([2, 2, 2]))


def test_tensor_examples():
    g = tensor_product(Graph.complete(3), Graph.complete(3))
    assert (g.n, g.edge_count) == (9, 18)
    assert all(a.bit_count() == 4 for a in g.adj)
    m = paper_cartesian_product(Graph.complete(2), Graph.complete(2))
    assert sorted(m.edges()) == [(0, 3), (1, 2)]
    assert paper_cartesian_product(Graph.cycle(5), Graph.empty(3)) == Graph.empty(15)


def test_capacity():
    with pytest.raises(GraphSizeError):
        lexicographic_product(Graph.complete(9), Graph.empty(8))


def test_lift_examples():
    g = paper_cartesian_product(Graph.complete(3), Graph.complete(3))
    row = VertexSet.of([0, 1, 2])
    lifted = lift_kdis(g, row, 2)
    assert len(lifted) == 6
    assert is_k_dominating_independent(lexicographic_product(g, Graph.empty(2)), lifted, 4)

    k22 = complete_multipartite([2, 2])
    side = lift_kdis(k22, VertexSet.of([0, 1]), 3)
    assert len(side) == 6
    assert is_k_dominating_independent(lexicographic_product(k22, Graph.empty(3)), side, 6)
    assert lift_kdis(k22, VertexSet.of([2, 3]), 1) == VertexSet.of([2, 3])


def test_lift_contract():
    with pytest.raises(ContractError):
        lift_kdis(Graph.complete(3), VertexSet.of([0, 1]), 2)
    with pytest.raises(DomainError):
        lift_kdis(Graph.complete(3), VertexSet.of([0]), 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_lifting_law(n):
    for g in generate_graphs(n):
        for k in (1, 2):
            for s in enumerate_kdis(g, k):
                for l in (1, 2, 3):
                    blow = lexicographic_product(g, Graph.empty(l))
                    assert is_k_dominating_independent(blow, lift_kdis(g, s, l), k * l)


def test_blow_up_of_k3xk3_has_six_4_dis():
    g = paper_cartesian_product(Graph.complete(3), Graph.complete(3))
    blow = lexicographic_product(g, Graph.empty(2))
    found = enumerate_kdis(blow, 4)
    assert blow.n == 18 and len(found) == 6
    assert set(found) == {lift_kdis(g, s, 2) for s in enumerate_kdis(g, 2)}
