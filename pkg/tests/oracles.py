"""Independent reference implementations used only by the tests.

Nothing here touches the bitmask kernels: graphs are edge sets over
``range(n)`` and every routine is the most literal version of its definition.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter

import networkx as nx


def edge_set(g) -> set[frozenset]:
    return {frozenset(e) for e in g.edges()}


def neighbours(n: int, edges: set[frozenset]) -> list[set[int]]:
    nb = [set() for _ in range(n)]
    for e in edges:
        a, b = tuple(e)
        nb[a].add(b)
        nb[b].add(a)
    return nb


def naive_kdis(g, k: int) -> list[frozenset]:
    """All k-DISes by checking every subset against the definition."""
    n = g.n
    nb = neighbours(n, edge_set(g))
    out = []
    for r in range(n + 1):
        for sub in itertools.combinations(range(n), r):
            s = set(sub)
            if any(nb[u] & s for u in s):
                continue
            if all(len(nb[u] & s) >= k for u in range(n) if u not in s):
                out.append(frozenset(s))
    return out


def to_networkx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def maximal_independent_sets(g) -> set[frozenset]:
    """Maximal independent sets as maximal cliques of the complement."""
    if g.n == 0:
        return {frozenset()}
    comp = nx.complement(to_networkx(g))
    return {frozenset(c) for c in nx.find_cliques(comp)}


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield [part, *rest]


def graph_class_count(n: int) -> int:
    """Number of unlabelled graphs on n vertices by Burnside's lemma over S_n."""
    total = 0
    for lam in _partitions(n):
        perms = math.factorial(n)
        for length, mult in Counter(lam).items():
            perms //= length**mult * math.factorial(mult)
        cycles = sum(x // 2 for x in lam)
        cycles += sum(math.gcd(a, b) for a, b in itertools.combinations(lam, 2))
        total += perms * 2**cycles
    return total // math.factorial(n)


def prufer_tree_classes(n: int) -> list[nx.Graph]:
    """One representative per isomorphism class among all labelled trees on n vertices."""
    if n == 1:
        g = nx.Graph()
        g.add_node(0)
        return [g]
    if n == 2:
        return [nx.path_graph(2)]
    reps: list[nx.Graph] = []
    for seq in itertools.product(range(n), repeat=n - 2):
        t = nx.from_prufer_sequence(list(seq))
        if not any(nx.is_isomorphic(t, r) for r in reps):
            reps.append(t)
    return reps


def atlas_by_order(n: int) -> list[nx.Graph]:
    """All graphs on n <= 7 vertices from the networkx atlas."""
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
