"""Canonical labelling and isomorphism testing."""

from __future__ import annotations

from kdis import kernels
from kdis.graph import Graph


def canonical_labeling(g: Graph) -> list[int]:
    """``lab[i]`` is the vertex of ``g`` that takes canonical position ``i``."""
    return kernels.active.canon(g.adj, g.n)[1]


def canonical_form(g: Graph) -> Graph:
    """The canonical representative of the isomorphism class of ``g``."""
    crows, _ = kernels.active.canon(g.adj, g.n)
    return Graph(g.n, tuple(crows))


def certificate(g: Graph) -> tuple[int, ...]:
    return (g.n, *kernels.active.canon(g.adj, g.n)[0])


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count == h.edge_count and certificate(g) == certificate(h)


def graph_key(g: Graph) -> int:
    """Packed canonical upper triangle; graphs on at most 11 vertices."""
    return kernels.active.canon_key(g.adj, g.n)


def graph_from_key(key: int, n: int) -> Graph:
    return Graph(n, tuple(kernels.active.key_to_rows(int(key), n)))
