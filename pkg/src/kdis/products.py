"""Lexicographic and tensor products, and the blow-up lifting of k-DISes.

Product vertex ``(u, v)`` is numbered ``u * h.n + v`` (row-major), so results
are deterministic without isomorphism checks.
"""

from __future__ import annotations

from kdis.errors import ContractError, DomainError, GraphSizeError
from kdis.graph import MAX_VERTICES, Graph, VertexSet, iter_bits


def _product_size(g: Graph, h: Graph) -> int:
    n = g.n * h.n
    if n > MAX_VERTICES:
        raise GraphSizeError(f"product on {n} vertices exceeds capacity {MAX_VERTICES}")
    return n


def _blow(mask: int, width: int) -> int:
    """Replace every vertex u of ``mask`` by the block ``u*width .. u*width+width-1``."""
    block = (1 << width) - 1
    out = 0
    for u in iter_bits(mask):
        out |= block << (u * width)
    return out


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    """G·H: (u,v) ~ (x,y) iff u ~ x in G, or u = x and v ~ y in H."""
    _product_size(g, h)
    m = h.n
    rows = []
    for u in range(g.n):
        across = _blow(g.adj[u], m)
        for v in range(m):
            rows.append(across | h.adj[v] << (u * m))
    return Graph(g.n * m, tuple(rows))


def tensor_product(g: Graph, h: Graph) -> Graph:
    """G×H with (u,v) ~ (x,y) iff u ~ x in G and v ~ y in H (the tensor product).

    Also exported as ``paper_cartesian_product``, the name under which the
    construction is sometimes called a cartesian product.
    """
    _product_size(g, h)
    m = h.n
    rows = []
    for u in range(g.n):
        for v in range(m):
            row = 0
            for x in iter_bits(g.adj[u]):
                row |= h.adj[v] << (x * m)
            rows.append(row)
    return Graph(g.n * m, tuple(rows))


paper_cartesian_product = tensor_product


def lift_kdis(g: Graph, independent: int, l: int) -> VertexSet:
    """Blow a set of G up to {(u, v) : u in the set, 0 <= v < l} inside G·E_l.

    A k-DIS of G becomes a (k*l)-DIS of G·E_l. Only independence is checked
    here; domination is the caller's business.
    """
    if l < 1:
        raise DomainError("blow-up factor must be positive")
    if independent >> g.n:
        raise ContractError("set has vertices outside the graph")
    for u in iter_bits(independent):
        if g.adj[u] & independent:
            raise ContractError(f"set is not independent in G (vertex {u})")
    if g.n * l > MAX_VERTICES:
        raise GraphSizeError(f"blow-up on {g.n * l} vertices exceeds capacity {MAX_VERTICES}")
    return VertexSet(_blow(independent, l))
