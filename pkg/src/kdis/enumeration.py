"""Exact enumeration and counting of k-dominating independent sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from kdis import kernels
from kdis.errors import DomainError
from kdis.graph import Graph, VertexSet, iter_bits

SCAN_LIMIT = 20


@dataclass(frozen=True)
class KDisList:
    """All k-DISes of one graph, sorted by bitmask value."""

    k: int
    sets: tuple[VertexSet, ...]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.sets)

    def __contains__(self, s: object) -> bool:
        return s in self.sets

    @property
    def count(self) -> int:
        return len(self.sets)


def is_independent(g: Graph, s: int) -> bool:
    return all(not g.adj[v] & s for v in iter_bits(s))


def is_k_dominating_independent(g: Graph, s: int, k: int) -> bool:
    """True iff ``s`` is independent and each vertex outside it has >= k neighbours in it."""
    if s >> g.n:
        return False
    if not is_independent(g, s):
        return False
    return all((g.adj[v] & s).bit_count() >= k for v in range(g.n) if not s >> v & 1)


def degeneracy_order(g: Graph) -> list[int]:
    """Repeatedly remove a minimum-degree vertex (ties by label)."""
    alive = g.vertex_mask
    order = []
    while alive:
        v = min(iter_bits(alive), key=lambda u: ((g.adj[u] & alive).bit_count(), u))
        order.append(v)
        alive &= ~(1 << v)
    return order


def _check_k(k: int) -> None:
    if k < 1:
        raise DomainError("k must be a positive integer")


def _strategy(g: Graph, strategy: str) -> str:
    if strategy == "auto":
        return "scan" if g.n <= SCAN_LIMIT else "branch"
    if strategy not in ("scan", "branch"):
        raise ValueError(f"unknown strategy {strategy!r}")
    return strategy


def enumerate_kdis(g: Graph, k: int, strategy: str = "auto") -> KDisList:
    """Every k-DIS of ``g``.

    ``scan`` tests all 2^n subsets; ``branch`` does include/exclude branching
    in degeneracy order with a domination feasibility cut. ``auto`` scans up
    to 20 vertices.
    """
    _check_k(k)
    impl = kernels.active
    if _strategy(g, strategy) == "scan":
        masks = impl.enum_scan(g.adj, g.n, k)
    else:
        masks = impl.enum_branch(g.adj, g.n, k, degeneracy_order(g))
    return KDisList(k, tuple(VertexSet(s) for s in masks))


def count_mi(g: Graph, k: int, strategy: str = "auto") -> int:
    """mi_k(G), the number of k-DISes of ``g``."""
    _check_k(k)
    impl = kernels.active
    if _strategy(g, strategy) == "scan":
        return impl.count_scan(g.adj, g.n, k)
    return impl.count_branch(g.adj, g.n, k, degeneracy_order(g))
