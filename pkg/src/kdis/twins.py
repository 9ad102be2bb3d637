"""Almost-twin vertices, the twin graph on a neighbourhood, and the pair-counting recurrence."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from kdis.enumeration import enumerate_kdis
from kdis.errors import ContractError, DependencyError, DomainError
from kdis.graph import Graph, VertexSet, component_masks, iter_bits, min_degree


def are_almost_twins(g: Graph, x: int, y: int, k: int) -> bool:
    """Non-adjacent x, y whose neighbourhoods each differ from the other's in fewer than k vertices."""
    if x == y:
        raise DomainError("almost-twin test needs two distinct vertices")
    if g.has_edge(x, y):
        return False
    nx, ny = g.adj[x], g.adj[y]
    return (nx & ~ny).bit_count() < k and (ny & ~nx).bit_count() < k


@dataclass(frozen=True)
class TwinGraph:
    """The twin graph on N(v): ``graph`` vertex ``i`` stands for ``vertices[i]`` of the host."""

    v: int
    vertices: tuple[int, ...]
    graph: Graph

    def host_mask(self, local_mask: int) -> VertexSet:
        return VertexSet(sum(1 << self.vertices[i] for i in iter_bits(local_mask)))


@dataclass(frozen=True)
class TwinProfile:
    v: int
    delta: int
    component_sizes: tuple[int, ...]
    B: float
    components: tuple[VertexSet, ...] = ()

    @property
    def small_total(self) -> int:
        """Total size of the components with at most B vertices."""
        return sum(s for s in self.component_sizes if s <= self.B)


def twin_graph(g: Graph, v: int, k: int) -> TwinGraph:
    verts = tuple(iter_bits(g.adj[v]))
    edges = [
        (i, j)
        for j in range(len(verts))
        for i in range(j)
        if are_almost_twins(g, verts[i], verts[j], k)
    ]
    return TwinGraph(v, verts, Graph.from_edges(len(verts), edges))


def twin_profile(g: Graph, v: int, k: int, beta: float = 0.8) -> TwinProfile:
    tg = twin_graph(g, v, k)
    comps = tuple(tg.host_mask(c) for c in component_masks(tg.graph))
    return TwinProfile(
        v=v,
        delta=len(tg.vertices),
        component_sizes=tuple(len(c) for c in comps),
        B=beta * k,
        components=comps,
    )


def pair_accounting(profile: TwinProfile) -> tuple[int, int, int]:
    """Directly count (all, same-component, cross-component) pairs in N(v)."""
    owner = {}
    for idx, comp in enumerate(profile.components):
        for u in comp:
            owner[u] = idx
    verts = sorted(owner)
    within = cross = 0
    for j in range(len(verts)):
        for i in range(j):
            if owner[verts[i]] == owner[verts[j]]:
                within += 1
            else:
                cross += 1
    return within + cross, within, cross


def same_component_same_kdis_check(g: Graph, v: int, k: int, kdis: Sequence[int] | None = None) -> bool:
    """All-or-nothing membership of every twin-graph component in every k-DIS.

    Also requires that no component spans an edge of ``g``. That second clause
    is only claimed for components whose vertices lie in at least one k-DIS;
    components avoided by every k-DIS are exempt from it.
    """
    if kdis is None:
        kdis = enumerate_kdis(g, k).sets
    profile = twin_profile(g, v, k)
    for comp in profile.components:
        covered = False
        for s in kdis:
            inter = comp & s
            if inter and inter != comp:
                return False
            covered = covered or bool(inter)
        if covered and any(g.adj[u] & comp for u in iter_bits(comp)):
            return False
    return True


def component_spans_edge(g: Graph, profile: TwinProfile) -> bool:
    return any(g.adj[u] & comp for comp in profile.components for u in iter_bits(comp))


def _table_value(mi_table: Mapping[int, int], m: int) -> int:
    if m < 0:
        # no k-DIS can contain the pair in question; see bnd_rhs
        return 0
    try:
        return mi_table[m]
    except KeyError:
        raise DependencyError(f"mi_k table has no entry for order {m}") from None


def bnd_rhs(n: int, profile: TwinProfile, k: int, mi_table: Mapping[int, int]) -> Fraction:
    """Exact right-hand side of the pair-counting recurrence.

    mi(n-d-1) + [sum C(s_i,2) mi(n-d-s_i) + (C(d,2) - sum C(s_i,2)) mi(n-d-k)] / C(k,2)
    where ``d`` is the degree of the profiled vertex. Orders below zero count
    as 0: a component that would need them spans an edge, so no k-DIS holds
    any of its pairs.
    """
    if k < 2:
        raise DomainError("the recurrence needs k >= 2 (C(k,2) would vanish)")
    d = profile.delta
    within = sum(comb(s, 2) for s in profile.component_sizes)
    pairs = Fraction(0)
    for s in profile.component_sizes:
        pairs += comb(s, 2) * _table_value(mi_table, n - d - s)
    pairs += (comb(d, 2) - within) * _table_value(mi_table, n - d - k)
    return _table_value(mi_table, n - d - 1) + pairs / comb(k, 2)


def check_recurrence_bnd(g: Graph, v: int, k: int, mi_table: Mapping[int, int], count: int | None = None) -> bool:
    """Whether mi_k(G) is at most the recurrence bound at a minimum-degree vertex ``v``.

    ``mi_table[m]`` must hold the exact maximum of mi_k over all m-vertex graphs.
    """
    if k < 2:
        raise DomainError("the recurrence needs k >= 2 (C(k,2) would vanish)")
    d = g.adj[v].bit_count()
    if d != min_degree(g):
        raise ContractError(f"vertex {v} does not have minimum degree")
    if d < k:
        raise ContractError(f"minimum degree {d} is below k={k}")
    if count is None:
        count = len(enumerate_kdis(g, k))
    return count <= bnd_rhs(g.n, twin_profile(g, v, k), k, mi_table)
