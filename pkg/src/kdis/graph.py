"""Small simple graphs stored as per-vertex neighbourhood bitmasks."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from kdis.errors import DomainError, GraphSizeError

MAX_VERTICES = 64


class VertexSet(int):
    """A subset of ``0..n-1`` encoded as a bitmask.

    Subclasses ``int`` so it mixes freely with raw masks in bit arithmetic.
    """

    __slots__ = ()

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in vertices:
            if not 0 <= v < MAX_VERTICES:
                raise DomainError(f"vertex {v} out of range")
            bits |= 1 << v
        return cls(bits)

    @property
    def bits(self) -> int:
        return int(self)

    def vertices(self) -> list[int]:
        return list(iter_bits(self))

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self)

    def __len__(self) -> int:
        return popcount(self)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self >> v & 1)

    def __repr__(self) -> str:
        return f"VertexSet({self.vertices()})"


def popcount(x: int) -> int:
    return x.bit_count()


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class FamilyFilter(enum.Enum):
    ALL = "all"
    CONNECTED = "connected"
    TRIANGLE_FREE = "triangle-free"
    TREE = "tree"

    def accepts(self, g: "Graph") -> bool:
        if self is FamilyFilter.ALL:
            return True
        if self is FamilyFilter.CONNECTED:
            return is_connected(g)
        if self is FamilyFilter.TRIANGLE_FREE:
            return is_triangle_free(g)
        return is_tree(g)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of the open neighbourhood of ``v``. Instances
    are validated on construction and never mutated afterwards.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphSizeError(f"graph on {self.n} vertices exceeds capacity {MAX_VERTICES}")
        if not isinstance(self.adj, tuple):
            object.__setattr__(self, "adj", tuple(int(a) for a in self.adj))
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise GraphSizeError(f"graph on {n} vertices exceeds capacity {MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise DomainError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in iter_bits(self.adj[v] & ((1 << v) - 1))]

    @property
    def edge_count(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def induced(self, keep: Sequence[int]) -> "Graph":
        """Subgraph induced on ``keep``, relabelled ``keep[i] -> i``."""
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            rows.append(sum(1 << index[u] for u in iter_bits(self.adj[v]) if u in index))
        return Graph(len(keep), tuple(rows))

    def delete_vertices(self, mask: int) -> "Graph":
        return self.induced([v for v in range(self.n) if not mask >> v & 1])

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(self.adj)))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for v, a in enumerate(self.adj):
            rows[perm[v]] = sum(1 << perm[u] for u in iter_bits(a))
        return Graph(self.n, tuple(rows))


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    """K_{a,b,...}; parts occupy consecutive vertex ranges in the given order."""
    if any(s < 1 for s in part_sizes):
        raise DomainError("part sizes must be positive")
    n = sum(part_sizes)
    if n > MAX_VERTICES:
        raise GraphSizeError(f"{n} vertices exceeds capacity {MAX_VERTICES}")
    full = (1 << n) - 1
    rows = []
    start = 0
    for s in part_sizes:
        part = ((1 << s) - 1) << start
        rows.extend([full & ~part] * s)
        start += s
    return Graph(n, tuple(rows))


def degree(g: Graph, v: int) -> int:
    return popcount(g.adj[v])


def neighborhood(g: Graph, v: int) -> VertexSet:
    return VertexSet(g.adj[v])


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise DomainError("minimum degree of the empty graph is undefined")
    return min(popcount(a) for a in g.adj)


def is_triangle_free(g: Graph) -> bool:
    for v in range(g.n):
        for u in iter_bits(g.adj[v] & ~((1 << (v + 1)) - 1)):
            if g.adj[v] & g.adj[u]:
                return False
    return True


def component_masks(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by least vertex."""
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    # the null graph counts as connected
    return len(component_masks(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.edge_count == g.n - 1


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G followed by H, with H's vertices shifted up by ``g.n``."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise GraphSizeError(f"union on {n} vertices exceeds capacity {MAX_VERTICES}")
    return Graph(n, g.adj + tuple(a << g.n for a in h.adj))


def disjoint_copies(g: Graph, copies: int) -> Graph:
    out = Graph.empty(0)
    for _ in range(copies):
        out = disjoint_union(out, g)
    return out
