"""Isomorph-free exhaustive search for mi_k(n), mi_k(n, family) and m(k, t).

Graphs on up to 11 vertices are handled as packed canonical keys (see
``kdis._pykernels``). Level ``n`` of the generation tree is produced from
level ``n - 1`` by canonical augmentation; each level is a sorted uint64
array, so any partition of the work across processes merges to the same
result.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterator

import numpy as np

from kdis import kernels
from kdis.canon import graph_from_key
from kdis.enumeration import count_mi
from kdis.errors import BudgetError, DomainError
from kdis.graph import FamilyFilter, Graph
from kdis.graph6 import graph6_encode

GENERATION_BUDGET = {
    FamilyFilter.ALL: 10,
    FamilyFilter.CONNECTED: 10,
    FamilyFilter.TRIANGLE_FREE: 11,
    FamilyFilter.TREE: 12,
}
WITNESS_LIMIT = 100

_levels: dict[bool, list[np.ndarray]] = {}
_scores: dict[tuple[int, int, FamilyFilter], tuple[np.ndarray, np.ndarray]] = {}


def _check_budget(n: int, family: FamilyFilter) -> None:
    if n < 0:
        raise DomainError("vertex count must be non-negative")
    if n > GENERATION_BUDGET[family]:
        raise BudgetError(f"n={n} exceeds the {family.value} generation budget of {GENERATION_BUDGET[family]}")


def _split(arr: np.ndarray, jobs: int) -> list[np.ndarray]:
    parts = max(1, min(jobs, len(arr)))
    return [np.ascontiguousarray(a) for a in np.array_split(arr, parts)]


def _children_chunk(args: tuple[np.ndarray, int, bool]) -> np.ndarray:
    parents, m, triangle_free = args
    return kernels.active.children_many(parents, m, triangle_free)


def _score_chunk(args: tuple[np.ndarray, int, int]) -> np.ndarray:
    keys, n, k = args
    return kernels.active.score_keys(keys, n, k)


def _map(fn, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


def level_keys(n: int, triangle_free: bool = False, jobs: int = 1) -> np.ndarray:
    """Sorted canonical keys of all graphs (or triangle-free graphs) on ``n`` vertices."""
    family = FamilyFilter.TRIANGLE_FREE if triangle_free else FamilyFilter.ALL
    _check_budget(n, family)
    levels = _levels.setdefault(triangle_free, [np.zeros(1, dtype=np.uint64), np.zeros(1, dtype=np.uint64)])
    while len(levels) <= n:
        m = len(levels) - 1
        tasks = [(chunk, m, triangle_free) for chunk in _split(levels[m], jobs)]
        merged = np.concatenate(_map(_children_chunk, tasks, jobs))
        merged.sort()
        levels.append(merged)
    return levels[n]


def clear_caches() -> None:
    _levels.clear()
    _scores.clear()


def family_keys(n: int, family: FamilyFilter, jobs: int = 1) -> np.ndarray:
    if family is FamilyFilter.TREE:
        raise DomainError("trees are generated by generate_trees")
    _check_budget(n, family)
    keys = level_keys(n, family is FamilyFilter.TRIANGLE_FREE, jobs)
    if family is FamilyFilter.CONNECTED:
        keys = keys[kernels.active.connected_flags(keys, n)]
    return keys


def generate_graphs(n: int, family: FamilyFilter = FamilyFilter.ALL, jobs: int = 1) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices in ``family``, in key order."""
    if family is FamilyFilter.TREE:
        yield from generate_trees(n)
        return
    for key in family_keys(n, family, jobs):
        yield graph_from_key(int(key), n)


# ------------------------------------------------------------------ trees

def _tree_code(g: Graph) -> str:
    """Isomorphism code of a free tree: the smallest AHU string over its centres."""
    if g.n == 1:
        return "()"
    degree = [a.bit_count() for a in g.adj]
    alive = g.vertex_mask
    layer = [v for v in range(g.n) if degree[v] <= 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            alive &= ~(1 << v)
            for u in range(g.n):
                if alive >> u & 1 and g.adj[v] >> u & 1:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    centres = [v for v in range(g.n) if alive >> v & 1]

    def rooted(v: int, parent: int) -> str:
        subs = sorted(rooted(u, v) for u in range(g.n) if g.adj[v] >> u & 1 and u != parent)
        return "(" + "".join(subs) + ")"

    return min(rooted(c, -1) for c in centres)


_trees: dict[int, list[Graph]] = {}


def generate_trees(n: int) -> Iterator[Graph]:
    """One tree per free-tree isomorphism class on ``n`` vertices.

    Built by attaching a leaf to every vertex of every tree on ``n - 1``
    vertices and deduplicating with centre-rooted AHU codes.
    """
    if not 1 <= n <= GENERATION_BUDGET[FamilyFilter.TREE]:
        raise BudgetError(f"trees are generated for 1 <= n <= {GENERATION_BUDGET[FamilyFilter.TREE]}")
    if 1 not in _trees:
        _trees[1] = [Graph.empty(1)]
    for m in range(2, n + 1):
        if m in _trees:
            continue
        seen: dict[str, Graph] = {}
        for t in _trees[m - 1]:
            for v in range(m - 1):
                rows = list(t.adj) + [1 << v]
                rows[v] |= 1 << (m - 1)
                g = Graph(m, tuple(rows))
                seen.setdefault(_tree_code(g), g)
        _trees[m] = [seen[c] for c in sorted(seen)]
    yield from _trees[n]


def labeled_class_keys(n: int) -> np.ndarray:
    """Class keys found by canonicalising every labelled graph on ``n`` vertices.

    Exponential in n(n-1)/2; kept as a cross-check for the augmentation
    generator on small orders.
    """
    if n > 7:
        raise BudgetError("labelled enumeration is limited to 7 vertices")
    impl = kernels.active
    seen = {impl.canon_key(impl.key_to_rows(key, n), n) for key in range(1 << (n * (n - 1) // 2))}
    return np.array(sorted(seen), dtype=np.uint64)


# ----------------------------------------------------------------- search

@dataclass
class SearchReport:
    n: int
    k: int
    family: FamilyFilter
    optimum: int
    witnesses: list[str]
    witness_count: int
    graphs_examined: int
    elapsed: float = field(default=0.0, compare=False)

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        d["family"] = self.family.value
        if not timing:
            del d["elapsed"]
        return d


@dataclass
class MResult:
    k: int
    t: int
    m_value: int | None
    witness: str | None
    status: str
    witnesses: list[str] = field(default_factory=list)
    witness_count: int = 0
    optima: dict[int, int] = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return self.status == "certified"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["optima"] = {str(n): v for n, v in self.optima.items()}
        return d


def scored_family(n: int, k: int, family: FamilyFilter, jobs: int = 1) -> tuple[list[Graph] | np.ndarray, np.ndarray]:
    """Every class in the family with its k-DIS count (keys, or graphs for trees)."""
    if k < 1:
        raise DomainError("k must be a positive integer")
    if family is FamilyFilter.TREE:
        trees = list(generate_trees(n))
        return trees, np.array([count_mi(t, k) for t in trees], dtype=np.int64)
    cache_key = (n, k, family)
    if cache_key not in _scores:
        keys = family_keys(n, family, jobs)
        tasks = [(chunk, n, k) for chunk in _split(keys, jobs)] if len(keys) else []
        counts = np.concatenate(_map(_score_chunk, tasks, jobs)) if tasks else np.zeros(0, dtype=np.int64)
        _scores[cache_key] = (keys, counts)
    return _scores[cache_key]


def _graph6_of(item, n: int) -> str:
    g = item if isinstance(item, Graph) else graph_from_key(int(item), n)
    return graph6_encode(g)


def compute_mi_table(n: int, k: int, family: FamilyFilter = FamilyFilter.ALL, jobs: int = 1) -> SearchReport:
    """Exact max of mi_k over the n-vertex members of ``family``, with all optimal classes."""
    start = time.perf_counter()
    items, counts = scored_family(n, k, family, jobs)
    if len(counts) == 0:
        raise DomainError(f"no {family.value} graphs on {n} vertices")
    optimum = int(counts.max())
    hits = np.flatnonzero(counts == optimum)
    witnesses = [_graph6_of(items[i], n) for i in hits[:WITNESS_LIMIT]]
    return SearchReport(
        n=n,
        k=k,
        family=family,
        optimum=optimum,
        witnesses=witnesses,
        witness_count=len(hits),
        graphs_examined=len(counts),
        elapsed=time.perf_counter() - start,
    )


def compute_m(k: int, t: int, n_budget: int = 9, jobs: int = 1) -> MResult:
    """Smallest n such that some n-vertex graph has at least t k-DISes.

    Every order from 1 upward is searched exhaustively, so a returned value
    is certified minimal. If no order up to ``n_budget`` succeeds the result
    is flagged inconclusive.
    """
    if k < 1 or t < 2:
        raise DomainError("need k >= 1 and t >= 2")
    n_budget = min(n_budget, GENERATION_BUDGET[FamilyFilter.ALL])
    optima: dict[int, int] = {}
    for n in range(1, n_budget + 1):
        items, counts = scored_family(n, k, FamilyFilter.ALL, jobs)
        optima[n] = int(counts.max())
        if optima[n] >= t:
            hits = np.flatnonzero(counts >= t)
            witnesses = [_graph6_of(items[i], n) for i in hits[:WITNESS_LIMIT]]
            return MResult(k, t, n, witnesses[0], "certified", witnesses, len(hits), optima)
    return MResult(k, t, None, None, "inconclusive", [], 0, optima)
