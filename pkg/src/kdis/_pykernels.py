"""Pure-Python kernels. Same interface and results as the compiled ``_ckernels``.

Graphs are passed as a sequence of neighbourhood bitmasks ``rows`` plus the
vertex count. Canonical keys pack the upper triangle of a graph on at most
11 vertices into one integer: pair ``(i, j)`` with ``i < j`` lives at bit
``j*(j-1)//2 + i``, so the key of a graph restricted to its first ``m``
vertices is its low ``m*(m-1)//2`` bits.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

MAX_KEY_VERTICES = 11


def rows_to_key(rows: Sequence[int], n: int) -> int:
    key = 0
    for j in range(1, n):
        base = j * (j - 1) // 2
        r = rows[j] & ((1 << j) - 1)
        key |= r << base
    return key


def key_to_rows(key: int, n: int) -> list[int]:
    rows = [0] * n
    for j in range(1, n):
        r = key >> (j * (j - 1) // 2) & ((1 << j) - 1)
        rows[j] |= r
        i = 0
        while r:
            if r & 1:
                rows[i] |= 1 << j
            r >>= 1
            i += 1
    return rows


# ---------------------------------------------------------------- counting

def _dominated(rows: Sequence[int], n: int, k: int, s: int) -> bool:
    out = ((1 << n) - 1) & ~s
    while out:
        low = out & -out
        if (rows[low.bit_length() - 1] & s).bit_count() < k:
            return False
        out ^= low
    return True


def _independent(rows: Sequence[int], s: int) -> bool:
    t = s
    while t:
        low = t & -t
        if rows[low.bit_length() - 1] & s:
            return False
        t ^= low
    return True


def enum_scan(rows: Sequence[int], n: int, k: int) -> list[int]:
    """All k-DIS masks by scanning every subset in ascending order."""
    out = []
    for s in range(1 << n):
        if _independent(rows, s) and _dominated(rows, n, k, s):
            out.append(s)
    return out


def count_scan(rows: Sequence[int], n: int, k: int) -> int:
    return len(enum_scan(rows, n, k))


def _branch(rows: Sequence[int], n: int, k: int, order: Sequence[int], emit) -> None:
    # suffix[p] = mask of order[p:], the still undecided vertices at depth p
    suffix = [0] * (n + 1)
    for p in range(n - 1, -1, -1):
        suffix[p] = suffix[p + 1] | 1 << order[p]

    def feasible(p: int, chosen: int, blocked: int) -> bool:
        avail = suffix[p] & ~blocked
        outside = ((1 << n) - 1) & ~chosen & ~avail
        while outside:
            low = outside & -outside
            r = rows[low.bit_length() - 1]
            if (r & chosen).bit_count() + (r & avail).bit_count() < k:
                return False
            outside ^= low
        return True

    def rec(p: int, chosen: int, blocked: int) -> None:
        if not feasible(p, chosen, blocked):
            return
        if p == n:
            emit(chosen)
            return
        v = order[p]
        bit = 1 << v
        if not blocked & bit:
            rec(p + 1, chosen | bit, blocked | bit | rows[v])
        rec(p + 1, chosen, blocked | bit)

    rec(0, 0, 0)


def enum_branch(rows: Sequence[int], n: int, k: int, order: Sequence[int]) -> list[int]:
    """All k-DIS masks by include/exclude branching along ``order``, sorted."""
    out: list[int] = []
    _branch(rows, n, k, order, out.append)
    out.sort()
    return out


def count_branch(rows: Sequence[int], n: int, k: int, order: Sequence[int]) -> int:
    box = [0]

    def bump(_s: int) -> None:
        box[0] += 1

    _branch(rows, n, k, order, bump)
    return box[0]


# ---------------------------------------------------------- canonical form

def _refine(rows: Sequence[int], n: int, colors: list[int], ncolors: int) -> tuple[list[int], int]:
    """Coarsest equitable refinement of an ordered colouring."""
    while True:
        cells = [0] * ncolors
        for v in range(n):
            cells[colors[v]] |= 1 << v
        sigs = [(colors[v], *[(rows[v] & c).bit_count() for c in cells]) for v in range(n)]
        ranked = sorted(set(sigs))
        if len(ranked) == ncolors:
            return colors, ncolors
        rank = {s: i for i, s in enumerate(ranked)}
        colors = [rank[s] for s in sigs]
        ncolors = len(ranked)


def _individualize(colors: list[int], x: int) -> list[int]:
    cx = colors[x]
    return [c if c < cx or v == x else c + 1 for v, c in enumerate(colors)]


def _orbit_min(gens: list[list[int]], n: int, fixed: Sequence[int]) -> list[int]:
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        if any(g[p] != p for p in fixed):
            continue
        for a in range(n):
            ra, rb = find(a), find(g[a])
            if ra != rb:
                if ra < rb:
                    parent[rb] = ra
                else:
                    parent[ra] = rb
    return [find(a) for a in range(n)]


class _Canon:
    def __init__(self, rows: Sequence[int], n: int):
        self.rows = rows
        self.n = n
        self.first = None  # (cert, lab, prefix)
        self.best = None
        self.gens: list[list[int]] = []

    def cert(self, lab: list[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        out = []
        for v in lab:
            r = self.rows[v]
            c = 0
            while r:
                low = r & -r
                c |= 1 << pos[low.bit_length() - 1]
                r ^= low
            out.append(c)
        return tuple(out)

    def leaf(self, colors: list[int], prefix: list[int]) -> int | None:
        lab = [0] * self.n
        for v, c in enumerate(colors):
            lab[c] = v
        cert = self.cert(lab)
        if self.first is None:
            self.first = self.best = (cert, lab, list(prefix))
            return None
        for ref in (self.first, self.best):
            if cert == ref[0]:
                gen = [0] * self.n
                for i in range(self.n):
                    gen[ref[1][i]] = lab[i]
                self.gens.append(gen)
                common = 0
                for a, b in zip(prefix, ref[2]):
                    if a != b:
                        break
                    common += 1
                return common
        if cert > self.best[0]:
            self.best = (cert, lab, list(prefix))
        return None

    def search(self, colors: list[int], ncolors: int, prefix: list[int]) -> int | None:
        colors, ncolors = _refine(self.rows, self.n, colors, ncolors)
        if ncolors == self.n:
            return self.leaf(colors, prefix)
        sizes = [0] * ncolors
        for c in colors:
            sizes[c] += 1
        target = next(c for c in range(ncolors) if sizes[c] > 1)
        cell = [v for v in range(self.n) if colors[v] == target]
        level = len(prefix)
        seen_gens = -1
        orbit = None
        for x in cell:
            if len(self.gens) != seen_gens:
                orbit = _orbit_min(self.gens, self.n, prefix)
                seen_gens = len(self.gens)
            if orbit[x] != x:
                continue
            prefix.append(x)
            r = self.search(_individualize(colors, x), ncolors + 1, prefix)
            prefix.pop()
            if r is not None and r < level:
                return r
        return None


def canon(rows: Sequence[int], n: int) -> tuple[list[int], list[int]]:
    """Canonical form of a graph.

    Returns ``(crows, lab)``: ``crows`` are the neighbourhood masks of the
    canonically relabelled graph and ``lab[i]`` is the original vertex placed
    at canonical position ``i``. The canonical graph maximises the tuple of
    relabelled rows over the individualisation-refinement search tree, so
    isomorphic inputs give identical ``crows``.
    """
    if n == 0:
        return [], []
    c = _Canon(rows, n)
    c.search([0] * n, 1, [])
    cert, lab, _ = c.best
    return list(cert), list(lab)


def canon_key(rows: Sequence[int], n: int) -> int:
    crows, _ = canon(rows, n)
    return rows_to_key(crows, n)


# ------------------------------------------------------------- generation

def children(parent_key: int, m: int, triangle_free: bool) -> list[int]:
    """Canonical keys of the accepted one-vertex extensions of a parent.

    The parent is a canonical graph on ``m`` vertices. A child built by adding
    vertex ``m`` adjacent to ``S`` is accepted when deleting the vertex that
    sits last in the child's canonical order gives back the parent's class;
    siblings are then deduplicated by key. With ``triangle_free`` only
    independent ``S`` are tried.
    """
    n = m + 1
    prow = key_to_rows(parent_key, m)
    found = set()
    for s in range(1 << m):
        if triangle_free and not _independent(prow, s):
            continue
        rows = [prow[i] | ((s >> i & 1) << m) for i in range(m)]
        rows.append(s)
        crows, lab = canon(rows, n)
        w = lab[n - 1]
        if w != m:
            if rows[w].bit_count() != s.bit_count():
                continue
            keep = [v for v in range(n) if v != w]
            sub = _induced(rows, keep)
            if canon_key(sub, m) != parent_key:
                continue
        found.add(rows_to_key(crows, n))
    return sorted(found)


def _induced(rows: Sequence[int], keep: Sequence[int]) -> list[int]:
    index = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        r = rows[v]
        c = 0
        for u, i in index.items():
            if r >> u & 1:
                c |= 1 << i
        out.append(c)
    return out


def score_keys(keys: Iterable[int], n: int, k: int) -> np.ndarray:
    return np.array([count_scan(key_to_rows(int(key), n), n, k) for key in keys], dtype=np.int64)


def connected_flags(keys: Iterable[int], n: int) -> np.ndarray:
    out = []
    full = (1 << n) - 1
    for key in keys:
        rows = key_to_rows(int(key), n)
        if n == 0:
            out.append(True)
            continue
        comp = frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= rows[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp == full)
    return np.array(out, dtype=np.bool_)


def children_many(parents, m: int, triangle_free: bool) -> np.ndarray:
    out: list[int] = []
    for p in parents:
        out.extend(children(int(p), m, triangle_free))
    arr = np.array(out, dtype=np.uint64)
    arr.sort()
    return arr
