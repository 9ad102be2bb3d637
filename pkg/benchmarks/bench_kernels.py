"""Compare the compiled and pure-Python kernels on the hot paths.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from kdis import _pykernels, kernels
from kdis.enumeration import degeneracy_order
from kdis.graph import Graph


def _graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def cases(rng: random.Random):
    scan_graphs = [_graph(rng, 16, 0.3) for _ in range(5)]
    branch_graphs = [_graph(rng, 36, 0.2) for _ in range(3)]
    canon_graphs = [_graph(rng, 14, 0.5) for _ in range(50)]
    parents = np.array(sorted({_pykernels.canon_key(_graph(rng, 6, 0.5).adj, 6) for _ in range(20)}), dtype=np.uint64)
    keys7 = _pykernels.children_many(parents, 6, False)

    def scan(impl):
        return lambda: [impl.count_scan(g.adj, g.n, 2) for g in scan_graphs]

    def branch(impl):
        orders = [degeneracy_order(g) for g in branch_graphs]
        return lambda: [impl.count_branch(g.adj, g.n, 1, o) for g, o in zip(branch_graphs, orders)]

    def canon(impl):
        return lambda: [impl.canon(g.adj, g.n) for g in canon_graphs]

    def generate(impl):
        return lambda: impl.children_many(parents, 6, False)

    def score(impl):
        return lambda: impl.score_keys(keys7, 7, 1)

    return [
        ("count_scan  5 x n=16, k=2", scan),
        ("count_branch 3 x n=36, k=1", branch),
        ("canon      50 x n=14", canon),
        (f"children   {len(parents)} parents, m=6", generate),
        (f"score_keys {len(keys7)} keys, n=7", score),
    ]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    compiled = kernels.compiled_kernels
    if compiled is None:
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")
    print(f"{'kernel':<34}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for label, make in cases(random.Random(0)):
        tp = _time(make(_pykernels), args.repeat)
        tc = _time(make(compiled), args.repeat)
        print(f"{label:<34}{tp:>12.4f}{tc:>12.5f}{tp / tc:>9.0f}x")


if __name__ == "__main__":
    main()
