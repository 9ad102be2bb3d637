"""Named verification suites. Each returns a list of deterministic :class:`Check` rows."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable

import mpmath
import numpy as np

from kdis import bounds
from kdis.canon import are_isomorphic, graph_from_key
from kdis.enumeration import count_mi, enumerate_kdis, is_k_dominating_independent
from kdis.graph import (
    FamilyFilter,
    Graph,
    complete_multipartite,
    disjoint_copies,
    disjoint_union,
    min_degree,
)
from kdis.graph6 import graph6_decode, graph6_encode
from kdis.products import lexicographic_product, lift_kdis, tensor_product
from kdis.search import compute_m, compute_mi_table, family_keys, generate_graphs
from kdis.twins import check_recurrence_bnd, same_component_same_kdis_check


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class VerifyOptions:
    n_max: int = 9
    n_budget: int = 9
    k_max: int = 10**6
    jobs: int = 1
    random_graphs: int = 500
    seed: int = 20170601


def _row(suite: str, name: str, passed: bool, detail: str) -> Check:
    return Check(suite, name, bool(passed), detail)


def random_graph(rng: np.random.Generator, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = float(rng.uniform(0.15, 0.85))
    edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < p]
    return Graph.from_edges(n, edges)


def _isomorphic_to_any(g6s: list[str], target: Graph) -> bool:
    return any(are_isomorphic(graph6_decode(s), target) for s in g6s)


# ------------------------------------------------------------------ suites

def suite_moon_moser(opts: VerifyOptions) -> list[Check]:
    rows = []
    reports = {}
    for n in range(1, opts.n_max + 1):
        rep = compute_mi_table(n, 1, FamilyFilter.ALL, opts.jobs)
        reports[n] = rep
        want = bounds.moon_moser(n)
        rows.append(_row("moon-moser", f"mi_1({n})", rep.optimum == want, f"search={rep.optimum} formula={want}"))
    triangle = Graph.complete(3)
    for n in (6, 9):
        if n in reports:
            rep = reports[n]
            ok = rep.witness_count == 1 and are_isomorphic(graph6_decode(rep.witnesses[0]), disjoint_copies(triangle, n // 3))
            rows.append(_row("moon-moser", f"witness({n})=disjoint triangles", ok, f"witnesses={rep.witnesses}"))
    if 7 in reports:
        rep = reports[7]
        expected = [
            disjoint_union(triangle, Graph.complete(4)),
            disjoint_union(triangle, disjoint_copies(Graph.complete(2), 2)),
        ]
        got = [graph6_decode(s) for s in rep.witnesses]
        ok = len(got) == 2 and all(any(are_isomorphic(a, b) for b in got) for a in expected)
        rows.append(_row("moon-moser", "witness(7)={K3+K4, K3+2K2}", ok, f"witnesses={rep.witnesses}"))
    return rows


def suite_trees(opts: VerifyOptions) -> list[Check]:
    rows = []
    for n in range(2, max(opts.n_max, 10) + 1):
        rep = compute_mi_table(n, 1, FamilyFilter.TREE)
        want = bounds.tree_formula(n)
        rows.append(_row("trees", f"mi_1({n}, trees)", rep.optimum == want, f"search={rep.optimum} formula={want} trees={rep.graphs_examined}"))
    return rows


def suite_triangle_free(opts: VerifyOptions) -> list[Check]:
    rows = []
    for n in range(4, opts.n_max + 1):
        rep = compute_mi_table(n, 1, FamilyFilter.TRIANGLE_FREE, opts.jobs)
        want = bounds.triangle_free_formula(n)
        rows.append(_row("triangle-free", f"mi_1({n}, triangle-free)", rep.optimum == want, f"search={rep.optimum} formula={want} graphs={rep.graphs_examined}"))
    return rows


def suite_connected(opts: VerifyOptions) -> list[Check]:
    """Exact connected optima against the formula as printed; disagreements are reported, not failed."""
    rows = []
    for n in range(4, opts.n_max + 1):
        rep = compute_mi_table(n, 1, FamilyFilter.CONNECTED, opts.jobs)
        printed = bounds.connected_formula_printed(n)
        agrees = printed.integral and printed.value == rep.optimum
        detail = f"search={rep.optimum} printed={printed.value} integral={printed.integral} agrees={agrees}"
        if n % 3 == 0:
            rows.append(_row("connected", f"mi_1({n}, connected) matches printed", agrees, detail))
        elif n % 3 == 1:
            rows.append(_row("connected", f"mi_1({n}, connected) printed value flagged non-integral", not printed.integral, detail))
        else:
            rows.append(_row("connected", f"mi_1({n}, connected) reported", True, detail))
    return rows


def k33() -> Graph:
    return tensor_product(Graph.complete(3), Graph.complete(3))


def suite_m_values(opts: VerifyOptions) -> list[Check]:
    rows = []
    cases = [(1, 2, 2), (1, 3, 3), (2, 2, 4), (2, 3, 6), (2, 4, 8), (2, 6, 9)]
    for k, t, want in cases:
        if want > opts.n_budget:
            rows.append(_row("m-values", f"m({k},{t})", False, f"budget {opts.n_budget} below expected {want}"))
            continue
        res = compute_m(k, t, opts.n_budget, opts.jobs)
        ok = res.certified and res.m_value == want
        rows.append(_row("m-values", f"m({k},{t})={want}", ok, f"m={res.m_value} status={res.status} optima={res.optima}"))
        if (k, t) == (2, 6) and res.certified:
            rows.append(_row("m-values", "m(2,6) witnesses contain K3xK3", _isomorphic_to_any(res.witnesses, k33()), f"witnesses={res.witnesses}"))
        if (k, t) == (2, 2) and res.certified:
            rows.append(_row("m-values", "m(2,2) witnesses contain K_{2,2}", _isomorphic_to_any(res.witnesses, complete_multipartite([2, 2])), f"witnesses={res.witnesses}"))
    for k in range(1, 6):
        two = count_mi(complete_multipartite([k, k]), k)
        three = count_mi(complete_multipartite([k, k, k]), k)
        rows.append(_row("m-values", f"mi_{k}(K_{{{k},{k}}})=2 and mi_{k}(K_{{{k},{k},{k}}})=3", two == 2 and three == 3, f"counts={two},{three}"))
    return rows


def suite_products(opts: VerifyOptions) -> list[Check]:
    rows = []
    g = k33()
    sets = enumerate_kdis(g, 2).sets
    rows.append(_row("products", "K3xK3 has 6 2-DISes", len(sets) == 6 and g.edge_count == 18, f"sets={[s.vertices() for s in sets]} edges={g.edge_count}"))
    blow = lexicographic_product(g, Graph.empty(2))
    row0 = sets[0]
    lifted = lift_kdis(g, row0, 2)
    four = enumerate_kdis(blow, 4).sets
    lifted_all = all(is_k_dominating_independent(blow, lift_kdis(g, s, 2), 4) for s in sets)
    rows.append(_row(
        "products",
        "K3xK3 . E_2 has 6 4-DISes on 18 vertices",
        blow.n == 18 and len(four) == 6 and lifted_all and lifted in four,
        f"n={blow.n} count={len(four)} lifted_valid={lifted_all}",
    ))
    rows.append(_row(
        "products",
        "K3 . E_2 is K_{2,2,2}",
        are_isomorphic(lexicographic_product(Graph.complete(3), Graph.empty(2)), complete_multipartite([2, 2, 2])),
        "",
    ))
    failures = 0
    tried = 0
    for n in range(1, 7):
        for h in generate_graphs(n):
            for k in (1, 2):
                for s in enumerate_kdis(h, k):
                    for l in (1, 2, 3):
                        tried += 1
                        if not is_k_dominating_independent(lexicographic_product(h, Graph.empty(l)), lift_kdis(h, s, l), k * l):
                            failures += 1
    rows.append(_row("products", "lifting law on all graphs n<=6, k in {1,2}, l in {1,2,3}", failures == 0, f"lifts={tried} failures={failures}"))
    rng = np.random.default_rng(opts.seed)
    bad = 0
    for _ in range(50):
        a = random_graph(rng, int(rng.integers(1, 6)))
        b = random_graph(rng, int(rng.integers(1, 6)))
        p = tensor_product(a, b)
        if p.edge_count != 2 * a.edge_count * b.edge_count:
            bad += 1
    rows.append(_row("products", "|E(GxH)| = 2|E(G)||E(H)| on 50 random pairs", bad == 0, f"failures={bad}"))
    return rows


def _graphs_up_to(n_max: int):
    for n in range(1, n_max + 1):
        yield from generate_graphs(n)


def suite_twins(opts: VerifyOptions) -> list[Check]:
    rows = []
    for k in (2, 3):
        examined = failures = 0
        for g in _graphs_up_to(7):
            kd = enumerate_kdis(g, k).sets
            for v in range(g.n):
                examined += 1
                if not same_component_same_kdis_check(g, v, k, kd):
                    failures += 1
        rows.append(_row("twins", f"all-or-nothing membership, all graphs n<=7, k={k}", failures == 0, f"vertex checks={examined} failures={failures}"))
    rng = np.random.default_rng(opts.seed + 1)
    examined = failures = 0
    for _ in range(opts.random_graphs):
        n = int(rng.integers(2, 10))
        k = int(rng.integers(2, 4))
        g = random_graph(rng, n)
        kd = enumerate_kdis(g, k).sets
        for v in range(n):
            examined += 1
            if not same_component_same_kdis_check(g, v, k, kd):
                failures += 1
    rows.append(_row("twins", f"all-or-nothing membership, {opts.random_graphs} random graphs n<=9", failures == 0, f"vertex checks={examined} failures={failures}"))
    return rows


def exact_mi_table(n_max: int, k: int, jobs: int = 1) -> dict[int, int]:
    table = {0: 1}
    for n in range(1, n_max + 1):
        table[n] = compute_mi_table(n, k, FamilyFilter.ALL, jobs).optimum
    return table


def suite_recurrence(opts: VerifyOptions) -> list[Check]:
    k = 2
    table = exact_mi_table(6, k, opts.jobs)
    examined = failures = 0
    for g in _graphs_up_to(7):
        if g.n < 2 or min_degree(g) < k:
            continue
        count = count_mi(g, k)
        delta = min_degree(g)
        for v in range(g.n):
            if g.adj[v].bit_count() != delta:
                continue
            examined += 1
            if not check_recurrence_bnd(g, v, k, table, count):
                failures += 1
    return [_row("recurrence", "pair-counting recurrence, all graphs n<=7 with min degree>=2, k=2", failures == 0 and examined > 0, f"table={table} vertex checks={examined} failures={failures}")]


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def suite_sweeps(opts: VerifyOptions) -> list[Check]:
    rows = []
    for name, lo, hi in (("f0", 3, 1000), ("f2", 3, opts.k_max)):
        rep = bounds.sweep_positivity(name, lo, hi, jobs=opts.jobs)
        detail = (
            f"min={_fmt(rep.min_value)} argmin={rep.argmin_k} nonpositive={rep.nonpositive_count}"
            f" range=[{rep.first_nonpositive_k},{rep.last_nonpositive_k}]"
        )
        rows.append(_row("sweeps", f"{name} > 0 for k in [{lo},{hi}]", rep.all_positive, detail))
    for name, samples in (("f1", (1001, 2000, 10**4, 10**5, 10**6, 10**7, 10**9)), ("f3", (10**6 + 1, 2 * 10**6, 10**7, 10**9))):
        vals = [(k, bounds.FUNCTIONS[name](float(k))) for k in samples]
        rows.append(_row("sweeps", f"{name} > 0 at sampled k", all(v > bounds.POSITIVITY_SLACK for _, v in vals), " ".join(f"{k}:{_fmt(v)}" for k, v in vals)))
    hi = min(opts.k_max, 1703)
    worst = min(bounds.pair_bound_min(k) + (k,) for k in range(3, hi + 1))
    rows.append(_row(
        "sweeps",
        f"unrelaxed pair-counting bound > 0 for k in [3,{hi}]",
        worst[0] > bounds.POSITIVITY_SLACK,
        f"min={_fmt(worst[0])} at k={worst[3]} delta={worst[1]} s={worst[2]}",
    ))
    return rows


def suite_rates(opts: VerifyOptions) -> list[Check]:
    rows = []
    with mpmath.workdps(40):
        exact = float(mpmath.root(36, 9))
    rate = bounds.construction_rate(2, 6, 9)
    rows.append(_row("rates", "construction_rate(2,6,9) = 36^(1/9)", abs(rate - exact) <= 1e-9, f"rate={_fmt(rate)} exact={_fmt(exact)}"))
    sqrt2 = bounds.construction_rate(3, 2, 6)
    rows.append(_row("rates", "construction_rate(k,2,2k) = sqrt(2)", abs(sqrt2 - math.sqrt(2)) <= 1e-12, f"rate={_fmt(sqrt2)}"))
    rows.append(_row("rates", "36^(1/9) > sqrt(2)", rate > sqrt2, ""))
    ks = np.arange(3, opts.k_max + 1, dtype=np.float64)
    ck = bounds.c_of_k(ks)
    rows.append(_row("rates", f"c^k <= 1.9801 for k in [3,{opts.k_max}]", bool(np.all(ck <= 1.9801)), f"max={_fmt(float(ck.max()))} first k with c^k>1.98: {bounds.ck_crossover(k_hi=opts.k_max)}"))
    rows.append(_row("rates", "c^k increasing in k", bool(np.all(np.diff(ck) > 0)), ""))
    rows.append(_row("rates", "2^eps > (1+eps/2)^(1+1/k) at (0.053, 3)", bounds.remark_inequality(0.053, 3), ""))
    grid = np.linspace(0.0, 10.0, 103)
    points = [(float(e), k) for k in range(3, 101) for e in grid]
    bad = [p for p in points if not bounds.appendix_condition(*p)]
    rows.append(_row("rates", "1+eps+1/k <= (2+eps)ln(2+eps) for eps in [0,10], k in [3,100]", not bad, f"points={len(points)} failures={len(bad)}"))
    mono = all(bounds.f_eps_monotone_check(k, [0, 0.05, 0.1, 0.5, 1, 5]) for k in (3, 10, 100, 10**6))
    rows.append(_row("rates", "f(eps) non-increasing on sampled grid", mono, ""))
    return rows


SUITES: dict[str, Callable[[VerifyOptions], list[Check]]] = {
    "moon-moser": suite_moon_moser,
    "trees": suite_trees,
    "triangle-free": suite_triangle_free,
    "connected": suite_connected,
    "m-values": suite_m_values,
    "products": suite_products,
    "twins": suite_twins,
    "recurrence": suite_recurrence,
    "sweeps": suite_sweeps,
    "rates": suite_rates,
}


def run(suite: str, opts: VerifyOptions | None = None) -> list[Check]:
    opts = opts or VerifyOptions()
    if suite == "all":
        return [row for name in SUITES for row in SUITES[name](opts)]
    if suite not in SUITES:
        raise KeyError(suite)
    return SUITES[suite](opts)
