"""Command-line front end: ``kdis count|verify|search|generate|m|product|sweep``.

Exit codes: 0 success, 1 verification failure, 2 usage, parse or budget error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from kdis import bounds, verify
from kdis.enumeration import enumerate_kdis
from kdis.errors import Graph6Error, KdisError
from kdis.graph import FamilyFilter
from kdis.graph6 import graph6_decode, graph6_encode
from kdis.products import lexicographic_product, tensor_product
from kdis.search import compute_m, compute_mi_table, generate_graphs

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _decode(text: str):
    try:
        return graph6_decode(text)
    except Graph6Error as exc:
        raise UsageError(f"graph6 parse error: {exc}") from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


# ------------------------------------------------------------ subcommands

def cmd_count(args, out) -> int:
    if args.graph6 in (None, "-"):
        lines = [ln.strip() for ln in sys.stdin if ln.strip()]
    else:
        lines = [args.graph6]
    batch = len(lines) != 1 or args.graph6 in (None, "-")
    results = []
    for text in lines:
        g = _decode(text)
        found = enumerate_kdis(g, args.k, args.strategy)
        results.append({"graph6": text, "n": g.n, "k": args.k, "count": len(found), "sets": [s.vertices() for s in found]})
    if args.json:
        for r in results:
            if not args.list:
                del r["sets"]
        print(_dump(results if batch else results[0]), file=out)
        return EXIT_OK
    for r in results:
        print(f"{r['graph6']}\t{r['count']}" if batch else r["count"], file=out)
        if args.list:
            for s in r["sets"]:
                print(" ".join(map(str, s)), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    opts = verify.VerifyOptions(
        n_max=args.n_max,
        n_budget=args.n_budget,
        k_max=args.k_max,
        jobs=args.jobs,
        random_graphs=args.random_graphs,
        seed=args.seed,
    )
    rows = verify.run(args.suite, opts)
    passed = all(r.passed for r in rows)
    if args.json:
        print(_dump({"suite": args.suite, "passed": passed, "checks": [r.to_dict() for r in rows]}), file=out)
    else:
        width = max(len(r.name) for r in rows)
        for r in rows:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.suite:<13} {r.name:<{width}}  {r.detail}", file=out)
        failed = sum(not r.passed for r in rows)
        print(f"{len(rows) - failed}/{len(rows)} checks passed", file=out)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_search(args, out) -> int:
    report = compute_mi_table(args.n, args.k, FamilyFilter(args.family), args.jobs)
    print(_dump(report.to_dict(timing=not args.no_timing)), file=out)
    return EXIT_OK


def cmd_generate(args, out) -> int:
    for g in generate_graphs(args.n, FamilyFilter(args.family), args.jobs):
        print(graph6_encode(g), file=out)
    return EXIT_OK


def cmd_m(args, out) -> int:
    result = compute_m(args.k, args.t, args.n_budget, args.jobs)
    print(_dump(result.to_dict()), file=out)
    return EXIT_OK


def cmd_product(args, out) -> int:
    a, b = _decode(args.a), _decode(args.b)
    op = lexicographic_product if args.kind == "lex" else tensor_product
    print(graph6_encode(op(a, b)), file=out)
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    if args.csv:
        ks, vals = bounds.sweep_values(args.function, args.k_lo, args.k_hi, args.epsilon, args.beta)
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["k", args.function])
        for k, v in zip(ks.tolist(), vals.tolist()):
            writer.writerow([k, repr(v)])
        return EXIT_OK
    report = bounds.sweep_positivity(args.function, args.k_lo, args.k_hi, args.epsilon, args.beta, args.jobs)
    print(_dump(report.to_dict()), file=out)
    return EXIT_OK if report.all_positive else EXIT_FAIL


# ----------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kdis", description="k-dominating independent set workbench")
    sub = p.add_subparsers(dest="command", required=True)
    families = [f.value for f in FamilyFilter]

    c = sub.add_parser("count", help="count the k-DISes of a graph6 graph (stdin when omitted or '-')")
    c.add_argument("graph6", nargs="?")
    c.add_argument("--k", type=_positive, required=True)
    c.add_argument("--list", action="store_true", help="also print every k-DIS")
    c.add_argument("--strategy", choices=["auto", "scan", "branch"], default="auto")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=[*verify.SUITES, "all"])
    v.add_argument("--n-max", type=_positive, default=9)
    v.add_argument("--n-budget", type=_positive, default=9)
    v.add_argument("--k-max", type=int, default=10**6)
    v.add_argument("--jobs", type=_positive, default=1)
    v.add_argument("--random-graphs", type=int, default=500)
    v.add_argument("--seed", type=int, default=verify.VerifyOptions.seed)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="exact max of mi_k over n-vertex graphs in a family")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=_positive, required=True)
    s.add_argument("--family", choices=families, default="all")
    s.add_argument("--jobs", type=_positive, default=1)
    s.add_argument("--no-timing", action="store_true", help="omit the elapsed field")
    s.set_defaults(func=cmd_search)

    gen = sub.add_parser("generate", help="stream one graph6 line per isomorphism class")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--family", choices=families, default="all")
    gen.add_argument("--jobs", type=_positive, default=1)
    gen.set_defaults(func=cmd_generate)

    m = sub.add_parser("m", help="smallest order with at least t k-DISes")
    m.add_argument("--k", type=_positive, required=True)
    m.add_argument("--t", type=int, required=True)
    m.add_argument("--n-budget", type=_positive, default=9)
    m.add_argument("--jobs", type=_positive, default=1)
    m.set_defaults(func=cmd_m)

    pr = sub.add_parser("product", help="lexicographic or tensor product of two graph6 graphs")
    pr.add_argument("kind", choices=["lex", "tensor"])
    pr.add_argument("a")
    pr.add_argument("b")
    pr.set_defaults(func=cmd_product)

    sw = sub.add_parser("sweep", help="positivity sweep of f0..f3 over integer k")
    sw.add_argument("--function", choices=sorted(bounds.FUNCTIONS), default="f0")
    sw.add_argument("--k-lo", type=int, default=3)
    sw.add_argument("--k-hi", type=int, default=1000)
    sw.add_argument("--epsilon", type=float, default=bounds.EPSILON)
    sw.add_argument("--beta", type=float, default=bounds.BETA)
    sw.add_argument("--jobs", type=_positive, default=1)
    sw.add_argument("--csv", action="store_true", help="print per-k values instead of the report")
    sw.set_defaults(func=cmd_sweep)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"kdis: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KdisError as exc:
        print(f"kdis: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
