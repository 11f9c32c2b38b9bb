"""Command-line front end.

Every subcommand prints one JSON document on stdout (or a table with
``--pretty``). Exit status: 0 success, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .cocomp import NotUmbrellaFree, compute_cocomp_ordering, verify_umbrella_free
from .generators import generate, random_weights
from .graph import (
    Graph,
    GraphClass,
    GraphFormatError,
    Ordering,
    parse_graph,
    parse_names,
    parse_ordering,
    parse_vertex_weights,
    serialize_graph,
    serialize_ordering,
)
from .linesquare import is_2k2, line_square
from .mwim import EXPLICIT_L2_LIMIT, ccwmim, deg2_profile
from .mwis import ccwmis
from .oracle import brute_limit, brute_mim, brute_mwis, mim_via_explicit_l2
from .patterns import CLASS_PATTERNS, PATTERNS, find_pattern, verify_class_ordering
from .rules import bullet_order, star_order

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
REL_TOL = 1e-9


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text + "\n", encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def _load_graph(args) -> Graph:
    if not args.graph:
        raise InputError("--graph is required")
    g = parse_graph(_read(args.graph))
    weights_path = getattr(args, "weights", None)
    if weights_path:
        g = g.with_vertex_weights(parse_vertex_weights(_read(weights_path), g.n))
    return g


def _load_ordering(args, g: Graph) -> Ordering | None:
    if not args.ordering:
        return None
    return parse_ordering(_read(args.ordering), g.n)


def _names(args) -> dict[int, str]:
    path = getattr(args, "names", None)
    return parse_names(_read(path)) if path else {}


def _label(v: int, names: dict[int, str]):
    return names.get(v, v)


def _close(a: float, b: float) -> bool:
    return abs(a - b) <= REL_TOL * max(1.0, abs(a), abs(b))


def _emit(args, payload, table_rows=None) -> None:
    if getattr(args, "pretty", False):
        rows = table_rows if table_rows is not None else [
            (k, json.dumps(v)) for k, v in payload.items()
        ]
        for row in rows:
            print("  ".join(str(c) for c in row))
    else:
        print(json.dumps(payload))


def _cocomp_ordering(args, g: Graph) -> tuple[Ordering | None, str]:
    given = _load_ordering(args, g)
    if given is not None:
        return given, "given"
    return compute_cocomp_ordering(g), "computed"


# -- subcommands ---------------------------------------------------------------


def cmd_gen(args) -> int:
    cls = GraphClass.parse(args.graph_class)
    g, order = generate(cls, args.n, args.density, args.seed)
    if args.weighted:
        rng = random.Random(f"weights:{args.seed}")
        g = Graph(g.n, [(u, v, w) for (u, v, _), w in zip(g.edges, random_weights(g.m, rng))])
    text = serialize_graph(g)
    if args.graph:
        _write(args.graph, text)
    if args.ordering:
        _write(args.ordering, serialize_ordering(order))
    payload = {"class": cls.value, "n": g.n, "m": g.m, "seed": args.seed}
    if not args.graph:
        payload["graph"] = text
    if not args.ordering:
        payload["ordering"] = list(order.perm)
    _emit(args, payload)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args)
    order = _load_ordering(args, g)
    if order is None:
        raise InputError("--ordering is required")
    cls = GraphClass.parse(args.graph_class)
    if cls is GraphClass.COCOMPARABILITY:
        ok, witness = verify_umbrella_free(g, order)
    else:
        ok, witness = verify_class_ordering(g, order, cls)
    payload = {
        "ok": ok,
        "witness": None if witness is None else [witness.x, witness.y, witness.z],
        "pattern": None if witness is None else witness.pattern,
    }
    _emit(args, payload)
    return EXIT_OK if ok else EXIT_FAIL


def _transfer_report(g: Graph, order: Ordering, edge_order, patterns) -> list[dict]:
    l2 = line_square(g)
    l2_order = edge_order.as_vertex_ordering()
    report = []
    for p in patterns:
        source = find_pattern(g, order, p)
        target = find_pattern(l2, l2_order, p)
        report.append({
            "pattern": p.name,
            "source_free": source is None,
            "l2_free": target is None,
            "ok": source is not None or target is None,
            "l2_witness": None if target is None else [target.x, target.y, target.z],
        })
    return report


def cmd_order_l2(args) -> int:
    g = _load_graph(args)
    order = _load_ordering(args, g)
    if order is None:
        raise InputError("--ordering is required")
    rule = star_order if args.rule == "star" else bullet_order
    pi = rule(g, order)
    if args.endpoints:
        text = "\n".join(f"{u} {v}" for u, v in pi.pairs())
    else:
        text = " ".join(str(e) for e in pi.perm)
    payload: dict = {"rule": args.rule, "m": g.m}
    if args.out:
        _write(args.out, text)
        payload["out"] = args.out
    else:
        payload["order"] = [list(p) for p in pi.pairs()] if args.endpoints else list(pi.perm)
    code = EXIT_OK
    if args.check:
        if g.m > EXPLICIT_L2_LIMIT:
            raise InputError(f"--check builds L^2 explicitly and is limited to m <= {EXPLICIT_L2_LIMIT}")
        if args.graph_class:
            patterns = CLASS_PATTERNS[GraphClass.parse(args.graph_class)]
        else:
            patterns = tuple(PATTERNS.values())
        report = _transfer_report(g, order, pi, patterns)
        payload["check"] = report
        payload["transfer_ok"] = all(r["ok"] for r in report)
        if not payload["transfer_ok"]:
            code = EXIT_FAIL
    _emit(args, payload)
    return code


def cmd_mim(args) -> int:
    g = _load_graph(args)
    if args.unweighted:
        g = g.with_unit_weights()
    order, source = _cocomp_ordering(args, g)
    if order is None:
        _emit(args, {"error": "graph is not a cocomparability graph", "ordering_source": source})
        return EXIT_FAIL
    try:
        sol = ccwmim(g, order)
    except NotUmbrellaFree as exc:
        _emit(args, {"error": str(exc), "witness": list(exc.witness[:3]), "ordering_source": source})
        return EXIT_FAIL
    names = _names(args)
    pairs = sorted(zip(sol.members, sol.edges))
    payload = {
        "weight": sol.weight,
        "matching": [[_label(u, names), _label(v, names)] for _, (u, v) in pairs],
        "ordering_source": source,
    }
    _emit(args, payload)
    return EXIT_OK


def cmd_mwis(args) -> int:
    g = _load_graph(args)
    order, source = _cocomp_ordering(args, g)
    if order is None:
        _emit(args, {"error": "graph is not a cocomparability graph", "ordering_source": source})
        return EXIT_FAIL
    try:
        sol = ccwmis(g, order)
    except NotUmbrellaFree as exc:
        _emit(args, {"error": str(exc), "witness": list(exc.witness[:3]), "ordering_source": source})
        return EXIT_FAIL
    names = _names(args)
    payload = {
        "weight": sol.weight,
        "vertices": [_label(v, names) for v in sorted(sol.members)],
        "ordering_source": source,
    }
    _emit(args, payload)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load_graph(args)
    try:
        if args.problem == "mim":
            brute = brute_mim(g)
        else:
            brute = brute_mwis(g)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    payload: dict = {
        "problem": args.problem,
        "brute": {"weight": brute.weight, "members": sorted(brute.members)},
        "fast": None,
        "agree": None,
    }
    order, _ = _cocomp_ordering(args, g)
    if order is not None and verify_umbrella_free(g, order).ok:
        fast = ccwmim(g, order) if args.problem == "mim" else ccwmis(g, order)
        payload["fast"] = {"weight": fast.weight, "members": sorted(fast.members)}
        payload["agree"] = _close(fast.weight, brute.weight)
    _emit(args, payload)
    return EXIT_FAIL if payload["agree"] is False else EXIT_OK


def run_trial(cls_value: str, n: int, density: float, seed: int, limit: int) -> dict:
    """One generate -> verify -> solve -> oracle round; returns a result record."""
    cls = GraphClass(cls_value)
    rng = random.Random(f"trial:{seed}")
    g, order = generate(cls, n, density, seed)
    rec = {"class": cls_value, "n": n, "density": density, "seed": seed, "m": g.m,
           "failures": [], "mim_checked": False, "mwis_checked": False}
    if not verify_class_ordering(g, order, cls).ok:
        rec["failures"].append("witness ordering violates class patterns")
    if not verify_class_ordering(line_square(g), star_order(g, order).as_vertex_ordering(), cls).ok:
        rec["failures"].append("star order of L^2 violates class patterns")
    cc = order if verify_umbrella_free(g, order).ok else compute_cocomp_ordering(g)
    if cc is not None:
        wg = Graph(g.n, [(u, v, w) for (u, v, _), w in zip(g.edges, random_weights(g.m, rng))],
                   random_weights(g.n, rng))
        fast = ccwmim(wg, cc)
        members = fast.members
        if any(not is_2k2(wg, e, f) for i, e in enumerate(members) for f in members[i + 1:]):
            rec["failures"].append("ccwmim returned a non-induced matching")
        if not _close(fast.weight, mim_via_explicit_l2(wg, cc).weight):
            rec["failures"].append("implicit and explicit L^2 pipelines disagree")
        if wg.m <= limit:
            rec["mim_checked"] = True
            if not _close(fast.weight, brute_mim(wg, limit).weight):
                rec["failures"].append("ccwmim differs from brute force")
        if wg.n <= limit:
            rec["mwis_checked"] = True
            if not _close(ccwmis(wg, cc).weight, brute_mwis(wg, limit).weight):
                rec["failures"].append("ccwmis differs from brute force")
    return rec


def cmd_compare(args) -> int:
    cls = GraphClass.parse(args.graph_class)
    if args.n_min < 1 or args.n_max < args.n_min:
        raise InputError("need 1 <= --n-min <= --n-max")
    rng = random.Random(args.seed)
    limit = brute_limit(default=66)
    jobs = []
    for t in range(args.trials):
        n = rng.randint(args.n_min, args.n_max)
        density = args.density if args.density is not None else round(rng.random(), 6)
        jobs.append((cls.value, n, density, args.seed * 1_000_003 + t, limit))
    if args.jobs > 1 and jobs:
        with ProcessPoolExecutor(args.jobs) as pool:
            records = list(pool.map(run_trial, *zip(*jobs)))
    else:
        records = [run_trial(*job) for job in jobs]
    failed = [r for r in records if r["failures"]]
    payload = {
        "class": cls.value,
        "trials": len(records),
        "passed": len(records) - len(failed),
        "failed": len(failed),
        "mim_oracle_checks": sum(r["mim_checked"] for r in records),
        "mwis_oracle_checks": sum(r["mwis_checked"] for r in records),
        "first_counterexample": failed[0] if failed else None,
    }
    _emit(args, payload)
    return EXIT_FAIL if failed else EXIT_OK


def bench_rows(sizes, seed: int, degree: float) -> list[dict]:
    """Operation counts of the three fast routines on sparse interval graphs."""
    rows = []
    for n in sizes:
        g, order = generate(GraphClass.INTERVAL, n, min(1.0, degree / max(n, 1)), seed)
        stats: Counter = Counter()
        t0 = time.perf_counter()
        star_order(g, order, stats)
        t_star = time.perf_counter() - t0
        t0 = time.perf_counter()
        mwis = ccwmis(g, order)
        t_mwis = time.perf_counter() - t0
        t0 = time.perf_counter()
        mim = ccwmim(g, order)
        t_mim = time.perf_counter() - t0
        sum_deg2 = deg2_profile(g).total
        base = g.m + g.n
        rows.append({"algo": "star_order", "n": n, "m": g.m, "ops": stats["ops"],
                     "seconds": t_star, "ratio": stats["ops"] / max(base, 1)})
        rows.append({"algo": "ccwmis", "n": n, "m": g.m, "ops": mwis.stats["ops"],
                     "seconds": t_mwis, "ratio": mwis.stats["ops"] / max(base, 1)})
        rows.append({"algo": "ccwmim", "n": n, "m": g.m, "ops": mim.stats["ops"],
                     "seconds": t_mim, "sum_deg2": sum_deg2,
                     "ratio": mim.stats["ops"] / max(g.m + sum_deg2, 1),
                     "ops_per_mn": mim.stats["ops"] / max(g.m * g.n, 1)})
    return rows


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    if any(s < 1 for s in sizes):
        raise InputError("sizes must be positive")
    rows = bench_rows(sizes, args.seed, args.degree)
    if args.csv:
        buf = io.StringIO()
        fields = ["algo", "n", "m", "ops", "seconds", "ratio", "sum_deg2", "ops_per_mn"]
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    elif args.pretty:
        print(f"{'algo':<11}{'n':>8}{'m':>10}{'ops':>12}{'ratio':>8}{'seconds':>10}")
        for r in rows:
            print(f"{r['algo']:<11}{r['n']:>8}{r['m']:>10}{r['ops']:>12}{r['ratio']:>8.2f}{r['seconds']:>10.4f}")
    else:
        print(json.dumps(rows))
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orderedmim",
        description="Vertex orderings, L^2 orderings and induced matchings on cocomparability graphs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="graph file (or output path for gen)")
    common.add_argument("--ordering", help="vertex ordering file (or output path for gen)")
    common.add_argument("--seed", type=int, default=0)
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="JSON output (default)")
    out.add_argument("--pretty", action="store_true", help="human-readable output")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a graph with a witness ordering")
    p.add_argument("--class", dest="graph_class", required=True)
    p.add_argument("-n", "--n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--weighted", action="store_true", help="random edge weights in (0, 10]")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", parents=[common], help="check an ordering against a class")
    p.add_argument("--class", dest="graph_class", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("order-l2", parents=[common], help="edge ordering for L^2(G)")
    p.add_argument("--rule", choices=("star", "bullet"), default="star")
    p.add_argument("--check", action="store_true", help="build L^2 and verify pattern transfer")
    p.add_argument("--class", dest="graph_class", help="patterns to check (default: all five)")
    p.add_argument("--endpoints", action="store_true", help="write 'u v' pairs instead of edge ids")
    p.add_argument("--out", help="edge ordering output file")
    p.set_defaults(func=cmd_order_l2)

    p = sub.add_parser("mim", parents=[common], help="maximum weight induced matching")
    p.add_argument("--unweighted", action="store_true", help="ignore edge weights")
    p.add_argument("--names", help="sidecar file of 'id label' lines")
    p.set_defaults(func=cmd_mim)

    p = sub.add_parser("mwis", parents=[common], help="maximum weight independent set")
    p.add_argument("--weights", help="vertex weight file ('v w' lines)")
    p.add_argument("--names", help="sidecar file of 'id label' lines")
    p.set_defaults(func=cmd_mwis)

    p = sub.add_parser("oracle", parents=[common], help="brute-force solve and compare")
    p.add_argument("--problem", choices=("mim", "mwis"), default="mim")
    p.add_argument("--weights", help="vertex weight file for mwis")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("compare", parents=[common], help="randomised fast-vs-oracle trials")
    p.add_argument("--class", dest="graph_class", default="cocomparability")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--density", type=float, default=None, help="fixed density (default: random per trial)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("bench", parents=[common], help="operation counts and timings")
    p.add_argument("--sizes", default="100,1000,10000")
    p.add_argument("--degree", type=float, default=8.0, help="target interval overlap scale")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphFormatError, ValueError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
