"""Command-line front end: count, verify, gen, bench.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 budget exceeded,
4 cross-method disagreement or failed verification (always a bug, never a
valid outcome).
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import random
import sys
import time
from pathlib import Path

from . import alphasum, oracles, triangulation
from .budgets import DEFAULT_BUDGETS, BudgetError
from .gf3 import laplacian, sym_rank_certificate
from .triangulation import TriangulationError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_DISAGREE = 4

METHODS = ("alpha", "brute", "heawood")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse default exits with 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", metavar="FILE", help="rotation-system file")
    p.add_argument("--family", choices=triangulation.FAMILIES, help="built-in family")
    p.add_argument("--size", type=int, help="cycle length for bipyramid")
    p.add_argument("--depth", type=int, help="subdivision depth for apollonian")


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load_graph(args) -> tuple[triangulation.Triangulation, str]:
    if bool(args.graph) == bool(args.family):
        raise _CliError(EXIT_USAGE, "give exactly one of --graph or --family")
    if args.graph:
        text = Path(args.graph).read_text()
        return triangulation.parse_rotation_system(text), f"file:{args.graph}"
    g = triangulation.generate(args.family, size=args.size, depth=args.depth)
    label = args.family
    if args.family == "bipyramid":
        label += f"-{args.size}"
    if args.family == "apollonian":
        label += f"-{args.depth}"
    return g, f"family:{label}"


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def cmd_count(args) -> int:
    try:
        g, source = _load_graph(args)
    except _CliError as exc:
        return _fail(exc.code, str(exc))
    except (OSError, TriangulationError, ValueError) as exc:
        return _fail(EXIT_INVALID, str(exc))

    wanted = METHODS if args.method == "all" else (args.method,)
    methods: dict[str, dict] = {}
    try:
        for name in wanted:
            t0 = time.perf_counter()
            if name == "alpha":
                res = alphasum.tait0_alpha(g, threads=args.threads, max_faces=args.max_faces)
                entry = {
                    "tait0": res.tait0,
                    "terms": res.terms,
                    "rank_histogram": {str(r): c for r, c in res.rank_histogram},
                }
            elif name == "brute":
                entry = {"tait0": oracles.tait_brute(g) // 3}
            else:
                entry = {"tait0": oracles.heawood_count(g, max_faces=args.max_faces)}
            entry["seconds"] = round(time.perf_counter() - t0, 6)
            methods[name] = entry
    except BudgetError as exc:
        return _fail(EXIT_BUDGET, str(exc))

    values = {name: m["tait0"] for name, m in methods.items()}
    agreement = len(set(values.values())) == 1
    report = {
        "graph": {"source": source, "n": g.n, "edges": len(g.edges), "faces": len(g.faces)},
        "threads": args.threads,
        "methods": methods,
        "tait0": values[wanted[0]],
        "agreement": agreement,
    }
    print(json.dumps(report, sort_keys=True, indent=2))
    if not agreement:
        return _fail(EXIT_DISAGREE, f"methods disagree on {source}: {values}")
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        g = triangulation.generate(args.family, size=args.size, depth=args.depth)
    except ValueError as exc:
        return _fail(EXIT_INVALID, str(exc))
    sys.stdout.write(triangulation.to_rotation_text(g))
    return EXIT_OK


def _family_graph(args):
    g = triangulation.generate(args.family, size=args.size, depth=args.depth)
    return g


def _verify_gauss(args) -> tuple[int, int, list[str]]:
    checks = failures = 0
    notes = []
    if args.exhaustive:
        if args.order > 4:
            raise BudgetError(f"exhaustive sweep of order {args.order} is too large")
        mats = oracles.iter_symmetric_matrices(args.order)
    else:
        rng = random.Random(args.seed)
        mats = (oracles.random_symmetric(args.order, rng) for _ in range(args.samples))
    for c in mats:
        checks += 1
        if not oracles.check_gau_closed_form(c):
            failures += 1
            if len(notes) < 5:
                notes.append(f"closed form mismatch: {c.entries}")
    return checks, failures, notes


def _verify_congruence(args) -> tuple[int, int, list[str]]:
    rng = random.Random(args.seed)
    checks = failures = 0
    notes = []
    for _ in range(args.samples):
        c = oracles.random_symmetric(args.order, rng)
        p = oracles.random_invertible(args.order, rng)
        checks += 1
        if not oracles.check_congruence_invariance(c, p):
            failures += 1
            if len(notes) < 5:
                notes.append(f"congruence mismatch: C={c.entries} P={p}")
    return checks, failures, notes


def _verify_minor_choice(args) -> tuple[int, int, list[str]]:
    checks = failures = 0
    notes = []
    if args.exhaustive:
        if args.order > 4:
            raise BudgetError(f"exhaustive sweep of order {args.order} is too large")
        mats = oracles.iter_symmetric_matrices(args.order)
    else:
        rng = random.Random(args.seed)
        mats = (oracles.random_symmetric(args.order, rng) for _ in range(args.samples))
    for c in mats:
        checks += 1
        if not oracles.check_minor_choice_independence(c):
            failures += 1
            if len(notes) < 5:
                notes.append(f"minor choice mismatch: {c.entries}")
    return checks, failures, notes


def _verify_cancellation(args) -> tuple[int, int, list[str]]:
    g = _family_graph(args)
    ok = oracles.check_odd_rank_cancellation(g)
    return 1, 0 if ok else 1, [] if ok else ["odd-rank sums did not cancel"]


def _verify_minor_tree(args) -> tuple[int, int, list[str]]:
    g = _family_graph(args)
    nf = len(g.faces)
    checks = failures = 0
    notes = []
    for mask in range(1 << nf):
        x = alphasum.edge_weights_from_alpha(g, alphasum.alpha_from_mask(nf, mask))
        rank = sym_rank_certificate(laplacian(g, x)).rank
        for k in range(1, g.n + 1):
            if g.n - k > rank + 1:
                continue
            for w in itertools.combinations(range(g.n), k):
                checks += 1
                if not oracles.check_minor_tree_sum(g, x, w):
                    failures += 1
                    if len(notes) < 5:
                        notes.append(f"mask={mask} w={w}")
    return checks, failures, notes


def _verify_heawood(args) -> tuple[int, int, list[str]]:
    g = _family_graph(args)
    ok = oracles.heawood_count(g) * 3 == oracles.tait_brute(g)
    return 1, 0 if ok else 1, [] if ok else ["spin count * 3 != brute count"]


def _verify_wstar(args) -> tuple[int, int, list[str]]:
    g = _family_graph(args)
    nf = len(g.faces)
    checks = failures = 0
    notes = []
    for mask in range(1 << nf):
        x = alphasum.edge_weights_from_alpha(g, alphasum.alpha_from_mask(nf, mask))
        checks += 1
        if not oracles.check_wstar_minimality(g, x):
            failures += 1
            if len(notes) < 5:
                notes.append(f"mask={mask}")
    return checks, failures, notes


def _verify_gau_identity(args) -> tuple[int, int, list[str]]:
    g = _family_graph(args)
    ok = oracles.check_gau_identity(g)
    return 1, 0 if ok else 1, [] if ok else ["sign-vector Gaussian sums != spin count"]


_LEMMAS = {
    "gauss": _verify_gauss,
    "congruence": _verify_congruence,
    "minor-choice": _verify_minor_choice,
    "cancellation": _verify_cancellation,
    "minor-tree": _verify_minor_tree,
    "heawood": _verify_heawood,
    "wstar": _verify_wstar,
    "gau-identity": _verify_gau_identity,
}


def cmd_verify(args) -> int:
    names = list(_LEMMAS) if args.lemma == "all" else [args.lemma]
    if args.family is None:
        args.family = "k4"
    total_failures = 0
    try:
        for name in names:
            checks, failures, notes = _LEMMAS[name](args)
            total_failures += failures
            status = "ok" if failures == 0 else "FAIL"
            print(f"{name}: {checks} checks, {failures} failures [{status}]")
            for note in notes:
                print(f"  {note}")
    except BudgetError as exc:
        return _fail(EXIT_BUDGET, str(exc))
    except (TriangulationError, ValueError) as exc:
        return _fail(EXIT_INVALID, str(exc))
    return EXIT_OK if total_failures == 0 else EXIT_DISAGREE


def _parse_family_spec(spec: str):
    name, _, param = spec.partition(":")
    kw = {}
    if name == "bipyramid":
        kw["size"] = int(param) if param else 4
    elif name == "apollonian":
        kw["depth"] = int(param) if param else 1
    elif param:
        raise ValueError(f"family {name} takes no parameter")
    return name, kw


def cmd_bench(args) -> int:
    try:
        specs = [_parse_family_spec(s) for s in args.families.split(",")]
        methods = args.methods.split(",")
        threads = [int(t) for t in args.threads.split(",")]
        bad = [m for m in methods if m not in METHODS]
        if bad:
            raise ValueError(f"unknown method {bad[0]}")
    except ValueError as exc:
        return _fail(EXIT_USAGE, str(exc))

    writer = csv.writer(sys.stdout)
    writer.writerow(
        ["graph", "method", "n", "edges", "faces", "terms", "threads", "seconds", "tait0",
         "rank_histogram", "status"]
    )
    disagreements = []
    try:
        for name, kw in specs:
            g = triangulation.generate(name, **kw)
            label = name + "".join(f"-{v}" for v in kw.values())
            values = {}
            for method, nthreads in itertools.product(methods, threads):
                if method != "alpha" and nthreads != threads[0]:
                    continue  # only the sign-vector scan parallelizes
                row = [label, method, g.n, len(g.edges), len(g.faces)]
                terms = (1 << len(g.faces)) if method in ("alpha", "heawood") else ""
                t0 = time.perf_counter()
                try:
                    if method == "alpha":
                        res = alphasum.tait0_alpha(g, threads=nthreads, max_faces=args.max_faces)
                        value, hist = res.tait0, ";".join(f"r{r}:{c}" for r, c in res.rank_histogram)
                    elif method == "brute":
                        value, hist = oracles.tait_brute(g) // 3, ""
                    else:
                        value, hist = oracles.heawood_count(g, max_faces=args.max_faces), ""
                except BudgetError:
                    writer.writerow(row + [terms, nthreads, "", "", "", "skipped"])
                    continue
                seconds = round(time.perf_counter() - t0, 6)
                writer.writerow(row + [terms, nthreads, seconds, value, hist, "ok"])
                values[(method, nthreads)] = value
            if len(set(values.values())) > 1:
                disagreements.append((label, values))
    except (TriangulationError, ValueError) as exc:
        return _fail(EXIT_INVALID, str(exc))
    if disagreements:
        for label, values in disagreements:
            print(f"error: methods disagree on {label}: {values}", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="taitcount", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count Tait colorings / 3 by one or all methods")
    _add_graph_args(p_count)
    p_count.add_argument("--method", choices=METHODS + ("all",), default="all")
    p_count.add_argument("--threads", type=int, default=1)
    p_count.add_argument("--max-faces", type=int, default=DEFAULT_BUDGETS.max_faces)
    p_count.add_argument("--json", action="store_true", help="JSON output (the default)")
    p_count.set_defaults(func=cmd_count)

    p_verify = sub.add_parser("verify", help="run the lemma check suite")
    p_verify.add_argument("--lemma", choices=tuple(_LEMMAS) + ("all",), default="all")
    p_verify.add_argument("--order", type=int, default=3, help="matrix order for sweeps")
    p_verify.add_argument("--exhaustive", action="store_true")
    p_verify.add_argument("--samples", type=int, default=2000)
    p_verify.add_argument("--seed", type=int, default=0)
    _add_graph_args(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("gen", help="emit a rotation-system file for a family")
    p_gen.add_argument("--family", choices=triangulation.FAMILIES, required=True)
    p_gen.add_argument("--size", type=int)
    p_gen.add_argument("--depth", type=int)
    p_gen.set_defaults(func=cmd_gen)

    p_bench = sub.add_parser("bench", help="CSV timing sweep over families and methods")
    p_bench.add_argument("--families", default="k4,octahedron,apollonian:1")
    p_bench.add_argument("--methods", default="alpha,brute,heawood")
    p_bench.add_argument("--threads", default="1")
    p_bench.add_argument("--max-faces", type=int, default=DEFAULT_BUDGETS.max_faces)
    p_bench.add_argument("--csv", action="store_true", help="CSV output (the default)")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    result = args.func(args)
    return result if isinstance(result, int) else EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
