"""Command-line front end.

Exit codes: 0 success / verified, 1 verification failure or infeasible,
2 usage or input error, 3 search budget exhausted.  Every command prints one
``RESULT key=value ...`` line; when a command's artifact (graph or coloring)
is written to standard output, the human report and the RESULT line go to
standard error so pipes stay clean.
"""
from __future__ import annotations

import argparse
import math
import sys

from . import constructions as cons
from .coloring import emit_coloring, parse_coloring, verify
from .errors import BipIntervalError, BudgetExceeded, ConstructionFailed, ParseError
from .graph import (BiregularSignature, classify_biregular, complete_bipartite, emit_graph,
                    even_cycle, parse_graph, random_biregular)
from .matrix import (census_min_width, epsilon, is_b_regular, is_c_compressed, is_collected,
                     lemma1_bound, parse_matrix)
from .solver import SearchBudget, exact_w, feasible

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _report(args, *lines):
    stream = sys.stderr if getattr(args, "out", None) == "-" else sys.stdout
    for line in lines:
        print(line, file=stream)


def _budget(args) -> SearchBudget:
    return SearchBudget(max_nodes=args.max_nodes, max_t=args.max_t, time_limit=args.time_limit)


def cmd_gen(args) -> int:
    if args.complete:
        G = complete_bipartite(*args.complete)
        label = f"K_{{{args.complete[0]},{args.complete[1]}}}"
    elif args.cycle is not None:
        G = even_cycle(args.cycle)
        label = f"C_{2 * args.cycle}"
    else:
        if args.seed is None:
            raise UsageError("--biregular needs --seed")
        G = random_biregular(BiregularSignature(*args.biregular), args.seed)
        label = "Bip({},{},{},{})".format(*args.biregular)
    _write(args.out, emit_graph(G))
    _report(args, f"generated {label}: m={G.m} n={G.n} |E|={G.num_edges}",
            f"RESULT m={G.m} n={G.n} edges={G.num_edges}")
    return EXIT_OK


def cmd_color(args) -> int:
    G = parse_graph(_read(args.graph))
    side = args.side
    method = args.method or ("range" if args.t is not None else ("block" if side == "X" else "persistent"))
    if method == "block":
        if side != "X":
            raise UsageError("the block construction is interval on X; use --side X")
        phi = cons.theorem3_coloring(G)
    elif method == "persistent":
        phi = cons.persistent_interval_coloring(G, side)
    elif method == "max":
        phi = cons.max_coloring(G, side)
    elif method == "range":
        if args.t is None:
            raise UsageError("--method range needs --t")
        phi = cons.range_coloring(G, side, args.t, _budget(args))
    else:
        if args.t is None:
            _, phi = exact_w(G, side, _budget(args), jobs=args.jobs)
        else:
            phi = feasible(G, side, args.t, _budget(args), jobs=args.jobs)
            if phi is None:
                _report(args, f"no {args.t}-coloring interval on {side} exists",
                        f"RESULT t={args.t} feasible=no")
                return EXIT_FAIL
    if args.t is not None and phi.t != args.t:
        raise UsageError(f"method {method} yields t={phi.t}, not the requested {args.t}")
    _write(args.out, emit_coloring(phi))
    _report(args, f"{method} coloring with t={phi.t}, interval on {side}: verified",
            f"RESULT t={phi.t} method={method} side={side}")
    return EXIT_OK


def cmd_verify(args) -> int:
    G = parse_graph(_read(args.graph))
    phi = parse_coloring(_read(args.coloring), G)
    report = verify(G, phi, args.side, "persistent" if args.persistent else "interval")
    print(report)
    print(f"RESULT verify={'pass' if report.passed else 'fail'} t={phi.t} failures={len(report.failures)}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_bound(args) -> int:
    G = parse_graph(_read(args.graph))
    if G.num_edges == 0:
        raise UsageError("graph has no edges")
    side = args.side
    chi = G.max_degree
    sig = classify_biregular(G)
    upper = "na"
    if sig is not None:
        # class side: the larger part plays X
        cls_side = side if not sig.transposed else ("Y" if side == "X" else "X")
        upper = sig.l * math.ceil(sig.m / sig.l) if cls_side == "X" else sig.k
    complete = G.num_edges == G.m * G.n
    if complete:
        exact = cons.kmn_w(G.m, G.n, side)
        size, other = (G.m, G.n) if side == "X" else (G.n, G.m)
        lower = lemma1_bound(size, other)
    else:
        exact, lower = "unknown", "na"
    print(f"chromatic index chi' = {chi}")
    print(f"upper bound (block construction): {upper}")
    print(f"exact (complete bipartite formula): {exact if complete else 'unknown - run exact'}")
    print(f"lower bound (collected-matrix width): {lower}")
    print(f"RESULT chi={chi} upper={upper} exact={exact} lower={lower}")
    return EXIT_OK


def cmd_exact(args) -> int:
    G = parse_graph(_read(args.graph))
    try:
        w, phi = exact_w(G, args.side, _budget(args), jobs=args.jobs)
    except BudgetExceeded as exc:
        lo, hi = exc.bracket or ("?", "?")
        print(f"budget exhausted: {exc}")
        print(f"RESULT w_R=unknown bracket=[{lo},{hi}]")
        return EXIT_BUDGET
    print(f"w_{args.side} = {w}")
    print(f"RESULT w_R={w}")
    if args.witness:
        _write(args.witness, emit_coloring(phi))
    else:
        sys.stdout.write(emit_coloring(phi))
    return EXIT_OK


def cmd_matrix(args) -> int:
    if args.matrix_cmd == "check":
        H = parse_matrix(_read(args.file))
        verdicts = {"collected": is_collected(H)}
        if args.b is not None:
            verdicts[f"{args.b}-regular"] = is_b_regular(H, args.b)
        if args.c is not None:
            verdicts[f"{args.c}-compressed"] = is_c_compressed(H, args.c)
        for name, ok in verdicts.items():
            print(f"{name}: {'yes' if ok else 'no'}")
        if verdicts["collected"]:
            print("epsilon: " + " ".join(str(epsilon(H, i)) for i in range(1, H.mu + 1)))
        print("RESULT " + " ".join(f"{k}={str(v).lower()}" for k, v in verdicts.items()))
        return EXIT_OK if all(verdicts.values()) else EXIT_FAIL
    w = census_min_width(args.m, args.n, args.wmax)
    bound = lemma1_bound(args.m, args.n)
    print(f"minimum width for m={args.m}, n={args.n} (w <= {args.wmax}): {w if w is not None else 'none'}")
    print(f"RESULT census_min_width={w if w is not None else 'none'} lemma1_bound={bound}")
    return EXIT_OK if w is not None else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bipinterval", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def side_arg(sp):
        sp.add_argument("--side", choices=["X", "Y"], type=str.upper, required=True)

    def budget_args(sp):
        sp.add_argument("--max-nodes", type=int, default=SearchBudget.max_nodes)
        sp.add_argument("--max-t", type=int, default=SearchBudget.max_t)
        sp.add_argument("--time-limit", type=float, default=SearchBudget.time_limit)
        sp.add_argument("--jobs", type=int, default=1)

    g = sub.add_parser("gen", help="generate a graph file")
    kind = g.add_mutually_exclusive_group(required=True)
    kind.add_argument("--complete", nargs=2, type=int, metavar=("M", "N"))
    kind.add_argument("--cycle", type=int, metavar="S")
    kind.add_argument("--biregular", nargs=4, type=int, metavar=("M", "L", "N", "K"))
    g.add_argument("--seed", type=int)
    g.add_argument("--out", default="-")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("color", help="build a verified coloring interval on one part")
    c.add_argument("--graph", required=True)
    side_arg(c)
    c.add_argument("--t", type=int)
    c.add_argument("--method", choices=["block", "persistent", "max", "range", "exact"])
    c.add_argument("--out", default="-")
    budget_args(c)
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a coloring file against a graph file")
    v.add_argument("--graph", required=True)
    v.add_argument("--coloring", required=True)
    side_arg(v)
    v.add_argument("--persistent", action="store_true")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bound", help="report the known bounds for one part")
    b.add_argument("--graph", required=True)
    side_arg(b)
    b.set_defaults(func=cmd_bound)

    e = sub.add_parser("exact", help="compute w_R exactly by exhaustive search")
    e.add_argument("--graph", required=True)
    side_arg(e)
    e.add_argument("--witness")
    budget_args(e)
    e.set_defaults(func=cmd_exact)

    mx = sub.add_parser("matrix", help="collected-matrix tools")
    msub = mx.add_subparsers(dest="matrix_cmd", required=True)
    chk = msub.add_parser("check")
    chk.add_argument("--file", required=True)
    chk.add_argument("--b", type=int)
    chk.add_argument("--c", type=int)
    cen = msub.add_parser("census")
    cen.add_argument("--m", type=int, required=True)
    cen.add_argument("--n", type=int, required=True)
    cen.add_argument("--wmax", type=int, required=True)
    mx.set_defaults(func=cmd_matrix)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("RESULT error=budget", file=sys.stderr)
        return EXIT_BUDGET
    except ConstructionFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("RESULT error=construction-failed", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, ParseError, BipIntervalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("RESULT error=usage", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
