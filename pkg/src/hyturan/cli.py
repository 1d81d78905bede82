"""Command-line interface.

Subcommands: gen, spectral, check, search, stability, verify. Hypergraphs
travel as JSON on stdin/stdout or through files. Exit codes: 0 success (or
"free"/"no witness" for check), 1 pattern contained / witness found,
2 budget or capacity exceeded, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import construct as cons
from . import detect as det
from . import extremal as ext
from . import jsonio
from . import spectral as sp
from .hcore import BudgetExceededError, CapacityError, Hypergraph, ValidationError
from .verify import SUITES, run_checks

EXIT_OK = 0
EXIT_CONTAINS = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64


def _read_hypergraph(path: str | None) -> Hypergraph:
    if path and path != "-":
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        return jsonio.loads_hypergraph(text)
    except json.JSONDecodeError as exc:
        raise UsageError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")


class UsageError(Exception):
    pass


def _emit(data, path: str | None = None):
    text = jsonio.dumps(data)
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _sizes(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise UsageError(f"expected a comma-separated size list, got {text!r}")


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return args.threads
    env = os.environ.get("HYTURAN_THREADS")
    return int(env) if env and env.isdigit() else 1


# ---------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    name = args.generator
    if name == "turan":
        H = cons.turan_hypergraph(args.n, args.k, args.r)
    elif name == "complete":
        H = cons.complete_r_graph(args.t, args.r)
    elif name == "expanded-clique":
        H = cons.expanded_clique(args.t, args.r)
    elif name == "fan":
        H = cons.generalized_fan(args.t, args.r)
    elif name == "k-partite":
        H = cons.complete_k_partite(_sizes(args.sizes), args.r)
    elif name == "semibipartite":
        H = cons.semibipartite_max(args.n)
    elif name == "g62":
        H = cons.g62()
    elif name == "g62-blowup":
        H = cons.g62_blowup(_sizes(args.sizes))
    elif name == "gn2":
        H = cons.g62_extremal(args.n)
    elif name == "random":
        H = cons.random_hypergraph(args.n, args.r, args.prob, args.seed)
    else:
        raise UsageError(f"unknown generator {name!r}")
    _emit(jsonio.hypergraph_to_dict(H), args.output)
    return EXIT_OK


def cmd_spectral(args) -> int:
    H = _read_hypergraph(args.input)
    config = sp.SolverConfig(
        p=args.p, tol=args.tol, max_iter=args.max_iter,
        restarts=args.restarts, seed=args.seed, shift=args.shift,
        threads=_threads(args),
    )
    result = sp.p_spectral_radius(H, config)
    _emit(jsonio.solver_result_to_dict(result), args.output)
    return EXIT_OK


_PATTERN_FLAGS = {
    "explicit": "explicit",
    "expanded-clique": "expanded_clique",
    "fan": "generalized_fan",
    "clique-family": "clique_family",
    "fan-family": "fan_family",
    "berge": "berge_clique",
    "m1": "m1",
    "semibipartite": "semibipartite_colorable",
    "g62color": "g62_colorable",
}


def _build_pattern(args) -> det.Pattern:
    kind = _PATTERN_FLAGS.get(args.pattern)
    if kind is None:
        raise UsageError(f"unknown pattern {args.pattern!r}; "
                         f"choose from {sorted(_PATTERN_FLAGS)}")
    if kind == "explicit":
        if not args.pattern_file:
            raise UsageError("--pattern explicit needs --pattern-file")
        return det.Pattern.explicit(_read_hypergraph(args.pattern_file))
    if kind in ("expanded_clique", "generalized_fan"):
        if args.t is None or args.r is None:
            raise UsageError(f"--pattern {args.pattern} needs --t and --r")
        return det.Pattern(kind, t=args.t, r=args.r)
    if kind in ("clique_family", "fan_family", "berge_clique"):
        if args.t is None:
            raise UsageError(f"--pattern {args.pattern} needs --t")
        return det.Pattern(kind, t=args.t, r=args.r)
    return det.Pattern(kind)


def _witness_payload(witness):
    if witness is None:
        return None
    if isinstance(witness, dict):
        return {str(k): v for k, v in witness.items()}
    if isinstance(witness, tuple) and len(witness) == 2 and isinstance(witness[1], dict):
        core, match = witness
        return {"core": list(core),
                "matching": {" ".join(map(str, p)): list(e) for p, e in match.items()}}
    if hasattr(witness, "assignment"):
        return {"k": witness.k, "assignment": list(witness.assignment)}
    return list(witness)


def cmd_check(args) -> int:
    H = _read_hypergraph(args.input)
    pattern = _build_pattern(args)
    try:
        witness = det.find_pattern(H, pattern, node_budget=args.node_budget)
    except BudgetExceededError as exc:
        _emit({"pattern": pattern.describe(), "status": "budget-exceeded",
               "message": str(exc)}, args.output)
        return EXIT_BUDGET
    _emit({
        "pattern": pattern.describe(),
        "contains": witness is not None,
        "witness": _witness_payload(witness),
    }, args.output)
    return EXIT_CONTAINS if witness is not None else EXIT_OK


def cmd_search(args) -> int:
    pattern = _build_pattern(args) if args.pattern else None
    try:
        if args.mode == "exhaustive":
            if args.objective == "edges":
                record = ext.ex_search(args.n, args.r, pattern,
                                       max_positions=args.max_positions)
            else:
                record = ext.spex_search(args.n, args.r, pattern, p=args.p,
                                         max_positions=args.max_positions)
        else:
            H0 = _read_hypergraph(args.input)
            record = ext.hill_climb(H0, pattern, p=args.p, budget=args.budget,
                                    seed=args.seed)
    except (CapacityError, BudgetExceededError) as exc:
        _emit({"status": "capacity", "message": str(exc)}, args.output)
        return EXIT_BUDGET
    _emit(jsonio.search_record_to_dict(record), args.output)
    return EXIT_OK


def cmd_stability(args) -> int:
    H = _read_hypergraph(args.input)
    report = ext.stability_report(H, args.k, args.epsilon, seed=args.seed)
    _emit(jsonio.stability_report_to_dict(report), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = args.only.split(",") if args.only else None
    results = run_checks(suites, quick=args.quick)
    width = max(len(r.name) for r in results)
    failures = 0
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        if not r.passed:
            failures += 1
        print(f"[{mark}] {r.name:<{width}}  ({r.elapsed:6.1f}s)  {r.detail}")
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return EXIT_OK if failures == 0 else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hyturan",
        description="Spectral extremal analysis for r-uniform hypergraphs.")
    top.add_argument("--threads", type=int, default=None,
                     help="worker threads (fallback: HYTURAN_THREADS)")
    sub = top.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a named construction as JSON")
    gen.add_argument("generator", choices=[
        "turan", "complete", "expanded-clique", "fan", "k-partite",
        "semibipartite", "g62", "g62-blowup", "gn2", "random"])
    gen.add_argument("--n", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--r", type=int)
    gen.add_argument("--t", type=int)
    gen.add_argument("--sizes", type=str, default="")
    gen.add_argument("--prob", type=float, default=0.5)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output", default=None)
    gen.set_defaults(func=cmd_gen)

    spec = sub.add_parser("spectral", help="solve for the p-spectral radius")
    spec.add_argument("input", nargs="?", default=None,
                      help="hypergraph JSON file (default: stdin)")
    spec.add_argument("--p", type=float, required=True)
    spec.add_argument("--tol", type=float, default=1e-10)
    spec.add_argument("--max-iter", type=int, default=10_000)
    spec.add_argument("--restarts", type=int, default=32)
    spec.add_argument("--seed", type=int, default=0)
    spec.add_argument("--shift", type=float, default=None)
    spec.add_argument("-o", "--output", default=None)
    spec.set_defaults(func=cmd_spectral)

    chk = sub.add_parser("check", help="test forbidden-structure containment")
    chk.add_argument("input", nargs="?", default=None)
    chk.add_argument("--pattern", required=True)
    chk.add_argument("--t", type=int, default=None)
    chk.add_argument("--r", type=int, default=None)
    chk.add_argument("--pattern-file", default=None)
    chk.add_argument("--node-budget", type=int, default=det.DEFAULT_NODE_BUDGET)
    chk.add_argument("-o", "--output", default=None)
    chk.set_defaults(func=cmd_check)

    srch = sub.add_parser("search", help="extremal search (exhaustive or hill-climb)")
    srch.add_argument("input", nargs="?", default=None,
                      help="start graph for hill-climb mode")
    srch.add_argument("--mode", choices=["exhaustive", "hill"], default="exhaustive")
    srch.add_argument("--objective", choices=["edges", "lambda"], default="edges")
    srch.add_argument("--n", type=int)
    srch.add_argument("--r", type=int)
    srch.add_argument("--p", type=float, default=3.0)
    srch.add_argument("--pattern", default=None)
    srch.add_argument("--t", type=int, default=None)
    srch.add_argument("--budget", type=int, default=500)
    srch.add_argument("--seed", type=int, default=0)
    srch.add_argument("--max-positions", type=int, default=ext.RAW_POSITION_CAP)
    srch.add_argument("-o", "--output", default=None)
    srch.set_defaults(func=cmd_search)

    stab = sub.add_parser("stability", help="partition stability diagnostics")
    stab.add_argument("input", nargs="?", default=None)
    stab.add_argument("--k", type=int, required=True)
    stab.add_argument("--epsilon", type=float, required=True)
    stab.add_argument("--seed", type=int, default=0)
    stab.add_argument("-o", "--output", default=None)
    stab.set_defaults(func=cmd_stability)

    ver = sub.add_parser("verify", help="run the invariant and acceptance suites")
    ver.add_argument("--quick", action="store_true")
    ver.add_argument("--only", default=None,
                     help=f"comma-separated suites from {sorted(SUITES)}")
    ver.set_defaults(func=cmd_verify)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapacityError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
