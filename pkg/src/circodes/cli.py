"""Command-line front end for the circulant-graph code toolkit.

Subcommands: build, minweight, wdist, census, search-exhaustive,
search-random, graph-invariants, verify-tables.  Every run records the
seed in its output; census-style jobs print an upfront work estimate
and refuse to start big ones without --yes-long.

Exit codes: 0 success/confirmed, 2 usage error, 3 verification
mismatch, 4 job infeasible/refused.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import tables as tables_mod
from .code import TypeClass, from_support, type_of_by_support
from .graphs import CirculantSupport, adjacency, invariants, write_supports
from .search import exhaustive_dmax, randomized_campaign
from .weights import (
    EnumerationPlan,
    WorkCapExceeded,
    census_steps,
    full_weight_distribution,
    min_weight_exact,
    partial_distribution_census,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3
EXIT_INFEASIBLE = 4

# jobs estimated above this many kernel steps need --yes-long
LONG_JOB_STEPS = 2 * 10**9


def _parse_support(args) -> CirculantSupport:
    return CirculantSupport(
        args.n, tuple(int(t) for t in args.support.replace(",", " ").split())
    )


def _emit(args, payload: dict) -> None:
    text = json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        print(f"wrote {args.out}")
    else:
        print(text)


def _confirm_long(args, steps: float, job: str) -> bool:
    print(f"# {job}: ~{steps:.3e} kernel steps", file=sys.stderr)
    if steps > LONG_JOB_STEPS and not args.yes_long:
        print(
            f"refusing long job (> {LONG_JOB_STEPS:.0e} steps); rerun with --yes-long",
            file=sys.stderr,
        )
        return False
    return True


def _cmd_build(args) -> int:
    sup = _parse_support(args)
    from_support(sup)  # raises on non-self-dual input
    _emit(args, {
        "support": sup.format(),
        "self_dual": True,
        "type": type_of_by_support(sup).value,
        "valency": sup.size,
        "quantum": f"[[{sup.n},0,d]] once d is certified",
        "seed": args.seed,
    })
    return EXIT_OK


def _cmd_minweight(args) -> int:
    sup = _parse_support(args)
    code = from_support(sup)
    w_max = args.w_max if args.w_max is not None else sup.n
    steps = census_steps(sup.n, min(w_max, sup.n // 2), use_orbits=True)
    if not _confirm_long(args, steps, "minimum-weight census"):
        return EXIT_INFEASIBLE
    plan = EnumerationPlan(strategy="message_weight_census", w_max=w_max,
                           seed=args.seed, thread_shards=args.threads,
                           work_cap=args.work_cap)
    try:
        report = min_weight_exact(code, plan)
    except WorkCapExceeded as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    _emit(args, json.loads(report.to_json(sup)) | {"seed": args.seed})
    return EXIT_OK


def _cmd_wdist(args) -> int:
    sup = _parse_support(args)
    code = from_support(sup)
    if not _confirm_long(args, 2.0**sup.n, "full weight distribution walk"):
        return EXIT_INFEASIBLE
    try:
        report = full_weight_distribution(code, shards=args.threads)
    except WorkCapExceeded as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    _emit(args, json.loads(report.to_json(sup)) | {"seed": args.seed})
    return EXIT_OK


def _cmd_census(args) -> int:
    sup = _parse_support(args)
    code = from_support(sup)
    steps = census_steps(sup.n, args.w_max, use_orbits=not args.no_orbits)
    if not _confirm_long(args, steps, f"message-weight census to w={args.w_max}"):
        return EXIT_INFEASIBLE
    try:
        report = partial_distribution_census(
            code, args.w_max, use_orbits=not args.no_orbits,
            work_cap=args.work_cap,
        )
    except WorkCapExceeded as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    _emit(args, json.loads(report.to_json(sup)) | {"seed": args.seed})
    return EXIT_OK


def _cmd_search_exhaustive(args) -> int:
    restriction = TypeClass(args.type) if args.type else None
    result = exhaustive_dmax(
        args.n,
        type_restriction=restriction,
        prune_multipliers=not args.no_prune,
        support_cap=args.support_cap,
        force=args.yes_long,
        checkpoint_path=args.checkpoint,
    )
    _emit(args, {
        "n": result.n,
        "best_d": result.best_d,
        "witness_supports": [s.format() for s in result.witnesses],
        "exhaustive": result.exhaustive,
        "explored": result.explored,
        "seed": args.seed,
    })
    if args.witness_file:
        write_supports(args.witness_file, result.witnesses)
    return EXIT_OK


def _cmd_search_random(args) -> int:
    result = randomized_campaign(
        args.n, args.target, budget=args.budget, seed=args.seed,
        search_budget=args.search_budget, log_path=args.log,
    )
    _emit(args, {
        "n": result.n,
        "target_d": args.target,
        "best_d": result.best_d,
        "witness_supports": [s.format() for s in result.witnesses],
        "explored": result.explored,
        "seed": result.seed,
    })
    return EXIT_OK if result.best_d >= args.target else EXIT_INFEASIBLE


def _cmd_graph_invariants(args) -> int:
    sup = _parse_support(args)
    inv = invariants(adjacency(sup), aut_budget=args.aut_budget)
    _emit(args, {
        "support": sup.format(),
        "valency": inv.valency,
        "diameter": inv.diameter,
        "girth": inv.girth,
        "clique_number": inv.clique_number,
        "aut_order": inv.aut_order,
        "aut_exact": inv.aut_exact,
        "seed": args.seed,
    })
    return EXIT_OK


def _cmd_verify_tables(args) -> int:
    ns = tuple(int(t) for t in args.only_n.split(",")) if args.only_n else None
    which = tuple(args.tables.split(",")) if args.tables else None
    verdicts = tables_mod.verify_all(
        effort=args.effort, tables=which, ns=ns, seed=args.seed,
        aut_budget=args.aut_budget,
    )
    lines = [v.line() for v in verdicts]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    for line in lines:
        print(line)
    tally = {s: sum(v.status == s for v in verdicts)
             for s in (tables_mod.CONFIRMED, tables_mod.UPPER_BOUND_CONFIRMED,
                       tables_mod.SKIPPED, tables_mod.MISMATCH)}
    print(f"# effort={args.effort} seed={args.seed} " +
          " ".join(f"{k}={c}" for k, c in tally.items()))
    return EXIT_MISMATCH if tally[tables_mod.MISMATCH] else EXIT_OK


def _add_support_args(p) -> None:
    p.add_argument("--n", type=int, required=True, help="code length / graph order")
    p.add_argument("--support", required=True,
                   help="1-indexed first-row support, e.g. 2,5 for the pentagon")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="circodes",
        description="self-dual additive GF(4) codes from circulant graphs",
    )
    top.add_argument("--seed", type=int, default=1)
    top.add_argument("--threads", type=int, default=1)
    top.add_argument("--out", help="write the result payload to this file")
    top.add_argument("--yes-long", action="store_true",
                     help="run jobs beyond the long-job step threshold")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a code and report type/self-duality")
    _add_support_args(p)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("minweight", help="exact minimum weight by census")
    _add_support_args(p)
    p.add_argument("--w-max", type=int, default=None,
                   help="stop the census at this message weight")
    p.add_argument("--work-cap", type=int, default=10**12)
    p.set_defaults(func=_cmd_minweight)

    p = sub.add_parser("wdist", help="full weight distribution (2^n Gray walk)")
    _add_support_args(p)
    p.set_defaults(func=_cmd_wdist)

    p = sub.add_parser("census", help="exact codeword counts up to a weight")
    _add_support_args(p)
    p.add_argument("--w-max", type=int, required=True)
    p.add_argument("--no-orbits", action="store_true",
                   help="disable rotation-orbit reduction")
    p.add_argument("--work-cap", type=int, default=10**12)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("search-exhaustive",
                       help="best minimum weight over all supports of one length")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--type", choices=["I", "II"], default=None)
    p.add_argument("--no-prune", action="store_true",
                   help="disable multiplier-equivalence pruning")
    p.add_argument("--support-cap", type=int, default=None)
    p.add_argument("--checkpoint", help="JSON checkpoint file (resume supported)")
    p.add_argument("--witness-file", help="also write witness supports here")
    p.set_defaults(func=_cmd_search_exhaustive)

    p = sub.add_parser("search-random",
                       help="seeded hill-climbing hunt for a support reaching a target d")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--budget", type=int, default=200, help="supports to examine")
    p.add_argument("--search-budget", type=int, default=2 * 10**6,
                   help="annealing iterations per screened support")
    p.add_argument("--log", help="append per-support campaign lines to this file")
    p.set_defaults(func=_cmd_search_random)

    p = sub.add_parser("graph-invariants",
                       help="valency, diameter, girth, clique number, |Aut|")
    _add_support_args(p)
    p.add_argument("--aut-budget", type=float, default=60.0,
                   help="seconds before |Aut| falls back to the 2n lower bound")
    p.set_defaults(func=_cmd_graph_invariants)

    p = sub.add_parser("verify-tables",
                       help="check the embedded reference tables against the engines")
    p.add_argument("--effort", choices=sorted(tables_mod.EFFORT_CAPS),
                   default="quick")
    p.add_argument("--tables", help="comma list, e.g. T1,T4,BOUNDS")
    p.add_argument("--only-n", help="comma list of lengths to restrict to")
    p.add_argument("--aut-budget", type=float, default=60.0)
    p.set_defaults(func=_cmd_verify_tables)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
