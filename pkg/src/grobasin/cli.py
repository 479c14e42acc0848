"""Command line front end.

Exit codes: 0 success (for `check`: the relation holds), 1 a definite
negative (relation fails, verification failures, undefined limits),
2 usage or parse problems.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .groebner import (
    LimitDoesNotExist,
    NotZeroDimensional,
    format_ideal,
    parse_ideal_text,
    reduced_groebner_basis,
    torus_limit,
)
from .orders import (
    build_poset,
    figure_alg,
    incidence_filter,
    leq_et,
    leq_punc,
    leq_punc_via_alg,
    dominance,
    order_function,
    to_dot,
    _node_label,
)
from .basinlab import (
    ExperimentReport,
    run_divisibility,
    run_et_closure_covers,
    run_prop1,
    run_prop2,
    run_punc_consistency,
    run_single_column_density,
    run_torus_calibration,
)
from .staircase import StandardSet, c4_sum, enumerate_staircases


def _cmd_enumerate(args) -> int:
    staircases = enumerate_staircases(args.n)
    if args.json:
        print(json.dumps([{"columns": list(s.cols())} for s in staircases]))
    elif args.ascii:
        blocks = [s.ascii_diagram() for s in staircases]
        print("\n\n".join(blocks))
    else:
        for s in staircases:
            print(_node_label(s))
    return 0


def _cmd_poset(args) -> int:
    poset = build_poset(args.n, args.order)
    if args.dot:
        sys.stdout.write(to_dot(poset, name=f"{args.order}_{args.n}"))
        return 0
    for i, j in sorted(poset.covers):
        print(f"{_node_label(poset.elements[i])} -> {_node_label(poset.elements[j])}")
    return 0


def _cmd_check(args) -> int:
    try:
        if args.order == "filter":
            leq = incidence_filter
        else:
            leq = order_function(args.order)
        a = StandardSet.from_json(args.a)
        b = StandardSet.from_json(args.b)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return 2
    held = leq(a, b)
    print("true" if held else "false")
    return 0 if held else 1


def _cmd_sum(args) -> int:
    try:
        a = StandardSet.from_json(args.a)
        b = StandardSet.from_json(args.b)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return 2
    print(c4_sum(a, b, args.direction).to_json())
    return 0


def _cmd_groebner(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        ideal = parse_ideal_text(text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.limit is not None:
        try:
            v1, v2 = (int(part) for part in args.limit.split(","))
        except ValueError:
            print("error: --limit expects two integers like -3,-1", file=sys.stderr)
            return 2
        try:
            limit = torus_limit(ideal, (v1, v2))
        except (NotZeroDimensional, LimitDoesNotExist) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        sys.stdout.write(format_ideal(reduced_groebner_basis(limit).elements))
        return 0

    gb = reduced_groebner_basis(ideal)
    if args.staircase:
        if gb.staircase is None:
            print("error: the ideal is not zero-dimensional", file=sys.stderr)
            return 1
        print(gb.staircase.to_json())
        return 0
    sys.stdout.write(format_ideal(gb.elements))
    return 0


def _exhaustive_report(name, n_max, predicate) -> ExperimentReport:
    # predicate(a, b) -> (ok, expected, observed); runs over all same-size
    # ordered pairs up to n_max
    run = passed = 0
    failures = []
    for n in range(1, n_max + 1):
        staircases = enumerate_staircases(n)
        for a in staircases:
            for b in staircases:
                ok, expected, observed = predicate(a, b)
                run += 1
                if ok:
                    passed += 1
                else:
                    failures.append(
                        (f"a=cols{a.cols()} b=cols{b.cols()}", expected, observed)
                    )
    return ExperimentReport(name, 0, run, passed, tuple(failures))


def _duality_report(n_max) -> ExperimentReport:
    def probe(a, b):
        direct = leq_punc(a, b)
        mirrored = leq_et(b.transpose(), a.transpose())
        return direct == mirrored, str(direct), str(mirrored)

    return _exhaustive_report("duality", n_max, probe)


def _refinement_report(n_max) -> ExperimentReport:
    def probe(a, b):
        if (leq_et(a, b) or leq_punc(a, b)) and not dominance(a, b):
            return False, "dominance to follow", "dominance fails"
        return True, "", ""

    return _exhaustive_report("refinement", n_max, probe)


def _alg_report(n_max) -> ExperimentReport:
    def probe(a, b):
        via_alg = leq_punc_via_alg(a, b)
        direct = leq_punc(a, b)
        if via_alg != direct:
            return False, str(direct), str(via_alg)
        n = a.cardinality
        for quad in figure_alg(a, b):
            if sum(quad.c1) + sum(quad.c2) != n or sum(quad.c1p) + sum(quad.c2p) != n:
                return False, "terminals conserving total size", str(quad)
        return True, "", ""

    return _exhaustive_report("splitting_game", n_max, probe)


_SUITES = (
    "prop1",
    "prop2",
    "divisibility",
    "calibration",
    "punc",
    "et-closure",
    "single-column",
    "duality",
    "refinement",
    "alg",
)


def _run_suite(name, trials, seed, nmax):
    if name == "prop1":
        return run_prop1(trials, n_max=nmax or 8, seed=seed)
    if name == "prop2":
        return run_prop2(trials, n_max=nmax or 8, seed=seed)
    if name == "divisibility":
        return run_divisibility(trials, n_max=nmax or 8, seed=seed)
    if name == "calibration":
        return run_torus_calibration(trials, n_max=nmax or 6, seed=seed)
    if name == "punc":
        return run_punc_consistency(trials, n_max=nmax or 6, seed=seed)
    if name == "et-closure":
        return run_et_closure_covers(n_max=nmax or 6, seed=seed)
    if name == "single-column":
        return run_single_column_density(nmax or 6, trials, seed=seed)
    if name == "duality":
        return _duality_report(nmax or 6)
    if name == "refinement":
        return _refinement_report(nmax or 6)
    return _alg_report(nmax or 6)


def _cmd_verify(args, parser) -> int:
    if args.trials < 1:
        parser.error("--trials must be at least 1")
    for name in args.suites:
        if name not in _SUITES:
            parser.error(
                f"unknown suite {name!r} (choose from {', '.join(_SUITES)})"
            )
    if args.seed is not None:
        seed = args.seed
    else:
        raw = os.environ.get("GROBASIN_SEED", "0")
        try:
            seed = int(raw)
        except ValueError:
            parser.error(f"GROBASIN_SEED must be an integer, got {raw!r}")
    names = args.suites or list(_SUITES)
    all_passed = True
    for name in names:
        report = _run_suite(name, args.trials, seed, args.nmax)
        if args.json:
            print(report.to_json())
        else:
            sys.stdout.write(report.to_text())
        all_passed = all_passed and report.passed
    if not args.json:
        print("all suites passed" if all_passed else "some suites FAILED")
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grobasin",
        description="staircases, their orders, and lex Groebner basins",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list all staircases of a size")
    p_enum.add_argument("n", type=int)
    style = p_enum.add_mutually_exclusive_group()
    style.add_argument("--json", action="store_true")
    style.add_argument("--ascii", action="store_true")

    p_poset = sub.add_parser("poset", help="cover edges of an order on staircases")
    p_poset.add_argument("n", type=int)
    p_poset.add_argument(
        "--order", choices=("et", "punc", "dominance"), default="et"
    )
    p_poset.add_argument("--dot", action="store_true", help="emit graphviz")

    p_check = sub.add_parser("check", help="compare two staircases under an order")
    p_check.add_argument("order", choices=("et", "punc", "dominance", "filter"))
    p_check.add_argument("a", help='JSON like {"columns": [4, 2]}')
    p_check.add_argument("b")

    p_sum = sub.add_parser("sum", help="combine two staircases")
    p_sum.add_argument(
        "direction",
        type=int,
        choices=(1, 2),
        help="1 merges column heights, 2 merges row widths",
    )
    p_sum.add_argument("a", help='JSON like {"columns": [4, 2]}')
    p_sum.add_argument("b")

    p_gb = sub.add_parser("groebner", help="reduced lex basis of an ideal file")
    p_gb.add_argument("file")
    what = p_gb.add_mutually_exclusive_group()
    what.add_argument("--staircase", action="store_true")
    what.add_argument("--basis", action="store_true")
    what.add_argument(
        "--limit",
        metavar="V1,V2",
        help="torus limit weight; write --limit=-3,-1 for negative entries",
    )

    p_verify = sub.add_parser("verify", help="run randomized experiment suites")
    p_verify.add_argument("suites", nargs="*", metavar="suite")
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--nmax", type=int, default=None)
    p_verify.add_argument("--json", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "enumerate":
        if args.n < 0:
            parser.error("n must be nonnegative")
        return _cmd_enumerate(args)
    if args.command == "poset":
        if args.n < 1:
            parser.error("n must be positive")
        return _cmd_poset(args)
    if args.command == "check":
        return _cmd_check(args)
    if args.command == "sum":
        return _cmd_sum(args)
    if args.command == "groebner":
        return _cmd_groebner(args)
    return _cmd_verify(args, parser)


if __name__ == "__main__":
    sys.exit(main())
