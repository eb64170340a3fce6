"""Command line interface.

Subcommands: invariants, classify, table, verify, search.  Exit codes:
0 success, 2 a verified configuration is inconsistent, 64 usage error,
65 malformed configuration document, 66 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .classify import s1_verdict, theorem_hypotheses
from .configio import (
    SchemaError,
    config_to_obj,
    dump_config,
    fraction_str,
    load_config,
)
from .invariants import CompleteIntersection, invariants
from .localization import TEMPLATES, ConfigurationError, verify_case
from .search import BudgetExceededError, SearchBounds, SearchFlags, search_case

EXIT_OK = 0
EXIT_INCONSISTENT = 2
EXIT_USAGE = 64
EXIT_SCHEMA = 65
EXIT_BUDGET = 66


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    parser = _Parser(
        prog="cisym",
        description=(
            "Exact invariants of complete intersections, the classification"
            " of circle-symmetric ones in low dimensions, and a verifier and"
            " bounded search for fixed-point configurations."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    inv = sub.add_parser(
        "invariants",
        help="invariants of a complete intersection X_n(d_1, ..., d_r)",
    )
    inv.add_argument("n", type=int, help="complex dimension (1 to 6)")
    inv.add_argument("degrees", type=int, nargs="+", metavar="d",
                     help="multidegree entries, each >= 1")
    inv.add_argument("--json", action="store_true", dest="as_json")

    cls = sub.add_parser(
        "classify",
        help="decide whether X_n(d) admits a smooth circle action",
    )
    cls.add_argument("n", type=int, help="complex dimension (1 to 6)")
    cls.add_argument("degrees", type=int, nargs="+", metavar="d")
    cls.add_argument("--json", action="store_true", dest="as_json")

    tab = sub.add_parser(
        "table",
        help="the circle-symmetric complete intersections of complex"
             " dimension at most 3",
    )
    tab.add_argument("--json", action="store_true", dest="as_json")

    ver = sub.add_parser(
        "verify",
        help="run all consistency checks on a fixed-point configuration",
    )
    ver.add_argument("config", help="path to a configuration JSON document")
    ver.add_argument("--json", action="store_true", dest="as_json")

    sea = sub.add_parser(
        "search",
        help="bounded exhaustive search for consistent configurations",
    )
    sea.add_argument("template", choices=sorted(TEMPLATES))
    sea.add_argument("--t-min", type=int, default=1)
    sea.add_argument("--t-max", type=int, default=10)
    sea.add_argument("--rho-min", type=int, default=-10)
    sea.add_argument("--rho-max", type=int, default=0)
    sea.add_argument("--max-weight", type=int, default=5)
    sea.add_argument("--max-abs-a", type=int, default=5)
    sea.add_argument("--max-abs-eval", type=int, default=10)
    sea.add_argument("--workers", type=int, default=1)
    sea.add_argument("--budget", type=int, default=10**8)
    sea.add_argument("--no-effectiveness", action="store_true")
    sea.add_argument("--no-convention35", action="store_true")
    sea.add_argument("--no-lemma64", action="store_true")
    sea.add_argument("--semifree", action="store_true")
    sea.add_argument("--json", action="store_true", dest="as_json")

    return parser


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _ci_from_args(parser: _Parser, args) -> CompleteIntersection:
    if not 1 <= args.n <= 6:
        parser.error("n must be between 1 and 6")
    if any(d < 1 for d in args.degrees):
        parser.error("degrees must be positive integers")
    return CompleteIntersection(args.n, tuple(args.degrees))


def _invariants_obj(ci: CompleteIntersection) -> dict:
    rep = invariants(ci)
    return {
        "n": ci.n,
        "degrees": list(ci.degrees),
        "t": rep.t,
        "c1": rep.c1_coeff,
        "rho": rep.rho,
        "euler": rep.euler,
        "spin": rep.spin,
        "signature": rep.signature,
        "a_hat": None if rep.a_hat is None else fraction_str(rep.a_hat),
        "b3": rep.b3,
    }


def _print_invariants_text(ci: CompleteIntersection) -> None:
    rep = invariants(ci)
    print(ci)
    print(f"  t (cube of the hyperplane class): {rep.t}")
    print(f"  c1 coefficient: {rep.c1_coeff}")
    print(f"  rho (p1 coefficient): {rep.rho}")
    print(f"  euler characteristic: {rep.euler}")
    print(f"  spin: {'yes' if rep.spin else 'no'}")
    if rep.signature is not None:
        print(f"  signature: {rep.signature}")
    if rep.a_hat is not None:
        print(f"  a_hat genus: {fraction_str(rep.a_hat)}")
    if rep.b3 is not None:
        print(f"  b3: {rep.b3}")


def _cmd_invariants(parser: _Parser, args) -> int:
    ci = _ci_from_args(parser, args)
    if args.as_json:
        _print_json(_invariants_obj(ci))
    else:
        _print_invariants_text(ci)
    return EXIT_OK


def _evidence_obj(verdict) -> dict:
    rep = verdict.evidence
    obj = {"t": rep.t, "c1": rep.c1_coeff, "rho": rep.rho,
           "euler": rep.euler, "spin": rep.spin}
    if rep.signature is not None:
        obj["signature"] = rep.signature
    if rep.a_hat is not None:
        obj["a_hat"] = fraction_str(rep.a_hat)
    if rep.b3 is not None:
        obj["b3"] = rep.b3
    return obj


def _verdict_obj(ci: CompleteIntersection) -> dict:
    verdict = s1_verdict(ci)
    obj = {
        "n": ci.n,
        "degrees": list(ci.degrees),
        "normalized": list(verdict.normalized),
        "admits": verdict.admits,
        "reason": verdict.reason,
        "citation": verdict.citation,
        "evidence": _evidence_obj(verdict),
    }
    if ci.n == 3:
        checklist = theorem_hypotheses(ci)
        obj["hypotheses"] = [
            {"name": item.name, "holds": item.holds, "citation": item.citation}
            for item in checklist.items
        ]
        obj["hypotheses_satisfied"] = checklist.satisfied
    return obj


def _cmd_classify(parser: _Parser, args) -> int:
    ci = _ci_from_args(parser, args)
    if args.as_json:
        _print_json(_verdict_obj(ci))
        return EXIT_OK
    verdict = s1_verdict(ci)
    if verdict.admits is None:
        headline = "out of scope"
    elif verdict.admits:
        headline = "admits a smooth circle action"
    else:
        headline = "admits no smooth circle action"
    print(f"{ci}: {headline}")
    print(f"  reason: {verdict.reason}")
    print(f"  citation: {verdict.citation}")
    evidence = _evidence_obj(verdict)
    for key in sorted(evidence):
        print(f"  {key}: {evidence[key]}")
    if ci.n == 3:
        checklist = theorem_hypotheses(ci)
        print("  obstruction hypotheses:"
              f" {'all hold' if checklist.satisfied else 'not all hold'}")
        for item in checklist.items:
            print(f"    [{'x' if item.holds else ' '}] {item.name}")
    return EXIT_OK


_TABLE_ROWS = [
    (1, (1,)), (1, (2,)), (1, (3,)), (1, (2, 2)),
    (2, (1,)), (2, (2,)), (2, (3,)), (2, (2, 2)),
    (3, (1,)), (3, (2,)),
]


def _cmd_table(args) -> int:
    entries = []
    for n, degrees in _TABLE_ROWS:
        ci = CompleteIntersection(n, degrees)
        obj = _invariants_obj(ci)
        obj["citation"] = s1_verdict(ci).citation
        entries.append(obj)
    if args.as_json:
        _print_json({"dimension_bound": 3, "entries": entries})
        return EXIT_OK
    print("Complete intersections of complex dimension <= 3 admitting a"
          " smooth circle action")
    current = None
    for (n, degrees), obj in zip(_TABLE_ROWS, entries):
        if n != current:
            current = n
            print(f"n = {n}:")
        ci = CompleteIntersection(n, degrees)
        extras = ""
        if obj["signature"] is not None:
            extras = f"  sign={obj['signature']}  a_hat={obj['a_hat']}"
        if obj["b3"] is not None:
            extras = f"  b3={obj['b3']}"
        print(f"  {str(ci):12s} t={obj['t']}  c1={obj['c1']}"
              f"  rho={obj['rho']}  euler={obj['euler']}" + extras)
    print("Every other multidegree is obstructed.")
    return EXIT_OK


def _residual_json(value):
    if value is None:
        return None
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return fraction_str(value)
    return str(value)


def _cmd_verify(args) -> int:
    try:
        cfg = load_config(args.config)
    except SchemaError as exc:
        print(f"configuration schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except ConfigurationError as exc:
        print(f"configuration invariant violated: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except OSError as exc:
        print(f"cannot read {args.config}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = verify_case(cfg)
    if args.as_json:
        _print_json({
            "consistent": report.consistent,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "citation": c.citation,
                    "residual": _residual_json(c.residual),
                }
                for c in report.checks
            ],
            "config": config_to_obj(cfg),
        })
    else:
        for c in report.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} {c.name}"
            if not c.passed and c.residual is not None:
                line += f" (residual {c.residual})"
            print(line)
            if not c.passed:
                print(f"     {c.citation}")
        print("consistent" if report.consistent else "inconsistent")
    return EXIT_OK if report.consistent else EXIT_INCONSISTENT


def _cmd_search(parser: _Parser, args) -> int:
    try:
        bounds = SearchBounds(args.max_weight, args.max_abs_a,
                              args.max_abs_eval)
    except ValueError as exc:
        parser.error(str(exc))
    flags = SearchFlags(
        effectiveness=not args.no_effectiveness,
        convention35=not args.no_convention35,
        lemma64=not args.no_lemma64,
        semifree=args.semifree,
    )
    try:
        hits = search_case(
            args.template,
            t_range=(args.t_min, args.t_max),
            rho_range=(args.rho_min, args.rho_max),
            bounds=bounds,
            flags=flags,
            workers=args.workers,
            budget=args.budget,
        )
    except BudgetExceededError as exc:
        print(f"search aborted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, ConfigurationError) as exc:
        parser.error(str(exc))
    if args.as_json:
        _print_json({
            "template": args.template,
            "count": len(hits),
            "hits": [config_to_obj(cfg) for cfg in hits],
        })
    else:
        print(f"{len(hits)} consistent configuration(s) within bounds")
        for cfg in hits:
            print(dump_config(cfg), end="")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "invariants":
        return _cmd_invariants(parser, args)
    if args.command == "classify":
        return _cmd_classify(parser, args)
    if args.command == "table":
        return _cmd_table(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_search(parser, args)


if __name__ == "__main__":
    sys.exit(main())
