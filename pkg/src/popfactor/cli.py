"""Command-line interface.

Subcommands: factor, margin, popular (engine); oracle (brute force,
cap-guarded); gen (random instance); stable (deferred acceptance);
selftest (built-in golden suite).

Exit codes: 0 success, 1 usage/parse error, 2 validation error,
3 internal-consistency failure.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from .engine import InternalConsistencyError, unpopularity_factor, unpopularity_margin
from .instance import InvalidMatchingError
from .io import (
    ParseError,
    gale_shapley,
    parse_instance,
    parse_matching,
    random_instance,
    serialize_instance,
    serialize_matching,
)
from .oracle import oracle_factor, oracle_margin

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_INTERNAL = 3


class _CliParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = _CliParser(prog="popfactor")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_query(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--instance", required=True, help="instance file")
        p.add_argument("--matching", required=True, help="matching file")
        p.add_argument(
            "--fastpath",
            choices=["auto", "on", "off"],
            default="auto",
            help="bipartite positive-cycle fast path (auto: MP only)",
        )
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    add_query("factor", "exact unpopularity factor of a matching")
    add_query("margin", "exact unpopularity margin of a matching")
    add_query("popular", "test whether a matching is popular")

    p = sub.add_parser("oracle", help="brute-force factor and margin (small instances)")
    p.add_argument("--instance", required=True)
    p.add_argument("--matching", required=True)
    p.add_argument("--cap", type=int, default=10, help="largest instance size allowed")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("--kind", choices=["RP", "MP"], default="RP")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.8)
    p.add_argument("--tie-prob", type=float, default=0.0)
    p.add_argument("--weight-min", type=int, default=1)
    p.add_argument("--weight-max", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("stable", help="stable matching of a strict MP instance")
    p.add_argument("--instance", required=True)

    sub.add_parser("selftest", help="run the built-in golden test suite")
    return parser


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _load(args):
    instance = parse_instance(_read(args.instance))
    matching = parse_matching(_read(args.matching), instance)
    return instance, matching


def _run(args) -> int:
    if args.command in ("factor", "margin", "popular"):
        instance, matching = _load(args)
        report = unpopularity_factor(instance, matching, fastpath=args.fastpath)
        if args.json:
            print(json.dumps(report.to_json_dict(instance), indent=2))
        elif args.command == "factor":
            print(report.to_text(instance), end="")
        elif args.command == "margin":
            print(f"margin: {report.margin}")
            if report.margin_witness is not None:
                pairs = " ".join(
                    f"{instance.names[a]}-{instance.names[b]}"
                    for a, b in sorted(report.margin_witness.pairs)
                )
                print(f"witness: {pairs if pairs else '(empty matching)'}")
        else:
            print("popular: " + ("yes" if report.popular else "no"))
        return EXIT_OK

    if args.command == "oracle":
        instance, matching = _load(args)
        factor = oracle_factor(instance, matching, cap=args.cap)
        margin = oracle_margin(instance, matching, cap=args.cap)
        if args.json:
            infinite = factor == math.inf
            print(
                json.dumps(
                    {
                        "factor_num": None if infinite else factor.numerator,
                        "factor_den": None if infinite else factor.denominator,
                        "is_infinite": infinite,
                        "margin": margin,
                        "popular": factor <= 1,
                    },
                    indent=2,
                )
            )
        else:
            print(f"factor: {'inf' if factor == math.inf else factor}")
            print(f"margin: {margin}")
            print("popular: " + ("yes" if factor <= 1 else "no"))
        return EXIT_OK

    if args.command == "gen":
        instance = random_instance(
            args.kind,
            args.n,
            density=args.density,
            tie_probability=args.tie_prob,
            weight_range=(args.weight_min, args.weight_max),
            seed=args.seed,
        )
        print(serialize_instance(instance), end="")
        return EXIT_OK

    if args.command == "stable":
        instance = parse_instance(_read(args.instance))
        matching = gale_shapley(instance)
        print(serialize_matching(matching, instance), end="")
        return EXIT_OK

    if args.command == "selftest":
        from .golden import run_selftest

        failures = 0
        for name, ok in run_selftest():
            print(("PASS" if ok else "FAIL") + f"  {name}")
            failures += not ok
        if failures:
            print(f"{failures} golden check(s) failed", file=sys.stderr)
            return EXIT_INTERNAL
        return EXIT_OK

    raise _UsageError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, FileNotFoundError, ValueError) as exc:
        if isinstance(exc, InvalidMatchingError):
            print(f"validation error: {exc}", file=sys.stderr)
            return EXIT_VALIDATION
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entry_point():
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
