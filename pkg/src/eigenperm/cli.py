"""Command-line interface.

Exit codes: 0 success, 1 verification or mathematical failure, 2 usage or
parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from . import lagrange, patterns, series, trees, verify
from .errors import (
    ConditionIViolation,
    InvalidTree,
    LimitExceeded,
    NonInvertible,
    NonPositiveLeading,
    NotARationalSquare,
    OrderTooSmall,
    ParseError,
    VerificationError,
)
from .formats import read_sequence, render_sequence
from .series import TruncatedSeries

ENV_MAX_N = "EIGENPERM_MAX_N"
MAX_SEQ_TERMS = 200


class UsageError(Exception):
    pass


class Failure(Exception):
    pass


# -- helpers ---------------------------------------------------------------


def _configured_max_n(flag: Optional[int]) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(ENV_MAX_N)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{ENV_MAX_N}={env!r} is not an integer") from None
    return patterns.DEFAULT_MAX_N


class ResultCache:
    """JSON file of previously computed results keyed by operation and
    parameters.  Values are always recomputed; a stored value that differs
    from the fresh one is a failure."""

    def __init__(self, path: Optional[str]):
        self.path = Path(path) if path else None
        self.data = {}
        if self.path and self.path.exists():
            try:
                self.data = json.loads(self.path.read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError) as exc:
                raise UsageError(f"cannot read cache {self.path}: {exc}") from None

    def record(self, key: str, value) -> None:
        if self.path is None:
            return
        if key in self.data and self.data[key] != value:
            raise Failure(f"cache mismatch for {key}: stored {self.data[key]}, computed {value}")
        self.data[key] = value
        self.path.write_text(json.dumps(self.data, indent=1, sort_keys=True), encoding="utf-8")


def _progress(enabled: bool):
    if not enabled:
        return None

    def report(first: int, n: int) -> None:
        print(f"[count] n={n}: first entry {first}/{n}", file=sys.stderr, flush=True)
    return report


# -- commands --------------------------------------------------------------


def cmd_seq(args) -> int:
    if not 1 <= args.terms <= MAX_SEQ_TERMS:
        raise UsageError(f"--terms must be in 1..{MAX_SEQ_TERMS}")
    if args.kind == "eigen":
        values = series.eigensequence(args.terms).as_ints()
    else:
        values = lagrange.fixed_point_sequence(args.terms)
    if args.check:
        other = (lagrange.fixed_point_sequence(args.terms) if args.kind == "eigen"
                 else series.eigensequence(args.terms).as_ints())
        if other != values:
            raise Failure("eigensequence and fixed-point sequence disagree")
    ResultCache(args.cache).record(f"seq:{args.kind}:terms={args.terms}", values)
    print(render_sequence(values, args.format))
    return 0


def _apply_transform(kind: str, values: List[Fraction], terms: int) -> List[Fraction]:
    s = TruncatedSeries(values)
    if kind == "rr":
        return list(series.revert_reciprocal(s, terms))
    if kind == "rr-mod":
        return list(series.revert_reciprocal_modified(s, terms))
    if kind == "self-comp":
        return list(series.self_composition(s, terms))
    if kind == "fsqrt":
        return list(series.functional_sqrt(s, terms))
    if kind == "lagrange-rr":
        if not s.is_integral():
            raise UsageError("lagrange-rr needs an integer sequence")
        return [Fraction(v) for v in lagrange.lagrange_revert_reciprocal(s.as_ints(), terms)]
    raise UsageError(f"unknown transform {kind!r}")


def cmd_transform(args) -> int:
    values = read_sequence(args.input)
    if not values:
        raise ParseError(f"{args.input}: no coefficients")
    terms = args.terms
    if terms is None:
        terms = len(values) + 1 if args.kind in ("rr", "lagrange-rr") else len(values)
    if terms < 1:
        raise UsageError("--terms must be positive")
    try:
        out = _apply_transform(args.kind, values, terms)
        if args.check and args.kind in ("rr", "lagrange-rr"):
            other = _apply_transform("lagrange-rr" if args.kind == "rr" else "rr", values, terms)
            if other != out:
                raise Failure("series and Lagrange forms of revert-reciprocal disagree")
    except OrderTooSmall as exc:
        raise UsageError(str(exc)) from None
    except (NotARationalSquare, NonPositiveLeading, NonInvertible) as exc:
        raise Failure(str(exc)) from None
    print(render_sequence(out, args.format))
    return 0


def count_by_method(n: int, method: str, limit: int, long_run: bool = False,
                    checker: str = "direct", progress=None) -> int:
    if n < 0:
        raise UsageError("n must be non-negative")
    if method == "brute":
        return patterns.count_avoiders(n, checker, max_n=limit, long_run=long_run, progress=progress)
    if method == "recurrence":
        return lagrange.fixed_point_sequence(n + 1)[n]
    if method == "eigen":
        return series.eigensequence(n + 1).as_ints()[n]
    if method == "trees":
        cap = min(limit, trees.MAX_WEIGHTED_ENUMERATE)
        if n > cap:
            raise LimitExceeded(f"trees method limited to n <= {cap}")
        return trees.count_avoiders_by_trees(n)
    raise UsageError(f"unknown method {method!r}")


def cmd_count(args) -> int:
    limit = _configured_max_n(args.limit)
    if args.method in ("recurrence", "eigen") and args.n > MAX_SEQ_TERMS:
        raise UsageError(f"n must be at most {MAX_SEQ_TERMS} for {args.method}")
    value = count_by_method(args.n, args.method, limit, args.long_run, args.checker,
                            _progress(args.progress))
    ResultCache(args.cache).record(f"count:n={args.n}", value)
    print(value)
    return 0


def cmd_bijection(args) -> int:
    if args.direction == "to-tree":
        perm = patterns.parse_permutation(args.input)
        if not patterns.is_standard(perm):
            raise ParseError(f"{args.input!r} is not a permutation of 1..{len(perm)}")
        tree = trees.perm_to_edge_tree(perm) if args.edge_labels else trees.perm_to_tree(perm)
        if args.check and trees.tree_to_perm(trees.perm_to_tree(perm)) != perm:
            raise Failure("round trip did not reproduce the permutation")
        print(trees.dumps_tree(tree))
    else:
        text = sys.stdin.read() if args.input == "-" else _read_text(args.input)
        tree = trees.loads_tree(text)
        perm = trees.tree_to_perm(tree)
        if args.check and trees.perm_to_tree(perm) != tree:
            raise Failure("round trip did not reproduce the tree")
        print(patterns.format_permutation(perm))
    return 0


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def cmd_verify(args) -> int:
    report = verify.run_suite(args.suite, args.max_n)
    print(report.render(args.format))
    return 0 if report.ok else 1


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigenperm",
        description="Exact counting and transforms for 3-5bar-2-4-1-avoiding permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print the eigensequence or the fixed-point sequence")
    p.add_argument("kind", choices=["eigen", "fixpoint"])
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--check", action="store_true", help="cross-check against the other construction")
    p.add_argument("--cache", metavar="PATH", help="JSON result cache")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("transform", help="apply a sequence transform to a sequence file")
    p.add_argument("kind", choices=["rr", "rr-mod", "self-comp", "fsqrt", "lagrange-rr"])
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--terms", type=int)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--check", action="store_true", help="cross-check rr against lagrange-rr")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("count", help="count avoiders of [n]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["brute", "recurrence", "trees", "eigen"], default="brute")
    p.add_argument("--checker", choices=["direct", "recursive"], default="direct",
                   help="avoidance test used by the brute method")
    p.add_argument("--limit", type=int, help=f"enumeration limit (default: ${ENV_MAX_N} or "
                                              f"{patterns.DEFAULT_MAX_N})")
    p.add_argument("--long-run", action="store_true", help="allow one size beyond the limit")
    p.add_argument("--progress", action="store_true", help="report progress on stderr")
    p.add_argument("--cache", metavar="PATH", help="JSON result cache")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bijection", help="permutation <-> cycle-labeled tree")
    p.add_argument("direction", choices=["to-tree", "to-perm"])
    p.add_argument("input", help="permutation string (to-tree) or tree JSON path, '-' for stdin (to-perm)")
    p.add_argument("--check", action="store_true", help="assert the round trip is the identity")
    p.add_argument("--edge-labels", action="store_true",
                   help="to-tree: emit the intermediate edge-labeled tree")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("verify", help="run cross-verification suites")
    p.add_argument("--suite", choices=["all"] + list(verify.SUITES), default="all")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, LimitExceeded) as exc:
        print(f"eigenperm: error: {exc}", file=sys.stderr)
        return 2
    except (Failure, VerificationError, ConditionIViolation, InvalidTree) as exc:
        print(f"eigenperm: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
