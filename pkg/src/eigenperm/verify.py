"""Cross-verification suites tying the counting methods and transforms
together.  Each suite is a list of named checks; a check passes iff its
expected and actual renderings are equal."""
from __future__ import annotations

import json
import math
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from . import lagrange, patterns, series, trees
from .errors import EigenpermError, LimitExceeded
from .series import TruncatedSeries

PAPER_SEQUENCE = (1, 1, 2, 6, 23, 104, 531)
FIGURE1_PERM = (3, 1, 2, 5, 4, 11, 7, 6, 8, 12, 14, 13, 10, 9)
FIGURE1_A = (3, 2, 4, 1, 4)
FIGURE1_B = (3, 2, 6, 1, 2)
FIGURE1_CYCLES = ((4, 3, 2, 1), (1,), (4, 2, 1, 3), (2, 1), (3, 1, 2))

SUITE_LIMITS = {
    "series": 50,
    "counts": 10,
    "bijection": 8,
    "trees": 8,
    "agreement": 30,
}
SUITES = ("series", "counts", "bijection", "trees", "agreement")


@dataclass
class Check:
    name: str
    status: str
    expected: str
    actual: str
    ms: float


@dataclass
class VerificationReport:
    suite: str
    checks: List[Check] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "fail" if any(c.status != "pass" for c in self.checks) else "pass"

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> Dict:
        return {"suite": self.suite, "checks": [asdict(c) for c in self.checks], "status": self.status}

    def render(self, fmt: str = "text") -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2)
        width = max((len(c.name) for c in self.checks), default=10)
        lines = []
        for c in self.checks:
            line = f"{c.status.upper():4}  {c.name:<{width}}  {c.ms:9.1f} ms"
            if c.status != "pass":
                line += f"\n      expected: {c.expected}\n      actual:   {c.actual}"
            lines.append(line)
        lines.append(f"suite {self.suite}: {self.status} ({len(self.checks)} checks)")
        return "\n".join(lines)


CheckFn = Callable[[], Tuple[object, object]]


def run_check(name: str, fn: CheckFn) -> Check:
    start = time.perf_counter()
    try:
        expected, actual = fn()
        status = "pass" if expected == actual else "fail"
    except EigenpermError as exc:
        expected, actual, status = "no error", f"{type(exc).__name__}: {exc}", "fail"
    ms = (time.perf_counter() - start) * 1000.0
    return Check(name, status, _show(expected), _show(actual), round(ms, 3))


def _show(x) -> str:
    if isinstance(x, TruncatedSeries):
        x = list(x)
    if isinstance(x, (list, tuple)):
        return "(" + ",".join(_show(v) for v in x) + ")"
    return str(x)


def _rng(tag: str) -> random.Random:
    return random.Random(f"eigenperm-{tag}")


def random_integer_series(rng: random.Random, order: int, lo: int = -9, hi: int = 9,
                          leading=None) -> TruncatedSeries:
    coeffs = [rng.randint(lo, hi) for _ in range(order)]
    if leading is not None:
        coeffs[0] = leading
    return TruncatedSeries(coeffs)


# -- series ----------------------------------------------------------------


def series_checks(max_n: int) -> List[Tuple[str, CheckFn]]:
    n = max(max_n, 2)
    checks = []

    def revert_roundtrip():
        rng = _rng("revert")
        bad = []
        for trial in range(20):
            order = rng.randint(1, min(n, 20))
            f = random_integer_series(rng, order)
            if f.coeff(1) == 0:
                f = TruncatedSeries((rng.choice([-3, -2, -1, 1, 2, 3]),) + f.coeffs[1:])
            g = series.series_revert(f, order)
            ident = TruncatedSeries.identity(order)
            if series.series_compose(f, g, order) != ident or series.series_compose(g, f, order) != ident:
                bad.append(trial)
        return [], bad

    def rr_unital():
        rng = _rng("unital")
        leads = [series.revert_reciprocal(random_integer_series(rng, n), n).coeff(1) for _ in range(20)]
        return [1] * 20, leads

    def eigen_shift():
        e = series.eigensequence(n + 1)
        return series.left_shift(e), series.self_composition(e, n)

    def eigen_fixpoint():
        return lagrange.fixed_point_sequence(n), series.eigensequence(n).as_ints()

    def lagrange_dual():
        rng = _rng("lagrange")
        order = min(n, 12)
        mism = []
        for trial in range(50):
            a = random_integer_series(rng, order)
            if lagrange.lagrange_revert_reciprocal(a.as_ints(), order) != \
                    series.revert_reciprocal(a, order).as_ints():
                mism.append(trial)
        return [], mism

    def fsqrt_roundtrip():
        rng = _rng("fsqrt")
        order = min(n, 15)
        mism = []
        for trial in range(100):
            a = random_integer_series(rng, order, leading=1)
            if series.functional_sqrt(series.self_composition(a, order), order) != a:
                mism.append(trial)
        return [], mism

    checks.append(("compose(f, revert f) = identity both ways, random f", revert_roundtrip))
    checks.append(("revert_reciprocal output starts with 1", rr_unital))
    checks.append((f"eigensequence self-composition = left shift (order {n})", eigen_shift))
    checks.append((f"eigensequence({n}) = fixed_point_sequence({n})", eigen_fixpoint))
    checks.append(("lagrange_revert_reciprocal = revert_reciprocal, 50 random", lagrange_dual))
    checks.append(("functional_sqrt(self_composition(A)) = A, 100 random unital", fsqrt_roundtrip))
    return checks


# -- counts ----------------------------------------------------------------


def count_checks(max_n: int) -> List[Tuple[str, CheckFn]]:
    fixed = lagrange.fixed_point_sequence(max_n + 1)
    eigen = series.eigensequence(max_n + 1).as_ints()
    checks = []

    def paper_prefix():
        m = min(max_n, 6)
        return list(PAPER_SEQUENCE[1 : m + 1]), [patterns.count_avoiders(k) for k in range(1, m + 1)]

    if max_n >= 1:
        checks.append(("brute counts match published prefix", paper_prefix))
    for k in range(max_n + 1):
        def one(k=k):
            brute = patterns.count_avoiders(k, "direct", max_n=SUITE_LIMITS["counts"])
            rec = patterns.count_avoiders(k, "recursive", max_n=SUITE_LIMITS["counts"])
            tree = trees.count_avoiders_by_trees(k)
            return [fixed[k]] * 4, [brute, rec, tree, eigen[k]]
        checks.append((f"n={k}: brute direct, brute recursive, trees, eigen = recurrence", one))
    return checks


# -- bijection -------------------------------------------------------------


def bijection_checks(max_n: int) -> List[Tuple[str, CheckFn]]:
    checks = []

    def figure1():
        dec = patterns.lrmax_decompose(FIGURE1_PERM)
        t = trees.perm_to_tree(FIGURE1_PERM)
        cycles = tuple(v.labels for v in t.internal_vertices())
        back = trees.tree_to_perm(t)
        return ((FIGURE1_A, FIGURE1_B, FIGURE1_CYCLES, FIGURE1_PERM),
                (dec.a, dec.b, cycles, back))

    checks.append(("Figure 1 profiles, cycles and inverse", figure1))
    for n in range(max_n + 1):
        def one(n=n):
            perms = [p for p in patterns.permutations_of(n) if patterns.satisfies_condition_i(p)]
            images = [trees.perm_to_tree(p) for p in perms]
            forward_ok = all(trees.tree_to_perm(t) == p for p, t in zip(perms, images))
            valid = list(trees.enumerate_cycle_trees(n))
            backward_ok = all(trees.perm_to_tree(trees.tree_to_perm(t)) == t for t in valid)
            weighted = trees.weighted_tree_count(n, [math.factorial(k - 1) for k in range(1, n + 1)])
            return ((True, True, True, len(perms), len(perms)),
                    (forward_ok, backward_ok, set(images) == set(valid), len(set(images)), weighted))
        checks.append((f"n={n}: round trips, image = valid cycle trees, cardinality", one))
    return checks


# -- trees -----------------------------------------------------------------


def tree_checks(max_n: int) -> List[Tuple[str, CheckFn]]:
    checks = []
    fixed = lagrange.fixed_point_sequence(max(max_n, 19) + 1)

    def catalan():
        return ([math.comb(2 * k, k) // (k + 1) for k in range(max_n + 1)],
                [sum(1 for _ in trees.enumerate_trees(k)) for k in range(max_n + 1)])

    def census():
        bad = []
        for k in range(max_n + 1):
            seen: Dict[Tuple[int, ...], int] = {}
            for t in trees.enumerate_trees(k):
                r = trees.outdegree_census(t)
                seen[r] = seen.get(r, 0) + 1
            if set(seen) != set(trees.outdegree_sequences(k)):
                bad.append((k, "census set"))
            for r, c in seen.items():
                if trees.tree_count_by_outdegree(r) != c:
                    bad.append((k, r))
        return [], bad

    def weighted_modes():
        rng = _rng("weights")
        bad = []
        for k in range(max_n + 1):
            w = [rng.randint(-9, 9) for _ in range(k)]
            if trees.weighted_tree_count(k, w, "enumerate") != trees.weighted_tree_count(k, w, "formula"):
                bad.append(k)
        return [], bad

    def weighted_fixed_formula():
        return ([fixed[k] for k in range(20)],
                [trees.weighted_tree_count(k, fixed, "formula") for k in range(20)])

    def weighted_fixed_enumerate():
        return ([fixed[k] for k in range(max_n + 1)],
                [trees.weighted_tree_count(k, fixed, "enumerate") for k in range(max_n + 1)])

    def factorial_weights():
        return ([sum(1 for p in patterns.permutations_of(k) if patterns.satisfies_condition_i(p))
                 for k in range(max_n + 1)],
                [trees.weighted_tree_count(k, [math.factorial(j - 1) for j in range(1, k + 1)])
                 for k in range(max_n + 1)])

    checks.append(("ordered tree totals are Catalan numbers", catalan))
    checks.append(("tree_count_by_outdegree matches enumeration census", census))
    checks.append(("weighted count: enumerate = formula, random weights", weighted_modes))
    checks.append(("weighted count (formula) with fixed point = a_{n+1}, n<=19", weighted_fixed_formula))
    checks.append(("weighted count (enumerate) with fixed point = a_{n+1}", weighted_fixed_enumerate))
    checks.append(("(k-1)! weights count condition-(i) permutations", factorial_weights))
    return checks


# -- agreement -------------------------------------------------------------


def agreement_checks(max_n: int) -> List[Tuple[str, CheckFn]]:
    n = max(max_n, 1)

    def unique():
        sol, pivots = series.solve_agreement(n)
        return (series.eigensequence(n), True), (sol, all(p != 0 for p in pivots))

    def disagreement():
        rng = _rng("agreement")
        eig = series.eigensequence(n)
        same = []
        for trial in range(100):
            coeffs = list(eig.coeffs)
            if trial % 2 == 0:
                idx = rng.randrange(n)
                coeffs[idx] += rng.choice([-3, -2, -1, 1, 2, 3])
            else:
                coeffs = [Fraction(rng.randint(-9, 9)) for _ in range(n)]
                if coeffs == list(eig.coeffs) or not any(coeffs):
                    coeffs[-1] += 1
            if series.transforms_agree(TruncatedSeries(coeffs), n):
                same.append(trial)
        return [], same

    return [
        (f"agreement_unique_solution({n}) = eigensequence, nonzero pivots", unique),
        (f"100 non-eigensequence prefixes give differing transforms (order {n})", disagreement),
    ]


SUITE_BUILDERS = {
    "series": series_checks,
    "counts": count_checks,
    "bijection": bijection_checks,
    "trees": tree_checks,
    "agreement": agreement_checks,
}


def run_suite(suite: str, max_n: int) -> VerificationReport:
    if suite != "all" and suite not in SUITE_BUILDERS:
        raise ValueError(f"unknown suite {suite!r}")
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if not 0 <= max_n <= SUITE_LIMITS[name]:
            raise LimitExceeded(f"suite {name} accepts max_n in 0..{SUITE_LIMITS[name]}, got {max_n}")
    report = VerificationReport(suite)
    for name in names:
        for check_name, fn in SUITE_BUILDERS[name](max_n):
            label = f"{name}: {check_name}" if suite == "all" else check_name
            report.checks.append(run_check(label, fn))
    return report
