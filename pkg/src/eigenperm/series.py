"""Exact truncated power series with zero constant term.

A :class:`TruncatedSeries` of order ``N`` stores the coefficients of
``x, x**2, ..., x**N`` as :class:`fractions.Fraction`.  Indices are
1-based at the API level (``s.coeff(1)`` is the linear coefficient) to
match the usual ``(a_n)_{n>=1}`` indexing of integer sequences.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from .errors import (
    NonInvertible,
    NonPositiveLeading,
    NotARationalSquare,
    OrderTooSmall,
    VerificationError,
)

Number = Union[int, Fraction, str]


def as_coefficient(value: Number) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean coefficient {value!r}")
    return Fraction(value)


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``c_1..c_N`` of ``c_1 x + ... + c_N x**N``."""

    coeffs: Tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Number]):
        values = tuple(as_coefficient(c) for c in coeffs)
        if not values:
            raise OrderTooSmall("a truncated series needs order >= 1")
        object.__setattr__(self, "coeffs", values)

    @classmethod
    def zeros(cls, order: int) -> "TruncatedSeries":
        return cls([0] * order)

    @classmethod
    def identity(cls, order: int) -> "TruncatedSeries":
        return cls([1] + [0] * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coeff(self, k: int) -> Fraction:
        """Coefficient of ``x**k`` (``1 <= k <= order``)."""
        if not 1 <= k <= self.order:
            raise IndexError(f"coefficient index {k} outside 1..{self.order}")
        return self.coeffs[k - 1]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def truncate(self, n: int) -> "TruncatedSeries":
        _require_order(self, n)
        return TruncatedSeries(self.coeffs[:n])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def as_ints(self) -> List[int]:
        if not self.is_integral():
            raise ValueError("series has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    def __repr__(self) -> str:
        return "TruncatedSeries([" + ", ".join(str(c) for c in self.coeffs) + "])"


def _require_order(s: TruncatedSeries, n: int) -> None:
    if n < 1:
        raise OrderTooSmall(f"requested order {n} must be positive")
    if s.order < n:
        raise OrderTooSmall(f"series has order {s.order}, need at least {n}")


def _mul_trunc(p: Sequence[Fraction], q: Sequence[Fraction], deg: int) -> List[Fraction]:
    # 0-based coefficient lists (index = power of x), result truncated at x**deg
    out = [Fraction(0)] * (deg + 1)
    for i, pi in enumerate(p[: deg + 1]):
        if not pi:
            continue
        for j in range(min(len(q), deg + 1 - i)):
            if q[j]:
                out[i + j] += pi * q[j]
    return out


class _PowerTable:
    """Coefficients ``[x^m] g^j`` of the powers of a series being built
    one coefficient at a time.

    Once ``g_1..g_{k-1}`` are fixed, ``[x^k] g^j`` is determined for every
    ``j >= 2``; :meth:`advance` fills exactly those entries.
    """

    def __init__(self, n: int):
        self.n = n
        self.g = [Fraction(0)] * (n + 1)
        self.p = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]

    def set(self, k: int, value: Fraction) -> None:
        self.g[k] = value
        self.p[1][k] = value

    def advance(self, k: int) -> None:
        g, p = self.g, self.p
        for j in range(2, k + 1):
            prev = p[j - 1]
            total = Fraction(0)
            for i in range(1, k - j + 2):
                if g[i] and prev[k - i]:
                    total += g[i] * prev[k - i]
            p[j][k] = total


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries, n: int) -> TruncatedSeries:
    """Coefficients of ``outer(inner(x))`` through ``x**n`` (Horner scheme)."""
    _require_order(outer, n)
    _require_order(inner, n)
    g = [Fraction(0)] + list(inner.coeffs[:n])
    # acc = o_j + inner * acc, kept to degree n-1 since a final factor of inner follows
    acc = [outer.coeffs[n - 1]]
    for j in range(n - 1, 0, -1):
        acc = _mul_trunc(g, acc, n - 1)
        acc[0] += outer.coeffs[j - 1]
    result = _mul_trunc(g, acc, n)
    return TruncatedSeries(result[1 : n + 1])


def series_revert(f: TruncatedSeries, n: int) -> TruncatedSeries:
    """Compositional inverse of ``f`` through ``x**n``.

    Solved term by term: ``[x^k] f(g(x))`` equals ``f_1 g_k`` plus a
    quantity that only involves ``g_1..g_{k-1}``.
    """
    _require_order(f, n)
    f1 = f.coeffs[0]
    if f1 == 0:
        raise NonInvertible("series with zero linear coefficient has no compositional inverse")
    table = _PowerTable(n)
    table.set(1, 1 / f1)
    for k in range(2, n + 1):
        table.advance(k)
        rest = sum((f.coeffs[j - 1] * table.p[j][k] for j in range(2, k + 1)), Fraction(0))
        table.set(k, -rest / f1)
    return TruncatedSeries(table.g[1:])


def self_composition(a: TruncatedSeries, n: int) -> TruncatedSeries:
    return series_compose(a, a, n)


def left_shift(a: TruncatedSeries) -> TruncatedSeries:
    """Drop the first coefficient: ``(a_2, a_3, ..., a_N)``."""
    if a.order < 2:
        raise OrderTooSmall("left shift needs order >= 2")
    return TruncatedSeries(a.coeffs[1:])


def reciprocal_frame(a: TruncatedSeries, n: int) -> TruncatedSeries:
    """The series ``x / (1 + A(x))`` through ``x**n``.

    Needs ``a_1..a_{n-1}``; the reciprocal ``1/(1+A)`` is expanded with the
    usual truncated recurrence ``c_m = -(a_1 c_{m-1} + ... + a_m c_0)``.
    """
    if n < 1:
        raise OrderTooSmall(f"requested order {n} must be positive")
    if n > 1:
        _require_order(a, n - 1)
    c = [Fraction(1)]
    for m in range(1, n):
        c.append(-sum((a.coeffs[i - 1] * c[m - i] for i in range(1, m + 1)), Fraction(0)))
    return TruncatedSeries(c)


def revert_reciprocal(a: TruncatedSeries, n: int) -> TruncatedSeries:
    """``(x / (1 + A(x)))^{<-1>}`` through ``x**n``.  Uses ``a_1..a_{n-1}``."""
    return series_revert(reciprocal_frame(a, n), n)


def revert_reciprocal_modified(a: TruncatedSeries, n: int) -> TruncatedSeries:
    """Revert-reciprocal with its forced leading 1 removed.

    ``output[k] = revert_reciprocal(a)[k + 1]``, so order ``n`` in and out.
    """
    _require_order(a, n)
    return left_shift(revert_reciprocal(a, n + 1))


def eigensequence(n: int) -> TruncatedSeries:
    """The unital sequence whose self-composition is its own left shift.

    ``a_{k+1} = [x^k] A(A(x))``, which only involves ``a_1..a_k``.
    """
    if n < 1:
        raise OrderTooSmall(f"requested order {n} must be positive")
    table = _PowerTable(n)
    table.set(1, Fraction(1))
    for k in range(1, n):
        table.advance(k)
        value = sum((table.g[j] * table.p[j][k] for j in range(1, k + 1)), Fraction(0))
        table.set(k + 1, value)
    return TruncatedSeries(table.g[1:])


def rational_sqrt(q: Fraction) -> Fraction:
    """Positive rational square root of ``q``; raise if there is none."""
    q = as_coefficient(q)
    if q <= 0:
        raise NonPositiveLeading(f"leading coefficient {q} is not positive")
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise NotARationalSquare(f"{q} has no rational square root")
    return Fraction(rn, rd)


def functional_sqrt(b: TruncatedSeries, n: int) -> TruncatedSeries:
    """Series ``A`` with ``A(A(x)) = b(x)`` through ``x**n`` and ``a_1 > 0``.

    ``[x^k] A(A(x)) = (a_1 + a_1**k) a_k + (terms in a_1..a_{k-1})``, and the
    pivot ``a_1 + a_1**k`` is positive, so each step is a linear solve.
    """
    _require_order(b, n)
    a1 = rational_sqrt(b.coeffs[0])
    table = _PowerTable(n)
    table.set(1, a1)
    for k in range(2, n + 1):
        table.advance(k)
        rest = sum((table.g[j] * table.p[j][k] for j in range(2, k)), Fraction(0))
        pivot = a1 + table.p[k][k]
        table.set(k, (b.coeffs[k - 1] - rest) / pivot)
    return TruncatedSeries(table.g[1:])


def transforms_agree(a: TruncatedSeries, n: int) -> bool:
    """Whether the modified revert-reciprocal and self-composition of ``a``
    coincide through ``x**n``."""
    return revert_reciprocal_modified(a, n) == self_composition(a, n)


def solve_agreement(n: int) -> Tuple[TruncatedSeries, List[Fraction]]:
    """Solve ``revert_reciprocal_modified(A) = self_composition(A)`` for a
    unital ``A``, one coefficient at a time.

    At step ``k >= 2`` the order-``k`` residual is affine in ``a_k``; its
    slope (the pivot) is read off from two evaluations and must be nonzero
    for the step to have exactly one solution.  Returns the solution and
    the pivots of steps ``2..n``.
    """
    if n < 1:
        raise OrderTooSmall(f"requested order {n} must be positive")
    coeffs = [Fraction(1)]

    def residual(k: int, trial: Fraction) -> Fraction:
        cand = TruncatedSeries(coeffs[: k - 1] + [trial])
        return (revert_reciprocal_modified(cand, k).coeffs[k - 1]
                - self_composition(cand, k).coeffs[k - 1])

    # step 1: a_1 = a_1**2, pinned to the unital root
    if residual(1, Fraction(1)) != 0:
        raise VerificationError("unital leading coefficient fails the order-1 agreement equation")

    pivots: List[Fraction] = []
    for k in range(2, n + 1):
        r0 = residual(k, Fraction(0))
        pivot = residual(k, Fraction(1)) - r0
        if pivot == 0:
            raise VerificationError(f"agreement step {k} has vanishing pivot; solution not unique")
        value = -r0 / pivot
        if residual(k, value) != 0:
            raise VerificationError(f"agreement step {k} residual is not affine in a_{k}")
        pivots.append(pivot)
        coeffs.append(value)
    return TruncatedSeries(coeffs), pivots


def agreement_unique_solution(n: int) -> TruncatedSeries:
    return solve_agreement(n)[0]
