"""Frequency-form partitions and the explicit Lagrange-inversion form of
the revert-reciprocal transform.

For ``B = (x / (1 + A(x)))^{<-1>}`` Lagrange inversion gives ``b_1 = 1`` and

    b_{k+1} = 1/(k+1) * sum over partitions 1^{r_1} ... k^{r_k} of k of
              multinomial(k+1; k+1-sum(r), r_1, ..., r_k) * prod a_i^{r_i}

Each ``multinomial / (k+1)`` is the number of ordered trees with ``k``
edges whose outdegree census is ``(k+1-sum(r), r_1, ..., r_k)``, hence an
integer; the division is carried out (and checked) term by term.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

from .errors import OrderTooSmall, PartsSumMismatch, VerificationError


@dataclass(frozen=True)
class PartitionFreq:
    """Partition of ``n`` as multiplicities ``freqs = (r_1, ..., r_n)``."""

    n: int
    freqs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.freqs) != self.n or any(r < 0 for r in self.freqs):
            raise ValueError(f"bad frequency vector {self.freqs} for n={self.n}")
        if sum(i * r for i, r in enumerate(self.freqs, start=1)) != self.n:
            raise ValueError(f"{self.freqs} is not a partition of {self.n}")

    @property
    def num_parts(self) -> int:
        return sum(self.freqs)

    def parts(self) -> List[int]:
        """Parts in weakly decreasing order."""
        out: List[int] = []
        for i in range(self.n, 0, -1):
            out.extend([i] * self.freqs[i - 1])
        return out


def _freq_vectors(remaining: int, part: int, n: int) -> Iterator[List[int]]:
    if remaining == 0:
        yield [0] * (n - part + 1)
        return
    if part == n:
        if remaining == n:
            yield [1]
        return
    for r in range(remaining // part, -1, -1):
        for tail in _freq_vectors(remaining - r * part, part + 1, n):
            yield [r] + tail


def partitions_freq(n: int) -> Iterator[PartitionFreq]:
    """All partitions of ``n`` in frequency form.

    Order: lexicographically decreasing frequency vectors, so the
    all-ones partition comes first and the single part ``n`` last.
    """
    if n < 1:
        raise ValueError("n must be positive")
    for vec in _freq_vectors(n, 1, n):
        yield PartitionFreq(n, tuple(vec))


def multinomial(total: int, parts: Sequence[int]) -> int:
    """``total! / prod(part!)`` for non-negative ``parts`` summing to ``total``."""
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be non-negative")
    if sum(parts) != total:
        raise PartsSumMismatch(f"parts {list(parts)} do not sum to {total}")
    result, left = 1, total
    for p in parts:
        result *= math.comb(left, p)
        left -= p
    return result


def partition_tree_weight(p: PartitionFreq) -> int:
    """``multinomial(k+1; k+1-sum(r), r_1..r_k) / (k+1)`` for a partition of ``k``.

    Raises :class:`VerificationError` if the division is not exact.
    """
    k = p.n
    m = multinomial(k + 1, (k + 1 - p.num_parts,) + p.freqs)
    q, rem = divmod(m, k + 1)
    if rem:
        raise VerificationError(f"multinomial {m} for {p.freqs} not divisible by {k + 1}")
    return q


def _lagrange_term(a: Sequence[int], k: int) -> int:
    total = 0
    for p in partitions_freq(k):
        mono = 1
        for i, r in enumerate(p.freqs, start=1):
            if r:
                mono *= a[i - 1] ** r
        total += partition_tree_weight(p) * mono
    return total


def _as_int(x) -> int:
    q = Fraction(x)
    if q.denominator != 1:
        raise ValueError(f"integer sequence expected, got {x}")
    return q.numerator


def lagrange_revert_reciprocal(a: Sequence[int], n: int) -> List[int]:
    """First ``n`` terms of the revert-reciprocal transform of the integer
    sequence ``a`` (only ``a_1..a_{n-1}`` are read)."""
    if n < 1:
        raise OrderTooSmall("n must be positive")
    if len(a) < n - 1:
        raise OrderTooSmall(f"need {n - 1} input terms, got {len(a)}")
    a = [_as_int(x) for x in a]
    return [1] + [_lagrange_term(a, k) for k in range(1, n)]


def fixed_point_sequence(n: int) -> List[int]:
    """First ``n`` terms of the unique fixed point of revert-reciprocal."""
    if n < 1:
        raise OrderTooSmall("n must be positive")
    a = [1]
    for k in range(1, n):
        a.append(_lagrange_term(a, k))
    return a
