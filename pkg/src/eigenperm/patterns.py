"""Permutations as words and the barred pattern 3-5bar-2-4-1.

A word avoids 3-5bar-2-4-1 when every occurrence of the classical pattern
3241 sits inside an occurrence of 35241, i.e. some entry strictly between
the "3" and the "2" is larger than the "4".

Two independent checkers are provided: :func:`avoids_barred_direct` scans
occurrences, :func:`avoids_barred_recursive` uses the left-to-right-maxima
characterization (set-increasing blocks, each block avoiding recursively).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from .errors import EmptyPermutation, LimitExceeded, ParseError

Perm = Tuple[int, ...]

DEFAULT_MAX_N = 10


def as_permutation(word: Sequence[int]) -> Perm:
    perm = tuple(int(x) for x in word)
    if any(x < 1 for x in perm):
        raise ValueError(f"permutation entries must be positive: {perm}")
    if len(set(perm)) != len(perm):
        raise ValueError(f"permutation entries must be distinct: {perm}")
    return perm


def is_standard(word: Sequence[int]) -> bool:
    return sorted(word) == list(range(1, len(word) + 1))


def parse_permutation(text: str) -> Perm:
    """Parse the space-separated text form, e.g. ``"3 1 2 5 4"``."""
    try:
        return as_permutation(int(tok) for tok in text.split())
    except ValueError as exc:
        raise ParseError(f"cannot parse permutation {text!r}: {exc}") from None


def format_permutation(word: Sequence[int]) -> str:
    return " ".join(str(x) for x in word)


def standardize(word: Sequence[int]) -> Perm:
    """Replace the smallest entry by 1, the next smallest by 2, and so on."""
    rank = {v: i for i, v in enumerate(sorted(word), start=1)}
    return tuple(rank[v] for v in word)


def destandardize(pattern: Sequence[int], support: Sequence[int]) -> Perm:
    """Inverse of :func:`standardize`: the word on ``support`` order-isomorphic
    to the standard word ``pattern``."""
    values = sorted(support)
    if len(values) != len(pattern):
        raise ValueError("support size differs from pattern length")
    return tuple(values[i - 1] for i in pattern)


@dataclass(frozen=True)
class LRMaxDecomposition:
    """Segmentation ``m_1 L_1 / m_2 L_2 / ... / m_r L_r`` of a word at its
    left-to-right maxima."""

    segments: Tuple[Tuple[int, Perm], ...]

    @property
    def maxima(self) -> Tuple[int, ...]:
        return tuple(m for m, _ in self.segments)

    @property
    def blocks(self) -> Tuple[Perm, ...]:
        return tuple(block for _, block in self.segments)

    @property
    def a(self) -> Tuple[int, ...]:
        """Segment lengths ``|m_i L_i|``."""
        return tuple(1 + len(block) for _, block in self.segments)

    @property
    def b(self) -> Tuple[int, ...]:
        """Gaps ``m_i - m_{i-1}`` with ``m_0 = 0``."""
        ms = (0,) + self.maxima
        return tuple(ms[i] - ms[i - 1] for i in range(1, len(ms)))

    def word(self) -> Perm:
        out: List[int] = []
        for m, block in self.segments:
            out.append(m)
            out.extend(block)
        return tuple(out)

    def satisfies_ballot(self) -> bool:
        sa = sb = 0
        for ai, bi in zip(self.a, self.b):
            sa += ai
            sb += bi
            if sa > sb:
                return False
        return True


def lrmax_decompose(word: Sequence[int]) -> LRMaxDecomposition:
    if not word:
        raise EmptyPermutation("cannot decompose the empty permutation")
    segments: List[Tuple[int, List[int]]] = []
    for x in word:
        if not segments or x > segments[-1][0]:
            segments.append((x, []))
        else:
            segments[-1][1].append(x)
    return LRMaxDecomposition(tuple((m, tuple(block)) for m, block in segments))


def satisfies_condition_i(word: Sequence[int]) -> bool:
    """Blocks between left-to-right maxima are set-increasing: every entry
    of an earlier nonempty block is below every entry of a later one."""
    if not word:
        return True
    prev_max = None
    for block in lrmax_decompose(word).blocks:
        if not block:
            continue
        if prev_max is not None and min(block) < prev_max:
            return False
        prev_max = max(block)
    return True


class SparseTableMax:
    """Static range-maximum queries in O(1) after O(n log n) preprocessing."""

    def __init__(self, values: Sequence[int]):
        self.n = len(values)
        levels = [list(values)]
        width = 1
        while 2 * width <= self.n:
            prev = levels[-1]
            levels.append([max(prev[i], prev[i + width]) for i in range(self.n - 2 * width + 1)])
            width *= 2
        self._levels = levels

    def query(self, lo: int, hi: int) -> Optional[int]:
        """Maximum of ``values[lo..hi]`` inclusive, or ``None`` if empty."""
        if lo > hi:
            return None
        level = (hi - lo + 1).bit_length() - 1
        row = self._levels[level]
        return max(row[lo], row[hi - (1 << level) + 1])


def occurrences_3241(word: Sequence[int]) -> List[Tuple[int, int, int, int]]:
    """All 1-based index quadruples ``i<j<k<l`` with ``p_k > p_i > p_j > p_l``."""
    p = word
    out = []
    for i, j, k, l in itertools.combinations(range(len(p)), 4):
        if p[k] > p[i] > p[j] > p[l]:
            out.append((i + 1, j + 1, k + 1, l + 1))
    return out


def avoids_barred_direct(word: Sequence[int]) -> bool:
    """Every 3241 occurrence ``(i,j,k,l)`` has some ``i<h<j`` with ``p_h > p_k``."""
    p = word
    n = len(p)
    if n < 4:
        return True
    gaps = SparseTableMax(p)
    # suffix_min[t] = min(p[t:]), so a valid "1" after position k exists iff suffix_min[k+1] < p_j
    suffix_min = [0] * (n + 1)
    suffix_min[n] = n + max(p) + 1
    for t in range(n - 1, -1, -1):
        suffix_min[t] = min(p[t], suffix_min[t + 1])
    for i in range(n - 3):
        for j in range(i + 1, n - 2):
            if p[j] >= p[i]:
                continue
            gap = gaps.query(i + 1, j - 1)
            for k in range(j + 1, n - 1):
                if p[k] > p[i] and (gap is None or gap < p[k]) and suffix_min[k + 1] < p[j]:
                    return False
    return True


def avoids_barred_recursive(word: Sequence[int]) -> bool:
    """Left-to-right-maxima characterization of 3-5bar-2-4-1 avoidance."""
    if not word:
        return True
    if not satisfies_condition_i(word):
        return False
    return all(avoids_barred_recursive(standardize(block))
               for block in lrmax_decompose(word).blocks if len(block) >= 4)


CHECKERS = {
    "direct": avoids_barred_direct,
    "recursive": avoids_barred_recursive,
}


def permutations_of(n: int) -> Iterator[Perm]:
    """Standard permutations of ``[n]`` in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def count_avoiders(
    n: int,
    method: str = "direct",
    max_n: int = DEFAULT_MAX_N,
    long_run: bool = False,
    progress: Optional[Callable[[int, int], None]] = None,
) -> int:
    """Brute-force ``|S_n(3-5bar-2-4-1)|`` with the chosen checker.

    ``long_run`` permits one size beyond ``max_n``.  ``progress`` is called
    with ``(first_entry, n)`` as each first-entry slice is started.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    limit = max_n + (1 if long_run else 0)
    if n > limit:
        raise LimitExceeded(f"n={n} exceeds enumeration limit {limit}")
    check = CHECKERS[method]
    total = 0
    last_first = None
    for p in permutations_of(n):
        if progress is not None and p[0] != last_first:
            last_first = p[0]
            progress(last_first, n)
        if check(p):
            total += 1
    return total
