import math
import random
from functools import lru_cache

import pytest

from eigenperm.errors import OrderTooSmall, PartsSumMismatch
from eigenperm.lagrange import (
    PartitionFreq,
    fixed_point_sequence,
    lagrange_revert_reciprocal,
    multinomial,
    partition_tree_weight,
    partitions_freq,
)
from eigenperm.series import TruncatedSeries, eigensequence, revert_reciprocal
from eigenperm.trees import tree_count_by_outdegree


@lru_cache(maxsize=None)
def brute_partition_count(n, largest):
    """Partitions of n into parts <= largest, by the textbook recursion."""
    if n == 0:
        return 1
    return sum(brute_partition_count(n - p, p) for p in range(1, min(n, largest) + 1))


def test_partitions_small():
    assert [p.freqs for p in partitions_freq(1)] == [(1,)]
    assert [p.freqs for p in partitions_freq(3)] == [(3, 0, 0), (1, 1, 0), (0, 0, 1)]


@pytest.mark.parametrize("n", range(1, 31))
def test_partition_stream_is_complete_and_valid(n):
    parts = list(partitions_freq(n))
    assert len(parts) == brute_partition_count(n, n)
    vecs = [p.freqs for p in parts]
    assert len(set(vecs)) == len(vecs)
    assert all(sum(i * r for i, r in enumerate(v, 1)) == n for v in vecs)
    assert vecs == sorted(vecs, reverse=True)


def test_partition_count_ten():
    assert sum(1 for _ in partitions_freq(10)) == 42


def test_partition_freq_validation():
    assert PartitionFreq(4, (0, 2, 0, 0)).parts() == [2, 2]
    with pytest.raises(ValueError):
        PartitionFreq(3, (1, 0, 0))


def test_multinomial():
    assert multinomial(4, [2, 1, 1]) == math.factorial(4) // (2 * 1 * 1)
    assert multinomial(4, [2, 1, 1]) == 12
    assert multinomial(7, [7]) == 1
    assert multinomial(2, [1, 1]) == 2
    assert multinomial(0, []) == 1
    with pytest.raises(PartsSumMismatch):
        multinomial(3, [1, 1])


@pytest.mark.parametrize("k", range(1, 16))
def test_per_partition_weight_is_a_tree_count(k):
    for p in partitions_freq(k):
        r = (k + 1 - p.num_parts,) + p.freqs
        assert partition_tree_weight(p) == tree_count_by_outdegree(r)
        assert partition_tree_weight(p) * (k + 1) == multinomial(k + 1, r)


def test_lagrange_examples():
    assert lagrange_revert_reciprocal([1], 2) == [1, 1]
    assert lagrange_revert_reciprocal([1, 1], 3) == [1, 1, 2]
    e = [1, 1, 2, 6, 23, 104, 531]
    assert lagrange_revert_reciprocal(e, 7) == e
    with pytest.raises(OrderTooSmall):
        lagrange_revert_reciprocal([1], 4)
    with pytest.raises(ValueError):
        lagrange_revert_reciprocal([TruncatedSeries(["1/2"]).coeff(1)], 2)


def test_lagrange_matches_series_transform():
    rng = random.Random(2024)
    for _ in range(50):
        a = [rng.randint(-9, 9) for _ in range(12)]
        assert lagrange_revert_reciprocal(a, 12) == revert_reciprocal(TruncatedSeries(a), 12).as_ints()


def test_fixed_point_sequence():
    assert fixed_point_sequence(1) == [1]
    assert fixed_point_sequence(7) == [1, 1, 2, 6, 23, 104, 531]
    assert fixed_point_sequence(20) == eigensequence(20).as_ints()
