import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from eigenperm.errors import EmptyPermutation, LimitExceeded, ParseError
from eigenperm.patterns import (
    SparseTableMax,
    avoids_barred_direct,
    avoids_barred_recursive,
    count_avoiders,
    destandardize,
    format_permutation,
    lrmax_decompose,
    occurrences_3241,
    parse_permutation,
    permutations_of,
    satisfies_condition_i,
    standardize,
)

FIG1 = (3, 1, 2, 5, 4, 11, 7, 6, 8, 12, 14, 13, 10, 9)


def naive_avoids(p):
    """Literal definition: every 3241 occurrence extends to a 35241."""
    n = len(p)
    for i, j, k, l in itertools.combinations(range(n), 4):
        if p[k] > p[i] > p[j] > p[l]:
            if not any(p[h] > p[k] for h in range(i + 1, j)):
                return False
    return True


@st.composite
def words(draw, max_len=9):
    n = draw(st.integers(0, max_len))
    return tuple(draw(st.lists(st.integers(1, 60), min_size=n, max_size=n, unique=True)))


def test_standardize():
    assert standardize((5, 2, 8)) == (2, 1, 3)
    assert standardize(()) == ()
    assert standardize((13, 10, 9)) == (3, 2, 1)
    assert destandardize((2, 1, 3), [9, 4, 6]) == (6, 4, 9)


@settings(max_examples=100, deadline=None)
@given(words())
def test_standardize_is_order_isomorphic(w):
    s = standardize(w)
    assert sorted(s) == list(range(1, len(w) + 1))
    for x, y in itertools.combinations(range(len(w)), 2):
        assert (w[x] < w[y]) == (s[x] < s[y])
    assert destandardize(s, w) == w


def test_lrmax_decompose_figure1():
    d = lrmax_decompose(FIG1)
    assert d.maxima == (3, 5, 11, 12, 14)
    assert d.a == (3, 2, 4, 1, 4)
    assert d.b == (3, 2, 6, 1, 2)
    assert d.blocks == ((1, 2), (4,), (7, 6, 8), (), (13, 10, 9))
    assert d.word() == FIG1


def test_lrmax_decompose_trivial():
    d = lrmax_decompose((1, 2, 3))
    assert d.a == (1, 1, 1) and d.b == (1, 1, 1)
    d = lrmax_decompose((3, 2, 1))
    assert d.segments == ((3, (2, 1)),)
    assert d.a == (3,) and d.b == (3,)
    with pytest.raises(EmptyPermutation):
        lrmax_decompose(())


@settings(max_examples=100, deadline=None)
@given(words().filter(bool))
def test_lrmax_segments_reconstruct(w):
    d = lrmax_decompose(w)
    assert d.word() == w
    assert list(d.maxima) == sorted(d.maxima) and d.maxima[-1] == max(w)
    for m, block in d.segments:
        assert all(x < m for x in block)


def test_ballot_condition_on_condition_i_permutations():
    for n in range(1, 8):
        for p in permutations_of(n):
            if satisfies_condition_i(p):
                d = lrmax_decompose(p)
                assert d.satisfies_ballot()
                assert sum(d.a) == sum(d.b) == n


def test_occurrences():
    assert occurrences_3241((3, 2, 4, 1)) == [(1, 2, 3, 4)]
    assert occurrences_3241((3, 5, 2, 4, 1)) == [(1, 3, 4, 5)]
    assert occurrences_3241((1, 2, 3, 4)) == []


def test_direct_checker_examples():
    assert not avoids_barred_direct((3, 2, 4, 1))
    assert avoids_barred_direct((3, 5, 2, 4, 1))
    for n in range(4):
        assert all(avoids_barred_direct(p) for p in permutations_of(n))


def test_recursive_checker_examples():
    assert not avoids_barred_recursive((3, 2, 4, 1))
    assert avoids_barred_recursive(FIG1)
    assert avoids_barred_recursive(tuple(range(1, 12)))
    assert avoids_barred_recursive(())


@pytest.mark.parametrize("n", range(0, 8))
def test_direct_checker_matches_literal_definition(n):
    for p in permutations_of(n):
        assert avoids_barred_direct(p) == naive_avoids(p)


@pytest.mark.parametrize("n", range(0, 9))
def test_checkers_agree_exhaustively(n):
    for p in permutations_of(n):
        assert avoids_barred_direct(p) == avoids_barred_recursive(p)


@settings(max_examples=150, deadline=None)
@given(words(max_len=10))
def test_avoidance_invariant_under_standardization(w):
    s = standardize(w)
    assert avoids_barred_direct(w) == avoids_barred_direct(s)
    assert avoids_barred_recursive(w) == avoids_barred_recursive(s)


@pytest.mark.parametrize("n", range(0, 8))
def test_prepending_new_maximum_preserves_avoidance(n):
    for p in permutations_of(n):
        assert avoids_barred_direct(p) == avoids_barred_direct((n + 1,) + p)


def test_sparse_table_against_slices():
    rng = random.Random(5)
    vals = [rng.randint(0, 100) for _ in range(37)]
    rmq = SparseTableMax(vals)
    for lo in range(len(vals)):
        for hi in range(lo, len(vals)):
            assert rmq.query(lo, hi) == max(vals[lo : hi + 1])
    assert rmq.query(5, 4) is None


def test_count_avoiders_values():
    assert count_avoiders(0) == 1
    assert count_avoiders(4) == 23
    assert count_avoiders(6) == 531
    assert count_avoiders(6, "recursive") == 531
    with pytest.raises(LimitExceeded):
        count_avoiders(11)
    with pytest.raises(LimitExceeded):
        count_avoiders(5, max_n=4)


def test_count_progress_callback():
    seen = []
    count_avoiders(4, progress=lambda first, n: seen.append(first))
    assert seen == [1, 2, 3, 4]


def test_permutation_text_format():
    p = parse_permutation("3 1 2 5 4 11 7 6 8 12 14 13 10 9")
    assert p == FIG1
    assert format_permutation(p) == "3 1 2 5 4 11 7 6 8 12 14 13 10 9"
    with pytest.raises(ParseError):
        parse_permutation("1 2 2")
    with pytest.raises(ParseError):
        parse_permutation("1 x")
