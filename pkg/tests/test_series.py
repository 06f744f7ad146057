from fractions import Fraction
import math
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from eigenperm.errors import (
    NonInvertible,
    NonPositiveLeading,
    NotARationalSquare,
    OrderTooSmall,
)
from eigenperm.series import (
    TruncatedSeries,
    agreement_unique_solution,
    eigensequence,
    functional_sqrt,
    left_shift,
    rational_sqrt,
    revert_reciprocal,
    revert_reciprocal_modified,
    self_composition,
    series_compose,
    series_revert,
    solve_agreement,
    transforms_agree,
)

T = TruncatedSeries
EIGEN7 = [1, 1, 2, 6, 23, 104, 531]

X = sympy.Symbol("x")


def sympy_compose(outer, inner, n):
    """Independent oracle: expand outer(inner(x)) symbolically."""
    f = sum(sympy.Rational(c.numerator, c.denominator) * X**k for k, c in enumerate(outer, 1))
    g = sum(sympy.Rational(c.numerator, c.denominator) * X**k for k, c in enumerate(inner, 1))
    poly = sympy.Poly(sympy.expand(f.subs(X, g)), X)
    return [Fraction(int(sympy.fraction(poly.coeff_monomial(X**k))[0]),
                     int(sympy.fraction(poly.coeff_monomial(X**k))[1])) for k in range(1, n + 1)]


coeff_lists = st.lists(st.integers(-9, 9), min_size=1, max_size=8)


def test_series_stores_exact_rationals():
    s = T([1, "2/4", Fraction(3, 6)])
    assert s.coeffs == (Fraction(1), Fraction(1, 2), Fraction(1, 2))
    assert s.order == 3
    assert s.coeff(2) == Fraction(1, 2)
    with pytest.raises(TypeError):
        T([1.5])
    with pytest.raises(OrderTooSmall):
        T([])


def test_compose_hand_expansion():
    assert series_compose(T([1, 1]), T([1, 1]), 2) == T([1, 2])
    assert series_compose(T([1, 1, 0]), T([1, 1, 0]), 3) == T([1, 2, 2])


def test_compose_identity_outer():
    s = T([3, -1, 4, 1, -5])
    assert series_compose(T.identity(5), s, 5) == s


def test_compose_order_too_small():
    with pytest.raises(OrderTooSmall):
        series_compose(T([1, 1]), T([1, 1, 1]), 3)


@settings(max_examples=40, deadline=None)
@given(coeff_lists, coeff_lists)
def test_compose_matches_symbolic_expansion(outer, inner):
    n = min(len(outer), len(inner))
    got = series_compose(T(outer), T(inner), n)
    assert list(got) == sympy_compose(T(outer).coeffs[:n], T(inner).coeffs[:n], n)


def test_revert_catalan():
    assert series_revert(T([1, -1, 0, 0]), 4) == T([1, 1, 2, 5])
    catalan = [math.comb(2 * k, k) // (k + 1) for k in range(12)]
    assert series_revert(T([1, -1] + [0] * 10), 12).as_ints() == catalan


def test_revert_trivial():
    assert series_revert(T.identity(6), 6) == T.identity(6)
    assert series_revert(T([2, 0, 0]), 3) == T([Fraction(1, 2), 0, 0])
    with pytest.raises(NonInvertible):
        series_revert(T([0, 1]), 2)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=20).filter(lambda c: c[0] != 0))
def test_revert_is_two_sided_inverse(coeffs):
    f = T(coeffs)
    n = f.order
    g = series_revert(f, n)
    assert series_compose(f, g, n) == T.identity(n)
    assert series_compose(g, f, n) == T.identity(n)


def test_left_shift():
    assert left_shift(T([1, 1, 2, 6, 23])) == T([1, 2, 6, 23])
    assert left_shift(T([1, 0, 0])) == T([0, 0])
    assert left_shift(T([5, 7])) == T([7])
    with pytest.raises(OrderTooSmall):
        left_shift(T([1]))


def test_self_composition_examples():
    assert self_composition(T.identity(4), 4) == T.identity(4)
    assert self_composition(T([1, 1, 0]), 3) == T([1, 2, 2])
    assert self_composition(T(EIGEN7), 6).as_ints() == EIGEN7[1:]


def test_eigensequence_prefix():
    assert eigensequence(7).as_ints() == EIGEN7
    assert eigensequence(1).as_ints() == [1]


@pytest.mark.parametrize("n", [2, 5, 10, 25])
def test_eigensequence_shifts_under_self_composition(n):
    e = eigensequence(n + 1)
    assert self_composition(e, n) == left_shift(e)


def test_revert_reciprocal_examples():
    assert revert_reciprocal(T.zeros(5), 5) == T.identity(5)
    # (x/(1+x))^{<-1>} = x/(1-x)
    assert revert_reciprocal(T([1, 0, 0, 0]), 4).as_ints() == [1, 1, 1, 1]
    assert revert_reciprocal(T(EIGEN7), 7).as_ints() == EIGEN7


def test_revert_reciprocal_needs_enough_terms():
    assert revert_reciprocal(T([4]), 2).as_ints() == [1, 4]
    with pytest.raises(OrderTooSmall):
        revert_reciprocal(T([1, 2]), 5)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=5), min_size=1, max_size=10))
def test_revert_reciprocal_is_unital(coeffs):
    assert revert_reciprocal(T(coeffs), len(coeffs)).coeff(1) == 1


def test_revert_reciprocal_satisfies_functional_equation():
    # B = x (1 + A(B)) for B the transform of A
    rng = random.Random(3)
    for _ in range(10):
        a = T([rng.randint(-9, 9) for _ in range(10)])
        b = revert_reciprocal(a, 10)
        a_of_b = series_compose(a, b, 10)
        rhs = [Fraction(1)] + list(a_of_b.coeffs[:9])
        assert list(b) == rhs


def test_revert_reciprocal_modified_examples():
    assert revert_reciprocal_modified(T.zeros(4), 4) == T.zeros(4)
    assert revert_reciprocal_modified(T([1, 0, 0]), 3).as_ints() == [1, 1, 1]
    e = eigensequence(8)
    assert revert_reciprocal_modified(e, 7) == left_shift(e)
    with pytest.raises(OrderTooSmall):
        revert_reciprocal_modified(T([1, 1]), 3)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    with pytest.raises(NotARationalSquare):
        rational_sqrt(Fraction(2))
    with pytest.raises(NonPositiveLeading):
        rational_sqrt(Fraction(0))
    with pytest.raises(NonPositiveLeading):
        rational_sqrt(Fraction(-4))


def test_functional_sqrt_examples():
    assert functional_sqrt(T.identity(5), 5) == T.identity(5)
    assert functional_sqrt(left_shift(eigensequence(16)), 15) == eigensequence(15)
    with pytest.raises(NotARationalSquare):
        functional_sqrt(T([2, 1]), 2)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=12),
       st.sampled_from([Fraction(1), Fraction(2), Fraction(1, 3), Fraction(5, 2)]))
def test_functional_sqrt_inverts_self_composition(tail, lead):
    a = T([lead] + tail)
    n = a.order
    assert functional_sqrt(self_composition(a, n), n) == a


def test_agreement_solution_is_eigensequence():
    sol, pivots = solve_agreement(12)
    assert sol == eigensequence(12)
    assert len(pivots) == 11 and all(p != 0 for p in pivots)
    assert agreement_unique_solution(1).as_ints() == [1]
    assert agreement_unique_solution(7).as_ints() == EIGEN7


def test_perturbed_eigensequence_disagrees():
    rng = random.Random(11)
    e = list(eigensequence(10).coeffs)
    for idx in range(10):
        c = list(e)
        c[idx] += rng.choice([-2, -1, 1, 2])
        assert not transforms_agree(T(c), 10)
    assert transforms_agree(T(e), 10)


def test_zero_sequence_also_agrees():
    # the only other solution: leading coefficient 0 forces every later one to 0
    assert transforms_agree(T.zeros(10), 10)


def test_operations_are_deterministic():
    a = T([1, -3, 4, 0, 2, -7, 1, 1])
    assert revert_reciprocal(a, 8) == revert_reciprocal(a, 8)
    assert functional_sqrt(self_composition(a, 8), 8).coeffs == a.coeffs
