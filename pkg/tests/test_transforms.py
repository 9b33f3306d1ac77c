from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from colorcomp.compositions import iter_compositions
from colorcomp.seqcore import Coloration
from colorcomp.series import interpolated_invert_series, series_div, series_mul
from colorcomp.transforms import (
    InsufficientTermsError,
    RepresentationError,
    coloration_of,
    count_from_coloration,
    invert,
    invert_interpolated,
    invert_interpolated_exact,
)
from oracles import colored_count, fibonacci

CATALAN = (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862)


@pytest.mark.parametrize(
    "a, x, expected",
    [
        (range(1, 10), 1, (1, 3, 8, 21, 55, 144, 377, 987, 2584)),
        ((4, 7, 1), 0, (4, 7, 1)),
        ((1, 2, 3, 4, 5, 6), -1, (1, 1, 0, -1, -1, 0)),
        (CATALAN[:8], 1, (1, 2, 5, 14, 42, 132, 429, 1430)),
    ],
)
def test_invert_interpolated_examples(a, x, expected):
    a = tuple(a)
    assert invert_interpolated(a, x, len(a)).terms == expected


def test_invert_examples():
    # compositions with parts 1 and 2: brute force gives Fibonacci shifts
    expected = tuple(colored_count((1, 1) + (0,) * 4, n) for n in range(1, 7))
    assert expected == (1, 2, 3, 5, 8, 13)
    assert invert((1, 1, 0, 0, 0, 0)).terms == expected
    assert invert((1, 1, 1, 1, 1)).terms == (1, 2, 4, 8, 16)
    assert invert((0,) * 7).terms == (0,) * 7


def test_insufficient_terms():
    with pytest.raises(InsufficientTermsError):
        invert_interpolated((1, 2), 1, 3)


def test_rational_parameter():
    exact = invert_interpolated_exact((1, 1, 1), Fraction(1, 2), 3)
    assert exact == (1, Fraction(3, 2), Fraction(9, 4))
    with pytest.raises(RepresentationError):
        invert_interpolated((1, 1, 1), Fraction(1, 2), 3)
    # rational parameter with an integral outcome is fine
    assert invert_interpolated((2, 0, 0), Fraction(1, 2), 3).terms == (2, 2, 2)


def test_generating_function_via_sympy():
    t = sympy.Symbol("t")
    a = (3, -1, 4, 1, -5, 9)
    at = sum(c * t**i for i, c in enumerate(a))
    for x in (-2, 1, sympy.Rational(2, 3)):
        ser = sympy.series(at / (1 - x * t * at), t, 0, len(a)).removeO()
        coeffs = tuple(Fraction(str(ser.coeff(t, i))) for i in range(len(a)))
        assert invert_interpolated_exact(a, Fraction(str(x)), len(a)) == coeffs


small = st.lists(st.integers(-4, 4), min_size=1, max_size=12)


@settings(max_examples=60)
@given(small, st.integers(-2, 2), st.integers(-2, 2))
def test_group_law(a, x, y):
    lhs = invert_interpolated(invert_interpolated(a, y), x)
    assert lhs == invert_interpolated(a, x + y)


@given(small)
def test_invert_then_inverse_is_identity(a):
    assert invert_interpolated(invert(a), -1).terms == tuple(a)


@given(small, st.integers(-3, 3))
def test_matches_series_division(a, x):
    assert list(invert_interpolated(a, x)) == interpolated_invert_series(a, x, len(a))


def test_series_helpers():
    # 1/(1-t) = 1 + t + t^2 + ...
    assert series_div([1], [1, -1], 5) == [1] * 5
    assert series_mul([1, 1], [1, 1], 4) == [1, 2, 1, 0]
    with pytest.raises(ZeroDivisionError):
        series_div([1], [0, 1], 3)


@pytest.mark.parametrize(
    "a, prefix",
    [
        ((1, 2, 3, 5, 8, 13), (1, 1, 0, 0, 0, 0)),
        ((1, 1, 2, 3, 5, 8, 13), (1, 0, 1, 0, 1, 0, 1)),
        ((0, 1, 1, 2, 3, 5, 8, 13), (0, 1, 1, 1, 1, 1, 1, 1)),
    ],
)
def test_coloration_of_fibonacci(a, prefix):
    verdict = coloration_of(a)
    assert verdict.is_coloration
    assert verdict.coloration == Coloration(prefix, (0,))
    assert verdict.witness_index is None


def test_coloration_of_naturals_refuted():
    verdict = coloration_of((1, 2, 3, 4, 5, 6))
    assert not verdict.is_coloration
    assert (verdict.witness_index, verdict.witness_value) == (3, -1)
    assert verdict.inverse.terms == (1, 1, 0, -1, -1, 0)


def test_fibonacci_shift_three_is_refuted():
    # F_3, F_4, ...: first inverse term is F_n - F_{n-1}^2 < 0
    f = fibonacci(20)
    verdict = coloration_of(f[3:15])
    assert not verdict.is_coloration
    assert verdict.witness_index == 1


def test_count_from_coloration_examples():
    assert count_from_coloration(Coloration.finite(CATALAN), 8).terms == (1, 2, 5, 14, 42, 132, 429, 1430)
    assert count_from_coloration(Coloration.constant(2), 5).terms == (2, 6, 18, 54, 162)
    assert count_from_coloration(Coloration.constant(0), 6).terms == (0,) * 6
    with pytest.raises(ValueError):
        count_from_coloration(Coloration.constant(1), 0)


def test_count_from_coloration_matches_enumeration(rng):
    for _ in range(25):
        xs = tuple(rng.randint(0, 3) for _ in range(3)) + (rng.randint(0, 1),)
        X = Coloration(xs[:3], xs[3:])
        counts = count_from_coloration(X, 8)
        for n in range(1, 9):
            assert counts[n - 1] == sum(1 for _ in iter_compositions(X, n)) == colored_count(X.values(n), n)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=6), st.lists(st.integers(0, 4), min_size=1, max_size=2))
def test_coloration_round_trip(prefix, tail):
    X = Coloration(tuple(prefix), tuple(tail))
    verdict = coloration_of(count_from_coloration(X, 10))
    assert verdict.is_coloration
    assert verdict.coloration.prefix == X.values(10)
