from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from equidissect.dyadic import INF, format_rational, format_valuation, rational, val2, val_add

from oracles import val2_by_division

nonzero = st.fractions(max_denominator=10**6).filter(lambda q: q != 0)


@pytest.mark.parametrize("q, expected", [
    ("12/5", 2),
    ("1", 0),
    ("3/8", -3),
    ("-40", 3),
    ("7/12", -2),
])
def test_val2_examples(q, expected):
    assert val2(q) == expected


def test_val2_of_zero_is_infinity():
    assert val2(0) is INF
    assert format_valuation(val2(0)) == "inf"


def test_infinity_order_and_absorption():
    assert INF > 10**30 and not INF < -5
    assert INF >= INF and INF == INF
    assert val_add(INF, 5) is INF and val_add(-3, INF) is INF
    assert val_add(2, -3) == -1
    assert sorted([3, INF, -2]) == [-2, 3, INF]


def test_val_add_matches_product():
    assert val_add(val2("12/5"), val2("5/3")) == val2(Fraction(12, 5) * Fraction(5, 3)) == 2


@given(nonzero)
def test_val2_agrees_with_division_oracle(q):
    assert val2(q) == val2_by_division(q)


@given(nonzero, nonzero)
def test_multiplicative(a, b):
    assert val2(a * b) == val2(a) + val2(b)
    assert val2(a / b) == val2(a) - val2(b)


@given(st.fractions(max_denominator=10**6), st.fractions(max_denominator=10**6))
def test_ultrametric(a, b):
    va, vb = val2(a), val2(b)
    assert val2(a + b) >= min(va, vb)
    if va != vb:
        assert val2(a + b) == min(va, vb)


@given(st.integers(min_value=-10**9, max_value=10**9).filter(bool))
def test_integers_nonnegative_zero_iff_odd(n):
    assert val2(n) >= 0
    assert (val2(n) == 0) == (n % 2 == 1)


def test_rational_parsing_is_exact():
    assert rational("6/4") == Fraction(3, 2)
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(5)) == "5"
    with pytest.raises(ValueError):
        rational("0.5")
    with pytest.raises(TypeError):
        rational(0.5)
