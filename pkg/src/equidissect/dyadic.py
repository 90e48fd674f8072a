"""Exact rationals and the 2-adic valuation on Q."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]


class _Infinity:
    """Valuation of zero. Larger than every integer; absorbs addition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __hash__(self) -> int:
        return hash("equidissect.INF")

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def __add__(self, other):
        if other is self or isinstance(other, int):
            return self
        return NotImplemented

    __radd__ = __add__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
Valuation = Union[int, _Infinity]


def rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a canonical Fraction.

    Floats are refused: every number in this package is exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"not an exact rational literal: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _val2_int(n: int) -> int:
    # n != 0; lowest set bit of |n|
    n = abs(n)
    return (n & -n).bit_length() - 1


def val2(q: RationalLike) -> Valuation:
    """2-adic valuation: s such that q = 2**s * odd/odd, and INF for zero."""
    q = rational(q)
    if q == 0:
        return INF
    return _val2_int(q.numerator) - _val2_int(q.denominator)


def val_add(a: Valuation, b: Valuation) -> Valuation:
    if a is INF or b is INF:
        return INF
    return a + b


def val_neg(a: Valuation) -> Valuation:
    if a is INF:
        raise ValueError("negation of the infinite valuation is undefined")
    return -a


def format_valuation(v: Valuation):
    """JSON form: plain int, or the string "inf"."""
    return "inf" if v is INF else v


def pow2(exponent: int) -> Fraction:
    if exponent >= 0:
        return Fraction(1 << exponent)
    return Fraction(1, 1 << -exponent)


def dyadic_weight(v: Valuation) -> Fraction:
    """2**(-v), with 2**(-INF) = 0."""
    if v is INF:
        return Fraction(0)
    return pow2(-v)
