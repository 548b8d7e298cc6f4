"""Exact truncated series arithmetic: inversion, roots, radicals."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from patavoid.series import (Poly, TruncatedSeries, algebraic_root,
                             divide_cancel, expand_rational, sqrt_series)


def S(terms, order):
    return TruncatedSeries.from_terms(order, terms)


def test_poly_arithmetic():
    p = Poly({(1, 0): 1, (0, 0): 2})  # u + 2
    q = Poly({(0, 1): 1})  # v
    assert (p * q).terms == {(1, 1): 1, (0, 1): 2}
    assert (p - p).is_zero()
    assert p(3, 1) == 5
    assert p.subs_one(u=True) == Poly.const(3)
    assert str(Poly({(2, 1): 1, (0, 0): -1})) == "-1 + u^2v"


def test_poly_constants():
    assert Poly.const(0).is_zero()
    assert Poly.const(Fraction(1, 2)).constant_value() == Fraction(1, 2)
    with pytest.raises(ValueError):
        Poly({(1, 0): 1}).constant_value()


def test_geometric_series():
    inv = S({(0, 0, 0): 1, (1, 0, 0): -1}, 10).inverse()
    assert all(inv.coefficient(n) == Poly.const(1) for n in range(11))


def test_expand_rational_binomial():
    # 1/(1-t)^3 has coefficients C(n+2, 2)
    den = S({(0, 0, 0): 1, (1, 0, 0): -1}, 12)
    s = expand_rational(S({(0, 0, 0): 1}, 12), den * den * den)
    assert all(s.coefficient(n).constant_value() == comb(n + 2, 2)
               for n in range(13))


def test_sqrt_catalan():
    rad = S({(0, 0, 0): 1, (1, 0, 0): -4}, 12)
    num = S({(0, 0, 0): 1}, 12) - sqrt_series(rad)
    cat = divide_cancel(num, S({(1, 0, 0): 2}, 12))
    assert [cat.coefficient(n).constant_value() for n in range(6)] \
        == [1, 1, 2, 5, 14, 42]


def test_sqrt_requires_unit_constant():
    with pytest.raises(ValueError):
        S({(0, 0, 0): 4}, 3).sqrt()
    with pytest.raises(ValueError):
        S({(0, 1, 0): 1}, 3).sqrt()


def test_inverse_requires_unit():
    with pytest.raises(ValueError):
        S({(1, 0, 0): 1}, 3).inverse()
    with pytest.raises(ValueError):
        S({(0, 1, 0): 1, (0, 0, 0): 0}, 3).inverse()


def test_divide_cancel_common_power():
    num = S({(2, 0, 0): 1, (3, 0, 0): 1}, 8)  # t^2 (1 + t)
    den = S({(2, 0, 0): 2}, 8)  # 2 t^2
    q = divide_cancel(num, den)
    assert q.order == 6
    assert q.coefficient(0).constant_value() == Fraction(1, 2)
    assert q.coefficient(1).constant_value() == Fraction(1, 2)
    with pytest.raises(ValueError):
        divide_cancel(S({(1, 0, 0): 1}, 8), den)  # numerator too shallow
    with pytest.raises(ZeroDivisionError):
        divide_cancel(num, TruncatedSeries.zero(8))


def test_shift():
    s = S({(1, 0, 0): 3}, 4)
    assert s.shift(2).coefficient(3).constant_value() == 3
    assert s.shift(-1).coefficient(0).constant_value() == 3
    with pytest.raises(ValueError):
        S({(0, 0, 0): 1}, 4).shift(-1)


def test_algebraic_root_catalan():
    # Y = t(1+Y)^2, so Y + 1 is the Catalan series.
    order = 15
    eq = [S({(1, 0, 0): 1}, order),
          S({(0, 0, 0): -1, (1, 0, 0): 2}, order),
          S({(1, 0, 0): 1}, order)]
    y = algebraic_root(eq, order)
    cats = [comb(2 * n, n) // (n + 1) for n in range(order + 1)]
    assert [y.coefficient(n).constant_value() for n in range(1, order + 1)] \
        == cats[1:]


def test_algebraic_root_preconditions():
    order = 5
    with pytest.raises(ValueError):
        algebraic_root([S({(0, 0, 0): 1}, order), S({(0, 0, 0): 1}, order)], order)
    with pytest.raises(ValueError):
        algebraic_root([S({(1, 0, 0): 1}, order), S({(1, 0, 0): 1}, order)], order)


def test_str_formatting():
    s = S({(1, 1, 1): 1, (2, 1, 0): 2, (3, 0, 0): -1}, 3)
    assert str(s) == "(uv)t + (2u)t^2 - t^3"
    assert str(TruncatedSeries.zero(2)) == "0"


def test_to_json():
    s = S({(1, 1, 0): Fraction(1, 2)}, 1)
    assert s.to_json() == [[["0"]], [["0"], ["1/2"]]]


small_series = st.lists(
    st.integers(-3, 3), min_size=7, max_size=7).map(
        lambda cs: TruncatedSeries([Poly.const(c) for c in cs], 6))


@settings(max_examples=60, deadline=None)
@given(small_series, small_series)
def test_product_division_round_trip(a, b):
    c0 = b.coefficient(0)
    if c0.is_zero():
        b = b + S({(0, 0, 0): 1}, 6)
    assert (a * b) / b == a


@settings(max_examples=60, deadline=None)
@given(small_series)
def test_double_inverse(s):
    if s.coefficient(0).is_zero():
        s = s + S({(0, 0, 0): 1}, 6)
    assert s.inverse().inverse() == s


@settings(max_examples=60, deadline=None)
@given(small_series)
def test_sqrt_squares(s):
    sq = (s * s).truncate(6)
    shifted = sq + S({(0, 0, 0): 1 - (sq.coefficient(0).constant_value()
                                      if sq.coefficient(0).is_constant() else 0)}, 6)
    root = shifted.sqrt()
    assert root * root == shifted
