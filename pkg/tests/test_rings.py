from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from altdes.errors import InversionError
from altdes.rings import Poly, format_poly, invert, poly_t, t_var, tq_vars

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def polys(caps=(4, 5)):
    exps = st.tuples(*(st.integers(0, c) for c in caps))
    return st.dictionaries(exps, fractions, max_size=6).map(lambda d: Poly(d, caps))


@settings(max_examples=100, deadline=None)
@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@settings(max_examples=100, deadline=None)
@given(fractions, fractions, fractions)
def test_rational_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(polys())
def test_inverse_in_capped_ring(a):
    if not a.coefficient(0, 0):
        a = a + 1
    if not a.coefficient(0, 0):
        a = a + 1
    assert a * a.inverse() == 1


def test_one_minus_t_inverse():
    t = t_var(5)
    assert (1 - t).inverse().coeff_list() == [1] * 6
    assert (1 - t).inverse().truncated


def test_uncapped_inverse_rejected():
    with pytest.raises(InversionError):
        (1 - t_var()).inverse()
    with pytest.raises(InversionError):
        t_var(3).inverse()
    with pytest.raises(InversionError):
        invert(0)
    assert invert(Fraction(2, 3)) == Fraction(3, 2)


def test_truncation_flag_and_caps():
    t, q = tq_vars(2, 3)
    p = (t + q) ** 4
    assert p.degree(0) <= 2 and p.degree(1) <= 3
    assert p.truncated
    # kept coefficients are exact: t^2 q^2 in (t+q)^4 is C(4,2)
    assert p.coefficient(2, 2) == 6
    assert not (t + q).truncated


def test_substitute_and_format():
    t, q = tq_vars(None, None)
    p = 3 * t ** 2 * q - q + Fraction(1, 2)
    assert p.substitute(0, 1) == 2 * q + Fraction(1, 2) - q * 0
    assert format_poly(poly_t([0, -1, 2])) == "-t + 2*t^2"
    assert str(Poly()) == "0"
