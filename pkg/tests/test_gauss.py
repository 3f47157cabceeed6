import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rigidity import GaussianRational
from rigidity.gauss import I, ONE, ZERO, gq

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=20)
scalars = st.builds(GaussianRational, fractions, fractions)


def test_construction_normalizes_to_fractions():
    a = GaussianRational(2, Fraction(1, 2))
    assert a.re == 2 and a.im == Fraction(1, 2)
    assert isinstance(a.re, Fraction) and isinstance(a.im, Fraction)


def test_constants():
    assert ZERO.is_zero and not ONE.is_zero
    assert I * I == -ONE
    assert ONE.is_real and not I.is_real


def test_str_forms():
    assert str(gq(3)) == "3"
    assert str(gq(0, 1)) == "1i"
    assert str(gq(0, Fraction(3, 2))) == "3/2i"
    assert str(gq(1, 2)) == "(1+2i)"
    assert str(gq(-1, -1)) == "(-1-1i)"


@given(scalars, scalars)
def test_addition_commutes(a, b):
    assert a + b == b + a


@given(scalars, scalars, scalars)
def test_multiplication_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(scalars)
def test_conjugate_norm(a):
    assert (a * a.conjugate()).im == 0
    assert (a * a.conjugate()).re == a.norm()


@given(scalars)
def test_inverse(a):
    if a.is_zero:
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == ONE
        assert ONE / a == a.inverse()


def test_division_matches_complex_floats():
    rng = random.Random(7)
    for _ in range(200):
        a = gq(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), rng.randint(-9, 9))
        b = gq(rng.randint(-9, 9), Fraction(rng.randint(-9, 9)))
        if b.is_zero:
            continue
        q = a / b
        approx = complex(a.re, a.im) / complex(b.re, b.im)
        assert abs(complex(q.re, q.im) - approx) < 1e-9


def test_power():
    assert gq(0, 1) ** 4 == ONE
    assert gq(1, 1) ** 2 == gq(0, 2)
    assert gq(2) ** 0 == ONE
    assert gq(2) ** -1 == gq(Fraction(1, 2))
    with pytest.raises(ZeroDivisionError):
        ZERO ** -1


def test_coerce():
    assert GaussianRational.coerce(3) == gq(3)
    assert GaussianRational.coerce(Fraction(1, 2)) == gq(Fraction(1, 2))
    assert GaussianRational.coerce(gq(1, 1)) == gq(1, 1)
