from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polycauchy.exactnum import (
    ExactArithmeticError,
    Polynomial,
    format_rational,
    parse_rational,
    poly_eval,
    poly_mul,
    rational_arith,
    roots_to_poly,
)

rationals = st.fractions(max_denominator=10**6).filter(lambda x: abs(x.numerator) < 10**12)


@pytest.mark.parametrize("a,b,op,expected", [
    ("1/2", "1/3", "+", F(5, 6)),
    ("-1/2", "0", "*", F(0)),
    ("19/30", "19/30", "/", F(1)),
    ("1/2", "1/3", "-", F(1, 6)),
])
def test_rational_arith(a, b, op, expected):
    r = rational_arith(a, b, op)
    assert r == expected
    assert r.denominator > 0


def test_zero_is_canonical():
    r = rational_arith("-1/2", 0, "*")
    assert (r.numerator, r.denominator) == (0, 1)
    assert format_rational(r) == "0"


def test_division_by_zero_is_an_error():
    with pytest.raises(ExactArithmeticError):
        rational_arith(1, 0, "/")


@pytest.mark.parametrize("text", ["1.5", "+3", " 3", "1e3", "3/", "/3", "", "1/-2"])
def test_parse_rejects_non_canonical_syntax(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_parse_zero_denominator():
    with pytest.raises(ExactArithmeticError):
        parse_rational("3/0")


def test_parse_reduces():
    assert parse_rational("-6/4") == F(-3, 2)
    assert format_rational(parse_rational("-6/4")) == "-3/2"


@given(rationals)
def test_format_parse_roundtrip(x):
    s = format_rational(x)
    assert parse_rational(s) == x
    assert format_rational(parse_rational(s)) == s


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a != 0:
        assert rational_arith(a, a, "/") == 1


z = Polynomial([0, 1])


def test_poly_mul_examples():
    assert poly_mul(z, z - 1) == Polynomial([0, -1, 1])
    p = Polynomial([F(1, 3), -2, 5])
    assert poly_mul(p, Polynomial([1])) == p
    assert poly_mul(poly_mul(z - 1, z - 2), z - 3) == Polynomial([-6, 11, -6, 1])


def test_poly_mul_degree():
    p, q = Polynomial([1, 2, 3]), Polynomial([F(1, 2), 0, 0, -1])
    assert (p * q).degree == p.degree + q.degree
    assert (p * Polynomial()).is_zero()


def test_poly_eval_examples():
    p = z * z - z
    assert poly_eval(p, 0) == 0
    assert poly_eval(p, F(1, 2)) == F(-1, 4)
    assert poly_eval(Polynomial(), F(7, 3)) == 0


def test_trailing_zeros_trimmed():
    p = Polynomial([1, 2, 0, 0])
    assert p.degree == 1
    assert p.leading() == 2
    assert Polynomial([0, 0]).degree == -1


def test_roots_to_poly_examples():
    assert roots_to_poly([]) == Polynomial([1])
    assert roots_to_poly([0, 1, 2]) == Polynomial([0, 2, -3, 1])
    assert roots_to_poly([0, 1, 2, 3]) == Polynomial([0, -6, 11, -6, 1])


@given(st.lists(rationals, max_size=6))
def test_roots_vanish(roots):
    p = roots_to_poly(roots)
    assert p.degree == len(roots)
    assert p.leading() == 1
    for r in roots:
        assert p(r) == 0


@given(st.lists(rationals, max_size=5), st.lists(rationals, max_size=5))
def test_roots_concatenate(A, B):
    assert roots_to_poly(A) * roots_to_poly(B) == roots_to_poly(A + B)


def test_polynomial_str():
    assert str(Polynomial([F(-2, 21), F(-1, 3), 1])) == "z^2 - 1/3*z - 2/21"
    assert str(Polynomial()) == "0"
