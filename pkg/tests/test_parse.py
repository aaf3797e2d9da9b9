"""Grammar round trips and parse errors with positions."""

from fractions import Fraction

import pytest

from rinehart import (ParseError, Poly, PrimeField, QuadExt, Rationals,
                      format_poly, parse_poly, parse_scalar, parse_vector)
from conftest import seeded
from test_poly import random_small_poly

Q = Rationals()
F7 = PrimeField(7)
QI = QuadExt(Q, -1)


def test_basic_expressions():
    x = Poly.variable(Q, 2, 0)
    y = Poly.variable(Q, 2, 1)
    names = ("x", "y")
    assert parse_poly("x + 2*y", Q, names) == x + 2 * y
    assert parse_poly("x^2 - y^3", Q, names) == x * x - y * y * y
    assert parse_poly("-x", Q, names) == -x
    assert parse_poly("(x + y)^2", Q, names) == x * x + 2 * (x * y) + y * y
    assert parse_poly("x + x", Q, names) == 2 * x
    assert parse_poly("0", Q, names) == Poly.zero(Q, 2)
    assert parse_poly("2^3", Q, names) == Poly.constant(Q, 2, Q.from_int(8))
    with pytest.raises(ParseError):
        parse_poly("x*-1", Q, names)       # unary minus only leads an expression


def test_whitespace_and_implicit_association():
    names = ("x", "y")
    a = parse_poly("  x ^ 2*y + 1 ", Q, names)
    b = parse_poly("x^2*y+1", Q, names)
    assert a == b


def test_fraction_coefficients_over_q():
    x = Poly.variable(Q, 1, 0)
    p = parse_poly("1/2*x - 3/4", Q, ("x",))
    assert p == x.scale(Q.scalar(Fraction(1, 2))) - Poly.constant(Q, 1, Q.scalar(Fraction(3, 4)))


def test_fraction_coefficients_over_fp():
    # 1/2 = 4 mod 7, 3/6 = 3*6^{-1} = 3*6 = 18 = 4 mod 7
    names = ("x",)
    assert parse_poly("1/2", F7, names) == Poly.constant(F7, 1, F7.from_int(4))
    assert parse_poly("3/6", F7, names) == Poly.constant(F7, 1, F7.from_int(4))
    with pytest.raises(ParseError):
        parse_poly("1/7", F7, names)       # denominator is 0 mod 7


def test_al_token():
    x = Poly.variable(QI, 1, 0)
    al = QI.scalar((Fraction(0), Fraction(1)))
    assert parse_poly("al*x + al^2", QI, ("x",)) == x.scale(al) - 1
    with pytest.raises(ParseError):
        parse_poly("al", Q, ("x",))        # no quadratic generator over Q


def test_parse_errors_carry_positions():
    cases = [
        ("x +", Q),
        ("(x", Q),
        ("x ** 2", Q),
        ("x^0", Q),                        # exponents must be positive
        ("x^-1", Q),
        ("z", Q),                          # undeclared variable
        ("x 2", Q),                        # trailing input
        ("", Q),
        ("1/0", Q),
    ]
    for text, ring in cases:
        with pytest.raises(ParseError) as err:
            parse_poly(text, ring, ("x", "y"))
        assert "position" in str(err.value)


def test_parse_vector():
    polys = parse_vector("x, y^2, 0", Q, ("x", "y"))
    assert len(polys) == 3
    assert polys[1] == Poly.variable(Q, 2, 1) ** 2
    with pytest.raises(ParseError):
        parse_vector("x,", Q, ("x", "y"))


def test_parse_scalar():
    assert parse_scalar("3/2", Q) == Q.scalar(Fraction(3, 2))
    assert parse_scalar("-2", F7) == F7.from_int(5)
    assert parse_scalar("(1/2)^2", Q) == Q.scalar(Fraction(1, 4))
    with pytest.raises(ParseError):
        parse_scalar("x", Q)


def test_format_parse_roundtrip(any_ring):
    ring = any_ring
    rng = seeded(f"parse-roundtrip:{ring}")
    names = ("x", "y", "z")
    for _ in range(200):
        p = random_small_poly(rng, ring, 3, max_degree=4, max_terms=5)
        text = format_poly(p, names)
        assert parse_poly(text, ring, names) == p, text


def test_parse_format_canonicalizes():
    names = ("x", "y")
    for text in ("y + x", "x + 0*y", "2*x - x", "x*x", "x*(y + 1) - x*y"):
        p = parse_poly(text, Q, names)
        canon = format_poly(p, names)
        assert parse_poly(canon, Q, names) == p
