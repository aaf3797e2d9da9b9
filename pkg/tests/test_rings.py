"""Ground ring arithmetic: exactness, units, canonical string forms.

Frozen values in this file were computed by hand first (conjugate/norm
inverses, characteristic tables) and the engine is checked against them.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rinehart import (GroundScalar, NotAUnit, PrimeField, QuadExt, Rationals,
                      ring_from_json)
from conftest import sample_scalar, seeded


def test_rationals_basics():
    ring = Rationals()
    a = ring.scalar(Fraction(3, 2))
    b = ring.from_int(-2)
    assert str(a + b) == "-1/2"
    assert str(a * b) == "-3"
    assert (a - a).is_zero()
    assert a.inverse() * a == ring.one()
    assert ring.characteristic() == 0
    assert ring.is_field()
    assert not ring.has_nilpotents()


def test_prime_field_basics():
    ring = PrimeField(7)
    a = ring.from_int(10)          # wraps to 3
    assert str(a) == "3"
    assert str(a + ring.from_int(5)) == "1"
    assert a.inverse() == ring.from_int(5)   # 3 * 5 = 15 = 1 mod 7
    assert ring.characteristic() == 7
    assert ring.is_field()


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        PrimeField(1)
    PrimeField(2)                  # smallest prime is fine


def test_prime_field_zero_has_no_inverse():
    ring = PrimeField(5)
    with pytest.raises(NotAUnit):
        ring.zero().inverse()


def test_quad_ext_multiplication_table():
    ring = QuadExt(Rationals(), -1)
    al = ring.scalar((Fraction(0), Fraction(1)))
    assert str(al * al) == "-1"
    u = ring.scalar((Fraction(1), Fraction(2)))
    v = ring.scalar((Fraction(3), Fraction(-1)))
    # (1+2al)(3-al) = 3 - al + 6al - 2al^2 = 5 + 5al  when al^2 = -1
    assert str(u * v) == "5+5*al"


def test_quad_ext_inverse_by_norm():
    ring = QuadExt(Rationals(), 1)
    u = ring.scalar((Fraction(1), Fraction(2)))
    # norm = 1 - 1*4 = -3, inverse = (1 - 2al)/(-3)
    inv = u.inverse()
    assert inv * u == ring.one()
    assert str(inv) == "-1/3+2/3*al"


def test_quad_ext_zero_divisors():
    ring = QuadExt(Rationals(), 1)
    u = ring.scalar((Fraction(1), Fraction(1)))
    v = ring.scalar((Fraction(1), Fraction(-1)))
    assert (u * v).is_zero()       # (1+al)(1-al) = 1 - al^2 = 0 when al^2 = 1
    assert not u.is_unit()
    with pytest.raises(NotAUnit):
        u.inverse()
    assert not ring.is_field()
    assert not ring.has_nilpotents()


def test_quad_ext_field_detection():
    assert QuadExt(Rationals(), -1).is_field()
    assert QuadExt(PrimeField(3), -1).is_field()     # -1 = 2 is not a square mod 3
    assert QuadExt(PrimeField(7), -1).is_field()     # squares mod 7 are {0,1,2,4}
    assert not QuadExt(PrimeField(5), -1).is_field() # -1 = 4 = 2^2 mod 5
    assert not QuadExt(PrimeField(5), 1).is_field()
    with pytest.raises(ValueError):
        QuadExt(Rationals(), 2)                      # only s = +-1 is supported


def test_quad_ext_char_two_nilpotents():
    ring = QuadExt(PrimeField(2), 1)
    u = ring.scalar((1, 1))
    assert (u * u).is_zero()       # (1+al)^2 = 1 + al^2 = 0 in char 2
    assert ring.has_nilpotents()
    assert not ring.is_field()


def test_quad_ext_nesting_capped():
    inner = QuadExt(Rationals(), -1)
    with pytest.raises(ValueError):
        QuadExt(inner, 1)


def test_scalar_string_forms():
    qi = QuadExt(Rationals(), -1)
    cases = [
        ((Fraction(0), Fraction(0)), "0"),
        ((Fraction(2), Fraction(0)), "2"),
        ((Fraction(0), Fraction(1)), "al"),
        ((Fraction(0), Fraction(-2)), "-2*al"),
        ((Fraction(1), Fraction(2)), "1+2*al"),
        ((Fraction(1), Fraction(-2)), "1-2*al"),
        ((Fraction(-1, 2), Fraction(1)), "-1/2+al"),
        ((Fraction(0), Fraction(-1)), "-al"),
        ((Fraction(2), Fraction(-1)), "2-al"),
    ]
    for value, text in cases:
        assert str(qi.scalar(value)) == text


def test_ring_laws_seeded(any_ring):
    ring = any_ring
    rng = seeded(f"ring-laws:{ring}")
    for _ in range(1000):
        a = sample_scalar(rng, ring)
        b = sample_scalar(rng, ring)
        c = sample_scalar(rng, ring)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + ring.zero() == a
        assert a * ring.one() == a
        assert (a - a).is_zero()


def test_unit_inverses_roundtrip(any_ring):
    ring = any_ring
    rng = seeded(f"ring-units:{ring}")
    seen_units = 0
    for _ in range(400):
        a = sample_scalar(rng, ring)
        if a.is_unit():
            seen_units += 1
            assert a.inverse() * a == ring.one()
    assert seen_units > 100


@given(n=st.integers(-10**6, 10**6), d=st.integers(1, 10**3),
       m=st.integers(-10**6, 10**6))
@settings(max_examples=200, deadline=None)
def test_rationals_match_fraction_oracle(n, d, m):
    ring = Rationals()
    a = ring.scalar(Fraction(n, d))
    b = ring.from_int(m)
    assert (a * b).value == Fraction(n, d) * m
    assert (a + b).value == Fraction(n, d) + m


@given(a=st.integers(0, 6), b=st.integers(0, 6), c=st.integers(0, 6))
@settings(max_examples=200, deadline=None)
def test_prime_field_matches_int_oracle(a, b, c):
    ring = PrimeField(7)
    x, y, z = (ring.from_int(v) for v in (a, b, c))
    assert (x * y + z).value == (a * b + c) % 7


def test_ring_from_json_roundtrip():
    for spec in ({"kind": "Q"},
                 {"kind": "Fp", "p": 5},
                 {"kind": "quad", "base": {"kind": "Q"}, "s": -1},
                 {"kind": "quad", "base": {"kind": "Fp", "p": 3}, "s": 1}):
        ring = ring_from_json(spec)
        assert ring.to_json() == spec
    with pytest.raises(ValueError):
        ring_from_json({"kind": "Fp", "p": 9})
    with pytest.raises(ValueError):
        ring_from_json({"kind": "quad", "base": {"kind": "Q"}, "s": 2})
    with pytest.raises(ValueError):
        ring_from_json({"kind": "Z"})


def test_ground_scalar_ring_mismatch():
    from rinehart import RingMismatch
    a = Rationals().one()
    b = PrimeField(5).one()
    with pytest.raises(RingMismatch):
        a + b


def test_ground_scalar_int_coercion():
    ring = PrimeField(5)
    a = ring.from_int(3)
    assert a + 4 == ring.from_int(2)
    assert 2 * a == ring.from_int(1)
    assert isinstance(2 * a, GroundScalar)
