"""Exact scalar arithmetic over the supported ground rings.

Three kinds of ground ring are available: the rationals, prime fields F_p,
and quadratic extensions K0[al] with al^2 = s for s in {+1, -1} (the split
and Gaussian flavours).  Split extensions contain zero divisors, e.g.
(1 + al)(1 - al) = 0 when s = +1, so unit tests are by the norm a^2 - s*b^2
rather than by nonzeroness.

Scalars are immutable and canonical: equal scalars have identical stored
values (fractions in lowest terms, residues in [0, p), component pairs for
extensions), so equality and hashing are structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import NotAUnit, RingMismatch


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d <= isqrt(p):
        if p % d == 0:
            return False
        d += 2
    return True


class RingDescriptor:
    """Common interface of the ground-ring descriptors.

    Subclasses implement arithmetic on raw canonical values; `GroundScalar`
    wraps a (ring, value) pair and exposes operators on top of it.
    """

    def scalar(self, value) -> "GroundScalar":
        return GroundScalar(self, self._norm(value))

    def from_int(self, k: int) -> "GroundScalar":
        return GroundScalar(self, self._from_int(k))

    def zero(self) -> "GroundScalar":
        return self.from_int(0)

    def one(self) -> "GroundScalar":
        return self.from_int(1)

    def characteristic(self) -> int:
        raise NotImplementedError

    def is_field(self) -> bool:
        raise NotImplementedError

    def has_nilpotents(self) -> bool:
        return False

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Rationals(RingDescriptor):
    """The field of rational numbers with arbitrary-precision values."""

    def _norm(self, v):
        return Fraction(v)

    def _from_int(self, k: int):
        return Fraction(k)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        if a == 0:
            raise NotAUnit("0 has no inverse in Q")
        return 1 / a

    def _is_unit(self, a) -> bool:
        return a != 0

    def _fmt(self, a) -> str:
        return str(a)

    def characteristic(self) -> int:
        return 0

    def is_field(self) -> bool:
        return True

    def to_json(self) -> dict:
        return {"kind": "Q"}


@dataclass(frozen=True)
class PrimeField(RingDescriptor):
    """The prime field F_p, with residues stored in [0, p)."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def _norm(self, v):
        return int(v) % self.p

    def _from_int(self, k: int):
        return k % self.p

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _inv(self, a):
        if a == 0:
            raise NotAUnit(f"0 has no inverse in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def _is_unit(self, a) -> bool:
        return a != 0

    def _fmt(self, a) -> str:
        return str(a)

    def characteristic(self) -> int:
        return self.p

    def is_field(self) -> bool:
        return True

    def to_json(self) -> dict:
        return {"kind": "Fp", "p": self.p}


@dataclass(frozen=True)
class QuadExt(RingDescriptor):
    """Quadratic extension base[al] with al^2 = s, stored as pairs (a, b).

    Nesting is limited to depth one: the base must be Q or a prime field.
    """

    base: RingDescriptor
    s: int

    def __post_init__(self):
        if not isinstance(self.base, (Rationals, PrimeField)):
            raise ValueError("quadratic extensions may only sit over Q or F_p")
        if self.s not in (1, -1):
            raise ValueError("s must be +1 or -1")

    def _norm(self, v):
        if isinstance(v, tuple):
            a, b = v
            return (self.base._norm(a), self.base._norm(b))
        return (self.base._norm(v), self.base._from_int(0))

    def _from_int(self, k: int):
        return (self.base._from_int(k), self.base._from_int(0))

    def _add(self, x, y):
        return (self.base._add(x[0], y[0]), self.base._add(x[1], y[1]))

    def _neg(self, x):
        return (self.base._neg(x[0]), self.base._neg(x[1]))

    def _mul(self, x, y):
        a, b = x
        c, d = y
        base = self.base
        # (a + b*al)(c + d*al) = ac + s*bd + (ad + bc)*al
        re = base._add(base._mul(a, c), base._mul(base._from_int(self.s), base._mul(b, d)))
        im = base._add(base._mul(a, d), base._mul(b, c))
        return (re, im)

    def _conj(self, x):
        return (x[0], self.base._neg(x[1]))

    def _norm_form(self, x):
        # a^2 - s*b^2, the multiplicative norm into the base ring
        a, b = x
        base = self.base
        return base._add(base._mul(a, a),
                         base._neg(base._mul(base._from_int(self.s), base._mul(b, b))))

    def _inv(self, x):
        n = self._norm_form(x)
        if not self.base._is_unit(n):
            raise NotAUnit("norm a^2 - s*b^2 is not a unit")
        ninv = self.base._inv(n)
        a, b = self._conj(x)
        return (self.base._mul(a, ninv), self.base._mul(b, ninv))

    def _is_unit(self, x) -> bool:
        return self.base._is_unit(self._norm_form(x))

    def _fmt(self, x) -> str:
        a, b = x
        base = self.base
        zero = base._from_int(0)
        one = base._from_int(1)

        def al_part(coeff) -> str:
            return "al" if coeff == one else f"{base._fmt(coeff)}*al"

        if b == zero:
            return base._fmt(a)
        if a == zero:
            if isinstance(base, Rationals) and b < 0:
                return f"-{al_part(-b)}"
            return al_part(b)
        if isinstance(base, Rationals) and b < 0:
            return f"{base._fmt(a)}-{al_part(-b)}"
        return f"{base._fmt(a)}+{al_part(b)}"

    def characteristic(self) -> int:
        return self.base.characteristic()

    def is_field(self) -> bool:
        # a field exactly when s has no square root in the base field
        if isinstance(self.base, Rationals):
            return self.s == -1
        p = self.base.p
        return all((b * b - self.s) % p != 0 for b in range(p))

    def has_nilpotents(self) -> bool:
        # in characteristic 2 both al^2 = 1 and al^2 = -1 make al + 1 nilpotent
        return self.characteristic() == 2

    def to_json(self) -> dict:
        return {"kind": "quad", "base": self.base.to_json(), "s": self.s}


@dataclass(frozen=True)
class GroundScalar:
    """An exact element of a ground ring, in canonical form."""

    ring: RingDescriptor
    value: object

    def _check(self, other: "GroundScalar"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, GroundScalar):
            self._check(other)
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GroundScalar(self.ring, self.ring._add(self.value, other.value))

    __radd__ = __add__

    def __neg__(self):
        return GroundScalar(self.ring, self.ring._neg(self.value))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GroundScalar(self.ring, self.ring._mul(self.value, other.value))

    __rmul__ = __mul__

    def inverse(self) -> "GroundScalar":
        return GroundScalar(self.ring, self.ring._inv(self.value))

    def is_unit(self) -> bool:
        return self.ring._is_unit(self.value)

    def is_zero(self) -> bool:
        return self.value == self.ring._from_int(0)

    def is_one(self) -> bool:
        return self.value == self.ring._from_int(1)

    def __str__(self) -> str:
        return self.ring._fmt(self.value)


def ring_from_json(obj) -> RingDescriptor:
    """Build a ring descriptor from its serialized form.

    Accepts {"kind": "Q"}, {"kind": "Fp", "p": 5} and
    {"kind": "quad", "base": ..., "s": +-1}; raises ValueError otherwise.
    """
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError("ring descriptor must be an object with a 'kind'")
    kind = obj["kind"]
    if kind == "Q":
        return Rationals()
    if kind == "Fp":
        p = obj.get("p")
        if not isinstance(p, int):
            raise ValueError("Fp descriptor needs an integer 'p'")
        return PrimeField(p)
    if kind == "quad":
        if "base" not in obj or "s" not in obj:
            raise ValueError("quad descriptor needs 'base' and 's'")
        base = ring_from_json(obj["base"])
        s = obj["s"]
        if s not in (1, -1):
            raise ValueError("quad 's' must be 1 or -1")
        return QuadExt(base, s)
    raise ValueError(f"unknown ring kind {kind!r}")
