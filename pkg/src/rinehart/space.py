"""Rinehart spaces: coordinate dual pairs with exact differential calculus.

A space bundles a ground ring, variable names, an optional principal ideal
and a metric.  On top of it live the differential, derivations along
fields, gradients, the Lie bracket of the coordinate module, two
connection constructions (componentwise overwrite for the Euclidean
metric, the Koszul formula otherwise) and the curvature operator, all in
exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import (MetricNotMusical, NotEuclidean, SpaceMismatch,
                     TwoNotAUnit)
from .parse import parse_poly
from .poly import (Poly, PrincipalIdeal, QuotientElem, divide_exact,
                   format_poly, unit_status)
from .rings import GroundScalar, RingDescriptor
from .tensors import (Metric, OneForm, VectorField, flat, inner, pairing,
                      sharp)


@dataclass(frozen=True)
class RinehartSpace:
    """A coordinate Rinehart space over K[x1..xn] or a principal quotient."""

    ring: RingDescriptor
    var_names: tuple
    ideal: Optional[PrincipalIdeal]
    metric: Metric

    @staticmethod
    def euclidean(ring: RingDescriptor, var_names) -> "RinehartSpace":
        names = tuple(var_names)
        return RinehartSpace(ring, names, None, Metric.euclidean(ring, len(names), None))

    @staticmethod
    def with_metric(ring: RingDescriptor, var_names, metric: Metric,
                    ideal: Optional[PrincipalIdeal] = None) -> "RinehartSpace":
        names = tuple(var_names)
        if metric.n != len(names):
            raise SpaceMismatch("metric dimension does not match variable count")
        return RinehartSpace(ring, names, ideal, metric.reduce(ideal))

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    # -- function algebra ----------------------------------------------------

    def fn(self, text: str) -> QuotientElem:
        """Parse a polynomial string into a reduced function."""
        return QuotientElem.reduce(parse_poly(text, self.ring, self.var_names), self.ideal)

    def poly_fn(self, p: Poly) -> QuotientElem:
        return QuotientElem.reduce(p, self.ideal)

    def coerce_fn(self, value) -> QuotientElem:
        if isinstance(value, QuotientElem):
            if value.ideal != self.ideal or value.nvars != self.nvars:
                raise SpaceMismatch("function belongs to a different space")
            return value
        if isinstance(value, int):
            return self.constant(self.ring.from_int(value))
        if isinstance(value, GroundScalar):
            return self.constant(value)
        if isinstance(value, Poly):
            return self.poly_fn(value)
        raise TypeError(f"cannot interpret {value!r} as a function")

    def constant(self, c: GroundScalar) -> QuotientElem:
        return QuotientElem.reduce(Poly.constant(self.ring, self.nvars, c), self.ideal)

    def coordinate(self, i: int) -> QuotientElem:
        return QuotientElem.reduce(Poly.variable(self.ring, self.nvars, i), self.ideal)

    # -- module elements -----------------------------------------------------

    def field(self, coeffs) -> VectorField:
        return VectorField(self, tuple(self.coerce_fn(c) for c in coeffs))

    def form(self, coeffs) -> OneForm:
        return OneForm(self, tuple(self.coerce_fn(c) for c in coeffs))

    def basis_field(self, i: int) -> VectorField:
        one = self.constant(self.ring.one())
        zero = self.constant(self.ring.zero())
        return VectorField(self, tuple(one if j == i else zero for j in range(self.nvars)))

    def basis_form(self, i: int) -> OneForm:
        one = self.constant(self.ring.one())
        zero = self.constant(self.ring.zero())
        return OneForm(self, tuple(one if j == i else zero for j in range(self.nvars)))

    def zero_field(self) -> VectorField:
        zero = self.constant(self.ring.zero())
        return VectorField(self, (zero,) * self.nvars)

    def basis_fields(self) -> list:
        return [self.basis_field(i) for i in range(self.nvars)]

    def format_fn(self, f: QuotientElem) -> str:
        return format_poly(f.rep, self.var_names)

    def format_field(self, x: VectorField) -> str:
        return "[" + ", ".join(self.format_fn(c) for c in x.coeffs) + "]"


def _check_fn(space: RinehartSpace, f: QuotientElem):
    if f.ideal != space.ideal or f.nvars != space.nvars or f.ring != space.ring:
        raise SpaceMismatch("function belongs to a different space")


def _check_field(space: RinehartSpace, x: VectorField):
    if x.space != space:
        raise SpaceMismatch("field belongs to a different space")


def differential(space: RinehartSpace, f: QuotientElem) -> OneForm:
    """df = sum_i (partial f / partial x_i) om_i on the canonical representative."""
    _check_fn(space, f)
    coeffs = tuple(QuotientElem.reduce(f.rep.diff(i), space.ideal)
                   for i in range(space.nvars))
    return OneForm(space, coeffs)


def derive(space: RinehartSpace, x: VectorField, f: QuotientElem) -> QuotientElem:
    """The derivation d_X f = <X, df>."""
    _check_field(space, x)
    return pairing(x, differential(space, f))


def gradient(space: RinehartSpace, f: QuotientElem) -> VectorField:
    """grad f = sharp(df); the metric must be musical."""
    df = differential(space, f)
    if space.metric.is_euclidean():
        return VectorField(space, df.coeffs)
    return sharp(df, space.metric)


def lie_bracket(space: RinehartSpace, x: VectorField, y: VectorField) -> VectorField:
    """[X, Y]^k = d_X Y^k - d_Y X^k; coordinate fields commute."""
    _check_field(space, x)
    _check_field(space, y)
    coeffs = tuple(derive(space, x, y.coeffs[k]) - derive(space, y, x.coeffs[k])
                   for k in range(space.nvars))
    return VectorField(space, coeffs)


class EuclideanConnection:
    """The componentwise connection nabla_X Y = sum_k (d_X Y^k) X_k.

    This is the Levi-Civita connection of the Euclidean metric: each basis
    field is parallel and the coordinate differentials are flat.
    """

    def __init__(self, space: RinehartSpace):
        if not space.metric.is_euclidean():
            raise NotEuclidean("the componentwise connection needs the Euclidean metric")
        self.space = space

    def __call__(self, x: VectorField, y: VectorField) -> VectorField:
        space = self.space
        _check_field(space, x)
        _check_field(space, y)
        coeffs = tuple(derive(space, x, y.coeffs[k]) for k in range(space.nvars))
        return VectorField(space, coeffs)


class KoszulConnection:
    """The connection determined by the Koszul formula.

    2<nabla_X Y, Z> = d_X<Y,Z> + d_Y<Z,X> - d_Z<X,Y>
                      - <X,[Y,Z]> + <Y,[Z,X]> + <Z,[X,Y]>

    `form(X, Y)` evaluates the right side against the basis fields and is
    always available; calling the connection solves G v = form(X, Y) for
    the vector value.  When the Gram determinant is a certified unit the
    solve goes through the adjugate and the whole table of basis values is
    precomputed; otherwise each requested value is recovered by exact
    division when possible and `MetricNotMusical` is raised when not.

    Instances are safe to share between threads: the memo table is only
    ever filled with identical values, so racing writers are harmless.
    """

    def __init__(self, space: RinehartSpace):
        two = space.ring.from_int(2)
        if not two.is_unit():
            raise TwoNotAUnit("the Koszul formula needs 2 invertible")
        self.space = space
        self._half = space.constant(two.inverse())
        metric = space.metric
        det = metric.det()
        status, det_inv = unit_status(det)
        self._det = det
        self._det_inv = det_inv
        self._adj = metric.adjugate()
        self._gamma: dict = {}
        self.fully_solvable = True
        n = space.nvars
        for i in range(n):
            for j in range(i, n):
                value = self._solve(self._basis_form(i, j))
                if value is None:
                    self.fully_solvable = False
                    self._gamma.clear()
                    break
                self._gamma[(i, j)] = value
                self._gamma[(j, i)] = value
            if not self.fully_solvable:
                break

    # -- one-form level ------------------------------------------------------

    def _basis_form(self, i: int, j: int) -> tuple:
        # brackets of basis fields vanish, leaving the Christoffel symbols
        # of the first kind: (d_i G_jk + d_j G_ik - d_k G_ij) / 2
        space = self.space
        g = space.metric.entries
        out = []
        for k in range(space.nvars):
            s = (QuotientElem.reduce(g[j][k].rep.diff(i), space.ideal)
                 + QuotientElem.reduce(g[i][k].rep.diff(j), space.ideal)
                 - QuotientElem.reduce(g[i][j].rep.diff(k), space.ideal))
            out.append(self._half * s)
        return tuple(out)

    def form(self, x: VectorField, y: VectorField) -> OneForm:
        """The one-form Z |-> <nabla_X Y, Z> given by the Koszul right side."""
        space = self.space
        _check_field(space, x)
        _check_field(space, y)
        metric = space.metric
        bxy = lie_bracket(space, x, y)
        coeffs = []
        for k in range(space.nvars):
            z = space.basis_field(k)
            byz = lie_bracket(space, y, z)
            bzx = lie_bracket(space, z, x)
            val = (derive(space, x, inner(y, z, metric))
                   + derive(space, y, inner(z, x, metric))
                   - derive(space, z, inner(x, y, metric))
                   - inner(x, byz, metric)
                   + inner(y, bzx, metric)
                   + inner(z, bxy, metric))
            coeffs.append(self._half * val)
        return OneForm(space, tuple(coeffs))

    # -- vector level ---------------------------------------------------------

    def _solve(self, beta: tuple) -> Optional[tuple]:
        """Solve G v = beta exactly, or return None."""
        n = self.space.nvars
        raised = tuple(
            sum((self._adj[k][j] * beta[j] for j in range(1, n)),
                self._adj[k][0] * beta[0])
            for k in range(n))
        if self._det_inv is not None:
            return tuple(self._det_inv * w for w in raised)
        if self.space.ideal is not None or not self.space.ring.is_field():
            return None
        out = []
        for w in raised:
            q = divide_exact(w.rep, self._det.rep)
            if q is None:
                return None
            out.append(QuotientElem(q, None))
        return tuple(out)

    def __call__(self, x: VectorField, y: VectorField) -> VectorField:
        space = self.space
        _check_field(space, x)
        _check_field(space, y)
        if not self.fully_solvable:
            value = self._solve(self.form(x, y).coeffs)
            if value is None:
                raise MetricNotMusical("Koszul value has no exact solution for this pair")
            return VectorField(space, value)
        coeffs = [derive(space, x, y.coeffs[k]) for k in range(space.nvars)]
        acc = VectorField(space, tuple(coeffs))
        for i in range(space.nvars):
            xi = x.coeffs[i]
            if xi.is_zero():
                continue
            for j in range(space.nvars):
                g = xi * y.coeffs[j]
                if g.is_zero():
                    continue
                acc = acc + g * VectorField(space, self._gamma[(i, j)])
        return acc


def flat_connection(space: RinehartSpace, x: VectorField, y: VectorField) -> VectorField:
    return EuclideanConnection(space)(x, y)


def koszul_connection(space: RinehartSpace, x: VectorField, y: VectorField) -> VectorField:
    return KoszulConnection(space)(x, y)


def curvature(space: RinehartSpace, conn: Callable, x: VectorField,
              y: VectorField, z: VectorField) -> VectorField:
    """R(X, Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z."""
    return (conn(x, conn(y, z)) - conn(y, conn(x, z))
            - conn(lie_bracket(space, x, y), z))


# ---------------------------------------------------------------------------
# verification reports


@dataclass(frozen=True)
class LeviCivitaReport:
    torsion_free: bool
    metric_compatible: bool
    counterexample: Optional[dict]

    @property
    def ok(self) -> bool:
        return self.torsion_free and self.metric_compatible


@dataclass(frozen=True)
class ConstantCurvatureReport:
    ok: bool
    counterexample: Optional[dict]


def _random_combination(space: RinehartSpace, fields: list, rng, max_degree: int):
    from .randgen import random_fn
    acc = space.zero_field()
    for f in fields:
        acc = acc + random_fn(rng, space, max_degree) * f
    return acc


def check_levi_civita(space: RinehartSpace, conn, fields: Optional[list] = None,
                      rng=None, cases: int = 10, max_degree: int = 2) -> LeviCivitaReport:
    """Verify torsion-freeness and metric compatibility exactly.

    Both identities are checked exhaustively on the supplied fields (the
    coordinate basis by default) and, when a generator is supplied, on
    random function-linear combinations of them.  For a Koszul connection
    whose vector values are only partially defined the identities are
    checked at the one-form level, which is equivalent whenever the Gram
    matrix has nonzero determinant over a domain.
    """
    fields = fields if fields is not None else space.basis_fields()
    form_level = isinstance(conn, KoszulConnection) and not conn.fully_solvable
    metric = space.metric

    def torsion_gap(x, y):
        bracket = lie_bracket(space, x, y)
        if form_level:
            gap = conn.form(x, y) - conn.form(y, x) - flat(bracket, metric)
        else:
            gap = conn(x, y) - conn(y, x) - bracket
        return gap

    def compat_gap(x, y, z):
        if form_level:
            lhs = derive(space, x, inner(y, z, metric))
            rhs = pairing(z, conn.form(x, y)) + pairing(y, conn.form(x, z))
        else:
            lhs = derive(space, x, inner(y, z, metric))
            rhs = inner(conn(x, y), z, metric) + inner(y, conn(x, z), metric)
        return lhs - rhs

    samples_pairs = [(x, y) for x in fields for y in fields]
    samples_triples = [(x, y, z) for x in fields for y in fields for z in fields]
    if rng is not None:
        for _ in range(cases):
            trio = tuple(_random_combination(space, fields, rng, max_degree)
                         for _ in range(3))
            samples_pairs.append(trio[:2])
            samples_triples.append(trio)

    def render(x):
        return space.format_field(x)

    for x, y in samples_pairs:
        gap = torsion_gap(x, y)
        if not gap.is_zero():
            ce = {"identity": "torsion", "x": render(x), "y": render(y),
                  "gap": "[" + ", ".join(space.format_fn(c) for c in gap.coeffs) + "]"}
            return LeviCivitaReport(False, True, ce)
    for x, y, z in samples_triples:
        gap = compat_gap(x, y, z)
        if not gap.is_zero():
            ce = {"identity": "compatibility", "x": render(x), "y": render(y),
                  "z": render(z), "gap": space.format_fn(gap)}
            return LeviCivitaReport(True, False, ce)
    return LeviCivitaReport(True, True, None)


def check_constant_curvature(space: RinehartSpace, conn, c: GroundScalar,
                             spanning: list) -> ConstantCurvatureReport:
    """Check R(X, Y)Z = c(<Y,Z>X - <X,Z>Y) on all triples of spanning fields."""
    metric = space.metric
    c_fn = space.constant(c)
    for i, x in enumerate(spanning):
        for j, y in enumerate(spanning):
            for k, z in enumerate(spanning):
                lhs = curvature(space, conn, x, y, z)
                rhs = c_fn * ((inner(y, z, metric) * x) - (inner(x, z, metric) * y))
                gap = lhs - rhs
                if not gap.is_zero():
                    ce = {"triple": f"({i + 1}, {j + 1}, {k + 1})",
                          "lhs": space.format_field(lhs),
                          "rhs": space.format_field(rhs)}
                    return ConstantCurvatureReport(False, ce)
    return ConstantCurvatureReport(True, None)
