"""Hypersurface quotients of Euclidean coordinate spaces.

A hypersurface is cut out by one equation f = 0 together with a scaling
witness q such that 1 - q<N, N> lies in (f), where N = grad f.  Tangency,
orthogonal projection, the induced connection and the second fundamental
form are all computed on canonical representatives modulo (f); two fields
are equal in the quotient exactly when all coefficients of their
difference reduce to zero, which for the Euclidean metric is equality
modulo the maximal ideal submodule restricted to tangent classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (CharTwoUnsupported, MetricNotMusical, NotAUnit,
                     NotTangent, SpaceMismatch)
from .poly import Poly, PrincipalIdeal, QuotientElem, UnitStatus, unit_status
from .rings import GroundScalar, RingDescriptor
from .space import (RinehartSpace, check_constant_curvature, derive,
                    gradient)
from .tensors import VectorField, inner


@dataclass(frozen=True)
class HypersurfaceSpace:
    """An ambient coordinate space with a distinguished level set.

    `generator` is kept exactly as given; the ideal it generates stores a
    monic associate.  `normal` is grad(generator) over the ambient space
    and `q` is the verified witness with 1 - q<N, N> in (f).
    """

    ambient: RinehartSpace
    generator: Poly
    ideal: PrincipalIdeal
    normal: VectorField
    q: QuotientElem
    quotient: RinehartSpace

    @staticmethod
    def build(ambient: RinehartSpace, generator: Poly, q) -> "HypersurfaceSpace":
        if ambient.ideal is not None:
            raise SpaceMismatch("the ambient space must be a plain polynomial space")
        if not (ambient.metric.is_euclidean() or ambient.metric.is_constant()):
            raise MetricNotMusical("the ambient metric must be Euclidean or constant")
        if not ambient.metric.is_euclidean():
            status, _ = unit_status(ambient.metric.det())
            if status is not UnitStatus.UNIT:
                raise MetricNotMusical("the ambient metric determinant is not a unit")
        ideal = PrincipalIdeal.of(generator)
        normal = gradient(ambient, ambient.poly_fn(generator))
        q_fn = ambient.coerce_fn(q)
        nn = inner(normal, normal, ambient.metric)
        witness = ambient.constant(ambient.ring.one()) - q_fn * nn
        if not QuotientElem.reduce(witness.rep, ideal).is_zero():
            raise ValueError("1 - q<N, N> does not lie in the ideal (f)")
        quotient = RinehartSpace.with_metric(ambient.ring, ambient.var_names,
                                             ambient.metric, ideal)
        return HypersurfaceSpace(ambient, generator, ideal, normal,
                                 QuotientElem.reduce(q_fn.rep, ideal), quotient)

    # -- coercion -------------------------------------------------------------

    def to_quotient(self, x: VectorField) -> VectorField:
        """Reduce an ambient or quotient field to quotient coefficients."""
        if x.space == self.quotient:
            return x
        if x.space != self.ambient:
            raise SpaceMismatch("field belongs to neither the ambient nor the quotient space")
        coeffs = tuple(QuotientElem.reduce(c.rep, self.ideal) for c in x.coeffs)
        return VectorField(self.quotient, coeffs)

    def to_ambient(self, x: VectorField) -> VectorField:
        """Lift a quotient field along its canonical representatives."""
        if x.space == self.ambient:
            return x
        coeffs = tuple(QuotientElem(c.rep, None) for c in x.coeffs)
        return VectorField(self.ambient, coeffs)


def make_sphere(ring: RingDescriptor, n: int, c: GroundScalar,
                var_names=None) -> HypersurfaceSpace:
    """The level set (x1^2 + ... + xn^2 - 1/c) / 2 = 0 with witness q = c.

    Needs n >= 2, characteristic != 2, and c a unit of the ground ring.
    """
    if n < 2:
        raise ValueError("a sphere quotient needs at least two variables")
    if ring.characteristic() == 2:
        raise CharTwoUnsupported("sphere construction divides by 2")
    if c.ring != ring:
        raise NotAUnit("curvature constant belongs to a different ring")
    if not c.is_unit():
        raise NotAUnit("curvature constant must be a unit")
    names = tuple(var_names) if var_names is not None else tuple(
        f"x{i + 1}" for i in range(n))
    if len(names) != n:
        raise ValueError("variable name count must match n")
    ambient = RinehartSpace.euclidean(ring, names)
    half = ring.from_int(2).inverse()
    square_sum = Poly.zero(ring, n)
    for i in range(n):
        xi = Poly.variable(ring, n, i)
        square_sum = square_sum + xi * xi
    generator = (square_sum - Poly.constant(ring, n, c.inverse())).scale(half)
    return HypersurfaceSpace.build(ambient, generator, ambient.constant(c))


# ---------------------------------------------------------------------------
# tangency and projections


def is_tangent(hyper: HypersurfaceSpace, x: VectorField) -> bool:
    """Whether <X, N> lies in the ideal (f)."""
    xq = hyper.to_quotient(x)
    nq = hyper.to_quotient(hyper.normal)
    return inner(xq, nq, hyper.quotient.metric).is_zero()


def project_tangent(hyper: HypersurfaceSpace, x: VectorField) -> VectorField:
    """X - q<X, N>N with coefficients reduced modulo (f)."""
    xq = hyper.to_quotient(x)
    nq = hyper.to_quotient(hyper.normal)
    xn = inner(xq, nq, hyper.quotient.metric)
    return xq - (hyper.q * xn) * nq


def project_normal(hyper: HypersurfaceSpace, x: VectorField) -> VectorField:
    """The complementary projection X - X^T = q<X, N>N."""
    xq = hyper.to_quotient(x)
    return xq - project_tangent(hyper, xq)


def quotient_equal(hyper: HypersurfaceSpace, x: VectorField, y: VectorField) -> bool:
    """Equality of quotient classes: X - Y vanishes coefficientwise mod (f)."""
    diff = hyper.to_quotient(x) - hyper.to_quotient(y)
    return diff.is_zero()


def spanning_fields(hyper: HypersurfaceSpace) -> list:
    """The tangent projections Y_i of the coordinate fields; they span."""
    return [project_tangent(hyper, hyper.quotient.basis_field(i))
            for i in range(hyper.quotient.nvars)]


# ---------------------------------------------------------------------------
# induced geometry


class InducedConnection:
    """Tangent projection of the ambient componentwise connection.

    Values are computed on canonical representatives; the result is
    independent of the representatives for tangent arguments.  The memo
    table only ever receives identical values for a key, so concurrent use
    is safe.
    """

    def __init__(self, hyper: HypersurfaceSpace):
        self.hyper = hyper
        self._memo: dict = {}

    def __call__(self, x: VectorField, y: VectorField) -> VectorField:
        hyper = self.hyper
        xq = hyper.to_quotient(x)
        yq = hyper.to_quotient(y)
        key = (xq.coeffs, yq.coeffs)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if not is_tangent(hyper, xq):
            raise NotTangent("x")
        if not is_tangent(hyper, yq):
            raise NotTangent("y")
        space = hyper.quotient
        ambient_part = VectorField(space, tuple(
            derive(space, xq, yq.coeffs[k]) for k in range(space.nvars)))
        value = project_tangent(hyper, ambient_part)
        self._memo[key] = value
        return value


def induced_connection(hyper: HypersurfaceSpace, x: VectorField,
                       y: VectorField) -> VectorField:
    return InducedConnection(hyper)(x, y)


def second_fundamental_form(hyper: HypersurfaceSpace, x: VectorField,
                            y: VectorField) -> VectorField:
    """h(X, Y) = normal part of the ambient derivative of tangent fields."""
    xq = hyper.to_quotient(x)
    yq = hyper.to_quotient(y)
    if not is_tangent(hyper, xq):
        raise NotTangent("x")
    if not is_tangent(hyper, yq):
        raise NotTangent("y")
    space = hyper.quotient
    ambient_part = VectorField(space, tuple(
        derive(space, xq, yq.coeffs[k]) for k in range(space.nvars)))
    return project_normal(hyper, ambient_part)


@dataclass(frozen=True)
class SpaceFormReport:
    metric_ok: bool
    curvature_ok: bool
    counterexample: Optional[dict]

    @property
    def ok(self) -> bool:
        return self.metric_ok and self.curvature_ok


def verify_space_form(hyper: HypersurfaceSpace, c: GroundScalar) -> SpaceFormReport:
    """Check the sphere identities for curvature constant c.

    The induced metric must satisfy <Y_i, Y_j> = delta_ij - c x_i x_j and
    the curvature of the induced connection must equal
    c(<Y,Z>X - <X,Z>Y) on all triples of the spanning fields.
    """
    space = hyper.quotient
    if c.ring != space.ring:
        raise NotAUnit("curvature constant belongs to a different ring")
    spanning = spanning_fields(hyper)
    metric = space.metric
    c_fn = space.constant(c)
    for i, yi in enumerate(spanning):
        for j, yj in enumerate(spanning):
            got = inner(yi, yj, metric)
            want = space.constant(space.ring.from_int(1 if i == j else 0)) \
                - c_fn * space.coordinate(i) * space.coordinate(j)
            if got != want:
                ce = {"identity": "induced-metric", "pair": f"({i + 1}, {j + 1})",
                      "got": space.format_fn(got), "want": space.format_fn(want)}
                return SpaceFormReport(False, True, ce)
    conn = InducedConnection(hyper)
    report = check_constant_curvature(space, conn, c, spanning)
    if not report.ok:
        return SpaceFormReport(True, False, report.counterexample)
    return SpaceFormReport(True, True, None)
