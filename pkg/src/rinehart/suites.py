"""Named invariant suites over a built space, shared by the CLI and tests.

Each check runs exhaustively over basis or spanning data where that is
finite and on seeded random samples otherwise, entirely in exact
arithmetic.  Results carry a status, a human-readable detail line and a
counterexample rendered as exact expression strings when something fails.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import MetricNotMusical
from .hypersurface import (HypersurfaceSpace, InducedConnection, is_tangent,
                           project_normal, project_tangent, quotient_equal,
                           second_fundamental_form, spanning_fields,
                           verify_space_form)
from .poly import QuotientElem, UnitStatus, unit_status
from .randgen import random_field, random_fn, random_poly, rng_for
from .rings import GroundScalar
from .space import (EuclideanConnection, KoszulConnection, RinehartSpace,
                    check_levi_civita, curvature, derive, differential,
                    flat_connection, lie_bracket)
from .tensors import OneForm, VectorField, flat, inner, pairing, sharp


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str
    counterexample: Optional[dict]
    seconds: float


@dataclass
class Workspace:
    """A built space specification: a plain space plus an optional quotient."""

    space: RinehartSpace
    hyper: Optional[HypersurfaceSpace] = None
    c: Optional[GroundScalar] = None

    def rng(self, seed: int, name: str):
        return rng_for(seed, name)


def _ambient_connection(space: RinehartSpace):
    if space.metric.is_euclidean():
        return EuclideanConnection(space)
    if space.ring.from_int(2).is_unit():
        return KoszulConnection(space)
    return None


def _fail(name, detail, ce):
    return ("fail", detail, ce)


def _ok(detail):
    return ("pass", detail, None)


def _skip(detail):
    return ("skipped", detail, None)


def _random_form(rng, space, max_degree):
    return OneForm(space, tuple(random_fn(rng, space, max_degree)
                                for _ in range(space.nvars)))


def _random_tangent(rng, hyper, max_degree):
    return project_tangent(hyper, random_field(rng, hyper.quotient, max_degree))


# ---------------------------------------------------------------------------
# plain-space checks


def _check_pairing_duality(ws, rng, cases, max_degree):
    space = ws.space
    n = space.nvars
    for i in range(n):
        for j in range(n):
            got = pairing(space.basis_field(i), space.basis_form(j))
            want = space.constant(space.ring.from_int(1 if i == j else 0))
            if got != want:
                return _fail("pairing-duality", "basis pairing is not dual",
                             {"pair": f"({i + 1}, {j + 1})", "got": space.format_fn(got)})
    for _ in range(cases):
        f = random_fn(rng, space, max_degree)
        x = random_field(rng, space, max_degree)
        y = random_field(rng, space, max_degree)
        om = _random_form(rng, space, max_degree)
        lhs = pairing(f * x + y, om)
        rhs = f * pairing(x, om) + pairing(y, om)
        if lhs != rhs:
            return _fail("pairing-duality", "pairing is not O-linear",
                         {"f": space.format_fn(f), "x": space.format_field(x)})
    return _ok(f"{n * n} basis pairs and {cases} linearity cases")


def _check_differential_leibniz(ws, rng, cases, max_degree):
    space = ws.space
    one = space.constant(space.ring.one())
    if not differential(space, one).is_zero():
        return _fail("differential-leibniz", "d(1) is not zero", {})
    for _ in range(cases):
        f = random_fn(rng, space, max_degree)
        g = random_fn(rng, space, max_degree)
        lhs = differential(space, f * g)
        rhs = f * differential(space, g) + g * differential(space, f)
        if lhs.coeffs != rhs.coeffs:
            return _fail("differential-leibniz", "d(fg) != f dg + g df",
                         {"f": space.format_fn(f), "g": space.format_fn(g)})
    return _ok(f"d(1) = 0 and {cases} product cases")


def _check_anchor(ws, rng, cases, max_degree):
    space = ws.space
    for _ in range(cases):
        f = random_fn(rng, space, max_degree)
        x = random_field(rng, space, max_degree)
        y = random_field(rng, space, max_degree)
        lhs = lie_bracket(space, x, f * y)
        rhs = derive(space, x, f) * y + f * lie_bracket(space, x, y)
        if lhs != rhs:
            return _fail("anchor-compatibility", "[X, fY] != (d_X f)Y + f[X, Y]",
                         {"f": space.format_fn(f), "x": space.format_field(x),
                          "y": space.format_field(y)})
    return _ok(f"{cases} cases")


def _check_jacobi(ws, rng, cases, max_degree):
    space = ws.space
    for _ in range(cases):
        x = random_field(rng, space, max_degree)
        y = random_field(rng, space, max_degree)
        z = random_field(rng, space, max_degree)
        acc = (lie_bracket(space, lie_bracket(space, x, y), z)
               + lie_bracket(space, lie_bracket(space, y, z), x)
               + lie_bracket(space, lie_bracket(space, z, x), y))
        if not acc.is_zero():
            return _fail("jacobi-identity", "cyclic bracket sum is nonzero",
                         {"x": space.format_field(x), "y": space.format_field(y),
                          "z": space.format_field(z)})
    return _ok(f"{cases} cases")


def _check_connection_leibniz(ws, rng, cases, max_degree):
    space = ws.space
    conn = _ambient_connection(space)
    if conn is None:
        return _skip("2 is not a unit, no connection available")
    form_level = isinstance(conn, KoszulConnection) and not conn.fully_solvable
    metric = space.metric
    for _ in range(cases):
        f = random_fn(rng, space, max_degree)
        x = random_field(rng, space, max_degree)
        y = random_field(rng, space, max_degree)
        if form_level:
            lhs = conn.form(x, f * y)
            rhs = derive(space, x, f) * flat(y, metric) + f * conn.form(x, y)
            lower_ok = conn.form(f * x, y).coeffs == (f * conn.form(x, y)).coeffs
            upper_ok = lhs.coeffs == rhs.coeffs
        else:
            lhs = conn(x, f * y)
            rhs = derive(space, x, f) * y + f * conn(x, y)
            lower_ok = conn(f * x, y) == f * conn(x, y)
            upper_ok = lhs == rhs
        if not (lower_ok and upper_ok):
            return _fail("connection-leibniz", "connection module laws fail",
                         {"f": space.format_fn(f), "x": space.format_field(x),
                          "y": space.format_field(y)})
    return _ok(f"{cases} cases" + (" at the one-form level" if form_level else ""))


def _check_flat_curvature(ws, rng, cases, max_degree):
    space = ws.space
    if not space.metric.is_euclidean():
        return _skip("metric is not Euclidean")
    conn = EuclideanConnection(space)
    basis = space.basis_fields()
    for x in basis:
        for y in basis:
            for z in basis:
                if not curvature(space, conn, x, y, z).is_zero():
                    return _fail("flat-curvature", "basis curvature is nonzero", {})
    for _ in range(cases):
        x = random_field(rng, space, max_degree)
        y = random_field(rng, space, max_degree)
        z = random_field(rng, space, max_degree)
        val = curvature(space, conn, x, y, z)
        if not val.is_zero():
            return _fail("flat-curvature", "R(X, Y)Z is nonzero",
                         {"x": space.format_field(x), "y": space.format_field(y),
                          "z": space.format_field(z),
                          "value": space.format_field(val)})
    n = space.nvars
    return _ok(f"{n ** 3} basis triples and {cases} random triples")


def _check_koszul_flat(ws, rng, cases, max_degree):
    space = ws.space
    if not space.metric.is_euclidean():
        return _skip("metric is not Euclidean")
    if not space.ring.from_int(2).is_unit():
        return _skip("2 is not a unit")
    flat_conn = EuclideanConnection(space)
    koszul = KoszulConnection(space)
    basis = space.basis_fields()
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            if koszul(x, y) != flat_conn(x, y):
                return _fail("koszul-flat-agreement", "basis values differ",
                             {"pair": f"({i + 1}, {j + 1})"})
    for _ in range(cases):
        x = random_field(rng, space, max_degree)
        y = random_field(rng, space, max_degree)
        if koszul(x, y) != flat_conn(x, y):
            return _fail("koszul-flat-agreement", "values differ",
                         {"x": space.format_field(x), "y": space.format_field(y)})
    n = space.nvars
    return _ok(f"{n * n} basis pairs and {cases} random pairs")


def _check_levi_civita_suite(ws, rng, cases, max_degree):
    space = ws.space
    conn = _ambient_connection(space)
    if conn is None:
        return _skip("2 is not a unit, no connection available")
    report = check_levi_civita(space, conn, rng=rng, cases=cases,
                               max_degree=max_degree)
    if not report.ok:
        which = "torsion" if not report.torsion_free else "compatibility"
        return _fail("levi-civita", f"{which} identity fails", report.counterexample)
    return _ok(f"basis plus {cases} random samples")


def _check_musical_roundtrip(ws, rng, cases, max_degree):
    space = ws.space
    status, _ = unit_status(space.metric.det())
    if status is not UnitStatus.UNIT:
        return _skip(f"metric determinant is {status.value}")
    metric = space.metric
    for _ in range(cases):
        x = random_field(rng, space, max_degree)
        om = _random_form(rng, space, max_degree)
        if sharp(flat(x, metric), metric) != x:
            return _fail("musical-roundtrip", "sharp(flat(X)) != X",
                         {"x": space.format_field(x)})
        back = flat(sharp(om, metric), metric)
        if back.coeffs != om.coeffs:
            return _fail("musical-roundtrip", "flat(sharp(om)) != om",
                         {"om": "[" + ", ".join(space.format_fn(c) for c in om.coeffs) + "]"})
    return _ok(f"{cases} round trips")


def _check_metric_transfer(ws, rng, cases, max_degree):
    space = ws.space
    metric = space.metric
    for _ in range(cases):
        x = random_field(rng, space, max_degree)
        y = random_field(rng, space, max_degree)
        val = inner(x, y, metric)
        if val != pairing(x, flat(y, metric)) or val != pairing(y, flat(x, metric)):
            return _fail("metric-transfer", "inner product does not match pairing",
                         {"x": space.format_field(x), "y": space.format_field(y)})
    return _ok(f"{cases} cases")


def _check_curvature_tensorial(ws, rng, cases, max_degree):
    # The random O-coefficient carries the case variation; the vector slots
    # draw from a small pool so the connection memo keeps this affordable.
    if ws.hyper is not None:
        space = ws.hyper.quotient
        conn = InducedConnection(ws.hyper)
        pool = list(spanning_fields(ws.hyper))
        pool.append(_random_tangent(rng, ws.hyper, 1))
    else:
        space = ws.space
        conn = _ambient_connection(space)
        if conn is None:
            return _skip("2 is not a unit, no connection available")
        if isinstance(conn, KoszulConnection) and not conn.fully_solvable:
            return _skip("connection is not vector valued on this metric")
        pool = list(space.basis_fields())
        pool.append(random_field(rng, space, 1))
    for case in range(cases):
        f = random_fn(rng, space, max_degree)
        x, y, z = (rng.choice(pool) for _ in range(3))
        base = curvature(space, conn, x, y, z)
        want = f * base
        slot = case % 3
        args = [x, y, z]
        args[slot] = f * args[slot]
        got = curvature(space, conn, *args)
        if got != want:
            return _fail("curvature-tensorial", f"slot {slot + 1} is not O-linear",
                         {"f": space.format_fn(f), "x": space.format_field(x),
                          "y": space.format_field(y), "z": space.format_field(z)})
    return _ok(f"{cases} cases, rotating the scaled slot")


# ---------------------------------------------------------------------------
# quotient checks


def _check_normal_form_hom(ws, rng, cases, max_degree):
    hyper = ws.hyper
    space = hyper.quotient
    for _ in range(cases):
        g = random_poly(rng, space.ring, space.nvars, max_degree + 2)
        h = random_poly(rng, space.ring, space.nvars, max_degree + 2)
        lhs = space.poly_fn(g * h)
        rhs = space.poly_fn(g) * space.poly_fn(h)
        add_lhs = space.poly_fn(g + h)
        add_rhs = space.poly_fn(g) + space.poly_fn(h)
        redo = space.poly_fn(space.poly_fn(g).rep)
        if lhs != rhs or add_lhs != add_rhs or redo != space.poly_fn(g):
            return _fail("normal-form-homomorphism", "reduction is not a ring morphism",
                         {"g": space.format_fn(space.poly_fn(g)),
                          "h": space.format_fn(space.poly_fn(h))})
    return _ok(f"{cases} pairs")


def _check_tangency(ws, rng, cases, max_degree):
    hyper = ws.hyper
    fields = spanning_fields(hyper)
    for i, y in enumerate(fields):
        if not is_tangent(hyper, y):
            return _fail("tangency", "spanning field is not tangent",
                         {"index": str(i + 1)})
        if not project_normal(hyper, y).is_zero():
            return _fail("tangency", "tangent field has a normal part",
                         {"index": str(i + 1)})
    if is_tangent(hyper, hyper.normal):
        return _fail("tangency", "the normal field reads as tangent", {})
    for _ in range(cases):
        t = _random_tangent(rng, hyper, max_degree)
        if not is_tangent(hyper, t):
            return _fail("tangency", "projected field is not tangent",
                         {"t": hyper.quotient.format_field(t)})
    return _ok(f"{len(fields)} spanning fields and {cases} projections")


def _check_projection_retraction(ws, rng, cases, max_degree):
    hyper = ws.hyper
    for _ in range(cases):
        x = random_field(rng, hyper.quotient, max_degree)
        px = project_tangent(hyper, x)
        if not quotient_equal(hyper, project_tangent(hyper, px), px):
            return _fail("projection-retraction", "projection is not idempotent",
                         {"x": hyper.quotient.format_field(x)})
        t = _random_tangent(rng, hyper, max_degree)
        if not quotient_equal(hyper, project_tangent(hyper, t), t):
            return _fail("projection-retraction", "projection moves a tangent field",
                         {"t": hyper.quotient.format_field(t)})
        if not (project_tangent(hyper, x) + project_normal(hyper, x) == x):
            return _fail("projection-retraction", "projections do not sum to identity",
                         {"x": hyper.quotient.format_field(x)})
    return _ok(f"{cases} cases")


def _check_projection_orthogonal(ws, rng, cases, max_degree):
    hyper = ws.hyper
    space = hyper.quotient
    for _ in range(cases):
        x = random_field(rng, space, max_degree)
        t = _random_tangent(rng, hyper, max_degree)
        gap = inner(x - project_tangent(hyper, x), t, space.metric)
        if not gap.is_zero():
            return _fail("projection-orthogonal", "normal part meets a tangent field",
                         {"x": space.format_field(x), "t": space.format_field(t),
                          "inner": space.format_fn(gap)})
    return _ok(f"{cases} cases")


def _check_gauss_split(ws, rng, cases, max_degree):
    hyper = ws.hyper
    space = hyper.quotient
    conn = InducedConnection(hyper)
    for _ in range(cases):
        x = _random_tangent(rng, hyper, max_degree)
        y = _random_tangent(rng, hyper, max_degree)
        ambient_part = VectorField(space, tuple(
            derive(space, x, y.coeffs[k]) for k in range(space.nvars)))
        split = conn(x, y) + second_fundamental_form(hyper, x, y)
        if not quotient_equal(hyper, ambient_part, split):
            return _fail("gauss-split", "ambient derivative != tangent + normal parts",
                         {"x": space.format_field(x), "y": space.format_field(y)})
    return _ok(f"{cases} cases")


def _check_second_form_symmetric(ws, rng, cases, max_degree):
    hyper = ws.hyper
    space = hyper.quotient
    for _ in range(cases):
        x = _random_tangent(rng, hyper, max_degree)
        y = _random_tangent(rng, hyper, max_degree)
        f = random_fn(rng, space, max_degree)
        if not quotient_equal(hyper, second_fundamental_form(hyper, x, y),
                              second_fundamental_form(hyper, y, x)):
            return _fail("second-form-symmetric", "h(X, Y) != h(Y, X)",
                         {"x": space.format_field(x), "y": space.format_field(y)})
        if not quotient_equal(hyper, second_fundamental_form(hyper, f * x, y),
                              f * second_fundamental_form(hyper, x, y)):
            return _fail("second-form-symmetric", "h is not O-bilinear",
                         {"f": space.format_fn(f), "x": space.format_field(x),
                          "y": space.format_field(y)})
    return _ok(f"{cases} cases")


def _check_representative_independence(ws, rng, cases, max_degree):
    hyper = ws.hyper
    ambient = hyper.ambient
    gen = ambient.poly_fn(hyper.generator)
    for _ in range(cases):
        x = _random_tangent(rng, hyper, max_degree)
        y = _random_tangent(rng, hyper, max_degree)
        w = random_field(rng, ambient, max_degree)
        v = random_field(rng, ambient, max_degree)
        x_lift = hyper.to_ambient(x) + gen * w
        y_lift = hyper.to_ambient(y) + gen * v
        moved = project_tangent(hyper, VectorField(ambient, tuple(
            derive(ambient, x_lift, y_lift.coeffs[k]) for k in range(ambient.nvars))))
        base = project_tangent(hyper, VectorField(ambient, tuple(
            derive(ambient, hyper.to_ambient(x), hyper.to_ambient(y).coeffs[k])
            for k in range(ambient.nvars))))
        if not quotient_equal(hyper, moved, base):
            return _fail("representative-independence",
                         "induced value depends on the lift",
                         {"x": hyper.quotient.format_field(x),
                          "y": hyper.quotient.format_field(y)})
    return _ok(f"{cases} lifted pairs")


def _check_induced_metric(ws, rng, cases, max_degree):
    hyper = ws.hyper
    c = ws.c
    space = hyper.quotient
    fields = spanning_fields(hyper)
    c_fn = space.constant(c)
    for i, yi in enumerate(fields):
        for j, yj in enumerate(fields):
            got = inner(yi, yj, space.metric)
            want = space.constant(space.ring.from_int(1 if i == j else 0)) \
                - c_fn * space.coordinate(i) * space.coordinate(j)
            if got != want:
                return _fail("induced-metric", "<Y_i, Y_j> != delta_ij - c x_i x_j",
                             {"pair": f"({i + 1}, {j + 1})",
                              "got": space.format_fn(got),
                              "want": space.format_fn(want)})
    n = len(fields)
    return _ok(f"{n * n} spanning pairs")


def _check_induced_identities(ws, rng, cases, max_degree):
    hyper = ws.hyper
    c = ws.c
    ambient = hyper.ambient
    space = hyper.quotient
    n = space.nvars
    normal = hyper.normal
    c_amb = ambient.constant(c)
    # ambient pipeline identities
    for i in range(n):
        if derive(ambient, normal, ambient.coordinate(i)) != ambient.coordinate(i):
            return _fail("induced-identities", "d_N x_i != x_i", {"index": str(i + 1)})
        if inner(ambient.basis_field(i), normal, ambient.metric) != ambient.coordinate(i):
            return _fail("induced-identities", "<X_i, N> != x_i", {"index": str(i + 1)})
    square_sum = ambient.constant(ambient.ring.zero())
    for i in range(n):
        square_sum = square_sum + ambient.coordinate(i) * ambient.coordinate(i)
    if inner(normal, normal, ambient.metric) != square_sum:
        return _fail("induced-identities", "<N, N> != sum x_i^2", {})
    for _ in range(max(1, cases // 10)):
        x = random_field(rng, ambient, max_degree)
        if flat_connection(ambient, x, normal) != x:
            return _fail("induced-identities", "nabla_X N != X",
                         {"x": ambient.format_field(x)})
    fields = spanning_fields(hyper)
    for i in range(n):
        lift = hyper.to_quotient(ambient.basis_field(i))
        want = lift - (hyper.q * hyper.to_quotient(normal).coeffs[i] *
                       hyper.to_quotient(normal))
        # project_tangent(X_i) = X_i - c x_i N for the sphere witness q = c
        if fields[i] != want:
            return _fail("induced-identities", "Y_i != X_i - c x_i N",
                         {"index": str(i + 1)})
    conn = InducedConnection(hyper)
    c_fn = space.constant(c)
    for i, yi in enumerate(fields):
        for j, yj in enumerate(fields):
            dij = derive(space, yi, space.coordinate(j))
            want_d = space.constant(space.ring.from_int(1 if i == j else 0)) \
                - c_fn * space.coordinate(i) * space.coordinate(j)
            if dij != want_d:
                return _fail("induced-identities", "d_Yi x_j != delta_ij - c x_i x_j",
                             {"pair": f"({i + 1}, {j + 1})"})
            got_conn = conn(yi, yj)
            want_conn = -(c_fn * space.coordinate(j)) * yi
            if not quotient_equal(hyper, got_conn, want_conn):
                return _fail("induced-identities", "nabla_Yi Y_j != -c x_j Y_i",
                             {"pair": f"({i + 1}, {j + 1})",
                              "got": space.format_field(got_conn)})
            bracket = lie_bracket(space, yi, yj)
            want_b = (c_fn * space.coordinate(i)) * yj - (c_fn * space.coordinate(j)) * yi
            if not quotient_equal(hyper, bracket, want_b):
                return _fail("induced-identities", "[Y_i, Y_j] != c(x_i Y_j - x_j Y_i)",
                             {"pair": f"({i + 1}, {j + 1})"})
            h = second_fundamental_form(hyper, yi, yj)
            scale = want_d  # delta_ij - c x_i x_j
            want_h = -(c_fn * scale) * hyper.to_quotient(normal)
            if not quotient_equal(hyper, h, want_h):
                return _fail("induced-identities", "h(Y_i, Y_j) != -c(delta_ij - c x_i x_j)N",
                             {"pair": f"({i + 1}, {j + 1})"})
    return _ok(f"ambient pipeline and {n * n} spanning pairs")


def _check_space_form(ws, rng, cases, max_degree):
    report = verify_space_form(ws.hyper, ws.c)
    if not report.ok:
        which = "induced metric" if not report.metric_ok else "curvature"
        return _fail("space-form", f"{which} identity fails", report.counterexample)
    n = ws.hyper.quotient.nvars
    return _ok(f"all {n ** 3} spanning triples at c = {ws.c}")


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class CheckSpec:
    name: str
    needs: str  # "space" | "quotient" | "sphere"
    runner: Callable


REGISTRY = [
    CheckSpec("pairing-duality", "space", _check_pairing_duality),
    CheckSpec("differential-leibniz", "space", _check_differential_leibniz),
    CheckSpec("anchor-compatibility", "space", _check_anchor),
    CheckSpec("jacobi-identity", "space", _check_jacobi),
    CheckSpec("connection-leibniz", "space", _check_connection_leibniz),
    CheckSpec("flat-curvature", "space", _check_flat_curvature),
    CheckSpec("koszul-flat-agreement", "space", _check_koszul_flat),
    CheckSpec("levi-civita", "space", _check_levi_civita_suite),
    CheckSpec("musical-roundtrip", "space", _check_musical_roundtrip),
    CheckSpec("metric-transfer", "space", _check_metric_transfer),
    CheckSpec("curvature-tensorial", "space", _check_curvature_tensorial),
    CheckSpec("normal-form-homomorphism", "quotient", _check_normal_form_hom),
    CheckSpec("tangency", "quotient", _check_tangency),
    CheckSpec("projection-retraction", "quotient", _check_projection_retraction),
    CheckSpec("projection-orthogonal", "quotient", _check_projection_orthogonal),
    CheckSpec("gauss-split", "quotient", _check_gauss_split),
    CheckSpec("second-form-symmetric", "quotient", _check_second_form_symmetric),
    CheckSpec("representative-independence", "quotient", _check_representative_independence),
    CheckSpec("induced-metric", "sphere", _check_induced_metric),
    CheckSpec("induced-identities", "sphere", _check_induced_identities),
    CheckSpec("space-form", "sphere", _check_space_form),
]

CHECK_NAMES = [spec.name for spec in REGISTRY]


def applicable_checks(ws: Workspace) -> list:
    names = []
    for spec in REGISTRY:
        if spec.needs == "quotient" and ws.hyper is None:
            continue
        if spec.needs == "sphere" and (ws.hyper is None or ws.c is None):
            continue
        names.append(spec.name)
    return names


def run_checks(ws: Workspace, names: Optional[list] = None, seed: int = 0,
               max_degree: int = 2, cases: int = 40) -> list:
    """Run the named checks (all applicable ones by default), sorted by name."""
    chosen = names if names is not None else applicable_checks(ws)
    unknown = [n for n in chosen if n not in CHECK_NAMES]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
    results = []
    by_name = {spec.name: spec for spec in REGISTRY}
    for name in sorted(set(chosen)):
        spec = by_name[name]
        start = time.perf_counter()
        if spec.needs == "quotient" and ws.hyper is None:
            status, detail, ce = _skip("needs a quotient space")
        elif spec.needs == "sphere" and (ws.hyper is None or ws.c is None):
            status, detail, ce = _skip("needs a sphere quotient with known c")
        else:
            rng = ws.rng(seed, name)
            try:
                status, detail, ce = spec.runner(ws, rng, cases, max_degree)
            except MetricNotMusical as exc:
                status, detail, ce = _skip(f"metric is not musical: {exc}")
        elapsed = time.perf_counter() - start
        results.append(CheckResult(name, status, detail, ce, elapsed))
    return results
