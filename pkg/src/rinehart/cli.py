"""Command line interface: load a space spec, run checks or computations.

The spec file is JSON:

    {
      "schema_version": 1,
      "ring": {"kind": "Q"} | {"kind": "Fp", "p": 5}
              | {"kind": "quad", "base": {...}, "s": 1},
      "vars": ["x", "y", "z"],
      "metric": "euclidean" | {"diag": [...]} | {"matrix": [[...]]},
      "quotient": {"sphere": {"c": "1"}} | {"generator": "...", "q": "..."},
      "checks": ["space-form", ...],      # optional, defaults to all applicable
      "seed": 0,                          # optional
      "max_degree": 2                     # optional
    }

Exit codes: 0 all requested checks pass (or the computation succeeded),
1 at least one check failed, 2 validation or computation error.
Reports are deterministic: identical spec, seed and engine version give
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import __version__
from .errors import (CharTwoUnsupported, NotAUnit, ParseError, RinehartError,
                     ValidationError)
from .hypersurface import (HypersurfaceSpace, InducedConnection, make_sphere,
                           project_normal, project_tangent, spanning_fields,
                           verify_space_form)
from .parse import parse_poly, parse_scalar, parse_vector
from .poly import QuotientElem
from .rings import ring_from_json
from .space import (EuclideanConnection, KoszulConnection, RinehartSpace,
                    curvature, gradient)
from .suites import CHECK_NAMES, CheckResult, Workspace, run_checks
from .tensors import Metric, VectorField

DEFAULT_CASES = 40


@dataclass
class SpecMeta:
    checks: Optional[list]
    seed: int
    max_degree: int


def _identifier_ok(name: str) -> bool:
    if not name or name == "al":
        return False
    if not (name[0].isalpha() or name[0] == "_"):
        return False
    return all(ch.isalnum() or ch == "_" for ch in name)


def load_spec(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise ValidationError("spec", f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError("spec", f"invalid JSON: {exc}") from None


def build_workspace(spec: dict) -> tuple[Workspace, SpecMeta]:
    """Validate a parsed spec file and construct the described space."""
    if not isinstance(spec, dict):
        raise ValidationError("spec", "top level must be an object")
    version = spec.get("schema_version", 1)
    if version != 1:
        raise ValidationError("schema_version", f"unsupported version {version!r}")

    try:
        ring = ring_from_json(spec.get("ring"))
    except ValueError as exc:
        raise ValidationError("ring", str(exc)) from None

    names = spec.get("vars")
    if (not isinstance(names, list) or not names
            or any(not isinstance(v, str) or not _identifier_ok(v) for v in names)):
        raise ValidationError("vars", "must be a nonempty list of identifiers ('al' is reserved)")
    if len(set(names)) != len(names):
        raise ValidationError("vars", "variable names must be distinct")
    names = tuple(names)
    n = len(names)

    metric_spec = spec.get("metric", "euclidean")
    try:
        if metric_spec == "euclidean":
            metric = Metric.euclidean(ring, n, None)
        elif isinstance(metric_spec, dict) and "diag" in metric_spec:
            if len(metric_spec["diag"]) != n:
                raise ValidationError("metric", f"diagonal needs {n} entries")
            diag = [QuotientElem(parse_poly(text, ring, names), None)
                    for text in metric_spec["diag"]]
            metric = Metric.diagonal(diag)
        elif isinstance(metric_spec, dict) and "matrix" in metric_spec:
            rows = metric_spec["matrix"]
            if len(rows) != n or any(len(row) != n for row in rows):
                raise ValidationError("metric", f"matrix must be {n} x {n}")
            metric = Metric(tuple(
                tuple(QuotientElem(parse_poly(text, ring, names), None) for text in row)
                for row in rows))
        else:
            raise ValidationError("metric", "must be 'euclidean', {'diag': ...} or {'matrix': ...}")
    except ParseError as exc:
        raise ValidationError("metric", str(exc)) from None
    except ValueError as exc:
        raise ValidationError("metric", str(exc)) from None

    space = RinehartSpace.with_metric(ring, names, metric)

    hyper = None
    c_scalar = None
    quotient_spec = spec.get("quotient")
    if quotient_spec is not None:
        if not isinstance(quotient_spec, dict):
            raise ValidationError("quotient", "must be an object")
        if "sphere" in quotient_spec:
            sphere = quotient_spec["sphere"]
            if not isinstance(sphere, dict) or "c" not in sphere:
                raise ValidationError("quotient.sphere", "needs a 'c' scalar string")
            if not metric.is_euclidean():
                raise ValidationError("metric", "sphere quotients need the euclidean metric")
            try:
                c_scalar = parse_scalar(str(sphere["c"]), ring)
            except ParseError as exc:
                raise ValidationError("quotient.sphere.c", str(exc)) from None
            try:
                hyper = make_sphere(ring, n, c_scalar, var_names=names)
            except (NotAUnit, CharTwoUnsupported, ValueError) as exc:
                raise ValidationError("quotient.sphere.c", str(exc)) from None
        elif "generator" in quotient_spec:
            if "q" not in quotient_spec:
                raise ValidationError("quotient.q", "generator quotients need a witness 'q'")
            try:
                gen = parse_poly(quotient_spec["generator"], ring, names)
                q = parse_poly(quotient_spec["q"], ring, names)
            except ParseError as exc:
                raise ValidationError("quotient", str(exc)) from None
            try:
                hyper = HypersurfaceSpace.build(space, gen, QuotientElem(q, None))
            except (RinehartError, ValueError) as exc:
                raise ValidationError("quotient", str(exc)) from None
        else:
            raise ValidationError("quotient", "must contain 'sphere' or 'generator'")

    checks = spec.get("checks")
    if checks is not None:
        if not isinstance(checks, list) or any(not isinstance(c, str) for c in checks):
            raise ValidationError("checks", "must be a list of check names")
        unknown = sorted(set(checks) - set(CHECK_NAMES))
        if unknown:
            raise ValidationError("checks", f"unknown checks: {', '.join(unknown)}")

    seed = spec.get("seed", 0)
    if not isinstance(seed, int) or seed < 0:
        raise ValidationError("seed", "must be a nonnegative integer")
    max_degree = spec.get("max_degree", 2)
    if not isinstance(max_degree, int) or max_degree < 1:
        raise ValidationError("max_degree", "must be a positive integer")

    workspace = Workspace(space=space, hyper=hyper, c=c_scalar)
    return workspace, SpecMeta(checks=checks, seed=seed, max_degree=max_degree)


# ---------------------------------------------------------------------------
# output helpers


def _report_json(results, extra: Optional[dict] = None) -> str:
    payload = {
        "schema_version": 1,
        "checks": [
            {"name": r.name, "status": r.status, "detail": r.detail,
             "counterexample": r.counterexample}
            for r in results
        ],
        "engine_version": __version__,
    }
    if extra:
        payload.update(extra)
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _report_text(results) -> str:
    lines = []
    width = max((len(r.name) for r in results), default=0)
    for r in results:
        tag = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[r.status]
        lines.append(f"{tag}  {r.name.ljust(width)}  {r.detail} ({r.seconds:.2f}s)")
        if r.counterexample:
            for key in sorted(r.counterexample):
                lines.append(f"      {key} = {r.counterexample[key]}")
    passed = sum(r.status == "pass" for r in results)
    failed = sum(r.status == "fail" for r in results)
    skipped = sum(r.status == "skipped" for r in results)
    lines.append(f"{passed} passed, {failed} failed, {skipped} skipped")
    return "\n".join(lines) + "\n"


def _result_json(command: str, result, extra: Optional[dict] = None) -> str:
    payload = {"schema_version": 1, "engine_version": __version__,
               "command": command, "result": result}
    if extra:
        payload.update(extra)
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _field_strings(space, field: VectorField) -> list:
    return [space.format_fn(c) for c in field.coeffs]


def _spanning_payload(ws: Workspace):
    fields = spanning_fields(ws.hyper)
    space = ws.hyper.quotient
    return [_field_strings(space, f) for f in fields]


def _spanning_text(ws: Workspace) -> str:
    lines = []
    for i, coeffs in enumerate(_spanning_payload(ws)):
        lines.append(f"Y{i + 1} = [" + ", ".join(coeffs) + "]")
    return "\n".join(lines) + "\n"


def _parse_field(ws: Workspace, text: str) -> VectorField:
    space = ws.hyper.quotient if ws.hyper is not None else ws.space
    polys = parse_vector(text, space.ring, space.var_names)
    if len(polys) != space.nvars:
        raise ValidationError("field", f"expected {space.nvars} components")
    return space.field(polys)


def _connection_for(ws: Workspace):
    if ws.hyper is not None:
        return InducedConnection(ws.hyper), ws.hyper.quotient
    space = ws.space
    if space.metric.is_euclidean():
        return EuclideanConnection(space), space
    return KoszulConnection(space), space


# ---------------------------------------------------------------------------
# commands


def _cmd_check(ws, meta, args) -> int:
    seed = args.seed if args.seed is not None else meta.seed
    max_degree = args.max_degree if args.max_degree is not None else meta.max_degree
    results = run_checks(ws, names=meta.checks, seed=seed,
                         max_degree=max_degree, cases=DEFAULT_CASES)
    extra = {}
    if args.spanning and ws.hyper is not None:
        extra["spanning"] = _spanning_payload(ws)
    if args.json:
        sys.stdout.write(_report_json(results, extra or None))
    else:
        if args.spanning and ws.hyper is not None:
            sys.stdout.write(_spanning_text(ws))
        sys.stdout.write(_report_text(results))
    return 1 if any(r.status == "fail" for r in results) else 0


def _cmd_space_form(ws, meta, args) -> int:
    if ws.hyper is None:
        raise ValidationError("quotient", "space-form needs a quotient space")
    if args.c is not None:
        c = parse_scalar(args.c, ws.space.ring)
    elif ws.c is not None:
        c = ws.c
    else:
        raise ValidationError("c", "this spec has no sphere constant; pass --c")
    report = verify_space_form(ws.hyper, c)
    status = "pass" if report.ok else "fail"
    if report.ok:
        detail = f"space form of curvature c = {c} verified"
    elif not report.metric_ok:
        detail = "induced metric identity fails"
    else:
        detail = "constant curvature identity fails"
    results = [CheckResult("space-form", status, detail, report.counterexample, 0.0)]
    extra = {}
    if args.spanning:
        extra["spanning"] = _spanning_payload(ws)
    if args.json:
        sys.stdout.write(_report_json(results, extra or None))
    else:
        if args.spanning:
            sys.stdout.write(_spanning_text(ws))
        sys.stdout.write(_report_text(results))
    return 0 if report.ok else 1


def _cmd_connection(ws, meta, args) -> int:
    conn, space = _connection_for(ws)
    x = _parse_field(ws, args.x)
    y = _parse_field(ws, args.y)
    value = conn(x, y)
    result = _field_strings(space, value)
    if args.json:
        sys.stdout.write(_result_json("connection", result))
    else:
        sys.stdout.write("[" + ", ".join(result) + "]\n")
    return 0


def _cmd_curvature(ws, meta, args) -> int:
    conn, space = _connection_for(ws)
    x = _parse_field(ws, args.x)
    y = _parse_field(ws, args.y)
    z = _parse_field(ws, args.z)
    value = curvature(space, conn, x, y, z)
    result = _field_strings(space, value)
    if args.json:
        sys.stdout.write(_result_json("curvature", result))
    else:
        sys.stdout.write("[" + ", ".join(result) + "]\n")
    return 0


def _cmd_gradient(ws, meta, args) -> int:
    space = ws.hyper.quotient if ws.hyper is not None else ws.space
    f = space.fn(args.f)
    value = gradient(space, f)
    result = _field_strings(space, value)
    if args.json:
        sys.stdout.write(_result_json("gradient", result))
    else:
        sys.stdout.write("[" + ", ".join(result) + "]\n")
    return 0


def _cmd_project(ws, meta, args) -> int:
    if ws.hyper is None:
        raise ValidationError("quotient", "project needs a quotient space")
    x = _parse_field(ws, args.x)
    space = ws.hyper.quotient
    tangent = project_tangent(ws.hyper, x)
    normal = project_normal(ws.hyper, x)
    payload = {"tangent": _field_strings(space, tangent),
               "normal": _field_strings(space, normal)}
    if args.json:
        sys.stdout.write(_result_json("project", payload))
    else:
        sys.stdout.write("tangent = [" + ", ".join(payload["tangent"]) + "]\n")
        sys.stdout.write("normal  = [" + ", ".join(payload["normal"]) + "]\n")
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rinehart",
        description="exact verification of Rinehart-space geometry over a spec file")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("spec", help="path to a JSON space spec")
        p.add_argument("--json", action="store_true", help="machine readable output")
        p.add_argument("--seed", type=int, default=None, help="override the spec seed")
        p.add_argument("--max-degree", type=int, default=None, dest="max_degree",
                       help="degree bound for random coefficients")
        p.add_argument("--spanning", action="store_true",
                       help="also print the spanning tangent fields of a quotient")

    p_check = sub.add_parser("check", help="run the invariant suites")
    common(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_sf = sub.add_parser("space-form", help="verify the constant-curvature identities")
    common(p_sf)
    p_sf.add_argument("--c", default=None, help="curvature constant (defaults to the sphere c)")
    p_sf.set_defaults(func=_cmd_space_form)

    p_conn = sub.add_parser("connection", help="apply the space's connection")
    common(p_conn)
    p_conn.add_argument("--x", required=True, help="comma separated coefficient vector")
    p_conn.add_argument("--y", required=True, help="comma separated coefficient vector")
    p_conn.set_defaults(func=_cmd_connection)

    p_curv = sub.add_parser("curvature", help="evaluate the curvature operator")
    common(p_curv)
    p_curv.add_argument("--x", required=True)
    p_curv.add_argument("--y", required=True)
    p_curv.add_argument("--z", required=True)
    p_curv.set_defaults(func=_cmd_curvature)

    p_grad = sub.add_parser("gradient", help="gradient of a function")
    common(p_grad)
    p_grad.add_argument("--f", required=True, help="polynomial string")
    p_grad.set_defaults(func=_cmd_gradient)

    p_proj = sub.add_parser("project", help="tangent and normal parts of a field")
    common(p_proj)
    p_proj.add_argument("--x", required=True)
    p_proj.set_defaults(func=_cmd_project)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        spec = load_spec(args.spec)
        ws, meta = build_workspace(spec)
        if args.max_degree is not None and args.max_degree < 1:
            raise ValidationError("max-degree", "must be a positive integer")
        return args.func(ws, meta, args)
    except RinehartError as exc:
        sys.stderr.write(f"error[{type(exc).__name__}]: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
