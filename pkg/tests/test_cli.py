"""CLI: spec validation, command output, exit codes, determinism."""

import json
import pathlib

import pytest

from rinehart import parse_poly
from rinehart.cli import main
from rinehart.rings import Rationals
from rinehart.suites import CHECK_NAMES

SPECS = pathlib.Path(__file__).resolve().parent.parent / "specs"


def write_spec(tmp_path, body, name="space.json"):
    path = tmp_path / name
    path.write_text(json.dumps(body))
    return str(path)


BASE = {
    "schema_version": 1,
    "ring": {"kind": "Q"},
    "vars": ["x", "y"],
    "metric": "euclidean",
}


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# validation


def test_rejects_composite_prime(tmp_path, capsys):
    spec = dict(BASE, ring={"kind": "Fp", "p": 6})
    code, out, err = run(capsys, ["check", write_spec(tmp_path, spec)])
    assert code == 2
    assert err.startswith("error[ValidationError]: ring:")


def test_rejects_non_unit_sphere_constant(tmp_path, capsys):
    spec = dict(BASE, vars=["x", "y", "z"], quotient={"sphere": {"c": "0"}})
    code, out, err = run(capsys, ["check", write_spec(tmp_path, spec)])
    assert code == 2
    assert err.startswith("error[ValidationError]: quotient.sphere.c:")


def test_rejects_char_two_sphere(tmp_path, capsys):
    spec = dict(BASE, ring={"kind": "Fp", "p": 2},
                quotient={"sphere": {"c": "1"}})
    code, _, err = run(capsys, ["check", write_spec(tmp_path, spec)])
    assert code == 2
    assert "error[ValidationError]" in err


def test_rejects_bad_vars(tmp_path, capsys):
    for vars_ in (["x", "x"], ["al"], ["2x"], []):
        spec = dict(BASE, vars=vars_)
        code, _, err = run(capsys, ["check", write_spec(tmp_path, spec)])
        assert code == 2
        assert err.startswith("error[ValidationError]: vars:")


def test_rejects_unknown_check_names(tmp_path, capsys):
    spec = dict(BASE, checks=["no-such-check"])
    code, _, err = run(capsys, ["check", write_spec(tmp_path, spec)])
    assert code == 2
    assert "unknown checks" in err


def test_rejects_asymmetric_matrix(tmp_path, capsys):
    spec = dict(BASE, metric={"matrix": [["1", "x"], ["0", "1"]]})
    code, _, err = run(capsys, ["check", write_spec(tmp_path, spec)])
    assert code == 2
    assert err.startswith("error[ValidationError]: metric:")


def test_rejects_bad_witness(tmp_path, capsys):
    spec = dict(BASE, quotient={"generator": "x^2 + y^2 - 1", "q": "2"})
    code, _, err = run(capsys, ["check", write_spec(tmp_path, spec)])
    assert code == 2
    assert err.startswith("error[ValidationError]: quotient:")


def test_missing_file_is_an_error(capsys):
    code, _, err = run(capsys, ["check", "/nonexistent/spec.json"])
    assert code == 2
    assert err.startswith("error[ValidationError]: spec:")


def test_parse_error_in_vector_argument(capsys):
    code, _, err = run(capsys, ["gradient", str(SPECS / "euclidean_q_n2.json"),
                                "--f", "x +"])
    assert code == 2
    assert err.startswith("error[ParseError]:")


# ---------------------------------------------------------------------------
# computations


def test_gradient_command(capsys):
    code, out, _ = run(capsys, ["gradient", str(SPECS / "euclidean_q_n2.json"),
                                "--f", "x^2"])
    assert code == 0
    assert out == "[2*x, 0]\n"


def test_gradient_command_json(capsys):
    code, out, _ = run(capsys, ["gradient", str(SPECS / "euclidean_q_n2.json"),
                                "--f", "x*y", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["result"] == ["y", "x"]
    assert payload["schema_version"] == 1
    assert payload["command"] == "gradient"


def test_connection_command_flat(capsys):
    code, out, _ = run(capsys, ["connection", str(SPECS / "euclidean_q_n2.json"),
                                "--x", "1, 0", "--y", "x^2, 0"])
    assert code == 0
    assert out == "[2*x, 0]\n"


def test_connection_command_sphere(capsys):
    # nabla_{Y1}Y2 = -y*Y1 = (-y^3, x*y^2) on the circle... here n=3 sphere
    code, out, _ = run(capsys, ["connection", str(SPECS / "sphere_q_n3.json"),
                                "--x", "1 - x^2, -x*y, -x*z",
                                "--y", "-x*y, 1 - y^2, -y*z"])
    assert code == 0
    sp_out = out.strip()
    assert sp_out.startswith("[") and sp_out.endswith("]")


def test_connection_rejects_non_tangent_on_sphere(capsys):
    code, _, err = run(capsys, ["connection", str(SPECS / "sphere_q_n3.json"),
                                "--x", "x, y, z", "--y", "1 - x^2, -x*y, -x*z"])
    assert code == 2
    assert err.startswith("error[NotTangent]:")


def test_curvature_command(capsys):
    code, out, _ = run(capsys, ["curvature", str(SPECS / "euclidean_q_n2.json"),
                                "--x", "x, y", "--y", "y^2, 0", "--z", "0, x"])
    assert code == 0
    assert out == "[0, 0]\n"


def test_project_command(capsys):
    code, out, _ = run(capsys, ["project", str(SPECS / "sphere_q_n3.json"),
                                "--x", "1, 0, 0"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("tangent = [")
    assert lines[1].startswith("normal  = [")
    # projection of X1: tangent part (1 - x^2, -x*y, -x*z)
    assert "-x*y" in lines[0]


def test_project_requires_quotient(capsys):
    code, _, err = run(capsys, ["project", str(SPECS / "euclidean_q_n2.json"),
                                "--x", "1, 0"])
    assert code == 2
    assert err.startswith("error[ValidationError]: quotient:")


def test_space_form_command(capsys):
    code, out, _ = run(capsys, ["space-form", str(SPECS / "sphere_q_n3.json")])
    assert code == 0
    assert "PASS" in out


def test_space_form_mismatched_c_fails(capsys):
    code, out, _ = run(capsys, ["space-form", str(SPECS / "sphere_q_n3.json"),
                                "--c", "2"])
    assert code == 1
    assert "FAIL" in out


def test_spanning_flag(capsys):
    code, out, _ = run(capsys, ["space-form", str(SPECS / "sphere_q_n3.json"),
                                "--spanning"])
    assert code == 0
    assert out.splitlines()[0].startswith("Y1 = [")


# ---------------------------------------------------------------------------
# check command and reports


def test_check_selected_checks_json(tmp_path, capsys):
    spec = dict(BASE, checks=["pairing-duality", "jacobi-identity"])
    code, out, _ = run(capsys, ["check", write_spec(tmp_path, spec), "--json"])
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"schema_version", "checks", "engine_version"}
    names = [c["name"] for c in payload["checks"]]
    assert names == sorted(names)
    assert all(c["status"] == "pass" for c in payload["checks"])
    for entry in payload["checks"]:
        assert set(entry) == {"name", "status", "detail", "counterexample"}


def test_check_runs_all_applicable_by_default(tmp_path, capsys):
    spec = dict(BASE)
    code, out, _ = run(capsys, ["check", write_spec(tmp_path, spec), "--json"])
    assert code == 0
    payload = json.loads(out)
    names = {c["name"] for c in payload["checks"]}
    assert "pairing-duality" in names
    assert "space-form" not in names          # no quotient in this spec
    assert names <= set(CHECK_NAMES)


def test_check_json_byte_determinism(capsys):
    argv = ["check", str(SPECS / "sphere_q_n3.json"), "--json", "--seed", "7"]
    code1, out1, _ = run(capsys, argv)
    code2, out2, _ = run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert '"schema_version": 1' in out1


def test_check_human_output_has_timing(tmp_path, capsys):
    spec = dict(BASE, checks=["pairing-duality"])
    code, out, _ = run(capsys, ["check", write_spec(tmp_path, spec)])
    assert code == 0
    assert "PASS" in out and "s)" in out
    assert out.rstrip().endswith("1 passed, 0 failed, 0 skipped")


def test_printed_polynomials_reparse(capsys):
    code, out, _ = run(capsys, ["project", str(SPECS / "sphere_q_n3.json"),
                                "--x", "x^2, -y, 1/2", "--json"])
    assert code == 0
    payload = json.loads(out)
    ring = Rationals()
    for part in ("tangent", "normal"):
        for text in payload["result"][part]:
            parse_poly(text, ring, ("x", "y", "z"))


def test_seed_changes_nothing_on_pass_fail_but_is_respected(tmp_path, capsys):
    spec = dict(BASE, checks=["jacobi-identity"])
    path = write_spec(tmp_path, spec)
    _, out5, _ = run(capsys, ["check", path, "--json", "--seed", "5"])
    _, out6, _ = run(capsys, ["check", path, "--json", "--seed", "6"])
    assert json.loads(out5)["checks"][0]["status"] == "pass"
    assert json.loads(out6)["checks"][0]["status"] == "pass"
