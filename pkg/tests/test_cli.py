import json
import math

import numpy as np
import pytest

from ads3s3.cli import main
from ads3s3.solutions import family_solution, params_to_dict

F_REF = "1.6666666666666667"
B_REF = "1.25"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBridgeCommand:
    def test_reference_point(self, capsys):
        code, out, _ = run(capsys, "bridge", "--f", F_REF, "--b", B_REF, "--n", "1")
        assert code == 0
        payload = json.loads(out)
        assert abs(payload["mu2"] - 0.53125) <= 1e-9
        assert abs(payload["mubar2"] - 7.0 / 72.0) <= 1e-9
        assert payload["degenerate"] == []

    def test_inadmissible_exits_one(self, capsys):
        code, _, err = run(capsys, "bridge", "--f", "3", "--b", B_REF, "--n", "1")
        assert code == 1
        assert "cos2theta_s out of range" in err

    def test_degenerate_corner_flagged(self, capsys):
        code, out, _ = run(capsys, "bridge", "--f", "1", "--b", "1", "--n", "1")
        assert code == 0
        assert json.loads(out)["degenerate"]

    def test_missing_point_is_usage_error(self, capsys):
        code, _, err = run(capsys, "bridge")
        assert code == 1
        assert "requires" in err


class TestVerifyCommand:
    def test_family_point_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--f", F_REF, "--b", B_REF)
        assert code == 0
        report = json.loads(out)
        assert report["ok"] and report["failures"] == []

    def test_perturbed_params_exit_two(self, capsys, tmp_path):
        data = params_to_dict(family_solution(5.0 / 3.0, 5.0 / 4.0, 1))
        data["lam"] += 1e-3
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(data))
        code, out, _ = run(capsys, "verify", "--params", str(path))
        assert code == 2
        assert "eom" in json.loads(out)["failures"]

    def test_empty_grid_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "--f", F_REF, "--b", B_REF, "--grid", "0x4")
        assert code == 1

    def test_malformed_grid_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "verify", "--f", F_REF, "--b", B_REF, "--grid", "junk")
        assert code == 1

    def test_tol_override(self, capsys, tmp_path):
        data = params_to_dict(family_solution(5.0 / 3.0, 5.0 / 4.0, 1))
        data["lam"] += 1e-3
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(data))
        code, _, _ = run(capsys, "verify", "--params", str(path), "--tol", "1.0")
        assert code == 0


class TestSampleCommand:
    def test_single_point_grid(self, capsys):
        code, out, _ = run(capsys, "sample", "--f", F_REF, "--b", B_REF,
                           "--tau-steps", "1", "--sigma-steps", "1")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "tau,sigma,Y0p,Y0,Y1,Y2,X1,X2,X3,X4,P1,P2,P3"
        assert len(lines) == 2
        row = dict(zip(lines[0].split(","), map(float, lines[1].split(","))))
        sol = family_solution(5.0 / 3.0, 5.0 / 4.0, 1)
        y0 = sol.g0.embedding
        x0 = sol.h0.embedding
        assert abs(row["Y0p"] - y0[0]) <= 1e-15 and abs(row["Y1"] - y0[2]) <= 1e-15
        assert abs(row["X2"] - x0[1]) <= 1e-15 and abs(row["X4"] - x0[3]) <= 1e-15

    def test_constraints_and_projection(self, capsys):
        code, out, _ = run(capsys, "sample", "--f", F_REF, "--b", B_REF,
                           "--tau-steps", "4", "--sigma-steps", "8")
        assert code == 0
        rows = [list(map(float, line.split(","))) for line in out.strip().split("\n")[1:]]
        for r in rows:
            y = np.array(r[2:6])
            x = np.array(r[6:10])
            p = np.array(r[10:13])
            assert abs(-y[0] ** 2 - y[1] ** 2 + y[2] ** 2 + y[3] ** 2 + 1.0) <= 1e-12
            assert abs(x @ x - 1.0) <= 1e-12
            assert np.max(np.abs(p - x[:3] / (1.0 + x[3]))) <= 1e-12

    def test_equal_radii_at_minimal_torus(self, capsys):
        # cos 2theta_s = 0 at f = (b + sqrt(b^2 + 4)) / 2
        b = 1.25
        f = 0.5 * (b + math.sqrt(b * b + 4.0))
        code, out, _ = run(capsys, "sample", "--f", repr(f), "--b", repr(b),
                           "--tau-steps", "2", "--sigma-steps", "4")
        assert code == 0
        for line in out.strip().split("\n")[1:]:
            r = list(map(float, line.split(",")))
            x = np.array(r[6:10])
            assert abs(math.hypot(x[0], x[1]) - math.hypot(x[2], x[3])) <= 1e-12

    def test_byte_identical_reruns(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for path in (a, b):
            code, _, _ = run(capsys, "sample", "--f", F_REF, "--b", B_REF,
                             "--tau-steps", "16", "--sigma-steps", "16",
                             "--out", str(path))
            assert code == 0
        assert a.read_bytes() == b.read_bytes()


class TestScanCommand:
    def test_csv_header_and_rows(self, capsys):
        code, out, _ = run(capsys, "scan", "--grid", "1.0:2.0:3,1.0:1.5:2", "--n", "1")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "f,b,admissible,cosh2theta,cos2theta_s,mu2,mubar2,coshalpha,cosbeta"
        assert len(lines) == 7
        assert set(line.split(",")[2] for line in lines[1:]) <= {"true", "false"}

    def test_empty_range_exit_one(self, capsys):
        code, _, err = run(capsys, "scan", "--grid", "1.0:2.0:0,1.0:1.5:2")
        assert code == 1

    def test_missing_grid_exit_one(self, capsys):
        code, _, _ = run(capsys, "scan")
        assert code == 1

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "scan", "--grid", "1.6:1.7:2,1.2:1.3:2",
                           "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 4 and all(r["admissible"] for r in rows)


class TestChargesCommand:
    def test_reference_casimirs(self, capsys):
        code, out, _ = run(capsys, "charges", "--f", F_REF, "--b", B_REF, "--n", "1")
        assert code == 0
        payload = json.loads(out)
        assert abs(payload["mL"] - 1.2465278) <= 1e-6
        assert abs(payload["mR"] - 2.1145833) <= 1e-6
        assert payload["quadrature_gap"] <= 1e-10
        assert abs(payload["coefficients"]["R_s"] + 1.0 / 18.0) <= 1e-9

    def test_scale_factor(self, capsys):
        code, out, _ = run(capsys, "charges", "--f", F_REF, "--b", B_REF,
                           "--scale", "2.0")
        payload = json.loads(out)
        assert abs(payload["mL"] - 2 * 1.2465277777777777) <= 1e-9
        assert abs(payload["asymmetry_mR_over_mL"] - 1.6963788300835656) <= 1e-9


class TestBracketsCommand:
    def test_particle_mode(self, capsys):
        code, out, _ = run(capsys, "brackets", "--mode", "particle", "--seed", "7")
        assert code == 0
        payload = json.loads(out)
        assert payload["max_algebra_residual"] <= 1e-6

    def test_string_mode(self, capsys):
        code, out, _ = run(capsys, "brackets", "--mode", "string", "--seed", "3")
        assert code == 0
        payload = json.loads(out)
        assert payload["max_algebra_residual"] <= 1e-5
        for point in payload["points"]:
            assert len(point["orbit_coefficients"]) == 4


class TestDeterminism:
    def test_repeated_outputs_identical(self, capsys):
        outs = []
        for _ in range(2):
            _, out, _ = run(capsys, "bridge", "--f", F_REF, "--b", B_REF)
            outs.append(out)
        assert outs[0] == outs[1]
        outs = []
        for _ in range(2):
            _, out, _ = run(capsys, "brackets", "--mode", "particle", "--seed", "11")
            outs.append(out)
        assert outs[0] == outs[1]
