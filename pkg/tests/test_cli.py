import json
import math
import subprocess
import sys

import pytest

from solenoid_scatter.cli import main, read_csv


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classical_dcs_csv(capsys):
    code, out, _ = run(capsys, "classical-dcs", "--rho-l", "0.5", "--theta-min", "-3.1",
                       "--theta-max", "3.1", "--n", "256")
    assert code == 0
    header, cols, rows = read_csv(out)
    assert header.startswith("# solenoid-scatter classical-dcs rho_l=0.5")
    assert cols == ["theta", "dcs"]
    assert len(rows) == 256
    theta, dcs = min(rows, key=lambda r: abs(r[0] - math.pi / 2))
    assert dcs == pytest.approx(0.628, abs=5e-3)


def test_ab_dcs_integer_flux_is_zero(capsys):
    code, out, _ = run(capsys, "ab-dcs", "--s-p", "1", "--s-phi", "6.283185307", "--n", "64")
    assert code == 0
    _, _, rows = read_csv(out)
    assert len(rows) == 64
    assert all(r[1] <= 1e-15 for r in rows)


def test_quantum_dcs_json(capsys):
    code, out, _ = run(capsys, "quantum-dcs", "--s-p", "10", "--s-phi", "6.283185307179586",
                       "--theta-min", "1.5707963267948966", "--theta-max", "1.5707963267948966",
                       "--n", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["columns"] == ["theta", "dcs"]
    assert doc["rows"][0][1] == pytest.approx(1.5058516116797836e-4, rel=1e-13)


def test_round_trip_is_bit_exact(capsys, tmp_path):
    from solenoid_scatter.classical import classical_curve, make_angle_grid

    path = tmp_path / "c.csv"
    assert main(["classical-dcs", "--rho-l", "2", "--n", "300", "--output", str(path)]) == 0
    _, _, rows = read_csv(path.read_text())
    from solenoid_scatter.classical import classical_singularities

    grid = make_angle_grid(-3.1, 3.1, 300, classical_singularities(2.0), 1e-6)
    curve = classical_curve(2.0, grid)
    assert [r[0] for r in rows] == curve.grid.thetas.tolist()
    assert [r[1] for r in rows] == curve.values.tolist()


def test_identical_config_gives_identical_bytes(tmp_path):
    outs = []
    for i in range(2):
        csv_path, js = tmp_path / f"o{i}.csv", tmp_path / f"o{i}.json"
        assert main(["compare-classical", "--rho-l", "0.5", "--samples", "200000", "--bins", "64",
                     "--seed", "3", "--output", str(csv_path), "--json", str(js)]) == 0
        outs.append((csv_path.read_bytes(), js.read_bytes()))
    assert outs[0] == outs[1]


def test_trajectory_outputs(capsys, tmp_path):
    js = tmp_path / "t.json"
    code, out, _ = run(capsys, "trajectory", "--rho-l", "1", "--b", "0", "--method", "rk4",
                       "--step", "1e-3", "--json", str(js))
    assert code == 0
    _, cols, rows = read_csv(out)
    assert cols == ["x", "y"] and len(rows) > 10
    summary = json.loads(js.read_text())
    assert summary["deflection"] == pytest.approx(math.pi / 2, abs=1e-10)
    assert summary["method"] == "rk4"


def test_trajectory_summary_defaults_to_stderr(capsys):
    code, _, err = run(capsys, "trajectory", "--rho-l", "0.5", "--b", "0.3")
    assert code == 0
    assert json.loads(err)["method"] == "arc"


def test_oracle_histogram(capsys):
    code, out, _ = run(capsys, "oracle-dcs", "--rho-l", "2", "--samples", "100000", "--bins", "32",
                       "--seed", "5")
    assert code == 0
    header, cols, rows = read_csv(out)
    assert "seed=5" in header and "rng=" in header
    assert cols == ["theta_lo", "theta_hi", "count", "dcs"]
    assert sum(r[2] for r in rows) == 100000


def test_scaling_scan_fit(capsys, tmp_path):
    js = tmp_path / "fit.json"
    code, out, _ = run(capsys, "scaling-scan", "--rho-l", "0.5", "--theta", "1.5708",
                       "--s-p-base", "100", "--decades", "4", "--json", str(js))
    assert code == 0
    _, cols, rows = read_csv(out)
    assert cols == ["lambda", "s_p", "s_phi", "envelope"]
    assert len(rows) == 9
    fit = json.loads(js.read_text())
    assert fit["fit"]["slope"] == pytest.approx(-2.0, abs=0.05)
    assert fit["classical_slope"] == 0.0


def test_outdir_environment(monkeypatch, tmp_path, capsys):
    monkeypatch.setenv("SOLENOID_SCATTER_OUTDIR", str(tmp_path / "out"))
    assert main(["compare-classical", "--rho-l", "0.5", "--samples", "100000", "--bins", "32"]) == 0
    assert capsys.readouterr().out == ""
    assert (tmp_path / "out" / "compare-classical.csv").exists()
    summary = json.loads((tmp_path / "out" / "compare-classical.summary.json").read_text())
    assert "passed" in summary


@pytest.mark.parametrize(
    "argv",
    [
        ["classical-dcs", "--rho-l", "-1"],
        ["classical-dcs", "--rho-l", "0.5", "--theta-min", "-4"],
        ["quantum-dcs", "--s-p", "0", "--s-phi", "1"],
        ["trajectory", "--rho-l", "1", "--b", "1.5"],
        ["oracle-dcs", "--rho-l", "1", "--samples", "10"],
        ["scaling-scan", "--rho-l", "0.5", "--theta", "1.0", "--s-p-base", "1"],
    ],
)
def test_validation_exit_code(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert "invalid input" in err


@pytest.mark.parametrize("argv", [["classical-dcs"], ["nonsense"], ["classical-dcs", "--rho-l", "x"]])
def test_usage_errors_exit_one(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 1


def test_numerical_failure_exit_code(capsys):
    code, _, err = run(capsys, "trajectory", "--rho-l", "1", "--b", "0.999", "--method", "rk4", "--step", "0.1")
    assert code == 2
    assert "numerical failure" in err


def test_verify_exit_codes(capsys, monkeypatch):
    from solenoid_scatter import verification

    code, out, _ = run(capsys, "verify", "--suite", "quantum")
    assert code == 0
    assert json.loads(out)["passed"] is True

    def failing():
        return [verification.CheckResult("forced", False, 1.0, 0.0)]

    monkeypatch.setitem(verification.SUITES, "quantum", (failing,))
    code, out, _ = run(capsys, "verify", "--suite", "quantum")
    assert code == 3
    assert json.loads(out)["passed"] is False


@pytest.mark.slow
def test_full_verify_passes(capsys):
    code, out, _ = run(capsys, "verify")
    report = json.loads(out)
    assert code == 0, [c for c in report["checks"] if not c["passed"]]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "solenoid_scatter", "ab-dcs", "--s-p", "1",
                           "--s-phi", "3.141592653589793", "--n", "3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("# solenoid-scatter ab-dcs")
