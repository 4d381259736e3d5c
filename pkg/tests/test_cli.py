import csv
import json
from pathlib import Path

import numpy as np
import pytest

from swiftwalk import __version__
from swiftwalk.chiral import PhaseAssignment, read_phases, write_phases
from swiftwalk.cli import RunConfig, main, parse_family
from swiftwalk.graph import complete_bipartite, cone, cycle, petersen, wheel, write_graph


def _load(path: Path) -> dict:
    return json.loads(path.read_text(encoding="utf-8"))


def _swift_wheel_phases(out: Path) -> Path:
    assert main(["synthesize", "--family", "wheel:6", "--method", "cone", "--from", "0", "--out", str(out)]) == 0
    return out / "phases.json"


def test_parse_family():
    assert parse_family("wheel:6") == wheel(6)
    assert parse_family("complete_bipartite:3,4") == complete_bipartite(3, 4)
    assert parse_family("cone:petersen") == cone(petersen())
    assert parse_family("cone:cycle:8") == cone(cycle(8))
    with pytest.raises(ValueError):
        parse_family("cycle:eight")


def test_run_config_validation():
    with pytest.raises(ValueError, match="steps"):
        RunConfig("simulate", family="star:4", steps=1)
    with pytest.raises(ValueError, match="tol"):
        RunConfig("simulate", family="star:4", tol=0.0)
    with pytest.raises(ValueError, match="exactly one"):
        RunConfig("simulate")


def test_synthesize_even_cycle(tmp_path, capsys):
    assert main(["synthesize", "--family", "cycle:12", "--out", str(tmp_path)]) == 0
    report = _load(tmp_path / "report.json")
    assert report["verdict"] == "feasible"
    assert report["method"] == "even_eulerian"
    assert report["residual"] < 1e-14
    assert report["version"] == __version__
    assert report["config"]["seed"] == 0
    assert (tmp_path / "phases.json").exists()
    assert capsys.readouterr().out.startswith("[swiftwalk] synthesize: feasible via even_eulerian")


def test_synthesize_petersen_from_edge_list(tmp_path):
    write_graph(petersen(), tmp_path / "petersen.txt")
    out = tmp_path / "run"
    assert main(["synthesize", "--graph", str(tmp_path / "petersen.txt"), "--out", str(out)]) == 0
    report = _load(out / "report.json")
    assert report["method"] == "odd_regular_matching"
    assert len(report["certificate"]["matching"]) == 5


def test_synthesize_infeasible_is_success(tmp_path):
    assert main(["synthesize", "--family", "no_matching_cubic", "--out", str(tmp_path)]) == 0
    assert _load(tmp_path / "report.json")["verdict"] == "infeasible"
    assert not (tmp_path / "phases.json").exists()


def test_outputs_are_reproducible(tmp_path):
    args = ["synthesize", "--family", "cone:petersen", "--method", "cone", "--out", str(tmp_path)]
    assert main(args) == 0
    first = (tmp_path / "report.json").read_bytes(), (tmp_path / "phases.json").read_bytes()
    assert main(args) == 0
    assert first == ((tmp_path / "report.json").read_bytes(), (tmp_path / "phases.json").read_bytes())


def test_simulate_swift_wheel(tmp_path):
    phases = _swift_wheel_phases(tmp_path / "synth")
    out = tmp_path / "sim"
    args = ["simulate", "--family", "wheel:6", "--phases", str(phases), "--generator", "chiral-adjacency",
            "--out", str(out)]
    assert main(args) == 0
    summary = _load(out / "summary.json")
    assert summary["min_return"] < 1e-3
    assert summary["first_zero"] == pytest.approx(np.pi / (2 * np.sqrt(6)), abs=0.011)
    assert summary["qsl"]["delta_h"] == pytest.approx(np.sqrt(6))

    with open(out / "series.csv", newline="") as f:
        rows = list(csv.reader(f))
    assert rows[0] == ["t", "p"]
    assert len(rows) == 1001
    assert float(rows[1][1]) == 1.0


def test_simulate_star_laplacian(tmp_path):
    assert main(["simulate", "--family", "star:4", "--generator", "laplacian", "--out", str(tmp_path)]) == 0
    summary = _load(tmp_path / "summary.json")
    assert summary["min_return"] == pytest.approx(0.36, abs=1e-3)
    assert summary["first_zero"] is None


def test_simulate_cone_over_petersen(tmp_path):
    assert main(["simulate", "--family", "cone:petersen", "--out", str(tmp_path)]) == 0
    assert _load(tmp_path / "summary.json")["min_return"] == pytest.approx(9 / 49, abs=1e-3)


def test_simulate_grover_oracle(tmp_path):
    args = ["simulate", "--family", "star:4", "--generator", "grover-oracle", "--t-max", "2", "--out", str(tmp_path)]
    assert main(args) == 0
    summary = _load(tmp_path / "summary.json")
    assert summary["generator"] == "general"
    assert summary["first_zero"] == pytest.approx(np.pi / 4, abs=0.002)


def test_verify_swift_wheel(tmp_path, capsys):
    phases = _swift_wheel_phases(tmp_path / "synth")
    out = tmp_path / "verify"
    assert main(["verify", "--family", "wheel:6", "--phases", str(phases), "--out", str(out)]) == 0
    report = _load(out / "verify.json")
    assert report["passed"]
    assert set(report["checks"]) == {
        "row_sums", "swift_profile", "spectral_bound_adjacency", "spectral_bound_laplacian", "gauge_invariance",
    }
    assert "all checks pass" in capsys.readouterr().out


def test_verify_zero_phases_fails_row_sums(tmp_path):
    write_phases(PhaseAssignment.zeros(wheel(6)), tmp_path / "zero.json")
    assert main(["verify", "--family", "wheel:6", "--phases", str(tmp_path / "zero.json"), "--out", str(tmp_path)]) == 0
    checks = _load(tmp_path / "verify.json")["checks"]
    assert not checks["row_sums"]["passed"]
    assert not checks["swift_profile"]["passed"]
    assert checks["gauge_invariance"]["passed"]


def test_verify_perturbed_phase_breaks_profile(tmp_path):
    phases = read_phases(_swift_wheel_phases(tmp_path / "synth"), wheel(6))
    theta = phases.theta.copy()
    theta[phases.graph.edge_index(1, 2)] += 0.1
    write_phases(PhaseAssignment(phases.graph, theta), tmp_path / "perturbed.json")
    args = ["verify", "--family", "wheel:6", "--phases", str(tmp_path / "perturbed.json"), "--out", str(tmp_path)]
    assert main(args) == 0
    checks = _load(tmp_path / "verify.json")["checks"]
    assert checks["swift_profile"]["residual"] > checks["swift_profile"]["tol"]
    assert not _load(tmp_path / "verify.json")["passed"]


def test_bound_wheel_laplacian(tmp_path):
    args = ["bound", "--family", "wheel:100", "--generator", "laplacian", "--draws", "3", "--t-max", "20",
            "--steps", "500", "--out", str(tmp_path)]
    assert main(args) == 0
    nogo = _load(tmp_path / "bound.json")["nogo"]
    assert nogo["bound"] == pytest.approx(1 - 10 / 94)
    assert nogo["d_sup"] == 3
    assert nogo["draws"] == 3
    assert nogo["violations"] == 0
    assert nogo["observed_min"] >= nogo["bound"]


def test_bound_flags_small_degree(tmp_path):
    args = ["bound", "--family", "wheel:6", "--generator", "laplacian", "--draws", "1", "--steps", "50",
            "--out", str(tmp_path)]
    assert main(args) == 0
    nogo = _load(tmp_path / "bound.json")["nogo"]
    assert nogo["bound"] is None
    assert "flag" in nogo


def test_bound_adjacency(tmp_path):
    assert main(["bound", "--family", "cone:petersen", "--out", str(tmp_path)]) == 0
    d = _load(tmp_path / "bound.json")
    assert d["qsl"]["tau_s"] == pytest.approx(np.pi / (2 * np.sqrt(10)))
    assert d["nogo"] is None

    assert main(["bound", "--family", "star:4", "--out", str(tmp_path)]) == 0
    assert _load(tmp_path / "bound.json")["qsl"]["delta_h"] == pytest.approx(2.0)


@pytest.mark.parametrize("args", [
    ["simulate", "--graph", "does/not/exist.txt"],
    ["simulate", "--family", "moebius:8"],
    ["simulate", "--family", "wheel:6", "--generator", "chiral-adjacency"],
    ["simulate", "--family", "wheel:6", "--from", "11"],
    ["simulate", "--family", "wheel:6", "--steps", "1"],
    ["verify", "--family", "wheel:6"],
])
def test_usage_errors_exit_1(args, tmp_path, capsys):
    assert main(args + ["--out", str(tmp_path)]) == 1
    assert capsys.readouterr().err.startswith("[swiftwalk] Error:")


def test_phase_edge_mismatch_exits_1(tmp_path):
    write_phases(PhaseAssignment.zeros(cycle(5)), tmp_path / "c5.json")
    args = ["simulate", "--family", "cycle:6", "--phases", str(tmp_path / "c5.json"),
            "--generator", "chiral-adjacency", "--out", str(tmp_path)]
    assert main(args) == 1
