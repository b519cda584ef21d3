import json
import os

import pytest

from diracsym.cli import main
from diracsym.config import RunConfig, load_config
from diracsym.errors import ConfigError
from diracsym.report import write_csv


def test_config_defaults_valid():
    cfg = RunConfig()
    cfg.validate()
    assert cfg.tolerance("lorentz-residual") == 1e-5


def test_config_tol_scale():
    cfg = RunConfig(tol_scale=10.0)
    assert cfg.tolerance("lorentz-residual") == 1e-4


def test_config_rejects_bad_values(tmp_path):
    with pytest.raises(ConfigError):
        RunConfig(tol_scale=-1.0).validate()
    with pytest.raises(ConfigError):
        RunConfig(coulomb_r0=0.0).validate()
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"tolerances": {"lorentz-residual": -1.0}}))
    with pytest.raises(ConfigError):
        load_config(str(bad))
    bad.write_text(json.dumps({"no_such_key": 3}))
    with pytest.raises(ConfigError):
        load_config(str(bad))
    bad.write_text("{not json")
    with pytest.raises(ConfigError):
        load_config(str(bad))


def test_config_file_roundtrip(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"seed": 7, "epsilon0": 0.1,
                                "tolerances": {"pq-scalar": 1e-12}}))
    cfg = load_config(str(path), overrides={"seed": None, "tol_scale": 2.0})
    assert cfg.seed == 7
    assert cfg.epsilon0 == 0.1
    assert cfg.tolerance("pq-scalar") == 2e-12


def test_cli_algebra_pass(tmp_path, capsys):
    code = main(["algebra", "--out", str(tmp_path / "o")])
    out = capsys.readouterr().out
    assert code == 0
    assert "[PASS] clifford-relations" in out
    assert os.path.exists(tmp_path / "o" / "summary_algebra.csv")
    assert os.path.exists(tmp_path / "o" / "summary_algebra.json")


def test_cli_bad_config_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"tolerances": {"pq-scalar": -2.0}}))
    code = main(["algebra", "--config", str(bad), "--out", str(tmp_path / "o")])
    assert code == 2


def test_cli_failing_tolerance_exit_code(tmp_path):
    # an absurdly tight scale forces at least one failure and exit code 1
    cfg = tmp_path / "tight.json"
    cfg.write_text(json.dumps({"tolerances": {"lorentz-residual": 1e-300}}))
    code = main(["flow", "--config", str(cfg), "--out", str(tmp_path / "o"),
                 "--no-figures"])
    assert code == 1


def test_cli_planewave_artifacts(tmp_path):
    out = tmp_path / "o"
    code = main(["planewave", "--out", str(out), "--part", "electron",
                 "--no-figures"])
    assert code == 0
    with open(out / "shift_symbol_grid.csv", encoding="utf-8") as fh:
        header = fh.readline().strip().split(",")
    assert "electron_shift" in header
    assert "positron_shift" not in header


def test_cli_figures_rendered(tmp_path):
    out = tmp_path / "o"
    code = main(["spin", "--out", str(out), "--seed", "5"])
    assert code == 0
    assert os.path.exists(out / "kappa_trace.png")
    assert os.path.exists(out / "spin_shortening.png")
    assert os.path.exists(out / "kappa_trace.csv")


def test_csv_writer_format(tmp_path):
    path = tmp_path / "t.csv"
    write_csv(str(path), ["a", "b"], [(1.5, "x"), (2.0, "y")])
    text = path.read_text(encoding="utf-8")
    assert text == "a,b\n1.5,x\n2.0,y\n"


def test_cli_seed_changes_summary(tmp_path):
    out1 = tmp_path / "a"
    out2 = tmp_path / "b"
    assert main(["flow", "--out", str(out1), "--seed", "1", "--no-figures"]) == 0
    assert main(["flow", "--out", str(out2), "--seed", "2", "--no-figures"]) == 0
    t1 = (out1 / "summary_flow.csv").read_text()
    t2 = (out2 / "summary_flow.csv").read_text()
    assert t1 != t2  # seeded draws differ
