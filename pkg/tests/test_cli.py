"""Tests for the command-line entrypoint."""

from __future__ import annotations

import json

import pytest

from mocktheta.main import main
from mocktheta.utils.report_io import reports_from_json


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch, tmp_path):
    for name in ("MOCKTHETA_CONFIG", "MOCKTHETA_ORDER", "MOCKTHETA_JOBS"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("MOCKTHETA_DATA_DIR", str(tmp_path / "data"))


def test_expand_psi(capsys):
    assert main(["expand", "psi", "--order", "6"]) == 0
    assert capsys.readouterr().out.strip() == "1 + q + q^3 + q^6 + O(q^7)"


def test_expand_json(capsys):
    assert main(["expand", "j(1,0,1)", "--order", "8", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["coeffs"] == []
    assert payload["valuation"] == 9
    assert payload["order"] == 8


def test_expand_parse_error(capsys):
    assert main(["expand", "1 + * q"]) == 2
    assert "position 4" in capsys.readouterr().err


def test_expand_evaluation_error(capsys):
    assert main(["expand", "1 / j(1,0,1)", "--order", "5"]) == 1


def test_rank_table(capsys):
    assert main(["rank-table", "--n-max", "4"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "n\tm\tcount"
    rows = [tuple(map(int, line.split("\t"))) for line in lines[1:]]
    assert len(rows) == 12
    assert rows[0] == (0, 0, 1)
    assert sum(c for n, _, c in rows if n == 4) == 5


def test_rank_table_zero(capsys):
    assert main(["rank-table", "--n-max", "0"]) == 0
    assert capsys.readouterr().out.strip().splitlines()[1:] == ["0\t0\t1"]


def test_rank_table_out_of_range():
    assert main(["rank-table", "--n-max", "41"]) == 2


def test_verify_degenerate_t(capsys):
    """A degenerate user-supplied t gives error rows and exit 1."""
    assert main(["verify", "--suite", "entry1", "--t", "zeta^6", "--order", "10"]) == 1
    out = capsys.readouterr().out
    assert "ERROR" in out


def test_verify_json_and_save(capsys, tmp_path):
    assert main(["verify", "--suite", "entry3", "--order", "12", "--format", "json", "--save"]) == 0
    reports = reports_from_json(capsys.readouterr().out)
    assert len(reports) == 4
    assert all(r.passed for r in reports)
    assert list((tmp_path / "data").glob("verify_*.json"))


def test_verify_low_order_rejected():
    assert main(["verify", "--order", "5"]) == 2


def test_bad_config(tmp_path):
    assert main(["--config", str(tmp_path / "missing.toml"), "expand", "q"]) == 2


@pytest.mark.parametrize("position", ["before", "after"])
def test_config_flag_either_side_of_subcommand(capsys, tmp_path, position):
    path = tmp_path / "mocktheta.toml"
    path.write_text('output_format = "json"\n')
    flag = ["--config", str(path)]
    argv = flag + ["expand", "psi", "--order", "6"] if position == "before" else ["expand", "psi", "--order", "6"] + flag
    assert main(argv) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["valuation"] == 0
    assert payload["order"] == 6
    assert len(payload["coeffs"]) == 7


def test_missing_config_after_subcommand(tmp_path):
    assert main(["expand", "q", "--config", str(tmp_path / "missing.toml")]) == 2


def test_log_level_after_subcommand(capsys):
    assert main(["rank-table", "--n-max", "2", "--log-level", "DEBUG"]) == 0
