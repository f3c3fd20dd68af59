"""Tests for configuration layering."""

from __future__ import annotations

import pytest

from mocktheta.algebra.cyclotomic import zeta_pow
from mocktheta.algebra.series import Monomial
from mocktheta.errors import ConfigError
from mocktheta.utils.config import Config, get_data_dir, load_config


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for name in ("MOCKTHETA_CONFIG", "MOCKTHETA_ORDER", "MOCKTHETA_JOBS", "MOCKTHETA_DATA_DIR"):
        monkeypatch.delenv(name, raising=False)


def test_defaults():
    config = load_config()
    assert config.default_order is None
    assert config.output_format == "text"
    assert config.jobs == 1
    assert config.samples()["entry1"][0] == Monomial(zeta_pow(1))


def test_file_then_env_then_overrides(tmp_path, monkeypatch):
    path = tmp_path / "mocktheta.toml"
    path.write_text('default_order = 30\noutput_format = "json"\nparallelism = 2\n\n[sample_points]\nentry1 = ["zeta^7"]\n')
    config = load_config(path)
    assert config.default_order == 30
    assert config.output_format == "json"
    assert config.jobs == 2
    assert config.samples()["entry1"] == [Monomial(zeta_pow(7))]
    assert len(config.samples()["entry2"]) == 3

    monkeypatch.setenv("MOCKTHETA_ORDER", "45")
    assert load_config(path).default_order == 45
    assert load_config(path, default_order=50).default_order == 50

    monkeypatch.setenv("MOCKTHETA_CONFIG", str(path))
    assert load_config().output_format == "json"


def test_auto_parallelism(monkeypatch):
    monkeypatch.setenv("MOCKTHETA_JOBS", "auto")
    assert load_config().jobs >= 1


@pytest.mark.parametrize(
    "body",
    ["colour = 1\n", "default_order = 5\n", 'output_format = "yaml"\n', "parallelism = 0\n", "default_order = [\n"],
)
def test_bad_files(tmp_path, body):
    path = tmp_path / "bad.toml"
    path.write_text(body)
    with pytest.raises(ConfigError):
        load_config(path)


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.toml")


def test_bad_env(monkeypatch):
    monkeypatch.setenv("MOCKTHETA_ORDER", "lots")
    with pytest.raises(ConfigError):
        load_config()


def test_empty_samples_rejected():
    with pytest.raises(ConfigError):
        Config(sample_points={"entry1": []})


def test_data_dir(tmp_path):
    target = tmp_path / "reports"
    path = get_data_dir(Config(data_dir=str(target)))
    assert path == target
    assert target.is_dir()
