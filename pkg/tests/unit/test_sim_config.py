"""Unit tests for run configuration loading."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from src.codes.exceptions import ConfigurationError
from src.config.sim_config import RunKind, default_config_path, load_trial_config
from src.decoders import Decoder
from src.sim.models import BenchConfig, InfoSetFirst, SimulationConfig, TrialConfig


class TestDefaults:
    @pytest.mark.parametrize("kind", list(RunKind))
    def test_packaged_defaults_load(self, kind: RunKind):
        assert default_config_path(kind).is_file()
        cfg = load_trial_config(kind=kind)
        assert cfg.code_params.label() == "r6_m2_q8"

    def test_curve_default(self):
        cfg = load_trial_config()
        assert isinstance(cfg, SimulationConfig)
        assert cfg.decoder_list() == [Decoder.LD, Decoder.PLD, Decoder.GE, Decoder.LD_GE, Decoder.RS]
        assert cfg.seed == 20240601

    def test_bench_default(self):
        cfg = load_trial_config(kind="bench")
        assert isinstance(cfg, BenchConfig)
        assert cfg.erasure_fractions == [0.1, 0.2, 0.3, 0.4, 0.5]


class TestLoadFile:
    def test_yaml(self, tmp_path: Path):
        path = tmp_path / "run.yaml"
        path.write_text(
            "code_params: {r: 2, m: 2, q: 4}\ntrials: 12\nreception_model: {kind: info_set_first}\n"
        )
        cfg = load_trial_config(path, RunKind.THRESHOLD)
        assert type(cfg) is TrialConfig
        assert cfg.trials == 12
        assert isinstance(cfg.reception_model, InfoSetFirst)

    def test_json(self, tmp_path: Path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"code_params": {"r": 1, "m": 2, "q": 3}, "decoders": ["ge"], "seed": 5}))
        cfg = load_trial_config(path)
        assert cfg.seed == 5
        assert cfg.decoder_list() == [Decoder.GE]

    def test_missing_file(self, tmp_path: Path):
        with pytest.raises(ConfigurationError, match="Cannot read"):
            load_trial_config(tmp_path / "absent.yaml")

    def test_bad_syntax(self, tmp_path: Path):
        path = tmp_path / "run.json"
        path.write_text("{not json")
        with pytest.raises(ConfigurationError, match="Cannot parse"):
            load_trial_config(path)

    def test_not_a_mapping(self, tmp_path: Path):
        path = tmp_path / "run.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ConfigurationError, match="mapping"):
            load_trial_config(path)

    def test_validation_failure(self, tmp_path: Path):
        path = tmp_path / "run.yaml"
        path.write_text("code_params: {r: 7, m: 2, q: 8}\n")
        with pytest.raises(ConfigurationError, match="Invalid simulate config") as excinfo:
            load_trial_config(path)
        assert "errors" in excinfo.value.context

    def test_bench_rejects_rs(self, tmp_path: Path):
        path = tmp_path / "bench.yaml"
        path.write_text("code_params: {r: 2, m: 2, q: 4}\ndecoders: [ld, rs]\n")
        with pytest.raises(ConfigurationError):
            load_trial_config(path, RunKind.BENCH)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            load_trial_config(kind="plot")
