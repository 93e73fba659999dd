#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# test_confparser.py
# Description: tests of the processing of configuration files
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

import json

import pytest

from reserveopt import confparser
from reserveopt import profiles
from reserveopt import solver


INSTRUCTIONS = [(0.5, 15, 75), (0.2, 75, 240)]


@pytest.fixture
def document():
    return confparser.read_document(confparser.DEFAULT_CONF)


def _write(tmp_path, document, name="conf.json"):
    path = tmp_path / name
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


class TestBundled:

    def test_scenario(self, scenario):
        configuration = confparser.load_configuration(confparser.DEFAULT_CONF)
        assert configuration.get_scenario() == scenario
        assert confparser.load_scenario(confparser.DEFAULT_CONF) == scenario

    def test_solver(self):
        assert confparser.load_configuration(confparser.DEFAULT_CONF).get_solver() == solver.SolverConfig()

    def test_instructions_and_sweep(self):
        configuration = confparser.load_configuration(confparser.DEFAULT_CONF)
        assert configuration.get_instructions() == profiles.InstructionSequence(INSTRUCTIONS)
        assert configuration.get_sweep() == confparser.SweepSpec([0.75, 1.0, 1.25])
        assert configuration.get_sweep().get_alphas() is None

    def test_str(self):
        text = str(confparser.load_configuration(confparser.DEFAULT_CONF))
        assert "X_min=18" in text
        assert "ratios=[0.75, 1.0, 1.25]" in text


class TestOverrides:

    def test_invalid_comfort(self):
        with pytest.raises(ValueError, match="X_min"):
            confparser.load_configuration(confparser.DEFAULT_CONF, ["X_min=30"])

    def test_precedence(self):
        configuration = confparser.load_configuration(confparser.DEFAULT_CONF, ["solver.n_p=24"])
        assert configuration.get_solver().get_n_p() == 24

        configuration = confparser.load_configuration(confparser.DEFAULT_CONF, ["solver.n_p=24"],
                                                      {"n_p": 36, "rng_seed": None})
        assert configuration.get_solver().get_n_p() == 36
        assert configuration.get_solver().get_rng_seed() == 0

    def test_later_overrides_win(self):
        configuration = confparser.load_configuration(confparser.DEFAULT_CONF, ["X_hat=20", "X_hat=22"])
        assert configuration.get_scenario().get_x_hat() == 22.0

    def test_payment(self):
        scenario = confparser.load_scenario(confparser.DEFAULT_CONF, ["R=12.5"])
        assert scenario.get_ratio() == pytest.approx(1.25)

        scenario = confparser.load_scenario(confparser.DEFAULT_CONF, ["economics.R=12.5", "R_over_P=0.5"])
        assert scenario.get_ratio() == pytest.approx(0.5)
        assert scenario.get_economics().get_payment() == pytest.approx(5.0)

    @pytest.mark.parametrize("override", ["foo=1", "comfort.foo=1", "physics.tau=1"])
    def test_unknown(self, override):
        with pytest.raises(ValueError, match="Unknown key"):
            confparser.load_configuration(confparser.DEFAULT_CONF, [override])

    def test_ambiguous(self, monkeypatch):
        monkeypatch.setitem(confparser.SCHEMA, "building", {"tau": None})
        with pytest.raises(ValueError, match="ambiguous"):
            confparser.resolve_key("tau", "tau=100")
        assert confparser.resolve_key("thermal.tau") == ("thermal", "tau")

    def test_kw_instructions(self):
        configuration = confparser.load_configuration(
            confparser.DEFAULT_CONF, ["instructions.units=kW", "items=[[50, 15, 75], [20, 75, 240]]"])
        assert configuration.get_instructions() == profiles.InstructionSequence(INSTRUCTIONS)

    @pytest.mark.parametrize("override", ["units=MW", "items=[[0.5, 15]]", "items=[0.5]",
                                          "n_p=2.5", "tau=true", "X_max='hot'",
                                          "items=[[0.5, 15, 75], [0.2, 80, 240]]",
                                          "items=[[0.5, 15, 400]]"])
    def test_invalid_values(self, override):
        with pytest.raises(ValueError):
            confparser.load_configuration(confparser.DEFAULT_CONF, [override])

    def test_sweep(self):
        sweep = confparser.load_configuration(
            confparser.DEFAULT_CONF, ["ratios=[1]", "alphas=[10, 1, 0.1, 0.01]"]).get_sweep()
        assert sweep.get_ratios() == [1.0]
        assert sweep.get_alphas() == [10.0, 1.0, 0.1, 0.01]


class TestDocuments:

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            confparser.read_document(str(tmp_path / "missing.json"))

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{\"thermal\": ", encoding="utf-8")
        with pytest.raises(ValueError, match="not valid JSON"):
            confparser.read_document(str(path))

    def test_missing_key(self, tmp_path, document):
        del document["comfort"]["X_min"]
        with pytest.raises(ValueError, match="'X_min'"):
            confparser.load_configuration(_write(tmp_path, document))

    def test_missing_payment(self, tmp_path, document):
        del document["economics"]["R_over_P"]
        with pytest.raises(ValueError, match="exactly one"):
            confparser.load_configuration(_write(tmp_path, document))

    def test_both_payments(self, tmp_path, document):
        document["economics"]["R"] = 10
        with pytest.raises(ValueError, match="exactly one"):
            confparser.load_configuration(_write(tmp_path, document))

    def test_unknown_section(self, tmp_path, document):
        document["weather"] = {"T_out": 12}
        with pytest.raises(ValueError, match="Unknown section"):
            confparser.load_configuration(_write(tmp_path, document))

    def test_not_a_section(self, document):
        document["comfort"] = 3
        with pytest.raises(ValueError):
            confparser.check_document(document)

    def test_defaults(self, tmp_path, document):
        del document["regularizers"]
        del document["solver"]
        del document["sweep"]
        configuration = confparser.load_configuration(_write(tmp_path, document))
        assert configuration.get_scenario().get_alpha_ref() == 0.01
        assert configuration.get_solver() == solver.SolverConfig()
        assert configuration.get_sweep().get_ratios() == [0.75, 1.0, 1.25]

    def test_round_trip(self, tmp_path):
        configuration = confparser.load_configuration(
            confparser.DEFAULT_CONF, ["R_over_P=0.75", "alphas=[1, 0.1]", "n_p=24"])
        path = str(tmp_path / "resolved.json")
        confparser.write_configuration(configuration, path)
        assert confparser.load_configuration(path) == configuration

        with open(path, encoding="utf-8") as stream:
            assert "R_over_P" not in json.load(stream)["economics"]


class TestSweepSpec:

    @pytest.mark.parametrize("ratios, alphas", [([], None), ([1.0, -1.0], None),
                                                ([1.0], []), ([1.0], [0.0])])
    def test_invalid(self, ratios, alphas):
        with pytest.raises(ValueError):
            confparser.SweepSpec(ratios, alphas)

    def test_values(self):
        sweep = confparser.SweepSpec([0.75, 1], [1])
        assert sweep.get_ratios() == [0.75, 1.0]
        assert sweep.get_alphas() == [1.0]
