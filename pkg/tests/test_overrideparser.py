#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# test_overrideparser.py
# Description: tests of the parser of overrides
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

import pytest

from reserveopt import overrideparser


@pytest.fixture(scope="module")
def parser():
    return overrideparser.VerbatimOverrideParser()


class TestOverrideParser:

    @pytest.mark.parametrize("text, expected", [
        ("R_over_P=0.75", ("R_over_P", 0.75)),
        ("economics.R_over_P=1", ("economics.R_over_P", 1)),
        ("n_p = 24", ("n_p", 24)),
        ("x0=-2", ("x0", -2)),
        ("epsilon_state=1e-5", ("epsilon_state", 1e-5)),
        ("alpha_alt=.5", ("alpha_alt", 0.5)),
        ("units=kW", ("units", "kW")),
        ("units='kW'", ("units", "kW")),
        ('units="normalized"', ("units", "normalized")),
        ("flag=true", ("flag", True)),
        ("flag=False", ("flag", False)),
    ])
    def test_scalars(self, parser, text, expected):
        assert parser.run(text) == expected

    def test_types(self, parser):
        assert isinstance(parser.run("n_p=24")[1], int)
        assert isinstance(parser.run("T=360.")[1], float)
        assert isinstance(parser.run("theta=5E1")[1], float)

    def test_lists(self, parser):
        assert parser.run("ratios=[0.75, 1, 1.25]") == ("ratios", [0.75, 1, 1.25])
        assert parser.run("sweep.alphas=[]") == ("sweep.alphas", [])
        assert parser.run("instructions.items=[[0.5, 15, 75], [0.2, 75, 240]]") == \
            ("instructions.items", [[0.5, 15, 75], [0.2, 75, 240]])

    def test_reuse(self, parser):
        parser.run("R=12")
        assert parser.run("P=8") == ("P", 8)

    @pytest.mark.parametrize("text", ["R_over_P", "R_over_P=", "=3", "a=3 4",
                                      "a.b.c=1", "a=[1, 2", "a=$", "a=1,"])
    def test_syntax_errors(self, parser, text):
        with pytest.raises(ValueError):
            parser.run(text)
