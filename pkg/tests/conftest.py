#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# conftest.py
# Description: shared fixtures of the tests
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

"""
shared fixtures of the tests: the thermal parameters, economics and scenario of
the bundled configuration, and fast solver settings
"""

import pytest

from reserveopt import constraints
from reserveopt import problems
from reserveopt import profiles
from reserveopt import solver
from reserveopt import thermal


# ---------------------------------------------------------------------------
# A duck-typed scenario providing only what the landmark times need. Unlike
# problems.Scenario it accepts X_min = X_max
# ---------------------------------------------------------------------------
class LandmarkStub:

    def __init__(self, params, x_min, x_max, x_hat, horizon=360.0):
        self._params = params
        self._x_min = x_min
        self._x_max = x_max
        self._x_hat = x_hat
        self._horizon = horizon

    def get_thermal(self):
        return self._params

    def get_x_min(self):
        return self._x_min

    def get_x_max(self):
        return self._x_max

    def get_x_hat(self):
        return self._x_hat

    def get_horizon(self):
        return self._horizon


@pytest.fixture
def params():
    """tau=120 min, X_off=35, X_on=10, C_max=100 kW"""
    return thermal.ThermalParams(120.0, 35.0, 10.0, 100.0)


@pytest.fixture
def econ():
    """P=10 p/kWh and R/P=1"""
    return profiles.EconomicsParams.from_ratio(10.0, 1.0)


@pytest.fixture
def scenario(params, econ):
    """the bundled scenario with X_hat=18"""
    return problems.Scenario(360.0, params, 18.0, 27.0, 18.0, 27.0, econ)


@pytest.fixture
def loss():
    return constraints.LossConfig(lambda_state=360.0, lambda_delivery=360.0)


@pytest.fixture
def fast_solver():
    """settings for quick solves on coarse partitions"""
    return solver.SolverConfig(n_p=12, multistart=2, max_outer_iterations=30,
                               sub_samples=5)


@pytest.fixture
def landmark_stub():
    return LandmarkStub
