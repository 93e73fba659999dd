#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# test_solver.py
# Description: tests of the constrained solver and of the structure of its
# solutions
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

import logging

import numpy as np
import pytest

from reserveopt import problems
from reserveopt import profiles
from reserveopt import solver
from reserveopt import thermal


INSTRUCTIONS = [(0.5, 15, 75), (0.2, 75, 240)]


def _longest_run(profile, predicate):
    '''return the duration and end of the longest run of intervals whose values
       satisfy predicate'''

    best, end, current = 0.0, None, 0.0
    for start, duration, value in zip(profile.get_breakpoints()[:-1],
                                      profile.get_durations(),
                                      profile.get_values()):
        current = current + duration if predicate(value) else 0.0
        if current > best:
            best, end = current, start + duration
    return best, end


class TestSolverConfig:

    def test_defaults(self):
        cfg = solver.SolverConfig()
        assert cfg.get_n_p() == 72
        assert cfg.get_max_iterations() == 500
        assert cfg.get_convergence_tol() == 1e-8
        assert cfg.get_constraint_tol() == 1e-3
        assert cfg.get_multistart() == 5
        assert cfg.get_rng_seed() == 0

    @pytest.mark.parametrize("settings", [dict(n_p=1), dict(multistart=0), dict(convergence_tol=0.0),
                                          dict(rng_seed=-1), dict(max_tightenings=-1),
                                          dict(step=0.1)])
    def test_invalid(self, settings):
        with pytest.raises(ValueError):
            solver.SolverConfig(**settings)

    def test_replace(self):
        cfg = solver.SolverConfig(n_p=24)
        assert cfg.replace(multistart=2).to_config() == dict(solver.SolverConfig.DEFAULTS,
                                                            n_p=24, multistart=2)
        assert cfg.replace(n_p=24) == cfg


class TestInitialGuesses:

    def test_steady_state_first(self, scenario):
        problem = problems.build_reference(scenario, 12)
        guesses = solver.initial_guesses(problem, solver.SolverConfig(multistart=1))
        assert len(guesses) == 1
        assert guesses[0] == pytest.approx(np.full(12, 0.32))

    def test_analytic_shape(self, scenario):
        problem = problems.build_reference(scenario, 12)
        guesses = solver.initial_guesses(problem, solver.SolverConfig(multistart=2))

        # t2 = 269.55 lies within the ninth interval
        assert guesses[1][:9] == pytest.approx(np.full(9, 0.32))
        assert guesses[1][9:] == pytest.approx(np.ones(3))

    def test_random(self, scenario):
        problem = problems.build_reference(scenario, 12)
        cfg = solver.SolverConfig(multistart=5, rng_seed=7)
        first = solver.initial_guesses(problem, cfg)
        second = solver.initial_guesses(problem, cfg)
        assert len(first) == 5
        for one, other in zip(first, second):
            assert np.array_equal(one, other)
        for guess in first:
            assert np.all((guess >= 0) & (guess <= 1))

        other = solver.initial_guesses(problem, cfg.replace(rng_seed=8))
        assert not np.array_equal(first[2], other[2])

    def test_capacity_shapes(self, scenario):
        u_ref = profiles.ControlProfile.constant(360.0, 0.32)

        # with R < P full power on [t_hat, t2] = [179.1, 269.55]
        below = scenario.replace(econ=profiles.EconomicsParams.from_ratio(10.0, 0.75))
        guess = solver.analytic_guess(problems.build_capacity(below, u_ref, 12))
        assert guess == pytest.approx([0.32] * 6 + [1.0] * 3 + [0.32] * 3)

        # with R > P full power until t_check = 90.45 and X_min is held afterwards
        above = scenario.replace(econ=profiles.EconomicsParams.from_ratio(10.0, 1.25))
        guess = solver.analytic_guess(problems.build_capacity(above, u_ref, 12))
        assert guess == pytest.approx([1.0] * 3 + [0.68] * 9)

    def test_delivery_shape(self, scenario):
        u_ref = profiles.ControlProfile.constant(360.0, 0.32)
        problem = problems.build_delivery(scenario, u_ref, profiles.InstructionSequence(INSTRUCTIONS), 12)
        guess = solver.analytic_guess(problem)
        assert np.all(guess >= problem.get_instructed_values())
        assert np.all(guess >= 0.32)


class TestSolve:

    def test_convex_surrogate(self, scenario):
        problem = problems.AssembledProblem(problems.REFERENCE, scenario,
                                            profiles.uniform_partition(360.0, 12), 0.01,
                                            sub_samples=5, constrained=False)
        solution = solver.solve(problem, solver.SolverConfig(n_p=12, multistart=3))
        assert solution.is_feasible()
        assert solution.get_params() == pytest.approx(np.zeros(12), abs=1e-8)
        assert solution.get_objective() == pytest.approx(0.0, abs=1e-6)

    def test_reference(self, scenario, fast_solver, caplog):
        problem = problems.build_reference(scenario, 12, sub_samples=5)
        with caplog.at_level(logging.WARNING, logger="reserveopt"):
            solution = solver.solve(problem, fast_solver)

        assert solution.is_feasible()
        assert solution.get_kind() == problems.REFERENCE
        assert 0 <= solution.get_start() < 2
        assert len(solution.get_starts()) == 2

        params = solution.get_params()
        assert np.all((params >= 0) & (params <= 1))
        assert params[:6] == pytest.approx(np.full(6, 0.32), abs=0.05)
        assert np.mean(params[-2:]) >= 0.9
        assert solution.get_trajectory().final() <= 18.0 + 1e-3
        assert solution.get_objective() == pytest.approx(problems.evaluate(problem, params).objective)

        economics = solution.get_economics()
        assert economics["net_cost"] is None and economics["nnp"] is None
        assert economics["cost"] == pytest.approx(
            profiles.total_cost(solution.get_control(), scenario.get_economics(),
                                scenario.get_thermal()))

        # accepted iterates never increase the merit
        assert "merit increased" not in caplog.text

    def test_deterministic(self, scenario, fast_solver):
        problem = problems.build_reference(scenario, 12, sub_samples=5)
        first = solver.solve(problem, fast_solver)
        second = solver.solve(problem, fast_solver)
        assert np.array_equal(first.get_params(), second.get_params())
        assert first.get_start() == second.get_start()

    def test_infeasible(self, scenario, fast_solver):
        u_ref = profiles.ControlProfile.constant(360.0, 0.32)

        # full power all night drives the temperature below X_min
        ins = profiles.InstructionSequence([(0.68, 0, 360)], 360.0)
        problem = problems.build_delivery(scenario, u_ref, ins, 12, sub_samples=5)
        cfg = fast_solver.replace(max_outer_iterations=10, max_tightenings=1)
        with pytest.raises(solver.InfeasibleProblemError) as error:
            solver.solve(problem, cfg)

        assert error.value.params.shape == (problem.get_dimension(),)
        assert problems.STATE in error.value.report.get_failures()

    def test_merit_increase_warning(self, caplog):
        with caplog.at_level(logging.WARNING, logger="reserveopt"):
            solver._check_monotone([3.0, 2.0, 2.0 + 1e-12, 1.0], 0)
        assert not caplog.records

        with caplog.at_level(logging.WARNING, logger="reserveopt"):
            solver._check_monotone([3.0, 2.0, 2.5, 1.0], 4)
        warnings = [record for record in caplog.records if record.levelno == logging.WARNING]
        assert len(warnings) == 1
        assert "merit increased" in warnings[0].getMessage()
        assert "#4" in warnings[0].getMessage()


# -----------------------------------------------------------------------------
# solves of the bundled scenario with the default settings
# -----------------------------------------------------------------------------
@pytest.fixture(scope="module")
def bundled():
    return problems.Scenario(360.0, thermal.ThermalParams(120.0, 35.0, 10.0, 100.0),
                             18.0, 27.0, 18.0, 27.0,
                             profiles.EconomicsParams.from_ratio(10.0, 1.0))


@pytest.fixture(scope="module")
def references(bundled):
    """optimal reference profiles for X_hat = 18 and X_hat = 20"""

    cfg = solver.SolverConfig()
    return {x_hat: solver.solve(problems.build_reference(bundled.replace(x_hat=x_hat), 72), cfg)
            for x_hat in (18.0, 20.0)}


@pytest.fixture(scope="module")
def capacities(bundled, references):
    """optimal capacity profiles for the ratios 3/4, 1 and 5/4"""

    u_ref = references[18.0].get_control()
    cfg = solver.SolverConfig()
    return {ratio: solver.solve(problems.build_capacity(
        bundled.replace(econ=profiles.EconomicsParams.from_ratio(10.0, ratio)), u_ref, 72), cfg)
            for ratio in (0.75, 1.0, 1.25)}


@pytest.mark.slow
class TestBundledScenario:

    @pytest.mark.parametrize("x_hat, t2", [(18.0, 269.55), (20.0, 296.32)])
    def test_reference_structure(self, bundled, references, x_hat, t2):
        solution = references[x_hat]
        control = solution.get_control()
        assert solution.is_feasible()
        assert thermal.landmark_t2(bundled.replace(x_hat=x_hat)) == pytest.approx(t2, abs=0.01)

        plateau = control.value_at(np.arange(0.0, t2 - 60.0, 5.0))
        assert plateau == pytest.approx(np.full(len(plateau), 0.32), abs=0.05)
        assert profiles.full_power_onset(control) == pytest.approx(t2, abs=10.0)

    def test_refinement(self, bundled, references):
        finer = solver.solve(problems.build_reference(bundled, 144), solver.SolverConfig(n_p=144))
        coarse = references[18.0].get_objective()
        assert finer.get_objective() <= coarse + 1e-3 * coarse

    def test_case3_capacity(self, bundled, references, capacities):
        solution = capacities[1.25]
        assert solution.is_feasible()

        t_check = thermal.landmark_t_check(bundled)
        t2 = thermal.landmark_t2(bundled)
        assert t_check == pytest.approx(90.45, abs=0.01)

        capacity = profiles.capacity_profile(solution.get_control(), references[18.0].get_control())
        level = thermal.sustained_capacity_level(thermal.CASE_3, bundled)
        assert level == pytest.approx(0.36)
        window = capacity.value_at(np.arange(t_check + 10.0, t2 - 10.0, 5.0))
        assert window == pytest.approx(np.full(len(window), level), abs=0.05)

    def test_case1_capacity(self, bundled, references, capacities):
        solution = capacities[0.75]
        assert solution.is_feasible()

        t2 = thermal.landmark_t2(bundled)
        t_hat = thermal.landmark_t_hat(bundled, t2)
        level = thermal.sustained_capacity_level(thermal.CASE_1, bundled)
        assert level == pytest.approx(0.68)

        capacity = profiles.capacity_profile(solution.get_control(), references[18.0].get_control())
        duration, end = _longest_run(capacity, lambda value: abs(value - level) <= 0.05)
        assert duration >= 0.8 * (t2 - t_hat)
        assert end == pytest.approx(t2, abs=15.0)

    def test_net_profit(self, capacities):
        nnp = [capacities[ratio].get_economics()["nnp"] for ratio in (0.75, 1.0, 1.25)]
        assert all(value >= -1e-3 for value in nnp)
        assert nnp[0] <= nnp[1] + 1e-3
        assert nnp[1] <= nnp[2] + 1e-3

    def test_regularizer(self, bundled, references):
        u_ref = references[18.0].get_control()
        cfg = solver.SolverConfig()
        switches = []
        for alpha in (10.0, 1.0, 0.1, 0.01):
            solution = solver.solve(problems.build_capacity(bundled, u_ref, 72, alpha=alpha), cfg)
            switches.append(profiles.count_switches(solution.get_control(), 0.5))
        assert switches == sorted(switches)

    def test_delivery(self, bundled, references):
        windows = {}
        for x_hat in (18.0, 20.0):
            s = bundled.replace(x_hat=x_hat)
            u_ref = references[x_hat].get_control()
            ins = profiles.InstructionSequence(INSTRUCTIONS, 360.0)
            problem = problems.build_delivery(s, u_ref, ins, 72)
            solution = solver.solve(problem, solver.SolverConfig())

            params = solution.get_params()
            assert np.all(params >= problem.get_instructed_values() - 1e-3)
            x = solution.get_trajectory().get_temperatures()
            assert np.all(x <= 27.0 + 1e-3) and np.all(x >= 18.0 - 1e-3)
            assert x[-1] <= x_hat + 1e-3

            windows[x_hat] = profiles.longest_window_below(solution.get_control(), 0.02, 240.0)
            assert windows[x_hat] >= 10.0

        assert windows[20.0] > windows[18.0]
