#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# test_problems.py
# Description: tests of the scenario and the assembly of the three problems
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

import numpy as np
import pytest

from reserveopt import constraints
from reserveopt import problems
from reserveopt import profiles
from reserveopt import solver
from reserveopt import thermal


INSTRUCTIONS = [(0.5, 15, 75), (0.2, 75, 240)]


@pytest.fixture
def u_ref():
    return profiles.ControlProfile.constant(360.0, 0.32)


@pytest.fixture
def relaxed(scenario):
    """the bundled scenario with unit loss tolerances"""
    return scenario.replace(loss=constraints.LossConfig(lambda_state=360.0, lambda_delivery=360.0,
                                                        epsilon_state=1.0, epsilon_delivery=1.0))


class TestScenario:

    def test_comfort_limits(self, params, econ):
        with pytest.raises(ValueError, match="X_min"):
            problems.Scenario(360.0, params, 30.0, 27.0, 27.0, 27.0, econ)

    @pytest.mark.parametrize("changes", [dict(x0=28.0), dict(x_hat=17.0), dict(alpha_alt=0.0),
                                         dict(horizon=0.0), dict(x_max=36.0)])
    def test_invalid(self, scenario, changes):
        with pytest.raises(ValueError):
            scenario.replace(**changes)

    def test_unknown_field(self, scenario):
        with pytest.raises(ValueError):
            scenario.replace(temperature=20.0)

    def test_default_loss(self, scenario):
        assert scenario.get_loss().get_lambda(constraints.STATE) == 360.0
        assert scenario.get_loss().get_lambda(constraints.DELIVERY) == 360.0

    def test_alphas(self, scenario):
        s = scenario.replace(alpha_ref=0.1, alpha_alt=1.0, alpha_del=10.0)
        assert s.get_alpha(problems.REFERENCE) == s.get_alpha_ref() == 0.1
        assert s.get_alpha(problems.CAPACITY) == s.get_alpha_alt() == 1.0
        assert s.get_alpha(problems.DELIVERY) == s.get_alpha_del() == 10.0

    def test_to_config(self, scenario):
        document = scenario.to_config()
        assert document["thermal"] == {"tau": 120.0, "X_off": 35.0, "X_on": 10.0, "C_max": 100.0}
        assert document["comfort"]["X_hat"] == 18.0
        assert document["economics"]["R"] == 10.0
        assert document["loss"]["lambda_state"] == 360.0


class TestReference:

    def test_dimension(self, scenario):
        problem = problems.build_reference(scenario, 72)
        assert problem.get_kind() == problems.REFERENCE
        assert problem.get_dimension() == 72
        assert problem.get_bounds() == [(0.0, 1.0)] * 72
        assert problem.get_constraint_names() == [problems.STATE, problems.TERMINAL]
        assert [str(constraint) for constraint in problem.get_constraints()] == \
            problem.get_constraint_names()

    def test_too_few_intervals(self, scenario):
        with pytest.raises(ValueError):
            problems.build_reference(scenario, 1)

    def test_unreachable_target(self, scenario):
        with pytest.raises(ValueError):
            problems.build_reference(scenario.replace(horizon=10.0), 12)

    def test_steady_state(self, scenario):
        s = scenario.replace(x_hat=27.0)
        problem = problems.build_reference(s, 72)
        params = np.full(72, 0.32)
        result = problems.evaluate(problem, params)
        assert result.objective == pytest.approx(360 * (0.32 + 0.01 * 0.1024))
        assert result.constraints[0] == pytest.approx(-1.0, abs=1e-9)
        assert result.constraints[1] == pytest.approx(0.0, abs=1e-9)
        assert problem.verify(params).is_feasible()
        assert problem.verify(params).get_losses()[problems.STATE] == pytest.approx(0.0, abs=1e-20)

    def test_verify_equipment_off(self, scenario):
        problem = problems.build_reference(scenario, 12)
        report = problem.verify(np.zeros(12))
        final = 35 - 8 * np.exp(-3)
        assert report.get_violation(problems.STATE) == pytest.approx(final - 27.0)
        assert report.get_violation(problems.TERMINAL) == pytest.approx(final - 18.0)
        assert not report.is_feasible()
        assert set(report.get_failures()) == {problems.STATE, problems.TERMINAL}
        assert report.total_violation() > report.get_violation(problems.TERMINAL)

    def test_constraint_callable(self, scenario):
        problem = problems.build_reference(scenario, 12)
        params = np.full(12, 0.5)
        value, gradient = problem.get_constraints()[1](params)
        assert value == pytest.approx(problem.trajectory(params).final() - 18.0)
        assert gradient.shape == (12,)

    def test_control_and_trajectory(self, scenario):
        problem = problems.build_reference(scenario, 12, sub_samples=4)
        params = np.linspace(0.0, 1.0, 12)
        control = problem.control(params)
        trajectory = problem.trajectory(params)
        simulated = thermal.simulate(control, 27.0, scenario.get_thermal(), 4)
        assert np.allclose(trajectory.get_temperatures(), simulated.get_temperatures(),
                           rtol=0, atol=1e-10)


class TestEvaluate:

    def test_out_of_box(self, scenario):
        problem = problems.build_reference(scenario, 12)
        with pytest.raises(ValueError):
            problems.evaluate(problem, np.full(12, 1.1))

    def test_wrong_dimension(self, scenario):
        problem = problems.build_reference(scenario, 12)
        with pytest.raises(ValueError):
            problems.evaluate(problem, np.full(11, 0.5))

    def test_non_finite(self, scenario):
        problem = problems.build_reference(scenario, 12)
        params = np.full(12, 0.5)
        params[3] = np.nan
        with pytest.raises(FloatingPointError, match="index 3"):
            problems.evaluate(problem, params)

    def test_deterministic(self, scenario):
        problem = problems.build_reference(scenario, 12)
        params = np.random.default_rng(5).uniform(0.0, 1.0, 12)
        first = problems.evaluate(problem, params)
        second = problems.evaluate(problem, params)
        assert first.objective == second.objective
        assert np.array_equal(first.constraints, second.constraints)
        assert np.array_equal(first.jacobian, second.jacobian)


class TestCapacity:

    def test_constraints(self, scenario, u_ref):
        problem = problems.build_capacity(scenario, u_ref, 72)
        assert problem.get_constraint_names() == [problems.STATE, problems.TERMINAL,
                                                  problems.FINANCIAL]
        assert np.all(problem.get_reference_values() == 0.32)

    def test_partition_refined(self, scenario):
        u_ref = profiles.ControlProfile([0.0, 100.0, 360.0], [0.32, 1.0])
        problem = problems.build_capacity(scenario, u_ref, 12)
        assert 100.0 in problem.get_breakpoints()
        assert problem.get_dimension() == 13

    def test_mismatched_reference(self, scenario):
        with pytest.raises(ValueError):
            problems.build_capacity(scenario, profiles.ControlProfile.constant(300.0, 0.32), 12)

    def test_ratio_above_one(self, scenario, u_ref):
        s = scenario.replace(econ=profiles.EconomicsParams.from_ratio(10.0, 1.25))
        problem = problems.build_capacity(s, u_ref, 12)
        params = problem.get_reference_values() + 0.1
        assert problem.verify(params).get_violation(problems.FINANCIAL) == 0.0
        assert problems.evaluate(problem, params).constraints[2] < 0

    def test_no_reserve(self, scenario, u_ref):
        problem = problems.build_capacity(scenario, u_ref, 12)
        params = problem.get_reference_values()
        result = problems.evaluate(problem, params)
        assert result.constraints[2] == pytest.approx(0.0, abs=1e-12)
        assert result.objective == pytest.approx(360 * (0.32 + 0.01 * 0.32**2))
        assert problem.verify(params).get_violation(problems.FINANCIAL) == pytest.approx(0.0, abs=1e-12)

    def test_ratio_below_one(self, scenario, u_ref):
        s = scenario.replace(econ=profiles.EconomicsParams.from_ratio(10.0, 0.75))
        problem = problems.build_capacity(s, u_ref, 72)
        params = np.array(problem.get_reference_values())
        params[:12] += 0.2
        # c m / 4 with c=0.2 over m=60 min
        assert problem.verify(params).get_violation(problems.FINANCIAL) == pytest.approx(3.0)

    def test_smoothed_constraint_is_conservative(self, scenario, u_ref):
        problem = problems.build_capacity(scenario, u_ref, 12)
        rng = np.random.default_rng(2)
        for _ in range(10):
            params = rng.uniform(0.0, 1.0, 12)
            smoothed = problems.evaluate(problem, params).constraints[2] * 360.0
            excess = params - 0.32
            exact = np.dot(excess - np.maximum(0.0, excess), problem.get_durations())
            assert smoothed >= exact - 1e-9


class TestDelivery:

    def test_without_instructions(self, scenario, u_ref):
        problem = problems.build_delivery(scenario, u_ref, profiles.InstructionSequence(), 12)
        reference = problems.build_reference(scenario, 12)
        assert problem.get_constraint_names() == reference.get_constraint_names()
        assert np.array_equal(problem.get_breakpoints(), reference.get_breakpoints())

    def test_bundled_instructions(self, scenario, u_ref):
        ins = profiles.InstructionSequence(INSTRUCTIONS, 360.0)
        problem = problems.build_delivery(scenario, u_ref, ins, 72)
        assert problem.get_constraint_names()[-1] == constraints.DELIVERY
        for time in (15.0, 75.0, 240.0):
            assert time in problem.get_breakpoints()

        # the delivery constraint is active exactly on [15, 240)
        starts = problem.get_breakpoints()[:-1]
        active = problem.get_instructed_values() > 0
        assert np.all(active == ((starts >= 15.0) & (starts < 240.0)))

    def test_maximal_capacity_instruction(self, scenario, u_ref):
        t2 = thermal.landmark_t2(scenario)
        t_hat = thermal.landmark_t_hat(scenario, t2)
        ins = profiles.InstructionSequence([(0.68, t_hat, t2)], 360.0)
        problem = problems.build_delivery(scenario, u_ref, ins, 72)
        assert np.max(problem.get_instructed_values()) == pytest.approx(1.0)
        params = np.maximum(problem.get_instructed_values(), 0.32)
        assert problem.verify(params).get_violation(constraints.DELIVERY) == 0.0

    def test_infeasible_instruction(self, scenario):
        u_ref = profiles.ControlProfile.constant(360.0, 0.9)
        with pytest.raises(profiles.InfeasibleInstructionError):
            problems.build_delivery(scenario, u_ref, profiles.InstructionSequence([(0.2, 15, 75)]), 12)

    def test_shortfall(self, scenario, u_ref):
        ins = profiles.InstructionSequence(INSTRUCTIONS, 360.0)
        problem = problems.build_delivery(scenario, u_ref, ins, 72)
        report = problem.verify(np.full(problem.get_dimension(), 0.5))
        assert report.get_violation(constraints.DELIVERY) == pytest.approx(0.32)
        assert report.get_losses()[constraints.DELIVERY] == pytest.approx(0.32**2 * 60.0 + 0.02**2 * 165.0)


class TestGradients:

    @pytest.mark.parametrize("seed", range(10))
    def test_reference(self, relaxed, seed):
        problem = problems.build_reference(relaxed, 12, sub_samples=5)
        params = np.random.default_rng(seed).uniform(0.2, 0.6, 12)
        assert solver.check_gradients(problem, params) <= 1e-4

    @pytest.mark.parametrize("seed", range(10))
    def test_capacity(self, relaxed, u_ref, seed):
        problem = problems.build_capacity(relaxed, u_ref, 12, sub_samples=5)
        params = np.random.default_rng(seed).uniform(0.2, 0.6, 12)
        assert solver.check_gradients(problem, params) <= 1e-4

    @pytest.mark.parametrize("seed", range(10))
    def test_delivery(self, relaxed, u_ref, seed):
        ins = profiles.InstructionSequence(INSTRUCTIONS, 360.0)
        problem = problems.build_delivery(relaxed, u_ref, ins, 12, sub_samples=5)
        params = np.random.default_rng(seed).uniform(0.2, 0.6, problem.get_dimension())
        assert solver.check_gradients(problem, params) <= 1e-4

    def test_constant_point(self, scenario, u_ref):
        problem = problems.build_capacity(scenario, u_ref, 12, sub_samples=5)
        assert solver.check_gradients(problem, np.full(12, 0.5), include_constraints=False) <= 1e-4

    def test_linear_objective(self, scenario):
        problem = problems.build_reference(scenario, 12, alpha=0.0)
        params = np.random.default_rng(1).uniform(0.1, 0.9, 12)
        assert solver.check_gradients(problem, params, h=1e-2, include_constraints=False) <= 1e-10

    def test_not_interior(self, scenario):
        problem = problems.build_reference(scenario, 12)
        with pytest.raises(ValueError):
            solver.check_gradients(problem, np.zeros(12))
