#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# problems.py
# Description: reference, capacity and delivery problems over step controls
# -----------------------------------------------------------------------------
#
# Started on  <Thu Sep 17 11:03:48 2026 >
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

"""Reference, capacity and delivery problems over step controls

Every problem is assembled as a finite-dimensional program over the values of
a step control on a partition of [0, T]: minimize an objective over the box
[0, 1]^n subject to a short list of scaled inequality constraints c(u) <= 0:

    state       C_state(u) / epsilon_state - 1        (temperature limits)
    terminal    x(T) - X_hat                          (pre-cooling target)
    delivery    C_delivery(u) / epsilon_delivery - 1  (reserve instructions)
    financial   (g(u) + gamma) / T                    (not worse off than u_ref)

As the temperature on the sub-sampled grid is affine in the step values, all
of them (and their gradients) are computed in closed form.

"""

# imports
# -----------------------------------------------------------------------------
from typing import NamedTuple

import numpy as np

from . import constraints
from . import profiles
from . import thermal
from . import utils

# globals
# -----------------------------------------------------------------------------
LOGGER = utils.LOGGER

# kinds of problems
REFERENCE = "reference"
CAPACITY = "capacity"
DELIVERY = "delivery"
KINDS = (REFERENCE, CAPACITY, DELIVERY)

# names of the constraints
STATE = constraints.STATE
TERMINAL = "terminal"
FINANCIAL = "financial"

# parameters are accepted if they are this close to the box
BOX_TOLERANCE = 1e-12

# -- errors
ERROR_NON_POSITIVE_HORIZON = "The horizon T must be positive, but {0} was given"
ERROR_INVALID_COMFORT = "X_min must satisfy X_on < X_min < X_max < X_off, but X_min={0}, X_max={1}, X_on={2} and X_off={3}"
ERROR_INVALID_XHAT = "X_hat={0} is out of [X_min, X_max] = [{1}, {2}]"
ERROR_INVALID_X0 = "x0={0} is out of [X_min, X_max] = [{1}, {2}]"
ERROR_NON_POSITIVE_ALPHA = "The regularizer {0} must be positive, but {1} was given"
ERROR_NEGATIVE_ALPHA = "The regularizer weight must be non-negative, but {0} was given"
ERROR_UNKNOWN_FIELD = "Unknown field '{0}' of a scenario"
ERROR_UNREACHABLE_TARGET = "X_hat={0} can not be reached: full power from x0={1} ends at {2:.4f} after T={3}"
ERROR_MISMATCHED_HORIZON = "The reference profile spans [0, {0}] but the horizon is T={1}"
ERROR_WRONG_DIMENSION = "The problem has {0} parameters, but {1} were given"
ERROR_OUT_OF_BOX = "The parameter {0}={1} is out of the box [0, 1]"
ERROR_NON_FINITE = "Non-finite value found while evaluating the {0} at index {1}"

# -- info
INFO_BUILD = "Assembled the {0} problem with {1} parameters and constraints {2}"


# classes
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# Scenario
#
# horizon, comfort limits, pre-cooling target, prices and regularizers of a
# night of operation
# -----------------------------------------------------------------------------
class Scenario:
    """
    Horizon T (min), thermal parameters, comfort limits X_min and X_max,
    pre-cooling target X_hat and initial temperature x0 (degrees Celsius),
    economics, regularizer weights and loss configuration of a night of
    operation. If no loss configuration is given the terminal weights default
    to the horizon
    """

    # the fields of a scenario, used by replace
    FIELDS = ("horizon", "thermal", "x_min", "x_max", "x_hat", "x0", "econ",
              "alpha_ref", "alpha_alt", "alpha_del", "loss")

    def __init__(self, horizon: float, thermal: thermal.ThermalParams,
                 x_min: float, x_max: float, x_hat: float, x0: float,
                 econ: profiles.EconomicsParams,
                 alpha_ref: float = 0.01, alpha_alt: float = 0.01, alpha_del: float = 0.01,
                 loss: constraints.LossConfig = None):

        if horizon <= 0:
            LOGGER.error(ERROR_NON_POSITIVE_HORIZON.format(horizon))
            raise ValueError(ERROR_NON_POSITIVE_HORIZON.format(horizon))

        if not thermal.get_x_on() < x_min < x_max < thermal.get_x_off():
            msg = ERROR_INVALID_COMFORT.format(x_min, x_max, thermal.get_x_on(), thermal.get_x_off())
            LOGGER.error(msg)
            raise ValueError(msg)
        if not x_min <= x_hat <= x_max:
            LOGGER.error(ERROR_INVALID_XHAT.format(x_hat, x_min, x_max))
            raise ValueError(ERROR_INVALID_XHAT.format(x_hat, x_min, x_max))
        if not x_min <= x0 <= x_max:
            LOGGER.error(ERROR_INVALID_X0.format(x0, x_min, x_max))
            raise ValueError(ERROR_INVALID_X0.format(x0, x_min, x_max))

        for name, alpha in (("alpha_ref", alpha_ref), ("alpha_alt", alpha_alt),
                            ("alpha_del", alpha_del)):
            if alpha <= 0:
                LOGGER.error(ERROR_NON_POSITIVE_ALPHA.format(name, alpha))
                raise ValueError(ERROR_NON_POSITIVE_ALPHA.format(name, alpha))

        self._horizon = float(horizon)
        self._thermal = thermal
        self._x_min = float(x_min)
        self._x_max = float(x_max)
        self._x_hat = float(x_hat)
        self._x0 = float(x0)
        self._econ = econ
        self._alpha = {REFERENCE: float(alpha_ref), CAPACITY: float(alpha_alt),
                       DELIVERY: float(alpha_del)}
        self._loss = loss if loss is not None else \
            constraints.LossConfig(lambda_state=horizon, lambda_delivery=horizon)

    def __str__(self):
        '''provides a human readable representation of the contents of this intance'''

        return "\n".join([" * Horizon     : T={0:g} min".format(self._horizon),
                          " * Thermal     : {0}".format(self._thermal),
                          " * Comfort     : X_min={0:g}, X_max={1:g}, X_hat={2:g}, x0={3:g}".format(
                              self._x_min, self._x_max, self._x_hat, self._x0),
                          " * Economics   : {0}".format(self._econ),
                          " * Regularizers: alpha_ref={0:g}, alpha_alt={1:g}, alpha_del={2:g}".format(
                              self._alpha[REFERENCE], self._alpha[CAPACITY], self._alpha[DELIVERY]),
                          " * Loss        : {0}".format(self._loss)])

    def __eq__(self, other):
        return isinstance(other, Scenario) and \
            all(getattr(self, "_" + field) == getattr(other, "_" + field)
                for field in ("horizon", "thermal", "x_min", "x_max", "x_hat", "x0",
                              "econ", "alpha", "loss"))

    def get_horizon(self):
        '''return the length of the control horizon in minutes'''

        return self._horizon

    def get_thermal(self):
        '''return the thermal parameters of the building'''

        return self._thermal

    def get_x_min(self):
        return self._x_min

    def get_x_max(self):
        return self._x_max

    def get_x_hat(self):
        '''return the upper bound of the temperature at the end of the horizon'''

        return self._x_hat

    def get_x0(self):
        return self._x0

    def get_economics(self):
        return self._econ

    def get_ratio(self):
        '''return the benefit-cost ratio R/P'''

        return self._econ.get_ratio()

    def get_alpha(self, kind: str):
        '''return the weight of the quadratic regularizer of the given kind of
           problem'''

        return self._alpha[kind]

    def get_alpha_ref(self):
        return self._alpha[REFERENCE]

    def get_alpha_alt(self):
        return self._alpha[CAPACITY]

    def get_alpha_del(self):
        return self._alpha[DELIVERY]

    def get_loss(self):
        return self._loss

    def replace(self, **changes):
        '''return a copy of this scenario where the given fields are replaced'''

        fields = dict(horizon=self._horizon, thermal=self._thermal,
                      x_min=self._x_min, x_max=self._x_max, x_hat=self._x_hat,
                      x0=self._x0, econ=self._econ,
                      alpha_ref=self._alpha[REFERENCE], alpha_alt=self._alpha[CAPACITY],
                      alpha_del=self._alpha[DELIVERY], loss=self._loss)
        for name, value in changes.items():
            if name not in Scenario.FIELDS:
                LOGGER.error(ERROR_UNKNOWN_FIELD.format(name))
                raise ValueError(ERROR_UNKNOWN_FIELD.format(name))
            fields[name] = value

        return Scenario(**fields)

    def to_config(self):
        '''return the sections of a configuration document describing this
           scenario'''

        return {
            "thermal": {"tau": self._thermal.get_tau(),
                        "X_off": self._thermal.get_x_off(),
                        "X_on": self._thermal.get_x_on(),
                        "C_max": self._thermal.get_cmax()},
            "comfort": {"T": self._horizon,
                        "X_min": self._x_min,
                        "X_max": self._x_max,
                        "X_hat": self._x_hat,
                        "x0": self._x0},
            "economics": {"P": self._econ.get_price(),
                          "R": self._econ.get_payment(),
                          "gamma": self._econ.get_gamma()},
            "regularizers": {"alpha_ref": self._alpha[REFERENCE],
                             "alpha_alt": self._alpha[CAPACITY],
                             "alpha_del": self._alpha[DELIVERY]},
            "loss": {"theta": self._loss.get_theta(),
                     "lambda_state": self._loss.get_lambda(constraints.STATE),
                     "lambda_delivery": self._loss.get_lambda(constraints.DELIVERY),
                     "epsilon_state": self._loss.get_epsilon(constraints.STATE),
                     "epsilon_delivery": self._loss.get_epsilon(constraints.DELIVERY)}}


# -----------------------------------------------------------------------------
# Evaluation
#
# objective, scaled constraint values and their gradients at a parameter vector
# -----------------------------------------------------------------------------
class Evaluation(NamedTuple):
    """objective, scaled constraint values and their gradients at a parameter
       vector. Row i of the jacobian is the gradient of the i-th constraint"""

    objective: float
    gradient: np.ndarray
    constraints: np.ndarray
    jacobian: np.ndarray


# -----------------------------------------------------------------------------
# Constraint
#
# a single inequality constraint c(u) <= 0 of an assembled problem
# -----------------------------------------------------------------------------
class Constraint:
    """
    A single inequality constraint c(u) <= 0 of an assembled problem. Calling it
    returns its value and gradient
    """

    def __init__(self, name: str, index: int, problem):

        self._name = name
        self._index = index
        self._problem = problem

    def __str__(self):
        return self._name

    def __call__(self, params):
        result = evaluate(self._problem, params)
        return float(result.constraints[self._index]), result.jacobian[self._index]

    def get_name(self):
        return self._name


# -----------------------------------------------------------------------------
# ConstraintReport
#
# exact violation of every constraint at a parameter vector
# -----------------------------------------------------------------------------
class ConstraintReport:
    """
    Exact (unsmoothed) violation of every constraint at a parameter vector, along
    with the total loss of the state and delivery constraints. Violations are
    non-negative and measured in the units of the constraint: degrees Celsius
    for the state and terminal constraints, normalized power for the delivery
    constraints and normalized power by minutes for the financial one
    """

    def __init__(self, violations: dict, losses: dict, tolerance: float):

        self._violations = dict(violations)
        self._losses = dict(losses)
        self._tolerance = tolerance

    def __str__(self):
        return ", ".join("{0}: {1:.3e}".format(name, value)
                         for name, value in self._violations.items())

    def get_violations(self):
        return dict(self._violations)

    def get_violation(self, name: str):
        return self._violations[name]

    def get_losses(self):
        return dict(self._losses)

    def get_tolerance(self):
        return self._tolerance

    def get_failures(self):
        '''return the names of the constraints violated beyond the tolerance'''

        return [name for name, value in self._violations.items() if value > self._tolerance]

    def is_feasible(self):
        '''return true if every constraint holds within the tolerance'''

        return not self.get_failures()

    def total_violation(self):
        '''return the sum of all violations and losses'''

        return sum(self._violations.values()) + sum(self._losses.values())


# -----------------------------------------------------------------------------
# AssembledProblem
#
# a constrained program over the values of a step control
# -----------------------------------------------------------------------------
class AssembledProblem:
    """
    A constrained program over the values of a step control on a partition of
    [0, T], with box bounds [0, 1] on every parameter. The temperature on the
    sub-sampled grid of the partition is free + sensitivity @ u
    """

    def __init__(self, kind: str, s: Scenario, breakpoints, alpha: float,
                 sub_samples: int = 10, u_ref=None, u_ins=None, instructions=None,
                 constrained: bool = True):

        if alpha < 0:
            LOGGER.error(ERROR_NEGATIVE_ALPHA.format(alpha))
            raise ValueError(ERROR_NEGATIVE_ALPHA.format(alpha))

        self._kind = kind
        self._scenario = s
        self._breakpoints = np.asarray(breakpoints, dtype=float)
        self._durations = np.diff(self._breakpoints)
        self._midpoints = 0.5 * (self._breakpoints[:-1] + self._breakpoints[1:])
        self._alpha = float(alpha)
        self._sub_samples = sub_samples
        self._loss = s.get_loss()

        self._times, self._free, self._sensitivity = thermal.response_matrices(
            self._breakpoints, s.get_x0(), s.get_thermal(), sub_samples)

        # trapezoidal weights of the sub-sampled grid
        steps = np.diff(self._times)
        self._weights = np.zeros(len(self._times))
        self._weights[:-1] += 0.5 * steps
        self._weights[1:] += 0.5 * steps

        # reference and instructed profiles are stored on the partition
        self._u_ref = u_ref
        self._u_ins = u_ins
        self._instructions = instructions
        self._ref_values = u_ref.value_at(self._midpoints) if u_ref is not None else None
        self._ins_values = u_ins.value_at(self._midpoints) if u_ins is not None else None

        # without constraints only the box bounds remain
        names = [STATE, TERMINAL] if constrained else []
        if constrained and kind == DELIVERY and instructions is not None and len(instructions):
            names.append(constraints.DELIVERY)
        if constrained and kind == CAPACITY:
            names.append(FINANCIAL)
        self._constrained = constrained
        self._constraints = [Constraint(name, index, self) for index, name in enumerate(names)]

        LOGGER.debug(INFO_BUILD.format(kind, self.get_dimension(), names))

    def __str__(self):
        return "{0} problem with {1} parameters and constraints {2}".format(
            self._kind, self.get_dimension(), ", ".join(self.get_constraint_names()))

    def get_kind(self):
        return self._kind

    def get_scenario(self):
        return self._scenario

    def get_dimension(self):
        '''return the number of parameters'''

        return len(self._durations)

    def get_breakpoints(self):
        return self._breakpoints

    def get_durations(self):
        return self._durations

    def get_bounds(self):
        '''return the box bounds of every parameter'''

        return [(0.0, 1.0)] * self.get_dimension()

    def get_alpha(self):
        return self._alpha

    def get_sub_samples(self):
        return self._sub_samples

    def get_loss(self):
        return self._loss

    def get_times(self):
        '''return the sub-sampled grid'''

        return self._times

    def get_sensitivity(self):
        '''return the derivatives of the temperatures on the grid with respect to
           every parameter'''

        return self._sensitivity

    def get_constraints(self):
        return list(self._constraints)

    def get_constraint_names(self):
        return [constraint.get_name() for constraint in self._constraints]

    def get_u_ref(self):
        return self._u_ref

    def get_u_ins(self):
        return self._u_ins

    def get_instructions(self):
        return self._instructions

    def get_reference_values(self):
        '''return the reference profile on every interval of the partition, if any'''

        return self._ref_values

    def get_instructed_values(self):
        '''return the profile of minimal instructed power on every interval of the
           partition, if any'''

        return self._ins_values

    def with_loss(self, loss: constraints.LossConfig):
        '''return the same problem with a different loss configuration'''

        return AssembledProblem(self._kind, self._scenario.replace(loss=loss),
                                self._breakpoints, self._alpha, self._sub_samples,
                                self._u_ref, self._u_ins, self._instructions,
                                self._constrained)

    def temperatures(self, params):
        '''return the temperatures on the sub-sampled grid'''

        return self._free + self._sensitivity @ np.asarray(params, dtype=float)

    def control(self, params):
        '''return the control profile defined by the given parameters'''

        return profiles.ControlProfile(self._breakpoints, np.clip(params, 0.0, 1.0))

    def trajectory(self, params):
        '''return the trajectory of temperatures defined by the given parameters'''

        return thermal.TemperatureTrajectory(self._times, self.temperatures(params))

    def objective(self, params):
        '''return the value and gradient of the objective'''

        result = evaluate(self, params)
        return result.objective, result.gradient

    def verify(self, params, tolerance: float = 1e-3):
        '''return the exact violation of every constraint at the given parameters'''

        s = self._scenario
        params = np.asarray(params, dtype=float)
        x = self.temperatures(params)

        names = self.get_constraint_names()
        violations, losses = {}, {}

        if STATE in names:
            violations[STATE] = max(0.0, float(np.max(x - s.get_x_max())),
                                    float(np.max(s.get_x_min() - x)))
            losses[STATE] = self.state_loss(x)[0]

        if TERMINAL in names:
            violations[TERMINAL] = max(0.0, float(x[-1] - s.get_x_hat()))

        if constraints.DELIVERY in names:
            shortfall = np.maximum(0.0, self._ins_values - params)
            violations[constraints.DELIVERY] = float(np.max(shortfall))
            losses[constraints.DELIVERY] = float(np.dot(shortfall**2, self._durations))

        if FINANCIAL in names:
            excess = params - self._ref_values
            ratio = s.get_ratio()
            value = np.dot(excess - ratio * np.maximum(0.0, excess), self._durations)
            violations[FINANCIAL] = max(0.0, float(value) + s.get_economics().get_gamma())

        return ConstraintReport(violations, losses, tolerance)

    def state_loss(self, x):
        '''return the total loss of the state constraints on the grid and its
           derivative with respect to the temperature at every grid point'''

        s = self._scenario
        psi, _ = constraints.state_residuals(self._times, x, s)
        _, phi = constraints.state_residuals(self._times[-1], x[-1], s)
        dpsi, _ = constraints.state_residual_slopes(x, s)
        _, dphi = constraints.state_residual_slopes(x[-1], s)

        running = np.minimum(0.0, psi)
        terminal = min(0.0, float(phi))
        weight = self._loss.get_lambda(constraints.STATE)

        loss = float(np.dot(self._weights, running**2)) + \
            constraints.terminal_loss(terminal, weight)
        slope = 2 * self._weights * running * dpsi
        slope[-1] += 2 * weight * terminal * float(dphi)
        return loss, slope


# functions
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# _check_non_finite
#
# raise FloatingPointError if the given array contains non-finite values
# -----------------------------------------------------------------------------
def _check_non_finite(what: str, values):
    """raise FloatingPointError if the given array contains non-finite values"""

    bad = np.flatnonzero(~np.isfinite(np.atleast_1d(values)))
    if bad.size:
        LOGGER.error(ERROR_NON_FINITE.format(what, bad[0]))
        raise FloatingPointError(ERROR_NON_FINITE.format(what, bad[0]))


def _scale(tolerance: float):
    return tolerance if tolerance > 0 else 1.0


# -----------------------------------------------------------------------------
# evaluate
#
# return the objective, the constraints and their gradients at the given
# parameters
# -----------------------------------------------------------------------------
def evaluate(problem: AssembledProblem, params):
    """return the objective, the scaled constraints and their gradients at the
       given parameters, which must lie in the box [0, 1]

    """

    params = np.asarray(params, dtype=float)
    if params.shape != (problem.get_dimension(),):
        LOGGER.error(ERROR_WRONG_DIMENSION.format(problem.get_dimension(), params.size))
        raise ValueError(ERROR_WRONG_DIMENSION.format(problem.get_dimension(), params.size))
    _check_non_finite("parameters", params)
    outside = np.flatnonzero((params < -BOX_TOLERANCE) | (params > 1 + BOX_TOLERANCE))
    if outside.size:
        LOGGER.error(ERROR_OUT_OF_BOX.format(outside[0], params[outside[0]]))
        raise ValueError(ERROR_OUT_OF_BOX.format(outside[0], params[outside[0]]))

    s = problem.get_scenario()
    loss = problem.get_loss()
    durations = problem.get_durations()
    alpha = problem.get_alpha()
    theta = loss.get_theta()
    names = problem.get_constraint_names()

    # objective: int u + alpha u^2, minus the smoothed payment for the capacity
    objective = np.dot(params + alpha * params**2, durations)
    gradient = durations * (1 + 2 * alpha * params)
    if problem.get_kind() == CAPACITY:
        excess = params - problem.get_reference_values()
        ratio = s.get_ratio()
        objective -= ratio * np.dot(constraints.anchored_ramp(excess, theta), durations)
        gradient = gradient - ratio * durations * constraints.smooth_ramp_slope(excess, theta)
    _check_non_finite("objective", objective)
    _check_non_finite("gradient of the objective", gradient)

    x = problem.temperatures(params)
    _check_non_finite("temperatures", x)

    values = np.empty(len(names))
    jacobian = np.empty((len(names), problem.get_dimension()))
    for index, name in enumerate(names):

        if name == STATE:
            state_loss, slope = problem.state_loss(x)
            scale = _scale(loss.get_epsilon(constraints.STATE))
            values[index] = (state_loss - loss.get_epsilon(constraints.STATE)) / scale
            jacobian[index] = (problem.get_sensitivity().T @ slope) / scale

        elif name == TERMINAL:
            values[index] = x[-1] - s.get_x_hat()
            jacobian[index] = problem.get_sensitivity()[-1]

        elif name == constraints.DELIVERY:
            shortfall = np.minimum(0.0, constraints.delivery_residual(
                problem.get_breakpoints()[:-1], params, problem.get_instructed_values()))
            scale = _scale(loss.get_epsilon(constraints.DELIVERY))
            values[index] = (np.dot(shortfall**2, durations) -
                             loss.get_epsilon(constraints.DELIVERY)) / scale
            jacobian[index] = 2 * durations * shortfall / scale

        else:
            # the ramp is anchored at zero so the smoothed constraint is
            # conservative
            excess = params - problem.get_reference_values()
            ratio = s.get_ratio()
            horizon = s.get_horizon()
            value = np.dot(excess - ratio * constraints.anchored_ramp(excess, theta), durations)
            values[index] = (value + s.get_economics().get_gamma()) / horizon
            jacobian[index] = durations * (1 - ratio * constraints.smooth_ramp_slope(excess, theta)) / horizon

    _check_non_finite("constraints", values)
    _check_non_finite("jacobian of the constraints", jacobian)
    return Evaluation(float(objective), gradient, values, jacobian)


# -----------------------------------------------------------------------------
# _check_reachable
#
# verify that X_hat can be reached from x0 at full power
# -----------------------------------------------------------------------------
def _check_reachable(s: Scenario):
    """verify that X_hat can be reached from x0 at full power within the horizon"""

    coolest = thermal.propagate(s.get_x0(), 1.0, s.get_horizon(), s.get_thermal())
    if coolest > s.get_x_hat():
        msg = ERROR_UNREACHABLE_TARGET.format(s.get_x_hat(), s.get_x0(), coolest, s.get_horizon())
        LOGGER.error(msg)
        raise ValueError(msg)


def _check_reference(s: Scenario, u_ref):
    if abs(u_ref.get_horizon() - s.get_horizon()) > profiles.TIME_TOLERANCE:
        LOGGER.error(ERROR_MISMATCHED_HORIZON.format(u_ref.get_horizon(), s.get_horizon()))
        raise ValueError(ERROR_MISMATCHED_HORIZON.format(u_ref.get_horizon(), s.get_horizon()))


# -----------------------------------------------------------------------------
# build_reference
#
# return the problem of the optimal reference profile
# -----------------------------------------------------------------------------
def build_reference(s: Scenario, n_p: int, sub_samples: int = 10, alpha=None):
    """return the problem of the optimal reference profile: minimize
       int u + alpha_ref u^2 subject to the temperature limits and the
       pre-cooling target, on a uniform partition with n_p intervals. The
       regularizer weight of the scenario can be overridden with alpha

    """

    _check_reachable(s)
    breakpoints = profiles.uniform_partition(s.get_horizon(), n_p)
    return AssembledProblem(REFERENCE, s, breakpoints,
                            s.get_alpha_ref() if alpha is None else alpha,
                            sub_samples)


# -----------------------------------------------------------------------------
# build_capacity
#
# return the problem of the optimal reserve capacity
# -----------------------------------------------------------------------------
def build_capacity(s: Scenario, u_ref: profiles.ControlProfile, n_p: int,
                   sub_samples: int = 10, alpha=None):
    """return the problem of the optimal alternative profile: minimize
       int u - (R/P)(u - u_ref)^+ + alpha_alt u^2 subject to the temperature
       limits, the pre-cooling target and the financial constraint
       int u - u_ref - (R/P)(u - u_ref)^+ <= -gamma. The partition is refined
       with the breakpoints of u_ref

    """

    _check_reachable(s)
    _check_reference(s, u_ref)
    breakpoints = profiles.uniform_partition(s.get_horizon(), n_p,
                                             u_ref.get_breakpoints()[1:-1])
    return AssembledProblem(CAPACITY, s, breakpoints,
                            s.get_alpha_alt() if alpha is None else alpha,
                            sub_samples, u_ref=u_ref)


# -----------------------------------------------------------------------------
# build_delivery
#
# return the problem of the optimal delivery of reserve instructions
# -----------------------------------------------------------------------------
def build_delivery(s: Scenario, u_ref: profiles.ControlProfile,
                   ins: profiles.InstructionSequence, n_p: int,
                   sub_samples: int = 10, alpha=None):
    """return the problem of the optimal delivery profile: minimize
       int u + alpha_del u^2 subject to the temperature limits, the pre-cooling
       target and u >= u_ref + u_ask within every instruction. Outside the
       instructions the power can drop below the reference. The partition is
       refined with the breakpoints of u_ref and the instructions

    """

    _check_reachable(s)
    _check_reference(s, u_ref)
    u_ins = profiles.instructed_min_profile(u_ref, ins)
    breakpoints = profiles.uniform_partition(s.get_horizon(), n_p,
                                             u_ins.get_breakpoints()[1:-1])
    return AssembledProblem(DELIVERY, s, breakpoints,
                            s.get_alpha_del() if alpha is None else alpha,
                            sub_samples, u_ref=u_ref, u_ins=u_ins, instructions=ins)


# Local Variables:
# mode:python
# fill-column:80
# End:
