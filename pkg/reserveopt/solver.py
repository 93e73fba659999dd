#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# solver.py
# Description: augmented Lagrangian solver of the assembled problems
# -----------------------------------------------------------------------------
#
# Started on  <Fri Sep 18 16:12:40 2026 >
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

"""Augmented Lagrangian solver of the assembled problems

Inequality constraints c(u) <= 0 are moved into the merit function

    M(u) = f(u) + sum_i [max(0, l_i + mu c_i(u))^2 - l_i^2] / (2 mu)

which is minimized over the box [0, 1]^n with L-BFGS-B. After every inner solve
the multipliers are updated with l_i <- max(0, l_i + mu c_i(u)) and the penalty
mu is increased whenever the violation of the constraints does not decrease
enough. Every start is verified with the exact constraints; when a loss family
fails its verification, its tolerance is tightened and the start is resumed.

"""

# imports
# -----------------------------------------------------------------------------
import numpy as np
from scipy import optimize

from . import constraints
from . import problems
from . import profiles
from . import thermal
from . import utils

# globals
# -----------------------------------------------------------------------------
LOGGER = utils.LOGGER

# penalty of the augmented Lagrangian
INITIAL_PENALTY = 10.0
PENALTY_GROWTH = 10.0
MAX_PENALTY = 1e10

# the violation must shrink by this factor or the penalty grows
VIOLATION_DECREASE = 0.25

# scaled constraints below this are considered to hold in the outer loop
FEASIBILITY_TOLERANCE = 1e-6

# allowed increase of the merit between accepted iterates due to rounding
MERIT_SLACK = 1e-9

# which loss family is tightened when an exact constraint fails
TIGHTENED_FAMILY = {problems.STATE: constraints.STATE,
                    problems.TERMINAL: constraints.STATE,
                    constraints.DELIVERY: constraints.DELIVERY}

# -- errors
ERROR_INVALID_NP = "The number of intervals n_p must be at least 2, but {0} was given"
ERROR_NON_POSITIVE = "The solver setting {0} must be positive, but {1} was given"
ERROR_NEGATIVE = "The solver setting {0} can not be negative, but {1} was given"
ERROR_UNKNOWN_SETTING = "Unknown solver setting '{0}'"
ERROR_INFEASIBLE = "No start found a feasible solution of the {0} problem. Least violating start #{1}: {2}"
ERROR_NOT_INTERIOR = "The parameters must be at least 2h={0} away from the bounds to check the gradients"

# -- warnings
WARNING_MERIT_INCREASE = "The merit increased from {0:.10e} to {1:.10e} in the inner solve of start #{2}"

# -- info
INFO_SOLVING = "Solving the {0} problem with n_p={1} and {2} start(s) ..."
INFO_START = "Start #{0}: objective={1:.6f} feasible={2} iterations={3} [{4}]"
INFO_BEST = "Best start #{0} with objective {1:.6f}"
INFO_TIGHTEN = "Start #{0}: tightening the {1} loss to {2:.3e} after violations [{3}]"

# -- debug
DEBUG_OUTER = "Start #{0} outer iteration {1}: merit={2:.8f} violation={3:.3e} penalty={4:.1e}"


# classes
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# InfeasibleProblemError
#
# raised when no start produces a feasible point
# -----------------------------------------------------------------------------
class InfeasibleProblemError(RuntimeError):
    """raised when no start produces a feasible point. It carries the parameters
       of the least violating start and its constraint report"""

    def __init__(self, message, params, report):
        super().__init__(message)
        self.params = params
        self.report = report


# -----------------------------------------------------------------------------
# SolverConfig
#
# settings of the solver
# -----------------------------------------------------------------------------
class SolverConfig:
    """
    Settings of the solver: number of intervals of the partition, iteration
    limits, tolerances, multistart and random seed
    """

    # the settings of the solver along with their defaults
    DEFAULTS = {"n_p": 72,
                "max_iterations": 500,
                "max_outer_iterations": 40,
                "convergence_tol": 1e-8,
                "constraint_tol": 1e-3,
                "multistart": 5,
                "rng_seed": 0,
                "sub_samples": 10,
                "max_tightenings": 4}

    def __init__(self, **settings):

        for name in settings:
            if name not in SolverConfig.DEFAULTS:
                LOGGER.error(ERROR_UNKNOWN_SETTING.format(name))
                raise ValueError(ERROR_UNKNOWN_SETTING.format(name))

        self._settings = dict(SolverConfig.DEFAULTS)
        self._settings.update(settings)

        if self._settings["n_p"] < 2:
            LOGGER.error(ERROR_INVALID_NP.format(self._settings["n_p"]))
            raise ValueError(ERROR_INVALID_NP.format(self._settings["n_p"]))
        for name in ("max_iterations", "max_outer_iterations", "convergence_tol",
                     "constraint_tol", "multistart", "sub_samples"):
            if self._settings[name] <= 0:
                LOGGER.error(ERROR_NON_POSITIVE.format(name, self._settings[name]))
                raise ValueError(ERROR_NON_POSITIVE.format(name, self._settings[name]))
        for name in ("rng_seed", "max_tightenings"):
            if self._settings[name] < 0:
                LOGGER.error(ERROR_NEGATIVE.format(name, self._settings[name]))
                raise ValueError(ERROR_NEGATIVE.format(name, self._settings[name]))

    def __str__(self):
        return ", ".join("{0}={1}".format(name, value) for name, value in self._settings.items())

    def __eq__(self, other):
        return isinstance(other, SolverConfig) and self._settings == other._settings

    def get_n_p(self):
        return self._settings["n_p"]

    def get_max_iterations(self):
        '''return the maximum number of iterations of every inner solve'''

        return self._settings["max_iterations"]

    def get_max_outer_iterations(self):
        '''return the maximum number of updates of the multipliers'''

        return self._settings["max_outer_iterations"]

    def get_convergence_tol(self):
        return self._settings["convergence_tol"]

    def get_constraint_tol(self):
        '''return the tolerance of the exact constraints of returned solutions'''

        return self._settings["constraint_tol"]

    def get_multistart(self):
        return self._settings["multistart"]

    def get_rng_seed(self):
        return self._settings["rng_seed"]

    def get_sub_samples(self):
        return self._settings["sub_samples"]

    def get_max_tightenings(self):
        return self._settings["max_tightenings"]

    def replace(self, **changes):
        '''return a copy of these settings with the given changes'''

        settings = dict(self._settings)
        settings.update(changes)
        return SolverConfig(**settings)

    def to_config(self):
        '''return the section of a configuration document with these settings'''

        return dict(self._settings)


# -----------------------------------------------------------------------------
# StartOutcome
#
# result of a single start of the multistart
# -----------------------------------------------------------------------------
class StartOutcome:
    """
    Result of a single start of the multistart: its parameters, objective, exact
    constraint report and number of inner iterations
    """

    def __init__(self, index: int, params, objective: float, report, iterations: int,
                 converged: bool):

        self._index = index
        self._params = params
        self._objective = objective
        self._report = report
        self._iterations = iterations
        self._converged = converged

    def __str__(self):
        return INFO_START.format(self._index, self._objective, self.is_feasible(),
                                 self._iterations, self._report)

    def get_index(self):
        return self._index

    def get_params(self):
        return self._params

    def get_objective(self):
        return self._objective

    def get_report(self):
        return self._report

    def get_iterations(self):
        return self._iterations

    def is_converged(self):
        return self._converged

    def is_feasible(self):
        return self._report.is_feasible()


# -----------------------------------------------------------------------------
# Solution
#
# the best feasible start of a problem along with its diagnostics
# -----------------------------------------------------------------------------
class Solution:
    """
    The best feasible start of a problem: control, trajectory, objective, exact
    constraint report, economics (computed with the exact ramp) and the outcome
    of every start
    """

    def __init__(self, problem, best: StartOutcome, starts):

        self._problem = problem
        self._best = best
        self._starts = list(starts)
        self._control = problem.control(best.get_params())
        self._trajectory = problem.trajectory(best.get_params())

        s = problem.get_scenario()
        econ = s.get_economics()
        self._economics = {"cost": profiles.total_cost(self._control, econ, s.get_thermal()),
                           "net_cost": None,
                           "nnp": None}
        if problem.get_u_ref() is not None:
            self._economics["net_cost"] = profiles.total_net_cost(
                self._control, problem.get_u_ref(), econ, s.get_thermal())
            self._economics["nnp"] = profiles.normalized_net_profit(
                self._control, problem.get_u_ref(), econ.get_ratio())

    def __str__(self):
        return "{0}: objective={1:.6f}, {2}".format(self._problem.get_kind(),
                                                     self.get_objective(),
                                                     self.get_report())

    def get_kind(self):
        return self._problem.get_kind()

    def get_problem(self):
        return self._problem

    def get_params(self):
        return self._best.get_params()

    def get_control(self):
        return self._control

    def get_trajectory(self):
        return self._trajectory

    def get_objective(self):
        return self._best.get_objective()

    def get_report(self):
        '''return the exact constraint report of the best start'''

        return self._best.get_report()

    def get_economics(self):
        '''return the cost, net cost and normalized net profit of the control'''

        return dict(self._economics)

    def get_iterations(self):
        return self._best.get_iterations()

    def is_converged(self):
        return self._best.is_converged()

    def is_feasible(self):
        return self._best.is_feasible()

    def get_start(self):
        '''return the index of the best start'''

        return self._best.get_index()

    def get_starts(self):
        '''return the outcome of every start'''

        return list(self._starts)


# functions
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# initial_guesses
#
# return the starting points of the multistart
# -----------------------------------------------------------------------------
def initial_guesses(problem, cfg: SolverConfig):
    """return the starting points of the multistart. The first one is the
       steady-state control of the initial temperature, the second one follows
       the shape of the analytic solution and the rest are uniformly random

    """

    s = problem.get_scenario()
    n = problem.get_dimension()

    level = np.clip(thermal.steady_state_control(s.get_x0(), s.get_thermal()), 0.0, 1.0)
    guesses = [np.full(n, level)]
    if cfg.get_multistart() >= 2:
        guesses.append(analytic_guess(problem))

    rng = np.random.default_rng(cfg.get_rng_seed())
    while len(guesses) < cfg.get_multistart():
        guesses.append(rng.uniform(0.0, 1.0, n))

    return guesses


# -----------------------------------------------------------------------------
# analytic_guess
#
# return the shape of the analytic solution of the problem on its partition
# -----------------------------------------------------------------------------
def analytic_guess(problem):
    """return the shape of the analytic solution of the problem on its partition.
       The reference profile keeps a plateau and applies full power from t2; the
       capacity profile adds full power on [t_hat, t2] when R < P, or cools down
       to X_min and stays there when R > P; the delivery profile lifts the
       reference to the instructed power

    """

    s = problem.get_scenario()
    params = s.get_thermal()
    breakpoints = problem.get_breakpoints()
    midpoints = 0.5 * (breakpoints[:-1] + breakpoints[1:])
    t2 = min(max(thermal.landmark_t2(s), 0.0), s.get_horizon())

    plateau = thermal.steady_state_control(s.get_x0(), params)
    reference = np.where(midpoints >= t2, 1.0, plateau)

    kind = problem.get_kind()
    if kind == problems.CAPACITY:
        reference = problem.get_reference_values()
        ratio = s.get_ratio()
        if ratio < 1 and t2 > 0:
            t_hat = thermal.landmark_t_hat(s, t2)
            return np.where((midpoints >= t_hat) & (midpoints < t2), 1.0, reference)
        if ratio > 1:
            t_check = thermal.landmark_t_check(s)
            hold = thermal.steady_state_control(s.get_x_min(), params)
            return np.where(midpoints < t_check, 1.0, hold)
        return np.array(reference, dtype=float)

    if kind == problems.DELIVERY:
        return np.maximum(problem.get_reference_values(), problem.get_instructed_values())

    return reference


# -----------------------------------------------------------------------------
# _merit
#
# return the augmented Lagrangian and its gradient
# -----------------------------------------------------------------------------
def _merit(problem, params, multipliers, penalty):
    """return the augmented Lagrangian and its gradient"""

    result = problems.evaluate(problem, params)
    shifted = np.maximum(0.0, multipliers + penalty * result.constraints)
    value = result.objective + (np.sum(shifted**2) - np.sum(multipliers**2)) / (2 * penalty)
    return value, result.gradient + result.jacobian.T @ shifted


# -----------------------------------------------------------------------------
# _augmented_lagrangian
#
# minimize the problem from the given point
# -----------------------------------------------------------------------------
def _augmented_lagrangian(problem, params, cfg: SolverConfig, index: int):
    """minimize the problem from the given point and return the final parameters,
       the number of inner iterations and whether the outer loop converged

    """

    multipliers = np.zeros(len(problem.get_constraints()))
    penalty = INITIAL_PENALTY
    previous = np.inf
    iterations = 0

    for outer in range(cfg.get_max_outer_iterations()):

        # L-BFGS-B keeps every iterate within the box, the clip only removes
        # rounding noise
        def merit(current, weights=multipliers, mu=penalty):
            return _merit(problem, np.clip(current, 0.0, 1.0), weights, mu)

        history = []
        result = optimize.minimize(merit, params, jac=True, method='L-BFGS-B',
                                   bounds=problem.get_bounds(),
                                   callback=lambda current: history.append(merit(current)[0]),
                                   options={'maxiter': cfg.get_max_iterations(),
                                            'ftol': cfg.get_convergence_tol(),
                                            'gtol': 1e-10})

        _check_monotone(history, index)
        params = np.clip(result.x, 0.0, 1.0)
        iterations += result.nit

        values = problems.evaluate(problem, params).constraints
        violation = float(np.max(np.maximum(0.0, values), initial=0.0))
        LOGGER.debug(DEBUG_OUTER.format(index, outer, result.fun, violation, penalty))

        updated = np.maximum(0.0, multipliers + penalty * values)
        change = float(np.max(np.abs(updated - multipliers), initial=0.0))
        multipliers = updated

        if violation <= FEASIBILITY_TOLERANCE and \
           change <= FEASIBILITY_TOLERANCE * max(1.0, float(np.max(multipliers, initial=0.0))):
            return params, iterations, True

        if violation > VIOLATION_DECREASE * previous:
            penalty = min(penalty * PENALTY_GROWTH, MAX_PENALTY)
        previous = violation

    return params, iterations, False


def _check_monotone(history, index):
    '''warn if the merit of the accepted iterates of an inner solve increases. This
       is diagnostic only: the solve goes on with the last iterate'''

    for before, after in zip(history, history[1:]):
        if after > before + MERIT_SLACK * max(1.0, abs(before)):
            LOGGER.warning(WARNING_MERIT_INCREASE.format(before, after, index))


# -----------------------------------------------------------------------------
# _solve_start
#
# solve the problem from a single starting point, tightening the losses when
# the exact constraints fail
# -----------------------------------------------------------------------------
def _solve_start(problem, guess, cfg: SolverConfig, index: int):
    """solve the problem from a single starting point. When the exact constraints
       of a loss family fail, its tolerance is divided by 10 and the solve is
       resumed from the current point

    """

    current = problem
    params = np.clip(np.asarray(guess, dtype=float), 0.0, 1.0)
    iterations = 0

    for tightening in range(cfg.get_max_tightenings() + 1):

        params, spent, converged = _augmented_lagrangian(current, params, cfg, index)
        iterations += spent
        report = problem.verify(params, cfg.get_constraint_tol())

        families = sorted({TIGHTENED_FAMILY[name] for name in report.get_failures()
                           if name in TIGHTENED_FAMILY})
        if not families or tightening == cfg.get_max_tightenings():
            break

        loss = current.get_loss()
        for family in families:
            loss = loss.tighten(family)
            LOGGER.info(INFO_TIGHTEN.format(index, family, loss.get_epsilon(family), report))
        current = current.with_loss(loss)

    objective = problems.evaluate(problem, params).objective
    return StartOutcome(index, params, objective, report, iterations, converged)


# -----------------------------------------------------------------------------
# solve
#
# return the best feasible solution of the problem across all starts
# -----------------------------------------------------------------------------
def solve(problem, cfg: SolverConfig):
    """return the best feasible solution of the problem across all starts. Ties are
       broken in favour of the lowest start index. If no start is feasible an
       InfeasibleProblemError is raised with the least violating start

    """

    guesses = initial_guesses(problem, cfg)
    LOGGER.info(INFO_SOLVING.format(problem.get_kind(), problem.get_dimension(), len(guesses)))

    starts = []
    for index, guess in enumerate(guesses):
        outcome = _solve_start(problem, guess, cfg, index)
        LOGGER.info(str(outcome))
        starts.append(outcome)

    feasible = [outcome for outcome in starts if outcome.is_feasible()]
    if not feasible:
        closest = min(starts, key=lambda outcome: (outcome.get_report().total_violation(),
                                                   outcome.get_index()))
        msg = ERROR_INFEASIBLE.format(problem.get_kind(), closest.get_index(), closest.get_report())
        LOGGER.error(msg)
        raise InfeasibleProblemError(msg, closest.get_params(), closest.get_report())

    best = min(feasible, key=lambda outcome: (outcome.get_objective(), outcome.get_index()))
    LOGGER.info(INFO_BEST.format(best.get_index(), best.get_objective()))
    return Solution(problem, best, starts)


# -----------------------------------------------------------------------------
# check_gradients
#
# return the largest relative error of the analytic gradients with respect to
# central differences
# -----------------------------------------------------------------------------
def check_gradients(problem, params, h: float = 1e-6, include_constraints: bool = True):
    """return the largest error |analytic - central difference| / max(1, |analytic|)
       over every coordinate of the gradient of the objective and, unless
       include_constraints is false, of every constraint

    """

    params = np.asarray(params, dtype=float)
    if np.any(params < 2 * h) or np.any(params > 1 - 2 * h):
        LOGGER.error(ERROR_NOT_INTERIOR.format(2 * h))
        raise ValueError(ERROR_NOT_INTERIOR.format(2 * h))

    analytic = problems.evaluate(problem, params)
    exact = [analytic.gradient]
    if include_constraints:
        exact.extend(analytic.jacobian)
    exact = np.array(exact)

    approximate = np.empty_like(exact)
    for coordinate in range(len(params)):
        step = np.zeros(len(params))
        step[coordinate] = h
        forward = problems.evaluate(problem, params + step)
        backward = problems.evaluate(problem, params - step)
        difference = [forward.objective - backward.objective]
        if include_constraints:
            difference.extend(forward.constraints - backward.constraints)
        approximate[:, coordinate] = np.array(difference) / (2 * h)

    return float(np.max(np.abs(exact - approximate) / np.maximum(1.0, np.abs(exact))))


# Local Variables:
# mode:python
# fill-column:80
# End:
