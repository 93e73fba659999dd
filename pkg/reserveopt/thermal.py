#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# thermal.py
# Description: linear thermal model of a building and its landmark times
# -----------------------------------------------------------------------------
#
# Started on  <Mon Sep 14 18:20:07 2026 >
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

"""Linear thermal model of a building and its landmark times

The internal temperature x (degrees Celsius) of the building relaxes
exponentially towards X_off when the cooling equipment is off and towards X_on
when it operates at full power:

    x' = -(1/tau) [x - X_off + (X_off - X_on) u]

where u in [0, 1] is the normalized power. Under piecewise-constant controls
the solution is known in closed form, so all trajectories computed here are
exact at the breakpoints of the control.

"""

# imports
# -----------------------------------------------------------------------------
import math

import numpy as np

from . import utils

# globals
# -----------------------------------------------------------------------------
LOGGER = utils.LOGGER

# cases of sustained capacity
CASE_1 = "case1"
CASE_3 = "case3"

# -- errors
ERROR_NON_POSITIVE_TAU = "The thermal time constant tau must be positive, but {0} was given"
ERROR_INVALID_ASYMPTOTES = "The asymptotic temperatures must satisfy X_on < X_off, but X_on={0} and X_off={1}"
ERROR_NON_POSITIVE_CMAX = "The maximum power C_max must be positive, but {0} was given"
ERROR_LEVEL_OUT_OF_RANGE = "The temperature {0} is out of [X_on, X_off] = [{1}, {2}]: no control in [0, 1] keeps it constant"
ERROR_CONTROL_OUT_OF_RANGE = "The normalized power {0} is out of the range [0, 1]"
ERROR_NEGATIVE_DURATION = "The duration {0} can not be negative"
ERROR_NON_POSITIVE_SUBSAMPLES = "The number of sub-samples per interval must be at least 1, but {0} was given"
ERROR_INITIAL_OUT_OF_RANGE = "The initial temperature {0} is out of [X_on, X_off] = [{1}, {2}]"
ERROR_INVALID_TRAJECTORY = "The times of a trajectory must start at 0 and be strictly increasing"
ERROR_MISMATCHED_TRAJECTORY = "A trajectory with {0} times can not have {1} temperatures"
ERROR_LOG_DIVERGENCE = "{0}={1} must be above X_on={2} to compute a landmark time"
ERROR_T2_OUT_OF_RANGE = "The full-power time t2={0} is out of the horizon (0, {1}]"
ERROR_UNKNOWN_CASE = "Unknown case of sustained capacity '{0}': use '{1}' or '{2}'"

# -- debug
DEBUG_LANDMARK = "Landmark {0}={1:.4f} min"


# classes
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# ThermalParams
#
# relaxation physics of the building: time constant, asymptotic temperatures and
# maximum power
# -----------------------------------------------------------------------------
class ThermalParams:
    """
    Relaxation physics of the building: the thermal time constant tau (min), the
    asymptotic temperatures X_off and X_on (degrees Celsius) reached with the
    equipment off and at full power, and the maximum power C_max (kW)
    """

    def __init__(self, tau: float, x_off: float, x_on: float, cmax: float):

        if tau <= 0:
            LOGGER.error(ERROR_NON_POSITIVE_TAU.format(tau))
            raise ValueError(ERROR_NON_POSITIVE_TAU.format(tau))
        if x_on >= x_off:
            LOGGER.error(ERROR_INVALID_ASYMPTOTES.format(x_on, x_off))
            raise ValueError(ERROR_INVALID_ASYMPTOTES.format(x_on, x_off))
        if cmax <= 0:
            LOGGER.error(ERROR_NON_POSITIVE_CMAX.format(cmax))
            raise ValueError(ERROR_NON_POSITIVE_CMAX.format(cmax))

        self._tau = float(tau)
        self._x_off = float(x_off)
        self._x_on = float(x_on)
        self._cmax = float(cmax)

    def __str__(self):
        return "tau={0:g} min, X_off={1:g}, X_on={2:g}, C_max={3:g} kW".format(
            self._tau, self._x_off, self._x_on, self._cmax)

    def __eq__(self, other):
        return isinstance(other, ThermalParams) and \
            (self._tau, self._x_off, self._x_on, self._cmax) == \
            (other._tau, other._x_off, other._x_on, other._cmax)

    def get_tau(self):
        '''return the thermal time constant'''

        return self._tau

    def get_x_off(self):
        '''return the temperature reached with the equipment off'''

        return self._x_off

    def get_x_on(self):
        '''return the temperature reached at full power'''

        return self._x_on

    def get_cmax(self):
        '''return the maximum power of the building in kW'''

        return self._cmax

    def get_span(self):
        '''return X_off - X_on'''

        return self._x_off - self._x_on


# -----------------------------------------------------------------------------
# TemperatureTrajectory
#
# samples (time, temperature) of the internal temperature over [0, T]
# -----------------------------------------------------------------------------
class TemperatureTrajectory:
    """
    Samples (time, temperature) of the internal temperature over [0, T]. Times
    are strictly increasing and start at 0
    """

    def __init__(self, times, temperatures):

        times = np.array(times, dtype=float)
        temperatures = np.array(temperatures, dtype=float)

        if times.ndim != 1 or not times.size or times[0] != 0 or \
           np.any(np.diff(times) <= 0):
            LOGGER.error(ERROR_INVALID_TRAJECTORY)
            raise ValueError(ERROR_INVALID_TRAJECTORY)
        if temperatures.shape != times.shape:
            LOGGER.error(ERROR_MISMATCHED_TRAJECTORY.format(times.size, temperatures.size))
            raise ValueError(ERROR_MISMATCHED_TRAJECTORY.format(times.size, temperatures.size))

        times.setflags(write=False)
        temperatures.setflags(write=False)
        self._times = times
        self._temperatures = temperatures

    def __len__(self):
        return len(self._times)

    def __iter__(self):
        return zip(self._times.tolist(), self._temperatures.tolist())

    def get_times(self):
        '''return the times of all samples'''

        return self._times

    def get_temperatures(self):
        '''return the temperatures of all samples'''

        return self._temperatures

    def get_horizon(self):
        '''return the time of the last sample'''

        return float(self._times[-1])

    def final(self):
        '''return the temperature at the end of the horizon'''

        return float(self._temperatures[-1])

    def value_at(self, time):
        '''return the temperature at the given time(s), linearly interpolated
           between samples'''

        result = np.interp(time, self._times, self._temperatures)
        return float(result) if np.ndim(result) == 0 else result


# functions
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# steady_state_control
#
# return the constant normalized power that keeps the temperature at the given
# level
# -----------------------------------------------------------------------------
def steady_state_control(x_level: float, p: ThermalParams):
    """return the constant normalized power that keeps the temperature at the
       given level, i.e., (X_off - x) / (X_off - X_on)

    """

    if x_level < p.get_x_on() or x_level > p.get_x_off():
        LOGGER.error(ERROR_LEVEL_OUT_OF_RANGE.format(x_level, p.get_x_on(), p.get_x_off()))
        raise ValueError(ERROR_LEVEL_OUT_OF_RANGE.format(x_level, p.get_x_on(), p.get_x_off()))

    return (p.get_x_off() - x_level) / p.get_span()


# -----------------------------------------------------------------------------
# propagate
#
# return the temperature after dt minutes of constant control u from x0
# -----------------------------------------------------------------------------
def propagate(x0, u, dt, p: ThermalParams):
    """return the temperature after dt minutes of constant normalized power u
       starting from x0. It is the exact solution of the thermal model. All
       arguments but p can be arrays which are broadcast together

    """

    if np.any(np.asarray(u) < 0) or np.any(np.asarray(u) > 1):
        LOGGER.error(ERROR_CONTROL_OUT_OF_RANGE.format(u))
        raise ValueError(ERROR_CONTROL_OUT_OF_RANGE.format(u))
    if np.any(np.asarray(dt) < 0):
        LOGGER.error(ERROR_NEGATIVE_DURATION.format(dt))
        raise ValueError(ERROR_NEGATIVE_DURATION.format(dt))

    decay = np.exp(-np.asarray(dt, dtype=float) / p.get_tau())
    target = p.get_x_off() + (p.get_x_on() - p.get_x_off()) * np.asarray(u, dtype=float)
    result = decay * x0 + (1 - decay) * target
    return float(result) if np.ndim(result) == 0 else result


# -----------------------------------------------------------------------------
# sampling_times
#
# return the sub-sampled grid of a partition
# -----------------------------------------------------------------------------
def sampling_times(breakpoints, sub_samples: int):
    """return sub_samples equally spaced times per interval of the partition
       (starting at its left breakpoint) followed by the last breakpoint

    """

    if sub_samples < 1:
        LOGGER.error(ERROR_NON_POSITIVE_SUBSAMPLES.format(sub_samples))
        raise ValueError(ERROR_NON_POSITIVE_SUBSAMPLES.format(sub_samples))

    breakpoints = np.asarray(breakpoints, dtype=float)
    fractions = np.arange(sub_samples) / sub_samples
    interior = breakpoints[:-1, None] + np.outer(np.diff(breakpoints), fractions)
    return np.append(interior.ravel(), breakpoints[-1])


# -----------------------------------------------------------------------------
# simulate
#
# return the trajectory of temperatures obtained with the given control
# -----------------------------------------------------------------------------
def simulate(profile, x0: float, p: ThermalParams, sub_samples: int = 10):
    """return the trajectory of temperatures obtained when following the given
       control profile from x0. Temperatures at the breakpoints are computed by
       chaining propagate, and those within every interval by propagating from
       its left breakpoint

    """

    if x0 < p.get_x_on() or x0 > p.get_x_off():
        LOGGER.error(ERROR_INITIAL_OUT_OF_RANGE.format(x0, p.get_x_on(), p.get_x_off()))
        raise ValueError(ERROR_INITIAL_OUT_OF_RANGE.format(x0, p.get_x_on(), p.get_x_off()))

    times = sampling_times(profile.get_breakpoints(), sub_samples)
    fractions = np.arange(sub_samples) / sub_samples

    temperatures = []
    current = x0
    for duration, value in zip(profile.get_durations(), profile.get_values()):
        temperatures.append(propagate(current, value, duration * fractions, p))
        current = propagate(current, value, duration, p)
    temperatures.append([current])

    return TemperatureTrajectory(times, np.concatenate(temperatures))


# -----------------------------------------------------------------------------
# response_matrices
#
# return the sub-sampled grid and the affine map from step controls to
# temperatures on it
# -----------------------------------------------------------------------------
def response_matrices(breakpoints, x0: float, p: ThermalParams, sub_samples: int = 10):
    """return the tuple (times, free, sensitivity) where times is the sub-sampled
       grid of the partition (see sampling_times), free are the temperatures on
       it with the equipment off, and sensitivity is the matrix such that the
       temperatures obtained with the step values u are free + sensitivity @ u

    """

    breakpoints = np.asarray(breakpoints, dtype=float)
    times = sampling_times(breakpoints, sub_samples)
    n_p = len(breakpoints) - 1
    tau, x_off = p.get_tau(), p.get_x_off()
    gain = p.get_x_on() - x_off

    durations = np.diff(breakpoints)
    decays = np.exp(-durations / tau)

    # temperatures and their derivatives with respect to u at every breakpoint
    free_at = np.empty(n_p + 1)
    jacobian = np.zeros((n_p + 1, n_p))
    free_at[0] = x0
    for k in range(n_p):
        free_at[k + 1] = decays[k] * free_at[k] + (1 - decays[k]) * x_off
        jacobian[k + 1] = decays[k] * jacobian[k]
        jacobian[k + 1, k] += (1 - decays[k]) * gain

    # sub-samples within the k-th interval start from its left breakpoint
    fractions = np.arange(sub_samples) / sub_samples
    free = np.empty(len(times))
    sensitivity = np.zeros((len(times), n_p))
    for k in range(n_p):
        rows = slice(k * sub_samples, (k + 1) * sub_samples)
        partial = np.exp(-durations[k] * fractions / tau)
        free[rows] = partial * free_at[k] + (1 - partial) * x_off
        sensitivity[rows] = np.outer(partial, jacobian[k])
        sensitivity[rows, k] += (1 - partial) * gain
    free[-1] = free_at[-1]
    sensitivity[-1] = jacobian[-1]

    return times, free, sensitivity


# -----------------------------------------------------------------------------
# _log_ratio
#
# return log((X_max - X_on) / (level - X_on)) verifying that level > X_on
# -----------------------------------------------------------------------------
def _log_ratio(s, name: str, level: float):
    """return log((X_max - X_on) / (level - X_on)) verifying that level > X_on"""

    x_on = s.get_thermal().get_x_on()
    if level <= x_on:
        LOGGER.error(ERROR_LOG_DIVERGENCE.format(name, level, x_on))
        raise ValueError(ERROR_LOG_DIVERGENCE.format(name, level, x_on))

    return math.log((s.get_x_max() - x_on) / (level - x_on))


# -----------------------------------------------------------------------------
# landmark_t2
#
# return the approximate time after which the optimal reference profile applies
# full power
# -----------------------------------------------------------------------------
def landmark_t2(s):
    """return the approximate time after which the optimal reference profile
       applies full power: T - tau log((X_max - X_on) / (X_hat - X_on))

    """

    t2 = s.get_horizon() - s.get_thermal().get_tau() * _log_ratio(s, "X_hat", s.get_x_hat())
    LOGGER.debug(DEBUG_LANDMARK.format("t2", t2))
    return t2


# -----------------------------------------------------------------------------
# landmark_t_hat
#
# return the start of the window of sustained maximal capacity when R < P
# -----------------------------------------------------------------------------
def landmark_t_hat(s, t2: float):
    """return the start of the window of sustained maximal capacity when R < P:
       t2 - tau log((X_max - X_on) / (X_min - X_on))

    """

    if t2 <= 0 or t2 > s.get_horizon():
        LOGGER.error(ERROR_T2_OUT_OF_RANGE.format(t2, s.get_horizon()))
        raise ValueError(ERROR_T2_OUT_OF_RANGE.format(t2, s.get_horizon()))

    t_hat = t2 - s.get_thermal().get_tau() * _log_ratio(s, "X_min", s.get_x_min())
    LOGGER.debug(DEBUG_LANDMARK.format("t_hat", t_hat))
    return t_hat


# -----------------------------------------------------------------------------
# landmark_t_check
#
# return the first time the temperature hits X_min under initial full power
# -----------------------------------------------------------------------------
def landmark_t_check(s):
    """return the first time the temperature hits X_min when full power is applied
       from X_max: tau log((X_max - X_on) / (X_min - X_on))

    """

    t_check = s.get_thermal().get_tau() * _log_ratio(s, "X_min", s.get_x_min())
    LOGGER.debug(DEBUG_LANDMARK.format("t_check", t_check))
    return t_check


# -----------------------------------------------------------------------------
# sustained_capacity_level
#
# return the approximate level of sustained capacity
# -----------------------------------------------------------------------------
def sustained_capacity_level(case: str, s):
    """return the approximate normalized level of sustained capacity. In the first
       case (R < P) full power is used on top of the reference plateau; in the
       third one (R > P) the temperature is held at X_min instead of X_max

    """

    params = s.get_thermal()
    if case == CASE_1:
        return (s.get_x_max() - params.get_x_on()) / params.get_span()
    if case == CASE_3:
        return (s.get_x_max() - s.get_x_min()) / params.get_span()

    LOGGER.error(ERROR_UNKNOWN_CASE.format(case, CASE_1, CASE_3))
    raise ValueError(ERROR_UNKNOWN_CASE.format(case, CASE_1, CASE_3))


# Local Variables:
# mode:python
# fill-column:80
# End:
