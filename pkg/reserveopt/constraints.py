#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# constraints.py
# Description: constraint residuals, losses and smooth approximations
# -----------------------------------------------------------------------------
#
# Started on  <Wed Sep 16 09:41:33 2026 >
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

"""Constraint residuals, losses and smooth approximations

Every family of constraints is described with a running residual psi and a
terminal residual phi, which are both non-negative if and only if the
constraints hold. Violations are measured with the total loss

    C(u) = int_0^T min(0, psi)^2 dt + lambda min(0, phi(x(T)))^2

which is zero exactly when the constraints are satisfied, so that every family
of constraints becomes a single inequality C(u) <= epsilon.

"""

# imports
# -----------------------------------------------------------------------------
import math

import numpy as np
from scipy import integrate, special

from . import profiles
from . import thermal
from . import utils

# globals
# -----------------------------------------------------------------------------
LOGGER = utils.LOGGER

# families of constraints
STATE = "state"
DELIVERY = "delivery"
FAMILIES = (STATE, DELIVERY)

# -- errors
ERROR_NON_POSITIVE_THETA = "The smoothing sharpness theta must be positive, but {0} was given"
ERROR_NON_POSITIVE_LAMBDA = "The terminal weight of the {0} constraints must be positive, but {1} was given"
ERROR_NEGATIVE_EPSILON = "The loss tolerance of the {0} constraints can not be negative, but {1} was given"
ERROR_UNKNOWN_FAMILY = "Unknown family of constraints '{0}': use one of {1}"
ERROR_INVALID_INTERVAL = "The interval [{0}, {1}] of a smooth indicator must satisfy a < b"
ERROR_MISSING_INSTRUCTIONS = "The loss of the delivery constraints needs the profile of minimal instructed power"


# classes
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# LossConfig
#
# terminal weights and tolerances of every family of constraints, and the
# sharpness of the smooth approximations
# -----------------------------------------------------------------------------
class LossConfig:
    """
    Terminal weights (lambda) and loss tolerances (epsilon) of the state and
    delivery constraints, and the sharpness theta of the smooth approximations
    """

    def __init__(self, theta: float = 50.0,
                 lambda_state: float = 360.0, lambda_delivery: float = 360.0,
                 epsilon_state: float = 1e-4, epsilon_delivery: float = 1e-4):

        if theta <= 0:
            LOGGER.error(ERROR_NON_POSITIVE_THETA.format(theta))
            raise ValueError(ERROR_NON_POSITIVE_THETA.format(theta))

        for family, weight in ((STATE, lambda_state), (DELIVERY, lambda_delivery)):
            if weight <= 0:
                LOGGER.error(ERROR_NON_POSITIVE_LAMBDA.format(family, weight))
                raise ValueError(ERROR_NON_POSITIVE_LAMBDA.format(family, weight))

        for family, tolerance in ((STATE, epsilon_state), (DELIVERY, epsilon_delivery)):
            if tolerance < 0:
                LOGGER.error(ERROR_NEGATIVE_EPSILON.format(family, tolerance))
                raise ValueError(ERROR_NEGATIVE_EPSILON.format(family, tolerance))

        self._theta = float(theta)
        self._lambda = {STATE: float(lambda_state), DELIVERY: float(lambda_delivery)}
        self._epsilon = {STATE: float(epsilon_state), DELIVERY: float(epsilon_delivery)}

    def __str__(self):
        return "theta={0:g}, lambda={1}, epsilon={2}".format(self._theta, self._lambda,
                                                            self._epsilon)

    def __eq__(self, other):
        return isinstance(other, LossConfig) and self._theta == other._theta and \
            self._lambda == other._lambda and self._epsilon == other._epsilon

    def check_family(self, family):
        '''raise ValueError if the given family of constraints is unknown'''

        if family not in FAMILIES:
            LOGGER.error(ERROR_UNKNOWN_FAMILY.format(family, FAMILIES))
            raise ValueError(ERROR_UNKNOWN_FAMILY.format(family, FAMILIES))

    def get_theta(self):
        '''return the sharpness of the smooth approximations'''

        return self._theta

    def get_lambda(self, family: str):
        '''return the terminal weight of the given family'''

        self.check_family(family)
        return self._lambda[family]

    def get_epsilon(self, family: str):
        '''return the loss tolerance of the given family'''

        self.check_family(family)
        return self._epsilon[family]

    def tighten(self, family: str, factor: float = 10.0):
        '''return a copy of this configuration where the loss tolerance of the given
           family is divided by factor'''

        self.check_family(family)
        epsilon = dict(self._epsilon)
        epsilon[family] /= factor
        return LossConfig(self._theta,
                          self._lambda[STATE], self._lambda[DELIVERY],
                          epsilon[STATE], epsilon[DELIVERY])


# functions
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# state_residuals
#
# return the running and terminal residuals of the temperature constraints
# -----------------------------------------------------------------------------
def state_residuals(t, x, s):
    """return the running (psi) and terminal (phi) residuals of the temperature
       constraints at time(s) t and temperature(s) x:

           psi = (X_max - x)(x - X_min)    phi = (X_hat - x)(x - X_min)

       The constraints are time invariant so t is only given for symmetry with
       the delivery residual

    """

    x = np.asarray(x, dtype=float)
    below = x - s.get_x_min()
    return (s.get_x_max() - x) * below, (s.get_x_hat() - x) * below


def state_residual_slopes(x, s):
    """return the derivatives of psi and phi with respect to the temperature"""

    x = np.asarray(x, dtype=float)
    return (s.get_x_max() + s.get_x_min() - 2 * x,
            s.get_x_hat() + s.get_x_min() - 2 * x)


# -----------------------------------------------------------------------------
# delivery_residual
#
# return the running residual of the delivery constraints
# -----------------------------------------------------------------------------
def delivery_residual(t, u, u_ins_at_t):
    """return the running residual of the delivery constraints, u - u_ins(t). There
       is no terminal residual for these constraints

    """

    return np.asarray(u, dtype=float) - np.asarray(u_ins_at_t, dtype=float)


# -----------------------------------------------------------------------------
# running_loss
#
# return the integral of the squared negative part of the residuals sampled at
# the given times
# -----------------------------------------------------------------------------
def running_loss(residuals, times):
    """return the integral of the squared negative part of the residuals sampled
       at the given times with the composite trapezoidal rule"""

    return float(integrate.trapezoid(np.minimum(0.0, residuals)**2, times))


def terminal_loss(residual, weight: float):
    """return the weighted square of the negative part of the terminal residual"""

    return weight * float(min(0.0, residual))**2


# -----------------------------------------------------------------------------
# total_loss
#
# return the total loss of a family of constraints
# -----------------------------------------------------------------------------
def total_loss(family: str, profile, s, cfg: LossConfig, sub_samples: int = 10,
               u_ins=None, trajectory=None):
    """return the total loss of the given family of constraints when following the
       control profile in scenario s.

       The loss of the state constraints integrates the squared violation over
       the trajectory sampled with sub_samples points per interval (the
       trajectory is simulated from the initial temperature of the scenario
       unless it is given). The loss of the delivery constraints requires the
       profile of minimal instructed power u_ins and, as both profiles are
       piecewise constant, it is computed exactly

    """

    cfg.check_family(family)

    if family == STATE:
        if trajectory is None:
            trajectory = thermal.simulate(profile, s.get_x0(), s.get_thermal(), sub_samples)
        psi, _ = state_residuals(trajectory.get_times(), trajectory.get_temperatures(), s)
        _, phi = state_residuals(trajectory.get_horizon(), trajectory.final(), s)
        return running_loss(psi, trajectory.get_times()) + \
            terminal_loss(phi, cfg.get_lambda(STATE))

    if u_ins is None:
        LOGGER.error(ERROR_MISSING_INSTRUCTIONS)
        raise ValueError(ERROR_MISSING_INSTRUCTIONS)

    breakpoints, values, minimal = profiles.align(profile, u_ins)
    shortfall = np.minimum(0.0, delivery_residual(breakpoints[:-1], values, minimal))
    return float(np.dot(shortfall**2, np.diff(breakpoints)))


# -----------------------------------------------------------------------------
# smooth_ramp
#
# return a smooth approximation of max(0, y)
# -----------------------------------------------------------------------------
def smooth_ramp(y, theta: float):
    """return a smooth approximation of max(0, y), log(1 + exp(theta y)) / theta.
       It is evaluated without overflow for any value of theta y

    """

    if theta <= 0:
        LOGGER.error(ERROR_NON_POSITIVE_THETA.format(theta))
        raise ValueError(ERROR_NON_POSITIVE_THETA.format(theta))

    return np.logaddexp(0.0, theta * np.asarray(y, dtype=float)) / theta


def smooth_ramp_slope(y, theta: float):
    """return the derivative of smooth_ramp, i.e., the logistic function of theta y"""

    return special.expit(theta * np.asarray(y, dtype=float))


# -----------------------------------------------------------------------------
# anchored_ramp
#
# return the smooth ramp shifted so that it vanishes at zero
# -----------------------------------------------------------------------------
def anchored_ramp(y, theta: float):
    """return smooth_ramp(y) - smooth_ramp(0). It vanishes at zero and never exceeds
       max(0, y), so any inequality that holds when max(0, y) is replaced by it
       with a negative coefficient also holds with the exact ramp. Its
       derivative is smooth_ramp_slope

    """

    return smooth_ramp(y, theta) - math.log(2.0) / theta


# -----------------------------------------------------------------------------
# smooth_indicator
#
# return a smooth approximation of the indicator function of [a, b]
# -----------------------------------------------------------------------------
def smooth_indicator(y, a: float, b: float, theta: float):
    """return a smooth approximation of the indicator function of [a, b] computed
       as the product of two logistic functions

    """

    if a >= b:
        LOGGER.error(ERROR_INVALID_INTERVAL.format(a, b))
        raise ValueError(ERROR_INVALID_INTERVAL.format(a, b))
    if theta <= 0:
        LOGGER.error(ERROR_NON_POSITIVE_THETA.format(theta))
        raise ValueError(ERROR_NON_POSITIVE_THETA.format(theta))

    y = np.asarray(y, dtype=float)
    return special.expit(theta * (y - a)) * special.expit(theta * (b - y))


# Local Variables:
# mode:python
# fill-column:80
# End:
