#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# profiles.py
# Description: step power profiles, reserve instructions and economics
# -----------------------------------------------------------------------------
#
# Started on  <Tue Sep 15 10:02:51 2026 >
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

"""Step power profiles, reserve instructions and economics

All power profiles are piecewise constant on a partition 0 = t_0 < ... < t_n = T
of the control horizon (minutes) and are normalized by the maximum power of the
building, i.e., values in [0, 1] for schedules. Profiles given on different
partitions are merged on the union of their breakpoints before any pointwise
arithmetic so that all integrals remain exact.

"""

# imports
# -----------------------------------------------------------------------------
import numpy as np

from . import utils

# globals
# -----------------------------------------------------------------------------
LOGGER = utils.LOGGER

# breakpoints closer than this are considered to be the same time
TIME_TOLERANCE = 1e-9

# normalized power above one by less than this is taken as full power
POWER_TOLERANCE = 1e-12

# -- errors
ERROR_INVALID_BREAKPOINTS = "The breakpoints of a profile must start at 0 and be strictly increasing: {0}"
ERROR_TOO_FEW_BREAKPOINTS = "A profile needs at least one interval, but {0} breakpoints were given"
ERROR_MISMATCHED_VALUES = "A profile with {0} intervals can not be defined with {1} values"
ERROR_NON_FINITE_VALUES = "The values of a profile must be finite"
ERROR_CONTROL_OUT_OF_RANGE = "The normalized power {0} at interval {1} is out of the range [0, 1]"
ERROR_TIME_OUT_OF_RANGE = "The time {0} is out of the horizon [0, {1}]"
ERROR_MISMATCHED_HORIZONS = "Profiles with different horizons can not be combined: {0} != {1}"
ERROR_TOO_FEW_INTERVALS = "The number of intervals of a partition must be at least 2, but {0} was given"
ERROR_POWER_OUT_OF_RANGE = "The power {0} kW is out of the range [0, C_max={1}]"
ERROR_NON_POSITIVE_CMAX = "The maximum power C_max must be positive, but {0} was given"
ERROR_INVALID_INSTRUCTION = "Instruction {0} {1} is illegal: it must satisfy u_ask >= 0 and 0 <= s < e"
ERROR_NON_CONTIGUOUS = "Instruction {0} starts at {1} but the previous one ends at {2}: instructions must be contiguous"
ERROR_INSTRUCTION_BEYOND_HORIZON = "Instruction {0} ends at {1}, beyond the horizon T={2}"
ERROR_INFEASIBLE_INSTRUCTION = "Instruction {0} asks for {1} on top of the reference power {2} at t={3}: the building can not exceed C_max"
ERROR_NON_POSITIVE_PRICE = "The electricity price P must be positive, but {0} was given"
ERROR_NON_POSITIVE_PAYMENT = "The utilization payment R must be positive, but {0} was given"
ERROR_NEGATIVE_GAMMA = "The minimum-profit floor gamma must be non-negative, but {0} was given"

# -- warnings
WARNING_NO_RESERVE = "The capacity profile integrates to {0:.4f} < 0: no total decremental reserve is offered"


# classes
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# InfeasibleInstructionError
#
# raised when an instruction asks for more power than the building can use
# -----------------------------------------------------------------------------
class InfeasibleInstructionError(ValueError):
    """raised when an instruction asks for more power than the building can use"""

    def __init__(self, message, index, time):
        super().__init__(message)
        self.index = index
        self.time = time


# functions
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# merge_breakpoints
#
# return the sorted union of all the given partitions, where times closer than
# TIME_TOLERANCE are merged into the earliest one
# -----------------------------------------------------------------------------
def merge_breakpoints(*partitions):
    """return the sorted union of all the given partitions, where times closer than
       TIME_TOLERANCE are merged into the earliest one

    """

    points = np.unique(np.concatenate([np.atleast_1d(np.asarray(ipartition, dtype=float))
                                       for ipartition in partitions]))
    keep = np.concatenate(([True], np.diff(points) > TIME_TOLERANCE))
    return points[keep]


# -----------------------------------------------------------------------------
# uniform_partition
#
# return a uniform partition of [0, horizon] into n_p intervals refined with the
# given extra breakpoints
# -----------------------------------------------------------------------------
def uniform_partition(horizon: float, n_p: int, extra=()):
    """return a uniform partition of [0, horizon] into n_p intervals refined with
       the given extra breakpoints, e.g., the start and end of reserve instructions

    """

    if n_p < 2:
        LOGGER.error(ERROR_TOO_FEW_INTERVALS.format(n_p))
        raise ValueError(ERROR_TOO_FEW_INTERVALS.format(n_p))

    extra = np.atleast_1d(np.asarray(extra, dtype=float))
    for itime in extra:
        if itime < 0 or itime > horizon + TIME_TOLERANCE:
            LOGGER.error(ERROR_TIME_OUT_OF_RANGE.format(itime, horizon))
            raise ValueError(ERROR_TIME_OUT_OF_RANGE.format(itime, horizon))

    partition = merge_breakpoints(np.linspace(0.0, horizon, n_p + 1), extra)

    # the horizon itself could have been replaced by a slightly larger time
    partition[-1] = horizon
    return partition


# -----------------------------------------------------------------------------
# StepProfile
#
# a piecewise-constant (signed) profile defined on a partition of [0, T]
# -----------------------------------------------------------------------------
class StepProfile:
    """
    A piecewise-constant profile defined on a partition of [0, T]. The value in
    the k-th interval [t_{k-1}, t_k) is the k-th value; the last value also
    holds at T
    """

    def __init__(self, breakpoints, values):
        """a profile is defined with its breakpoints t_0=0 < ... < t_n=T and n
           values"""

        breakpoints = np.array(breakpoints, dtype=float)
        values = np.array(values, dtype=float)

        if breakpoints.ndim != 1 or len(breakpoints) < 2:
            LOGGER.error(ERROR_TOO_FEW_BREAKPOINTS.format(breakpoints.size))
            raise ValueError(ERROR_TOO_FEW_BREAKPOINTS.format(breakpoints.size))
        if breakpoints[0] != 0 or np.any(np.diff(breakpoints) <= 0):
            LOGGER.error(ERROR_INVALID_BREAKPOINTS.format(breakpoints))
            raise ValueError(ERROR_INVALID_BREAKPOINTS.format(breakpoints))
        if values.ndim != 1 or len(values) != len(breakpoints) - 1:
            LOGGER.error(ERROR_MISMATCHED_VALUES.format(len(breakpoints) - 1, values.size))
            raise ValueError(ERROR_MISMATCHED_VALUES.format(len(breakpoints) - 1, values.size))
        if not np.all(np.isfinite(values)):
            LOGGER.error(ERROR_NON_FINITE_VALUES)
            raise ValueError(ERROR_NON_FINITE_VALUES)

        # profiles are immutable
        breakpoints.setflags(write=False)
        values.setflags(write=False)
        self._breakpoints = breakpoints
        self._values = values

    def __str__(self):
        '''provides a human readable representation of the contents of this intance'''

        return " ".join("[{0:g}, {1:g}): {2:.4f}".format(start, end, value)
                        for start, end, value in zip(self._breakpoints[:-1],
                                                     self._breakpoints[1:],
                                                     self._values))

    def __len__(self):
        '''returns the number of intervals of this profile'''

        return len(self._values)

    def __neg__(self):
        return StepProfile(self._breakpoints, -self._values)

    def __sub__(self, other):
        '''returns the pointwise difference of both profiles on the union of their
           breakpoints'''

        breakpoints, mine, theirs = align(self, other)
        return StepProfile(breakpoints, mine - theirs)

    def get_breakpoints(self):
        '''returns the breakpoints of this profile'''

        return self._breakpoints

    def get_values(self):
        '''returns the value of this profile in every interval'''

        return self._values

    def get_horizon(self):
        '''returns the last breakpoint'''

        return float(self._breakpoints[-1])

    def get_durations(self):
        '''returns the length of every interval'''

        return np.diff(self._breakpoints)

    def get_midpoints(self):
        '''returns the midpoint of every interval'''

        return 0.5 * (self._breakpoints[:-1] + self._breakpoints[1:])

    def value_at(self, time):
        '''returns the value of the profile at the given time(s). Profiles are right
           continuous, and the last value holds at the horizon'''

        times = np.asarray(time, dtype=float)
        horizon = self.get_horizon()
        if np.any(times < -TIME_TOLERANCE) or np.any(times > horizon + TIME_TOLERANCE):
            LOGGER.error(ERROR_TIME_OUT_OF_RANGE.format(time, horizon))
            raise ValueError(ERROR_TIME_OUT_OF_RANGE.format(time, horizon))

        index = np.searchsorted(self._breakpoints, times, side='right') - 1
        index = np.clip(index, 0, len(self._values) - 1)
        result = self._values[index]
        return float(result) if result.ndim == 0 else result

    def refine(self, breakpoints):
        '''returns the same profile defined on the union of its breakpoints and the
           given ones'''

        merged = merge_breakpoints(self._breakpoints, breakpoints)
        merged = merged[merged <= self.get_horizon() + TIME_TOLERANCE]
        merged[-1] = self.get_horizon()
        midpoints = 0.5 * (merged[:-1] + merged[1:])
        return type(self)(merged, self.value_at(midpoints))

    def integral(self):
        '''returns the exact integral of this profile over [0, T]'''

        return float(np.dot(self._values, self.get_durations()))

    def integral_of_square(self):
        '''returns the exact integral of the square of this profile over [0, T]'''

        return float(np.dot(self._values**2, self.get_durations()))


# -----------------------------------------------------------------------------
# ControlProfile
#
# a normalized power schedule: a step profile with values in [0, 1]
# -----------------------------------------------------------------------------
class ControlProfile(StepProfile):
    """
    A normalized power schedule: a step profile with values in [0, 1]
    """

    def __init__(self, breakpoints, values):

        super().__init__(breakpoints, values)

        for index, value in enumerate(self.get_values()):
            if value < 0 or value > 1:
                LOGGER.error(ERROR_CONTROL_OUT_OF_RANGE.format(value, index))
                raise ValueError(ERROR_CONTROL_OUT_OF_RANGE.format(value, index))

    @classmethod
    def constant(cls, horizon: float, value: float, n_p: int = 1):
        '''returns a constant schedule over [0, horizon] with n_p intervals'''

        return cls(np.linspace(0.0, horizon, n_p + 1), np.full(n_p, value))


# -----------------------------------------------------------------------------
# align
#
# return the union of breakpoints of both profiles along with their values on
# each interval of the union
# -----------------------------------------------------------------------------
def align(first: StepProfile, second: StepProfile):
    """return the union of breakpoints of both profiles along with their values on
       each interval of the union. Both profiles must share the same horizon

    """

    if abs(first.get_horizon() - second.get_horizon()) > TIME_TOLERANCE:
        LOGGER.error(ERROR_MISMATCHED_HORIZONS.format(first.get_horizon(),
                                                      second.get_horizon()))
        raise ValueError(ERROR_MISMATCHED_HORIZONS.format(first.get_horizon(),
                                                          second.get_horizon()))

    breakpoints = merge_breakpoints(first.get_breakpoints(), second.get_breakpoints())
    breakpoints[-1] = first.get_horizon()
    midpoints = 0.5 * (breakpoints[:-1] + breakpoints[1:])
    return breakpoints, first.value_at(midpoints), second.value_at(midpoints)


# -----------------------------------------------------------------------------
# Instruction
#
# a single reserve service instruction: increase the normalized power by u_ask
# over the reference on [s, e)
# -----------------------------------------------------------------------------
class Instruction:
    """
    A single reserve service instruction: increase the normalized power by u_ask
    over the reference on [s, e)
    """

    def __init__(self, ask: float, start: float, end: float):

        self._ask = float(ask)
        self._start = float(start)
        self._end = float(end)

    def __str__(self):
        return "({0:g}, {1:g}, {2:g})".format(self._ask, self._start, self._end)

    def __eq__(self, other):
        return isinstance(other, Instruction) and \
            (self._ask, self._start, self._end) == (other._ask, other._start, other._end)

    def get_ask(self):
        '''return the normalized increase of power requested'''

        return self._ask

    def get_start(self):
        '''return the time the instruction starts'''

        return self._start

    def get_end(self):
        '''return the time the instruction ends'''

        return self._end


# -----------------------------------------------------------------------------
# InstructionSequence
#
# a contiguous sequence of reserve service instructions
# -----------------------------------------------------------------------------
class InstructionSequence:
    """
    A contiguous sequence of reserve service instructions. Each item is either an
    Instruction or a triplet (u_ask, s, e) in normalized units and minutes
    """

    def __init__(self, items=(), horizon=None):

        self._items = [item if isinstance(item, Instruction) else Instruction(*item)
                       for item in items]

        for index, item in enumerate(self._items):

            if item.get_ask() < 0 or item.get_start() < 0 or \
               item.get_start() >= item.get_end():
                LOGGER.error(ERROR_INVALID_INSTRUCTION.format(index, item))
                raise ValueError(ERROR_INVALID_INSTRUCTION.format(index, item))

            if horizon is not None and item.get_end() > horizon + TIME_TOLERANCE:
                LOGGER.error(ERROR_INSTRUCTION_BEYOND_HORIZON.format(index, item.get_end(), horizon))
                raise ValueError(ERROR_INSTRUCTION_BEYOND_HORIZON.format(index, item.get_end(), horizon))

            # consecutive instructions must be contiguous
            if index > 0 and \
               abs(item.get_start() - self._items[index - 1].get_end()) > TIME_TOLERANCE:
                LOGGER.error(ERROR_NON_CONTIGUOUS.format(index, item.get_start(),
                                                         self._items[index - 1].get_end()))
                raise ValueError(ERROR_NON_CONTIGUOUS.format(index, item.get_start(),
                                                             self._items[index - 1].get_end()))

    @classmethod
    def from_kw(cls, items, cmax: float, horizon=None):
        '''return a sequence of instructions from triplets (C_ask, s, e) where C_ask
           is given in kW'''

        return cls([(normalize(ask, cmax), start, end) for ask, start, end in items],
                   horizon)

    def __iter__(self):
        return iter(self._items)

    def __len__(self):
        return len(self._items)

    def __getitem__(self, index):
        return self._items[index]

    def __eq__(self, other):
        return isinstance(other, InstructionSequence) and self._items == other._items

    def __str__(self):
        return "{" + ", ".join(str(item) for item in self._items) + "}"

    def get_breakpoints(self):
        '''return the start and end times of all instructions'''

        return np.array([time for item in self._items
                         for time in (item.get_start(), item.get_end())], dtype=float)

    def to_list(self):
        '''return the instructions as a list of triplets [u_ask, s, e]'''

        return [[item.get_ask(), item.get_start(), item.get_end()] for item in self._items]


# -----------------------------------------------------------------------------
# EconomicsParams
#
# night-time price of electricity, utilization payment and minimum-profit floor
# -----------------------------------------------------------------------------
class EconomicsParams:
    """
    Night-time price of electricity P (p/kWh), utilization payment R (p/kWh) and
    the normalized minimum-profit floor gamma
    """

    def __init__(self, price: float, payment: float, gamma: float = 0.0):

        if price <= 0:
            LOGGER.error(ERROR_NON_POSITIVE_PRICE.format(price))
            raise ValueError(ERROR_NON_POSITIVE_PRICE.format(price))
        if payment <= 0:
            LOGGER.error(ERROR_NON_POSITIVE_PAYMENT.format(payment))
            raise ValueError(ERROR_NON_POSITIVE_PAYMENT.format(payment))
        if gamma < 0:
            LOGGER.error(ERROR_NEGATIVE_GAMMA.format(gamma))
            raise ValueError(ERROR_NEGATIVE_GAMMA.format(gamma))

        self._price = float(price)
        self._payment = float(payment)
        self._gamma = float(gamma)

    @classmethod
    def from_ratio(cls, price: float, ratio: float, gamma: float = 0.0):
        '''return the economics given the benefit-cost ratio R/P instead of R'''

        return cls(price, ratio * price, gamma)

    def __str__(self):
        return "P={0:g} p/kWh, R={1:g} p/kWh (R/P={2:g}), gamma={3:g}".format(
            self._price, self._payment, self.get_ratio(), self._gamma)

    def __eq__(self, other):
        return isinstance(other, EconomicsParams) and \
            (self._price, self._payment, self._gamma) == \
            (other._price, other._payment, other._gamma)

    def get_price(self):
        '''return the night-time price of electricity P'''

        return self._price

    def get_payment(self):
        '''return the utilization payment R'''

        return self._payment

    def get_gamma(self):
        '''return the normalized minimum-profit floor'''

        return self._gamma

    def get_ratio(self):
        '''return the benefit-cost ratio R/P'''

        return self._payment / self._price


# functions
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# normalize
#
# return the fraction of maximum power that C kW represents
# -----------------------------------------------------------------------------
def normalize(power: float, cmax: float):
    """return the fraction of maximum power that the given power (kW) represents"""

    if cmax <= 0:
        LOGGER.error(ERROR_NON_POSITIVE_CMAX.format(cmax))
        raise ValueError(ERROR_NON_POSITIVE_CMAX.format(cmax))
    if power < 0 or power > cmax:
        LOGGER.error(ERROR_POWER_OUT_OF_RANGE.format(power, cmax))
        raise ValueError(ERROR_POWER_OUT_OF_RANGE.format(power, cmax))

    return power / cmax


# -----------------------------------------------------------------------------
# capacity_profile
#
# return the instantaneous reserve capacity u_alt - u_ref. It might be negative
# -----------------------------------------------------------------------------
def capacity_profile(u_alt: StepProfile, u_ref: StepProfile):
    """return the instantaneous reserve capacity u_alt - u_ref on the union of the
       breakpoints of both profiles. It might be negative (payback), and a
       warning is issued when its integral is negative

    """

    capacity = u_alt - u_ref
    if capacity.integral() < 0:
        LOGGER.warning(WARNING_NO_RESERVE.format(capacity.integral()))

    return capacity


# -----------------------------------------------------------------------------
# total_cost
#
# return the cost in pence of following the given schedule
# -----------------------------------------------------------------------------
def total_cost(u: StepProfile, econ: EconomicsParams, params):
    """return the cost in pence of following the given schedule, where params
       provides the maximum power of the building"""

    return econ.get_price() * params.get_cmax() / 60.0 * u.integral()


# -----------------------------------------------------------------------------
# total_net_cost
#
# return the cost in pence of following u_alt minus the utilization payment for
# its excess over u_ref
# -----------------------------------------------------------------------------
def total_net_cost(u_alt: StepProfile, u_ref: StepProfile, econ: EconomicsParams, params):
    """return the cost in pence of following u_alt minus the utilization payment
       received for its excess over u_ref

    """

    breakpoints, alt, ref = align(u_alt, u_ref)
    integrand = econ.get_price() * alt - econ.get_payment() * np.maximum(0.0, alt - ref)
    return params.get_cmax() / 60.0 * float(np.dot(integrand, np.diff(breakpoints)))


# -----------------------------------------------------------------------------
# normalized_net_profit
#
# return the normalized net profit of u_alt relative to u_ref
# -----------------------------------------------------------------------------
def normalized_net_profit(u_alt: StepProfile, u_ref: StepProfile, ratio: float):
    """return the normalized net profit of u_alt relative to u_ref for the given
       benefit-cost ratio R/P. Multiplying it by C_max P / 60 gives pence

    """

    breakpoints, alt, ref = align(u_alt, u_ref)
    integrand = ref - alt + ratio * np.maximum(0.0, alt - ref)
    return float(np.dot(integrand, np.diff(breakpoints)))


# -----------------------------------------------------------------------------
# instructed_min_profile
#
# return the profile of minimal instructed power usage
# -----------------------------------------------------------------------------
def instructed_min_profile(u_ref: StepProfile, instructions: InstructionSequence):
    """return the profile of minimal instructed power usage: u_ref + u_ask within
       every instruction and zero elsewhere. An InfeasibleInstructionError is
       raised if that exceeds full power anywhere

    """

    horizon = u_ref.get_horizon()
    for index, item in enumerate(instructions):
        if item.get_end() > horizon + TIME_TOLERANCE:
            LOGGER.error(ERROR_INSTRUCTION_BEYOND_HORIZON.format(index, item.get_end(), horizon))
            raise ValueError(ERROR_INSTRUCTION_BEYOND_HORIZON.format(index, item.get_end(), horizon))

    breakpoints = merge_breakpoints(u_ref.get_breakpoints(), instructions.get_breakpoints())
    breakpoints[-1] = horizon
    midpoints = 0.5 * (breakpoints[:-1] + breakpoints[1:])
    reference = u_ref.value_at(midpoints)

    values = np.zeros(len(midpoints))
    for index, item in enumerate(instructions):
        window = (midpoints >= item.get_start()) & (midpoints < item.get_end())
        values[window] = reference[window] + item.get_ask()

        # the building can not use more than its maximum power
        excess = np.flatnonzero(window & (values > 1 + POWER_TOLERANCE))
        if excess.size:
            where = excess[0]
            msg = ERROR_INFEASIBLE_INSTRUCTION.format(index, item.get_ask(),
                                                      reference[where],
                                                      breakpoints[where])
            LOGGER.error(msg)
            raise InfeasibleInstructionError(msg, index, float(breakpoints[where]))

    return ControlProfile(breakpoints, np.minimum(values, 1.0))


# -----------------------------------------------------------------------------
# count_switches
#
# return the number of times the profile crosses the given level
# -----------------------------------------------------------------------------
def count_switches(profile: StepProfile, threshold: float = 0.5):
    """return the number of times the profile crosses the given level between
       consecutive intervals

    """

    above = profile.get_values() >= threshold
    return int(np.count_nonzero(above[1:] != above[:-1]))


# -----------------------------------------------------------------------------
# full_power_onset
#
# return the first breakpoint after which the profile stays at or above the
# given level through the horizon
# -----------------------------------------------------------------------------
def full_power_onset(profile: StepProfile, level: float = 0.99):
    """return the first breakpoint after which the profile stays at or above the
       given level through the horizon, or None if the last interval is below
       that level

    """

    below = np.flatnonzero(profile.get_values() < level)
    if not below.size:
        return 0.0
    if below[-1] == len(profile) - 1:
        return None
    return float(profile.get_breakpoints()[below[-1] + 1])


# -----------------------------------------------------------------------------
# longest_window_below
#
# return the longest contiguous duration after the given time where the profile
# is at or below the given level
# -----------------------------------------------------------------------------
def longest_window_below(profile: StepProfile, level: float = 0.02, after: float = 0.0):
    """return the longest contiguous duration after the given time where the
       profile is at or below the given level

    """

    refined = profile.refine([after])
    longest = current = 0.0
    for start, duration, value in zip(refined.get_breakpoints()[:-1],
                                      refined.get_durations(),
                                      refined.get_values()):
        if start < after - TIME_TOLERANCE:
            continue
        current = current + duration if value <= level else 0.0
        longest = max(longest, current)

    return longest


# Local Variables:
# mode:python
# fill-column:80
# End:
