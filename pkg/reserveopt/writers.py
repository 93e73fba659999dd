#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# writers.py
# Description: writes trajectories, controls and summaries to csv files
# -----------------------------------------------------------------------------
#
# Started on  <Tue Sep 22 12:20:51 2026 >
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

"""
writes trajectories, controls and summaries to csv files. Every file has a
header row, uses LF line endings and UTF-8, and absent values are written as
empty fields
"""

# imports
# -----------------------------------------------------------------------------
import pyexcel                  # writing tabular data to csv files

from . import profiles
from . import utils

# globals
# -----------------------------------------------------------------------------
LOGGER = utils.LOGGER

# headers of every file
TRAJECTORY_COLUMNS = ["t_min", "x_degC"]
CONTROL_COLUMNS = ["t_min", "u", "u_ref", "u_ins", "u_cap"]
SUMMARY_COLUMNS = ["kind", "ratio", "objective", "nnp", "feasible",
                   "t2_analytic", "t2_empirical", "alpha", "switches", "recovery_min"]

# -- errors
ERROR_MISSING_COLUMN = "The summary record {0} has no value for the column '{1}'"

# -- info
INFO_WRITTEN = "'{0}' written with {1} rows"


# functions
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# _cell
#
# return the contents of a cell
# -----------------------------------------------------------------------------
def _cell(value):
    '''return the contents of a cell: numbers are written as python floats, booleans
       as lowercase words and None as an empty field'''

    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return value
    return float(value)


# -----------------------------------------------------------------------------
# save
#
# write the given header and rows to a csv file
# -----------------------------------------------------------------------------
def save(path: str, header, rows):
    """write the given header and rows to the csv file path"""

    array = [list(header)] + [[_cell(value) for value in row] for row in rows]
    pyexcel.save_as(array=array,
                    dest_file_name=utils.get_full_path(path),
                    dest_lineterminator="\n",
                    dest_encoding="utf-8")
    LOGGER.debug(INFO_WRITTEN.format(path, len(rows)))


# -----------------------------------------------------------------------------
# trajectory_rows
#
# return the rows of a trajectory of temperatures
# -----------------------------------------------------------------------------
def trajectory_rows(trajectory):
    """return the rows (t, x) of a trajectory of temperatures"""

    return [[time, temperature] for time, temperature in trajectory]


def write_trajectory(path: str, trajectory):
    '''write the given trajectory to the csv file path'''

    save(path, TRAJECTORY_COLUMNS, trajectory_rows(trajectory))


# -----------------------------------------------------------------------------
# control_rows
#
# return the rows of a control along with its reference, instructed and
# capacity profiles
# -----------------------------------------------------------------------------
def control_rows(u, u_ref=None, u_ins=None):
    """return one row per breakpoint of the union of the partitions of all the
       given profiles, including the horizon. Every row contains the time, the
       control, the reference, the minimal instructed power and the capacity
       (u - u_ref) on the interval starting at that time, or the last interval at
       the horizon. Absent profiles are given as None

    """

    present = [profile for profile in (u, u_ref, u_ins) if profile is not None]
    breakpoints = profiles.merge_breakpoints(*[profile.get_breakpoints() for profile in present])

    # the last breakpoint is always the horizon
    breakpoints[-1] = u.get_horizon()

    def series(profile):
        return [None] * len(breakpoints) if profile is None else profile.value_at(breakpoints)

    capacity = profiles.capacity_profile(u, u_ref) if u_ref is not None else None
    return [list(row) for row in zip(breakpoints, series(u), series(u_ref),
                                     series(u_ins), series(capacity))]


def write_control(path: str, u, u_ref=None, u_ins=None):
    '''write the given control and its companion profiles to the csv file path'''

    save(path, CONTROL_COLUMNS, control_rows(u, u_ref, u_ins))


# -----------------------------------------------------------------------------
# write_summary
#
# write one row per record with the summary of a solve
# -----------------------------------------------------------------------------
def write_summary(path: str, records):
    """write one row per record to the csv file path. Every record is a
       dictionary with a value (possibly None) for every summary column

    """

    rows = []
    for record in records:
        for column in SUMMARY_COLUMNS:
            if column not in record:
                LOGGER.error(ERROR_MISSING_COLUMN.format(record, column))
                raise ValueError(ERROR_MISSING_COLUMN.format(record, column))
        rows.append([record[column] for column in SUMMARY_COLUMNS])

    save(path, SUMMARY_COLUMNS, rows)


# Local Variables:
# mode:python
# fill-column:80
# End:
