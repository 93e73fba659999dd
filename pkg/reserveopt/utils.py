#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# utils.py
# Description: Helper functions
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

"""
Helper functions
"""

# imports
# -----------------------------------------------------------------------------
import logging
import os

from . import colors

# constants
# -----------------------------------------------------------------------------

# logging

LOG_FORMAT = '[%(color_lvlname_prefix)s %(levelname)-8s:%(color_suffix)s %(color_ascitime_prefix)s %(asctime)s | %(color_suffix)s %(color_name_prefix)s %(name)s%(color_suffix)s]: %(color_prefix)s %(message)s %(color_suffix)s'
LOG_COLORS = {
    "ASCITIME" : dict(foreground="#008080"),
    "NAME" : dict(foreground="#00a0a0", italic=True),
    "DEBUG" : dict(foreground="#99ccff"),
    "INFO" : dict(foreground="#a0a020"),
    "WARNING" : dict(foreground="#20aa20", bold=True),
    "ERROR" : dict(foreground="#ff2020", bold=True),
    "CRITICAL" : dict(foreground="#ff0000", bold=True)
}

# functions
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# get_full_path
#
# return the absolute path of the path given in its argument which is expected
# to be a relative path which might use ~
# -----------------------------------------------------------------------------
def get_full_path(pathname: str):
    """return the absolute path of the path given in its argument which is
       expected to be a relative path which might use ~

    """

    # remove unnecessary blanks and expand the home directory if any is used
    pathname = os.path.expanduser(pathname.strip())

    # 'abspath' is used also with absolute paths to ensure the same convention
    # is used regarding the trailing separator
    return os.path.abspath(pathname)


# -----------------------------------------------------------------------------
# setup_logger
#
# setup and configure the package logger
# -----------------------------------------------------------------------------
def setup_logger(verbose = False):
    """setup and configure the package logger"""

    logger = logging.getLogger('reserveopt')

    # the logger is created only once even if this function is invoked again to
    # change its level
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.addFilter(LoggerContextFilter(handler.stream))
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)

    logger.setLevel(logging.DEBUG if verbose else logging.INFO)

    # and return the logger
    return logger


# -----------------------------------------------------------------------------
# LoggerContextFilter
#
# Creation of a context filter for the logger that adds color support
# -----------------------------------------------------------------------------
class LoggerContextFilter(logging.Filter):
    """
    Creation of a context filter for the logger that adds color support
    """

    def __init__(self, stream=None):
        """colors are only injected if the given stream is a terminal"""

        super().__init__()
        self._enabled = colors.colors_enabled(stream)

    def _prefix(self, key):
        return colors.insert_prefix(enabled=self._enabled, **LOG_COLORS[key])

    def filter(self, record):

        # first inject the colors for all fields in the header
        record.color_lvlname_prefix = self._prefix(record.levelname)
        record.color_ascitime_prefix = self._prefix('ASCITIME')
        record.color_name_prefix = self._prefix('NAME')

        # choose the color as a function of the level of the log message
        record.color_prefix = self._prefix(record.levelname)
        record.color_suffix = colors.insert_suffix(enabled=self._enabled)

        return True

# globals
# -----------------------------------------------------------------------------

# default logger
LOGGER = setup_logger()


# Local Variables:
# mode:python
# fill-column:80
# End:
