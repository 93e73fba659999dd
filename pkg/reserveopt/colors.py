#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# colors.py
# Description: terminal color support for log records and run summaries
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

"""
terminal color support for log records and run summaries
"""

# imports
# -----------------------------------------------------------------------------
import os
import re
import sys

# constants
# -----------------------------------------------------------------------------
PREFIX = "\033["
TRUECOLOR_FOREGROUND = "38;2;"
BOLD = "1"
ITALIC = "3"
SUFFIX = "\033[0m"

# the eight basic foreground colors used when true color is not available. Each
# entry is the (r, g, b) anchor of the color and its ansi code
BASIC_PALETTE = ((0, 0, 0, "30"), (205, 0, 0, "31"), (0, 205, 0, "32"),
                 (205, 205, 0, "33"), (0, 0, 238, "34"), (205, 0, 205, "35"),
                 (0, 205, 205, "36"), (229, 229, 229, "37"))

REGEXP_MASK = r'#(?P<red>[a-fA-F0-9]{2})(?P<green>[a-fA-F0-9]{2})(?P<blue>[a-fA-F0-9]{2})$'


# functions
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# colors_enabled
#
# return true if the standard error is a terminal. Colors are also disabled
# when NO_COLOR is defined in the environment
# -----------------------------------------------------------------------------
def colors_enabled(stream=None):
    """return true if the given stream (by default the standard error) is a
       terminal and NO_COLOR is not defined in the environment

    """

    stream = stream if stream is not None else sys.stderr
    if os.getenv("NO_COLOR") is not None:
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def truecolor_enabled():
    """return true if the terminal announces true color support"""

    return os.getenv("COLORTERM") in ("truecolor", "24bit")


# -----------------------------------------------------------------------------
# parse_mask
#
# return the red, green and blue components of a color mask "#rrggbb" or None
# if the mask is not legal
# -----------------------------------------------------------------------------
def parse_mask(mask: str):
    """return the red, green and blue components of a color mask "#rrggbb" or
       None if the mask is not legal

    """

    match = re.match(REGEXP_MASK, mask or "")
    if not match:
        return None

    return (int(match.group('red'), 16),
            int(match.group('green'), 16),
            int(match.group('blue'), 16))


def _closest_basic(components):
    """return the ansi code of the basic color closest to the given components"""

    red, green, blue = components
    return min(BASIC_PALETTE,
               key=lambda c: (c[0]-red)**2 + (c[1]-green)**2 + (c[2]-blue)**2)[3]


# -----------------------------------------------------------------------------
# insert_prefix
#
# return the control codes that start the given foreground color with the
# requested effects. If colors are disabled the empty string is returned
# -----------------------------------------------------------------------------
def insert_prefix(foreground=None, bold=False, italic=False, enabled=None):
    """return the control codes that start the given foreground color with the
       requested effects. If colors are disabled the empty string is returned

    """

    enabled = colors_enabled() if enabled is None else enabled
    if not enabled:
        return ""

    codes = []
    components = parse_mask(foreground) if foreground else None
    if components:
        if truecolor_enabled():
            codes.append(TRUECOLOR_FOREGROUND + ';'.join(str(c) for c in components))
        else:
            codes.append(_closest_basic(components))
    if bold:
        codes.append(BOLD)
    if italic:
        codes.append(ITALIC)

    return PREFIX + ';'.join(codes) + 'm' if codes else ""


def insert_suffix(enabled=None):
    """return the reset code, or the empty string if colors are disabled"""

    enabled = colors_enabled() if enabled is None else enabled
    return SUFFIX if enabled else ""


# -----------------------------------------------------------------------------
# colorize
#
# return the given text surrounded by the control codes of the given color
# -----------------------------------------------------------------------------
def colorize(text: str, foreground=None, bold=False, italic=False, stream=None):
    """return the given text surrounded by the control codes of the given color
       when the stream (by default the standard output) is a terminal

    """

    enabled = colors_enabled(stream if stream is not None else sys.stdout)
    prefix = insert_prefix(foreground, bold, italic, enabled=enabled)
    if not prefix:
        return text
    return prefix + text + insert_suffix(enabled=enabled)


# Local Variables:
# mode:python
# fill-column:80
# End:
