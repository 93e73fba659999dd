#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# confparser.py
# Description: Processing of configuration files
# -----------------------------------------------------------------------------
#
# Started on  <Mon Sep 21 17:55:02 2026 >
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

"""
Processing of configuration files

A configuration is a JSON document with the sections thermal, comfort,
economics, regularizers, loss, solver, instructions and sweep. Values are
resolved with the following precedence (lowest first): built-in defaults,
configuration file, overrides given as key=value and dedicated flags
"""

# imports
# -----------------------------------------------------------------------------
import copy
import json
import os

from . import constraints
from . import overrideparser
from . import problems
from . import profiles
from . import solver
from . import thermal
from . import utils

# globals
# -----------------------------------------------------------------------------
LOGGER = utils.LOGGER

# location of the bundled scenario
DEFAULT_CONF = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data", "night.json")

# units of the instructions
NORMALIZED = "normalized"
KW = "kW"

# keys of every section of a configuration. Keys with None as default are
# mandatory unless stated otherwise
SCHEMA = {
    "thermal": {"tau": None, "X_off": None, "X_on": None, "C_max": None},
    "comfort": {"T": None, "X_min": None, "X_max": None, "X_hat": None, "x0": None},
    "economics": {"P": None, "R": None, "R_over_P": None, "gamma": 0.0},
    "regularizers": {"alpha_ref": 0.01, "alpha_alt": 0.01, "alpha_del": 0.01},
    "loss": {"theta": 50.0, "lambda_state": None, "lambda_delivery": None,
             "epsilon_state": 1e-4, "epsilon_delivery": 1e-4},
    "solver": dict(solver.SolverConfig.DEFAULTS),
    "instructions": {"units": NORMALIZED, "items": []},
    "sweep": {"ratios": [0.75, 1.0, 1.25], "alphas": None}
}

# keys whose absence is resolved when building the configuration
OPTIONAL = {("economics", "R"), ("economics", "R_over_P"),
            ("loss", "lambda_state"), ("loss", "lambda_delivery"),
            ("sweep", "alphas")}

# -- errors
ERROR_CONF_FILE_NOT_FOUND = "Either the configuration file '{0}' does not exist or it is not accessible"
ERROR_INVALID_JSON = "The configuration file '{0}' is not valid JSON: {1}"
ERROR_NOT_A_DOCUMENT = "The configuration must be a JSON object with sections, but {0} was found"
ERROR_UNKNOWN_SECTION = "Unknown section '{0}' in the configuration"
ERROR_NOT_A_SECTION = "The section '{0}' must be a JSON object"
ERROR_UNKNOWN_KEY = "Unknown key '{0}' in the section '{1}'"
ERROR_MISSING_KEY = "The key '{0}' of the section '{1}' is mandatory"
ERROR_NOT_A_NUMBER = "The key '{0}' of the section '{1}' must be a number, but {2} was given"
ERROR_NOT_AN_INTEGER = "The key '{0}' of the section '{1}' must be an integer, but {2} was given"
ERROR_PAYMENT = "The section 'economics' must give exactly one of 'R' or 'R_over_P'"
ERROR_UNKNOWN_OVERRIDE = "Unknown key '{0}' in the override '{1}'"
ERROR_AMBIGUOUS_OVERRIDE = "The key '{0}' of the override '{1}' is ambiguous: use one of {2}"
ERROR_UNITS = "The units of the instructions must be either '{0}' or '{1}', but '{2}' was given"
ERROR_INSTRUCTION_ITEM = "Every instruction must be given as [u_ask, s, e], but {0} was given"
ERROR_EMPTY_SWEEP = "The list of {0} of a sweep can not be empty"
ERROR_NON_POSITIVE_SWEEP = "The {0} of a sweep must be positive, but {1} was given"

# -- info
INFO_CONFIGURATION = "Configuration read from '{0}'"
INFO_OVERRIDE = "Override {0}={1}"


# classes
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# SweepSpec
#
# benefit-cost ratios and optional regularizer weights of a sweep
# -----------------------------------------------------------------------------
class SweepSpec:
    """
    Benefit-cost ratios R/P and optional regularizer weights alpha_alt of a
    sweep
    """

    def __init__(self, ratios, alphas=None):

        for name, values in (("ratios", ratios), ("alphas", alphas)):
            if values is None and name == "alphas":
                continue
            if not values:
                LOGGER.error(ERROR_EMPTY_SWEEP.format(name))
                raise ValueError(ERROR_EMPTY_SWEEP.format(name))
            for value in values:
                if value <= 0:
                    LOGGER.error(ERROR_NON_POSITIVE_SWEEP.format(name, value))
                    raise ValueError(ERROR_NON_POSITIVE_SWEEP.format(name, value))

        self._ratios = [float(ratio) for ratio in ratios]
        self._alphas = [float(alpha) for alpha in alphas] if alphas is not None else None

    def __str__(self):
        return "ratios={0}, alphas={1}".format(self._ratios, self._alphas)

    def __eq__(self, other):
        return isinstance(other, SweepSpec) and \
            (self._ratios, self._alphas) == (other._ratios, other._alphas)

    def get_ratios(self):
        return list(self._ratios)

    def get_alphas(self):
        return list(self._alphas) if self._alphas is not None else None


# -----------------------------------------------------------------------------
# Configuration
#
# a resolved configuration: scenario, solver settings, instructions and sweep
# -----------------------------------------------------------------------------
class Configuration:
    """
    A resolved configuration: scenario, solver settings, instructions (in
    normalized units) and sweep
    """

    def __init__(self, scenario: problems.Scenario, settings: solver.SolverConfig,
                 instructions: profiles.InstructionSequence, sweep: SweepSpec):

        self._scenario = scenario
        self._settings = settings
        self._instructions = instructions
        self._sweep = sweep

    def __str__(self):
        '''provides a human readable representation of the contents of this intance'''

        return "\n".join(["Scenario:", str(self._scenario),
                          "Solver      : {0}".format(self._settings),
                          "Instructions: {0}".format(self._instructions),
                          "Sweep       : {0}".format(self._sweep)])

    def __eq__(self, other):
        return isinstance(other, Configuration) and \
            self._scenario == other._scenario and self._settings == other._settings and \
            self._instructions == other._instructions and self._sweep == other._sweep

    def get_scenario(self):
        return self._scenario

    def get_solver(self):
        return self._settings

    def get_instructions(self):
        return self._instructions

    def get_sweep(self):
        return self._sweep

    def to_config(self):
        '''return the configuration document that resolves to this configuration'''

        document = self._scenario.to_config()
        document["solver"] = self._settings.to_config()
        document["instructions"] = {"units": NORMALIZED,
                                    "items": self._instructions.to_list()}
        document["sweep"] = {"ratios": self._sweep.get_ratios(),
                             "alphas": self._sweep.get_alphas()}
        return document


# functions
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# read_document
#
# return the contents of the given configuration file
# -----------------------------------------------------------------------------
def read_document(path: str):
    """return the contents of the given configuration file as a dictionary"""

    path = utils.get_full_path(path)
    if not os.path.isfile(path):
        LOGGER.error(ERROR_CONF_FILE_NOT_FOUND.format(path))
        raise FileNotFoundError(ERROR_CONF_FILE_NOT_FOUND.format(path))

    with open(path, encoding="utf-8") as stream:
        try:
            document = json.load(stream)
        except json.JSONDecodeError as error:
            LOGGER.error(ERROR_INVALID_JSON.format(path, error))
            raise ValueError(ERROR_INVALID_JSON.format(path, error)) from error

    LOGGER.debug(INFO_CONFIGURATION.format(path))
    return document


# -----------------------------------------------------------------------------
# check_document
#
# verify that all sections and keys of the document are known
# -----------------------------------------------------------------------------
def check_document(document):
    """verify that all sections and keys of the document are known"""

    if not isinstance(document, dict):
        LOGGER.error(ERROR_NOT_A_DOCUMENT.format(type(document).__name__))
        raise ValueError(ERROR_NOT_A_DOCUMENT.format(type(document).__name__))

    for section, contents in document.items():
        if section not in SCHEMA:
            LOGGER.error(ERROR_UNKNOWN_SECTION.format(section))
            raise ValueError(ERROR_UNKNOWN_SECTION.format(section))
        if not isinstance(contents, dict):
            LOGGER.error(ERROR_NOT_A_SECTION.format(section))
            raise ValueError(ERROR_NOT_A_SECTION.format(section))
        for key in contents:
            if key not in SCHEMA[section]:
                LOGGER.error(ERROR_UNKNOWN_KEY.format(key, section))
                raise ValueError(ERROR_UNKNOWN_KEY.format(key, section))


# -----------------------------------------------------------------------------
# resolve_key
#
# return the section and key of a key given either bare or dotted
# -----------------------------------------------------------------------------
def resolve_key(key: str, text: str = ""):
    """return the tuple (section, key) of a key given either bare or dotted. Bare
       keys must be unique across sections

    """

    if '.' in key:
        section, name = key.split('.', 1)
        if section not in SCHEMA or name not in SCHEMA[section]:
            LOGGER.error(ERROR_UNKNOWN_OVERRIDE.format(key, text))
            raise ValueError(ERROR_UNKNOWN_OVERRIDE.format(key, text))
        return section, name

    candidates = [section for section in SCHEMA if key in SCHEMA[section]]
    if not candidates:
        LOGGER.error(ERROR_UNKNOWN_OVERRIDE.format(key, text))
        raise ValueError(ERROR_UNKNOWN_OVERRIDE.format(key, text))
    if len(candidates) > 1:
        options = ["{0}.{1}".format(section, key) for section in candidates]
        LOGGER.error(ERROR_AMBIGUOUS_OVERRIDE.format(key, text, options))
        raise ValueError(ERROR_AMBIGUOUS_OVERRIDE.format(key, text, options))

    return candidates[0], key


# -----------------------------------------------------------------------------
# apply_overrides
#
# return a copy of the document with the given overrides
# -----------------------------------------------------------------------------
def apply_overrides(document, overrides=()):
    """return a copy of the document where every override 'key=value' has been
       applied in order. Giving either R or R_over_P removes the other one

    """

    document = copy.deepcopy(document)
    parser = overrideparser.VerbatimOverrideParser() if overrides else None
    for text in overrides:
        key, value = parser.run(text)
        section, name = resolve_key(key, text)
        set_value(document, section, name, value)
        LOGGER.debug(INFO_OVERRIDE.format("{0}.{1}".format(section, name), value))

    return document


def set_value(document, section: str, name: str, value):
    '''set the value of the given key in the document. Giving either R or
       R_over_P removes the other one'''

    contents = document.setdefault(section, {})
    if section == "economics" and name in ("R", "R_over_P"):
        contents.pop("R" if name == "R_over_P" else "R_over_P", None)
    contents[name] = value


# -----------------------------------------------------------------------------
# _get
#
# return the value of a key in the document or its default
# -----------------------------------------------------------------------------
def _get(document, section: str, key: str, kind=float):
    """return the value of a key in the document or its default, verifying its
       type. Missing mandatory keys raise ValueError

    """

    value = document.get(section, {}).get(key, SCHEMA[section][key])
    if value is None:
        if (section, key) in OPTIONAL:
            return None
        LOGGER.error(ERROR_MISSING_KEY.format(key, section))
        raise ValueError(ERROR_MISSING_KEY.format(key, section))

    if kind is int:
        if isinstance(value, bool) or not isinstance(value, int):
            LOGGER.error(ERROR_NOT_AN_INTEGER.format(key, section, value))
            raise ValueError(ERROR_NOT_AN_INTEGER.format(key, section, value))
        return value

    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            LOGGER.error(ERROR_NOT_A_NUMBER.format(key, section, value))
            raise ValueError(ERROR_NOT_A_NUMBER.format(key, section, value))
        return float(value)

    return value


# -----------------------------------------------------------------------------
# build_scenario
#
# return the scenario described in the document
# -----------------------------------------------------------------------------
def build_scenario(document):
    """return the scenario described in the document"""

    params = thermal.ThermalParams(_get(document, "thermal", "tau"),
                                   _get(document, "thermal", "X_off"),
                                   _get(document, "thermal", "X_on"),
                                   _get(document, "thermal", "C_max"))

    price = _get(document, "economics", "P")
    payment = _get(document, "economics", "R")
    ratio = _get(document, "economics", "R_over_P")
    if (payment is None) == (ratio is None):
        LOGGER.error(ERROR_PAYMENT)
        raise ValueError(ERROR_PAYMENT)
    gamma = _get(document, "economics", "gamma")
    econ = profiles.EconomicsParams(price, payment, gamma) if payment is not None else \
        profiles.EconomicsParams.from_ratio(price, ratio, gamma)

    # the terminal weights default to the horizon
    horizon = _get(document, "comfort", "T")
    lambda_state = _get(document, "loss", "lambda_state")
    lambda_delivery = _get(document, "loss", "lambda_delivery")
    loss = constraints.LossConfig(_get(document, "loss", "theta"),
                                  horizon if lambda_state is None else lambda_state,
                                  horizon if lambda_delivery is None else lambda_delivery,
                                  _get(document, "loss", "epsilon_state"),
                                  _get(document, "loss", "epsilon_delivery"))

    return problems.Scenario(horizon, params,
                             _get(document, "comfort", "X_min"),
                             _get(document, "comfort", "X_max"),
                             _get(document, "comfort", "X_hat"),
                             _get(document, "comfort", "x0"),
                             econ,
                             _get(document, "regularizers", "alpha_ref"),
                             _get(document, "regularizers", "alpha_alt"),
                             _get(document, "regularizers", "alpha_del"),
                             loss)


# -----------------------------------------------------------------------------
# build_solver
#
# return the solver settings described in the document
# -----------------------------------------------------------------------------
def build_solver(document):
    """return the solver settings described in the document"""

    settings = {}
    for key, default in solver.SolverConfig.DEFAULTS.items():
        settings[key] = _get(document, "solver", key, type(default))
    return solver.SolverConfig(**settings)


# -----------------------------------------------------------------------------
# build_instructions
#
# return the instructions described in the document in normalized units
# -----------------------------------------------------------------------------
def build_instructions(document, scenario: problems.Scenario):
    """return the instructions described in the document in normalized units"""

    units = _get(document, "instructions", "units", str)
    if units not in (NORMALIZED, KW):
        LOGGER.error(ERROR_UNITS.format(NORMALIZED, KW, units))
        raise ValueError(ERROR_UNITS.format(NORMALIZED, KW, units))

    items = _get(document, "instructions", "items", list)
    for item in items:
        if not isinstance(item, (list, tuple)) or len(item) != 3 or \
           any(isinstance(value, bool) or not isinstance(value, (int, float)) for value in item):
            LOGGER.error(ERROR_INSTRUCTION_ITEM.format(item))
            raise ValueError(ERROR_INSTRUCTION_ITEM.format(item))

    if units == KW:
        return profiles.InstructionSequence.from_kw(items, scenario.get_thermal().get_cmax(),
                                                    scenario.get_horizon())
    return profiles.InstructionSequence(items, scenario.get_horizon())


# -----------------------------------------------------------------------------
# build_configuration
#
# return the configuration described in the document
# -----------------------------------------------------------------------------
def build_configuration(document):
    """return the configuration described in the document"""

    check_document(document)
    scenario = build_scenario(document)
    sweep = SweepSpec(_get(document, "sweep", "ratios", list),
                      _get(document, "sweep", "alphas", list))
    return Configuration(scenario, build_solver(document),
                         build_instructions(document, scenario), sweep)


# -----------------------------------------------------------------------------
# load_configuration
#
# return the configuration resolved from a file, overrides and flags
# -----------------------------------------------------------------------------
def load_configuration(path: str, overrides=(), flags=None):
    """return the configuration resolved from the given file, the overrides
       'key=value' and the flags, which is a dictionary of solver settings given
       with dedicated options (e.g., n_p or rng_seed)

    """

    document = read_document(path)
    check_document(document)
    document = apply_overrides(document, overrides)
    for key, value in (flags or {}).items():
        if value is not None:
            set_value(document, "solver", key, value)

    return build_configuration(document)


def load_scenario(path: str, overrides=()):
    """return the scenario described in the given file after applying the
       overrides"""

    return load_configuration(path, overrides).get_scenario()


# -----------------------------------------------------------------------------
# write_configuration
#
# write the configuration document of the given configuration
# -----------------------------------------------------------------------------
def write_configuration(configuration: Configuration, path: str):
    """write the configuration document of the given configuration to a file"""

    with open(utils.get_full_path(path), "w", encoding="utf-8", newline="\n") as stream:
        json.dump(configuration.to_config(), stream, indent=4)
        stream.write("\n")


# Local Variables:
# mode:python
# fill-column:80
# End:
