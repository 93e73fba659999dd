#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# cliparser.py
# Description: provides an argument parser for reading the argument command line
# of reserve-opt
# -----------------------------------------------------------------------------
#
# Started on  <Wed Sep 23 09:14:27 2026 >
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

"""
provides an argument parser for reading the argument command line of reserve-opt
"""

# imports
# -----------------------------------------------------------------------------
import argparse                 # argument parsing
import sys                      # system accessing

from . import confparser
from . import version
from . import utils

# globals
# -----------------------------------------------------------------------------
LOGGER = utils.LOGGER

# subcommands
SOLVE_REFERENCE = "solve-reference"
SOLVE_CAPACITY = "solve-capacity"
SOLVE_DELIVERY = "solve-delivery"
SWEEP = "sweep"
SUBCOMMANDS = (SOLVE_REFERENCE, SOLVE_CAPACITY, SOLVE_DELIVERY, SWEEP)

# -- info
INFO_CONF_GENERATED = "Configuration file '{0}' generated ..."


# -----------------------------------------------------------------------------
# _resolve
#
# return the configuration given in the command line so far
# -----------------------------------------------------------------------------
def _resolve(parser, namespace):
    """return the configuration resolved from the options parsed so far. Errors
       are reported through the parser"""

    try:
        return confparser.load_configuration(namespace.config,
                                             namespace.overrides or (),
                                             {"n_p": namespace.n_p,
                                              "rng_seed": namespace.seed})
    except (ValueError, OSError) as error:
        parser.error(str(error))


# -----------------------------------------------------------------------------
# ShowScenario
#
# shows the resolved configuration and exits
# -----------------------------------------------------------------------------
class ShowScenario(argparse.Action):
    """
    shows the resolved configuration and exits. Only the options given before it
    are taken into account
    """

    def __call__(self, parser, namespace, values, option_string=None):

        configuration = _resolve(parser, namespace)
        print("""
 Resolved configuration:
 --------------------------------------------""")
        print(configuration)

        # and finally exit
        sys.exit(0)


# -----------------------------------------------------------------------------
# GenerateConfFile
#
# generates a configuration file with the resolved configuration
# -----------------------------------------------------------------------------
class GenerateConfFile(argparse.Action):
    """generates a configuration file with the resolved configuration, where all
       defaults and overrides given before it have been applied

    """

    def __call__(self, parser, namespace, values, option_string=None):

        configuration = _resolve(parser, namespace)
        confparser.write_configuration(configuration, values)
        LOGGER.info(INFO_CONF_GENERATED.format(values))

        # and finally exit
        sys.exit(0)


# -----------------------------------------------------------------------------
# ReserveOptParser
#
# provides an argument parser for reading the argument command line of
# reserve-opt
# -----------------------------------------------------------------------------
class ReserveOptParser():
    """
    provides an argument parser for reading the argument command line of
    reserve-opt
    """

    def __init__(self):
        """
        create a parser and store its contents in this instance
        """

        # initialize a parser
        self._parser = argparse.ArgumentParser(
            prog="reserve-opt",
            description="Computes cost-optimal night-time cooling schedules of a building offering decremental reserve")

        # now, add the arguments

        # Group of mandatory arguments
        self._mandatory = self._parser.add_argument_group("Mandatory arguments", "The following arguments are required")
        self._mandatory.add_argument('subcommand',
                                     choices=SUBCOMMANDS,
                                     help="problem to solve: the reference profile, the optimal reserve capacity, the optimal delivery of the reserve instructions or a sweep of capacity problems over benefit-cost ratios and regularizer weights")
        self._mandatory.add_argument('-o', '--out',
                                     type=str,
                                     required=True,
                                     help="directory where all csv files are written. It is created if it does not exist")

        # Group of optional arguments
        self._optional = self._parser.add_argument_group('Optional', 'The following arguments are optional')
        self._optional.add_argument('-c', '--config',
                                    type=str,
                                    default=confparser.DEFAULT_CONF,
                                    help="location of the configuration file. By default, the bundled scenario night.json is used")
        self._optional.add_argument('-s', '--set',
                                    dest='overrides',
                                    action='append',
                                    default=[],
                                    metavar='KEY=VALUE',
                                    help="overrides a value of the configuration file. Keys are given either with their section (economics.R_over_P) or bare (R_over_P) if they are unique. It can be given several times")
        self._optional.add_argument('-n', '--np',
                                    dest='n_p',
                                    type=int,
                                    help="number of intervals of the uniform partition of the horizon. If given, it supersedes the value of the configuration file")
        self._optional.add_argument('-r', '--seed',
                                    type=int,
                                    help="seed of the random starting points of the multistart. If given, it supersedes the value of the configuration file")
        self._optional.add_argument('-j', '--jobs',
                                    type=int,
                                    default=1,
                                    help="number of processes used to solve the entries of a sweep. By default, 1")

        # Group of miscellaneous arguments
        self._misc = self._parser.add_argument_group('Miscellaneous')
        self._misc.add_argument('-S', '--show-scenario',
                                nargs=0,
                                action=ShowScenario,
                                help="shows the configuration that results from the options given before it and exits")
        self._misc.add_argument('-g', '--generate-conf',
                                action=GenerateConfFile,
                                help="generates a configuration file with the configuration that results from the options given before it and exits")
        self._misc.add_argument('-v', '--verbose',
                                action='store_true',
                                help="shows the progress of every outer iteration of the solver")
        self._misc.add_argument('-V', '--version',
                                action='version',
                                version=" %s version %s (%s)" % ("reserve-opt",
                                                                 version.__version__,
                                                                 version.__revision__),
                                help="output version information and exit")

    # -----------------------------------------------------------------------------
    # parse_args
    #
    # just parse the arguments with this argument parser
    # -----------------------------------------------------------------------------
    def parse_args(self, args=None):
        """
        just parse the arguments with this argument parser. If no arguments are
        given, the command line is used
        """

        return self._parser.parse_args(args)


# Local Variables:
# mode:python
# fill-column:80
# End:
