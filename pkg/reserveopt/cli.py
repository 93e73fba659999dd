#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# cli.py
# Description: reserve-opt
# -----------------------------------------------------------------------------
#
# Started on  <Wed Sep 23 11:48:06 2026 >
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

"""
computes the reference, capacity and delivery profiles of a building and writes
them, along with its temperatures and a summary of every solve, to csv files
"""

# imports
# -----------------------------------------------------------------------------
import os
from concurrent import futures

from . import cliparser         # command-line parser
from . import colors            # colored summaries
from . import confparser        # configuration files
from . import problems          # assembly of problems
from . import profiles          # profiles and economics
from . import solver            # augmented Lagrangian solver
from . import thermal           # thermal model and landmarks
from . import utils             # logging services
from . import writers           # csv files

# globals
# -----------------------------------------------------------------------------

# default logger
LOGGER = utils.LOGGER

# exit status
EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_ERROR = 2

# files written in the output directory
SUMMARY = "summary.csv"
CONTROL = "control{0}.csv"
TRAJECTORY = "trajectory{0}.csv"

# the problem solved with every subcommand
KIND = {cliparser.SOLVE_REFERENCE: problems.REFERENCE,
        cliparser.SOLVE_CAPACITY: problems.CAPACITY,
        cliparser.SOLVE_DELIVERY: problems.DELIVERY,
        cliparser.SWEEP: problems.CAPACITY}

# colors of the rows of the summary
FEASIBLE_COLOR = "#20aa20"
INFEASIBLE_COLOR = "#ff2020"

# -- errors
ERROR_UNKNOWN_SUBCOMMAND = "Unknown subcommand '{0}': use one of {1}"
ERROR_NON_POSITIVE_JOBS = "The number of jobs must be positive, but {0} was given"
ERROR_INFEASIBLE_RUN = "The {0} problem of run '{1}' is infeasible: {2}"
ERROR_RUN = "Run aborted: {0}"

# -- info
INFO_LOADING = "Loading the configuration ..."
INFO_SWEEP = "Sweeping {0} ratio(s) and {1} regularizer weight(s) with {2} job(s) ..."
INFO_WRITING = "Writing the summary to '{0}' ..."
INFO_ROW = "{0:<10} R/P={1:<5g} objective={2} nnp={3} t2={4} (analytic {5:.2f}) switches={6} recovery={7}"


# classes
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# RunRequest
#
# a subcommand along with its configuration, output directory and overrides
# -----------------------------------------------------------------------------
class RunRequest:
    """
    A subcommand along with the location of its configuration file, the output
    directory, the overrides 'key=value' and the flags that supersede the
    configuration
    """

    def __init__(self, subcommand: str, config_path: str, output_dir: str,
                 overrides=(), n_p=None, rng_seed=None, jobs: int = 1):

        if subcommand not in cliparser.SUBCOMMANDS:
            LOGGER.error(ERROR_UNKNOWN_SUBCOMMAND.format(subcommand, cliparser.SUBCOMMANDS))
            raise ValueError(ERROR_UNKNOWN_SUBCOMMAND.format(subcommand, cliparser.SUBCOMMANDS))
        if jobs < 1:
            LOGGER.error(ERROR_NON_POSITIVE_JOBS.format(jobs))
            raise ValueError(ERROR_NON_POSITIVE_JOBS.format(jobs))

        self._subcommand = subcommand
        self._config_path = config_path
        self._output_dir = output_dir
        self._overrides = list(overrides)
        self._flags = {"n_p": n_p, "rng_seed": rng_seed}
        self._jobs = jobs

    @classmethod
    def from_args(cls, args):
        '''return the request given in the parsed command line'''

        return cls(args.subcommand, args.config, args.out, args.overrides,
                   args.n_p, args.seed, args.jobs)

    def get_subcommand(self):
        return self._subcommand

    def get_config_path(self):
        return self._config_path

    def get_output_dir(self):
        return self._output_dir

    def get_overrides(self):
        return list(self._overrides)

    def get_flags(self):
        '''return the solver settings given with dedicated flags'''

        return dict(self._flags)

    def get_jobs(self):
        return self._jobs


# functions
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# load_scenario
#
# return the scenario of a configuration file
# -----------------------------------------------------------------------------
def load_scenario(path: str, overrides=()):
    """return the validated scenario of the given configuration file after
       applying the overrides 'key=value'. Errors name the offending key

    """

    return confparser.load_scenario(path, overrides)


# -----------------------------------------------------------------------------
# summarize
#
# return the summary record of a solution
# -----------------------------------------------------------------------------
def summarize(solution: solver.Solution, instructions=None):
    """return the summary record of a solution: its objective and normalized net
       profit, the analytic and empirical onsets of full power, the regularizer
       weight, the number of crossings of u=0.5 and the longest window with the
       equipment off after the last instruction (or from the start)

    """

    problem = solution.get_problem()
    s = problem.get_scenario()
    control = solution.get_control()
    after = instructions[-1].get_end() if instructions is not None and len(instructions) else 0.0

    return {"kind": problem.get_kind(),
            "ratio": s.get_ratio(),
            "objective": solution.get_objective(),
            "nnp": solution.get_economics()["nnp"],
            "feasible": solution.is_feasible(),
            "t2_analytic": thermal.landmark_t2(s),
            "t2_empirical": profiles.full_power_onset(control),
            "alpha": problem.get_alpha(),
            "switches": profiles.count_switches(control),
            "recovery_min": profiles.longest_window_below(control, after=after)}


def infeasible_record(problem):
    '''return the summary record of a problem without feasible solution'''

    s = problem.get_scenario()
    record = dict.fromkeys(writers.SUMMARY_COLUMNS)
    record.update({"kind": problem.get_kind(),
                   "ratio": s.get_ratio(),
                   "feasible": False,
                   "t2_analytic": thermal.landmark_t2(s),
                   "alpha": problem.get_alpha()})
    return record


def _log_record(record):
    '''show a summary record colored after its feasibility'''

    def show(value):
        return "-" if value is None else "{0:.4f}".format(value)

    line = INFO_ROW.format(record["kind"], record["ratio"], show(record["objective"]),
                           show(record["nnp"]), show(record["t2_empirical"]),
                           record["t2_analytic"], record["switches"],
                           show(record["recovery_min"]))
    LOGGER.info(colors.colorize(line, FEASIBLE_COLOR if record["feasible"] else INFEASIBLE_COLOR))


# -----------------------------------------------------------------------------
# write_solution
#
# write the control and trajectory of a solution
# -----------------------------------------------------------------------------
def write_solution(solution: solver.Solution, output_dir: str, label: str = ""):
    """write the control and trajectory of a solution to the output directory. The
       label, if any, is appended to the name of both files

    """

    suffix = "_" + label if label else ""
    problem = solution.get_problem()
    writers.write_control(os.path.join(output_dir, CONTROL.format(suffix)),
                          solution.get_control(), problem.get_u_ref(), problem.get_u_ins())
    writers.write_trajectory(os.path.join(output_dir, TRAJECTORY.format(suffix)),
                             solution.get_trajectory())


# -----------------------------------------------------------------------------
# solve_problem
#
# solve a problem and return its summary record
# -----------------------------------------------------------------------------
def solve_problem(problem, settings: solver.SolverConfig, output_dir: str, label: str = ""):
    """solve the given problem, write its control and trajectory and return the
       tuple (solution, record). If the problem is infeasible no file is written
       and the solution is None

    """

    try:
        solution = solver.solve(problem, settings)
    except solver.InfeasibleProblemError as error:
        LOGGER.error(ERROR_INFEASIBLE_RUN.format(problem.get_kind(), label or "-", error.report))
        return None, infeasible_record(problem)

    write_solution(solution, output_dir, label)
    return solution, summarize(solution, problem.get_instructions())


# -----------------------------------------------------------------------------
# solve_reference
#
# solve the reference problem of a configuration
# -----------------------------------------------------------------------------
def solve_reference(configuration: confparser.Configuration, output_dir: str, label: str = ""):
    """solve the reference problem of the given configuration and return the tuple
       (solution, record)"""

    settings = configuration.get_solver()
    problem = problems.build_reference(configuration.get_scenario(), settings.get_n_p(),
                                       settings.get_sub_samples())
    return solve_problem(problem, settings, output_dir, label)


# -----------------------------------------------------------------------------
# solve_capacity_entry
#
# solve the capacity problem of an entry of a sweep
# -----------------------------------------------------------------------------
def solve_capacity_entry(entry):
    """solve the capacity problem of an entry of a sweep given as the tuple
       (scenario, settings, u_ref, output_dir, label) and return its record. It
       is run in a separate process when a sweep uses several jobs

    """

    s, settings, u_ref, output_dir, label = entry
    problem = problems.build_capacity(s, u_ref, settings.get_n_p(), settings.get_sub_samples())
    return solve_problem(problem, settings, output_dir, label)[1]


# -----------------------------------------------------------------------------
# sweep_entries
#
# return the entries of a sweep
# -----------------------------------------------------------------------------
def sweep_entries(configuration: confparser.Configuration, u_ref, output_dir: str):
    """return one entry per ratio and regularizer weight of the sweep of the
       given configuration. Entries are sorted by ratio first"""

    s = configuration.get_scenario()
    econ = s.get_economics()
    sweep = configuration.get_sweep()
    alphas = sweep.get_alphas()

    entries = []
    for ratio in sweep.get_ratios():
        scenario = s.replace(econ=profiles.EconomicsParams.from_ratio(econ.get_price(), ratio,
                                                                      econ.get_gamma()))
        for alpha in alphas if alphas is not None else [None]:
            label = "r{0:g}".format(ratio)
            if alpha is not None:
                label += "_a{0:g}".format(alpha)
            entry = scenario if alpha is None else scenario.replace(alpha_alt=alpha)
            entries.append((entry, configuration.get_solver(), u_ref, output_dir, label))

    return entries


# -----------------------------------------------------------------------------
# run_sweep
#
# solve all capacity problems of a sweep
# -----------------------------------------------------------------------------
def run_sweep(configuration: confparser.Configuration, output_dir: str, jobs: int = 1):
    """solve the reference problem once and then the capacity problem of every
       entry of the sweep, possibly in parallel. Records are returned in the
       order of the entries, starting with the reference

    """

    solution, record = solve_reference(configuration, output_dir, problems.REFERENCE)
    if solution is None:
        return [record]

    entries = sweep_entries(configuration, solution.get_control(), output_dir)
    alphas = configuration.get_sweep().get_alphas()
    LOGGER.info(INFO_SWEEP.format(len(configuration.get_sweep().get_ratios()),
                                  len(alphas) if alphas is not None else 1, jobs))

    if jobs == 1:
        return [record] + [solve_capacity_entry(entry) for entry in entries]

    # map returns the results in the order of the entries
    with futures.ProcessPoolExecutor(max_workers=jobs) as executor:
        return [record] + list(executor.map(solve_capacity_entry, entries))


# -----------------------------------------------------------------------------
# run_single
#
# solve the problem of a subcommand other than sweep
# -----------------------------------------------------------------------------
def run_single(subcommand: str, configuration: confparser.Configuration, output_dir: str):
    """solve the problem of the given subcommand and return its records. The
       capacity and delivery problems solve the reference problem first, whose
       record is also returned

    """

    kind = KIND[subcommand]
    if kind == problems.REFERENCE:
        return [solve_reference(configuration, output_dir)[1]]

    reference, record = solve_reference(configuration, output_dir, problems.REFERENCE)
    if reference is None:
        return [record]

    s = configuration.get_scenario()
    settings = configuration.get_solver()
    if kind == problems.CAPACITY:
        problem = problems.build_capacity(s, reference.get_control(), settings.get_n_p(),
                                          settings.get_sub_samples())
    else:
        problem = problems.build_delivery(s, reference.get_control(),
                                          configuration.get_instructions(),
                                          settings.get_n_p(), settings.get_sub_samples())

    return [record, solve_problem(problem, settings, output_dir)[1]]


# -----------------------------------------------------------------------------
# run
#
# process a request and return its exit status
# -----------------------------------------------------------------------------
def run(request: RunRequest):
    """process the given request and return its exit status: 0 if every solve
       found a feasible solution, 1 if any was infeasible and 2 if the
       configuration could not be processed or the files could not be written

    """

    try:
        LOGGER.info(INFO_LOADING)
        configuration = confparser.load_configuration(request.get_config_path(),
                                                      request.get_overrides(),
                                                      request.get_flags())

        output_dir = utils.get_full_path(request.get_output_dir())
        os.makedirs(output_dir, exist_ok=True)

        if request.get_subcommand() == cliparser.SWEEP:
            records = run_sweep(configuration, output_dir, request.get_jobs())
        else:
            records = run_single(request.get_subcommand(), configuration, output_dir)

        path = os.path.join(output_dir, SUMMARY)
        LOGGER.info(INFO_WRITING.format(path))
        writers.write_summary(path, records)

    except (ValueError, OSError) as error:
        LOGGER.error(ERROR_RUN.format(error))
        return EXIT_ERROR

    for record in records:
        _log_record(record)

    return EXIT_OK if all(record["feasible"] for record in records) else EXIT_INFEASIBLE


# -----------------------------------------------------------------------------
# main
#
# parses the command line and processes the request
# -----------------------------------------------------------------------------
def main():
    """parses the command line and processes the request. The exit status is 0 iff
       every solve found a feasible solution"""

    # parse the command-line
    args = cliparser.ReserveOptParser().parse_args()
    utils.setup_logger(args.verbose)

    return run(RunRequest.from_args(args))


# Main body
# -----------------------------------------------------------------------------
if __name__ == '__main__':

    # run the main entry point
    raise SystemExit(main())


# Local Variables:
# mode:python
# fill-column:80
# End:
