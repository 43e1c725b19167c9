""" Command-line interface.

::

    choreopy project pipeline.chor --role Bob
    choreopy check pipeline.chor
    choreopy check --raw-network deadlock.net
    choreopy run pipeline.chor --mode memory
    choreopy run pipeline.chor --mode tcp --role Carol --config hosts.txt
    choreopy list-examples

Exit codes: 0 on success or a verdict that holds, 1 on a verdict that does
not hold or a failed run, 2 on an inconclusive check or a malformed input
file, 64 on usage errors.
"""

import argparse
import importlib.resources
import logging
import pathlib
import sys
import warnings

from choreopy.checker.explore import DEFAULT_MAX_DEPTH, DEFAULT_MAX_STATES
from choreopy.checker.soundness import (check_network,
                                        check_soundness_completeness)
from choreopy.checker.syntax import load_network
from choreopy.choreo.choreography import locations
from choreopy.choreo.epp import epp, project_all
from choreopy.choreo.syntax import load_choreography
from choreopy.exceptions import (ChoreoError, ConfigError, LimitExceeded,
                                 OwnershipError, ParseError, UnboundVariable)
from choreopy.local.value import show_values
from choreopy.process.process import render
from choreopy.runtime.config import read_deployment
from choreopy.runtime.memory import DEFAULT_TIMEOUT, run_in_memory
from choreopy.runtime.tcp import run_tcp

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64

# errors in the input files rather than in what they describe
STATIC_ERRORS = (ParseError, OwnershipError, UnboundVariable, ConfigError,
                 FileNotFoundError)


class ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser exiting with EX_USAGE on bad arguments"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def corpus():
    return importlib.resources.files("choreopy.cli") / "corpus"


def resolve(path):
    """Path of an input file, looked up in the bundled corpus when no such
    file exists"""

    local = pathlib.Path(path)
    if local.exists():
        return local
    bundled = corpus() / local.name
    if bundled.is_file():
        return bundled
    raise FileNotFoundError(f"no such file: '{path}'")


def load_program(path):
    with importlib.resources.as_file(resolve(path)) as file:
        return load_choreography(file)


def cmd_project(args):
    program = load_program(args.file)
    c = program.to_choreo()
    if args.role not in locations(c):
        warnings.warn(f"location '{args.role}' does not occur in the "
                      "choreography, its process is empty")
    text = render(epp(c, args.role))
    if text:
        print(text)
    return EXIT_OK


def cmd_check(args):
    try:
        if args.raw_network:
            with importlib.resources.as_file(resolve(args.file)) as file:
                network = load_network(file)
            verdict = check_network(network.processes, network.registry,
                                    args.max_states, args.max_depth)
        else:
            program = load_program(args.file)
            verdict = check_soundness_completeness(program.to_choreo(),
                                                   program.registry,
                                                   args.max_states,
                                                   args.max_depth)
    except LimitExceeded as err:
        print(f"verdict: inconclusive ({err})")
        return EXIT_INCONCLUSIVE

    print(verdict.summary())
    return EXIT_OK if verdict.holds else EXIT_FALSE


def cmd_run(args, parser):
    program = load_program(args.file)
    c = program.to_choreo()

    if args.mode == "memory":
        observations = run_in_memory(project_all(c, locations(c)),
                                     program.registry, args.timeout)
    else:
        if args.role is None or args.config is None:
            parser.error("--mode tcp requires --role and --config")
        cfg = read_deployment(args.config, args.role)
        observations = {args.role: run_tcp(epp(c, args.role), cfg,
                                           program.registry, args.timeout)}

    for loc, values in observations.items():
        print(f"{loc}: {show_values(values)}")
    return EXIT_OK


def cmd_list_examples(args):
    for entry in sorted(corpus().iterdir(), key=lambda e: e.name):
        if entry.name.endswith((".chor", ".net")):
            print(entry.name)
    return EXIT_OK


def build_parser():
    parser = ArgumentParser(prog="choreopy",
                            description="Project, check and run "
                                        "choreographies.")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log more, -vv for debug output")
    verbs = parser.add_subparsers(dest="verb", metavar="verb")
    verbs.required = True

    project = verbs.add_parser("project",
                               help="print the process of one location")
    project.add_argument("file")
    project.add_argument("--role", required=True)
    project.set_defaults(func=cmd_project)

    check = verbs.add_parser("check", help="check a choreography's "
                                           "projection, or a raw network")
    check.add_argument("file")
    check.add_argument("--raw-network", action="store_true",
                       help="the file is a hand-written network")
    check.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    check.add_argument("--max-depth", type=int, default=DEFAULT_MAX_DEPTH)
    check.set_defaults(func=cmd_check)

    run = verbs.add_parser("run", help="run a choreography")
    run.add_argument("file")
    run.add_argument("--mode", choices=("memory", "tcp"), default="memory")
    run.add_argument("--role", help="location to run in tcp mode")
    run.add_argument("--config", help="deployment file for tcp mode")
    run.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT,
                     help="seconds before a run is declared hung")
    run.set_defaults(func=lambda args: cmd_run(args, run))

    examples = verbs.add_parser("list-examples",
                                help="list the bundled example files")
    examples.set_defaults(func=cmd_list_examples)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    level = max(logging.DEBUG, logging.WARNING - 10 * args.verbose)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.func(args)
    except STATIC_ERRORS as err:
        print(f"choreopy: {err}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except ChoreoError as err:
        print(f"choreopy: {err}", file=sys.stderr)
        return EXIT_FALSE
