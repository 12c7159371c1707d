# This work is licensed under the GNU GPLv3.

"""Command-line interface and run configuration."""

from __future__ import annotations
import argparse
import configparser
import logging
import os
import sys
from dataclasses import dataclass
from typing import Optional, Tuple
from analytics.oracle import DEFAULT_BUDGET
from experiment import MalformedFlagsError
from experiment.spec import Method
from generic.converters import parse_int_list
from generic.system import read_flat_config
from script import __version__

logger = logging.getLogger(__name__)

args = None

BUDGET_ENV_VAR = "STRATALAB_BUDGET"
FORMATS = ("json", "csv")
CONFIG_KEYS = ("balls", "pots", "method", "seed", "trials", "target",
               "budget", "format", "output")
DEFAULTS = {"method": "both",
            "seed": "0",
            "trials": "100000",
            "budget": str(DEFAULT_BUDGET),
            "format": "json"}

@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs; method None means both methods."""
    command: str
    ball_count: int
    pot_counts: Tuple[int, ...]
    method: Optional[Method] = None
    seed: int = 0
    trials: int = 100000
    target_label: Optional[Tuple[int, ...]] = None
    budget: int = DEFAULT_BUDGET
    output_format: str = "json"
    output_path: Optional[str] = None

class ArgumentParser(argparse.ArgumentParser):
    """Parser that raises MalformedFlagsError instead of exiting with 2."""

    def error(self, message):
        raise MalformedFlagsError(message)

def parse_arguments(*args, **kwargs):
    """Parse command-line arguments."""

    # parent parsers
    common = ArgumentParser(add_help=False)
    common.add_argument("-d", "--debug",
        action="store_const",
        const=True,
        default=argparse.SUPPRESS,
        help="enable DEBUG logging level")
    common.add_argument("--version",
        action="version",
        version=__version__,
        help="print version and exit")

    experiment = ArgumentParser(add_help=False)
    experiment.add_argument("--balls",
        default=argparse.SUPPRESS,
        help="number of balls N")
    experiment.add_argument("--pots",
        default=argparse.SUPPRESS,
        help="comma-separated pot counts n_1,...,n_r")
    experiment.add_argument("--method",
        choices=("first", "second", "both"),
        default=argparse.SUPPRESS,
        help="labelling procedure (default: both)")
    experiment.add_argument("--target",
        default=argparse.SUPPRESS,
        help="comma-separated target label (default: all ones)")
    experiment.add_argument("--format",
        choices=FORMATS,
        default=argparse.SUPPRESS,
        help="report format (default: json)")
    experiment.add_argument("--output",
        default=argparse.SUPPRESS,
        help="report file (default: standard output)")
    experiment.add_argument("--config",
        default=None,
        help="flat key = value file with the same keys as the long flags")

    # main parser
    parser = ArgumentParser(
        parents=[common],
        prog="stratalab",
        description="Exact and simulated label-count statistics of two "
                    "exact-capacity random labelling procedures",
        epilog="Example of use: stratalab compare --balls 8 --pots 2,2,2")

    # subparsers
    subparsers = parser.add_subparsers(dest="command", required=True)
    subparsers.add_parser("analyze", parents=[common, experiment],
        help="closed-form statistics")
    subparsers.add_parser("compare", parents=[common, experiment],
        help="closed-form statistics of both methods and their difference")
    sp_simulate = subparsers.add_parser("simulate",
        parents=[common, experiment],
        help="Monte Carlo estimates")
    sp_simulate.add_argument("--seed", default=argparse.SUPPRESS,
        help="64-bit unsigned seed (default: 0)")
    sp_simulate.add_argument("--trials", default=argparse.SUPPRESS,
        help="number of simulated experiments (default: 100000)")
    sp_enumerate = subparsers.add_parser("enumerate",
        parents=[common, experiment],
        help="exact distribution by brute-force enumeration")
    sp_enumerate.add_argument("--budget", default=argparse.SUPPRESS,
        help=f"maximum number of outcomes to walk (default: "
             f"{DEFAULT_BUDGET}, or ${BUDGET_ENV_VAR})")

    args = parser.parse_args(*args, **kwargs)
    if "debug" not in args:
        args.debug = False
    sys.modules[__name__].args = args
    return args

def _as_int(values, key):
    try:
        return int(values[key])
    except (KeyError, ValueError) as error:
        raise MalformedFlagsError(f"--{key} needs an integer",
                                  key=key) from error

def _as_int_list(values, key):
    try:
        result = parse_int_list(values[key])
    except (KeyError, ValueError) as error:
        raise MalformedFlagsError(f"--{key} needs comma-separated integers",
                                  key=key) from error
    return result

def build_config(args, environ=None) -> RunConfig:
    """Merge flags, config file, environment and defaults.

    Precedence: flags, config file, $STRATALAB_BUDGET (budget only),
    defaults.
    """
    environ = os.environ if environ is None else environ
    values = dict(DEFAULTS)
    if BUDGET_ENV_VAR in environ:
        values["budget"] = environ[BUDGET_ENV_VAR]
    if getattr(args, "config", None):
        try:
            from_file = read_flat_config(args.config)
        except (OSError, configparser.Error) as error:
            raise MalformedFlagsError(f"cannot read {args.config}: {error}",
                                      path=args.config) from error
        if unknown := set(from_file) - set(CONFIG_KEYS):
            raise MalformedFlagsError(
                f"unknown configuration keys {sorted(unknown)}",
                path=args.config)
        values.update(from_file)
    flags = {k: v for k, v in vars(args).items()
             if k in CONFIG_KEYS}
    values.update(flags)
    logger.debug(f"{values = }")

    method_name = values["method"].strip().lower()
    if method_name not in ("first", "second", "both"):
        raise MalformedFlagsError(f"unknown method {method_name!r}")
    if values.get("format", "json") not in FORMATS:
        raise MalformedFlagsError(f"unknown format {values['format']!r}")
    return RunConfig(
        command=args.command,
        ball_count=_as_int(values, "balls"),
        pot_counts=_as_int_list(values, "pots"),
        method=None if method_name == "both" else Method.parse(method_name),
        seed=_as_int(values, "seed"),
        trials=_as_int(values, "trials"),
        target_label=(_as_int_list(values, "target")
                      if values.get("target") else None),
        budget=_as_int(values, "budget"),
        output_format=values["format"],
        output_path=values.get("output") or None)
