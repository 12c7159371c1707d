#!/usr/bin/env python3
# This work is licensed under the GNU GPLv3.

"""Compare two exact-capacity random labelling procedures."""

__version__ = "0.1"

import json
import logging
import sys
from pathlib import Path
import config.cli
from analytics.exact import analyze, compare_methods
from analytics.monte_carlo import empirical_vs_exact, simulate
from analytics.oracle import alpha_distribution, oracle_diff
from config.log import setup_logging
from experiment import MalformedFlagsError, StratalabError
from experiment.spec import Method, validate_label, validate_spec
from generic.system import Timer
from output.serialize import render

logger = logging.getLogger(__name__)

def produce_report(run_config):
    """Compute the report a command asks for."""
    spec = validate_spec(run_config.ball_count, run_config.pot_counts)
    target = None
    if run_config.target_label:
        target = validate_label(spec, run_config.target_label)
    methods = [run_config.method] if run_config.method else list(Method)

    if run_config.command == "compare":
        if run_config.method:
            logger.warning("compare covers both methods; --method ignored")
        return compare_methods(spec)
    if run_config.command == "simulate":
        if run_config.method:
            return simulate(run_config.method, spec, run_config.trials,
                            run_config.seed, target)
        return empirical_vs_exact(spec, run_config.trials, run_config.seed,
                                  target)
    if run_config.command == "enumerate":
        reports = [oracle_diff(alpha_distribution(method, spec, target,
                                                  run_config.budget))
                   for method in methods]
    else:
        reports = [analyze(method, spec) for method in methods]
    return reports[0] if len(reports) == 1 else reports

def report_error(error):
    """Log an error and put its machine-readable form on standard error."""
    logger.error(error)
    print(json.dumps(error.as_dict()), file=sys.stderr)

def run(run_config):
    """Execute a run configuration; return the exit code."""
    try:
        with Timer(logger.debug, f"{run_config.command}: {{time:.2f}} s"):
            report = produce_report(run_config)
    except StratalabError as error:
        report_error(error)
        return error.exit_code
    text = render(report, run_config.output_format,
                  command=run_config.command)
    if run_config.output_path:
        try:
            Path(run_config.output_path).write_text(text, encoding="utf8")
        except OSError as error:
            logger.error(error)
            return 1
    else:
        sys.stdout.write(text)
    return 0

def main(argv=None):
    """Execute."""
    try:
        args = config.cli.parse_arguments(argv)
        setup_logging(logging.DEBUG if args.debug else logging.INFO)
        logger.debug(f"{args = }")
        logger.debug(f"{sys.path = }")
        run_config = config.cli.build_config(args)
    except MalformedFlagsError as error:
        report_error(error)
        sys.exit(error.exit_code)
    logger.debug(f"{run_config = }")
    sys.exit(run(run_config))

if __name__ == "__main__":
    main()
