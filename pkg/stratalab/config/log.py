# This work is licensed under the GNU GPLv3.

"""Logging configuration."""

import logging
import logging.config
import sys
from generic.terminal_colors import ColorString

LEVEL_NAMES = {logging.DEBUG: "[W]DEB",
               logging.INFO: "[g]INF",
               logging.WARNING: "[y]WAR",
               logging.ERROR: "[r]ERR",
               logging.CRITICAL: "[¤*+r]CRI"}

def setup_logging(loglevel, color=None):
    """Set up logging configuration.

    Log records go to standard error; colours default to whether it is a
    terminal.
    """
    if color is None:
        color = sys.stderr.isatty()
    render = ColorString.ansi if color else ColorString.__str__
    logging_config = dict(
        version=1,
        disable_existing_loggers=False,
        formatters={
            'f': {
                'format':
                    render(ColorString([("bright black",
                                         "%(asctime)s %(levelname)s "),
                                        ("cyan",
                                         "[%(name)s] "),
                                        ("",
                                         "%(message)s")])),
                'datefmt': "%F %T"}},
        handlers={
            'h': {
                'class': "logging.StreamHandler",
                'stream': "ext://sys.stderr",
                'formatter': "f",
                'level': loglevel}},
        root={
            'handlers': ["h"],
            'level': loglevel},
        )
    logging.config.dictConfig(logging_config)

    # https://stackoverflow.com/a/7995762
    for level, markup in LEVEL_NAMES.items():
        logging.addLevelName(level, render(ColorString(markup)))
