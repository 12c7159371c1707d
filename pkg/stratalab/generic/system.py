# This work is licensed under the GNU GPLv3.

"""Helpers based on operating system services."""
# https://docs.python.org/3/library/allos.html

import configparser
import inspect
import logging
from pathlib import Path
from time import perf_counter

logger = logging.getLogger(__name__)

class Timer:
    """Timer context manager."""
    def __init__(self,
                 output_function=None,
                 output_format="Elapsed time: {time} s"):

        # https://stackoverflow.com/a/1095621
        caller_module = inspect.getmodule(inspect.stack()[1].frame)
        caller_logger = logging.getLogger(getattr(caller_module, "__name__",
                                                  __name__))

        self.output_function = output_function or caller_logger.debug
        self.output_format = output_format
        self.start = None
        self.elapsed = None

    def __enter__(self):
        self.start = perf_counter()
        return self

    def __exit__(self, *args):
        self.elapsed = perf_counter() - self.start
        self.output_function(self.output_format.format(time=self.elapsed))

def read_flat_config(path):
    """Read a section-less `key = value` file into a dict."""
    parser = configparser.ConfigParser()
    with open(Path(path), "r", encoding="utf8") as stream:
        parser.read_string('[default]\n' + stream.read())
    return {key: value.strip() for key, value in parser["default"].items()}
