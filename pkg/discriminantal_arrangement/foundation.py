# -*- coding: utf-8 -*-

"""
Shared base for the multi-step procedures of this package (lattice
enumeration, orchard search, the Pappus pipeline).

They are written as command objects: a frozen dataclass holding the inputs,
a ``run()`` method that calls ``step_1_...``, ``step_2_...`` in order, and a
:meth:`BaseLogger.log` that reports progress through a pluggable printer.
Pure math functions never log; only command objects do.
"""

import sys
import dataclasses
import functools

from func_args.api import BaseFrozenModel

from .typehint import T_PRINTER
from .imports import Console, has_rich


@dataclasses.dataclass(frozen=True)
class BaseLogger(BaseFrozenModel):
    verbose: bool = dataclasses.field(default=True)
    printer: T_PRINTER = dataclasses.field(default=print)

    def log(self, msg: str):
        """
        Log a message if verbosity is enabled.
        """
        if self.verbose:
            self.printer(msg)


def stderr_printer() -> T_PRINTER:
    """
    Printer writing to standard error, through ``rich`` when it is installed.
    Standard output is reserved for JSON reports.
    """
    if has_rich():
        console = Console(stderr=True)
        return functools.partial(console.print, markup=False, highlight=False)
    return functools.partial(print, file=sys.stderr)  # pragma: no cover
