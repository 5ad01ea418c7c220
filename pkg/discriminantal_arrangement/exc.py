# -*- coding: utf-8 -*-

"""
Error hierarchy.

Every error raised on purpose by this package is a :class:`DiscrimError`,
which is a :class:`ValueError`, so callers that only care about "bad input"
can keep catching ``ValueError``. Each subclass has a stable ``code`` that
the command line prints in its JSON diagnostic, plus a ``details`` dict with
the offending data (for example the witness subset ``K``).
"""

import typing as T


class DiscrimError(ValueError):
    code: str = "discrim-error"

    def __init__(self, message: str, **details: T.Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "error": self.code,
            "message": self.message,
            "details": self.details,
        }


class ScalarParseError(DiscrimError):
    code = "scalar-parse"


class MixedFieldError(DiscrimError):
    code = "mixed-field"


class NotGenericError(DiscrimError):
    """
    The input arrangement (or line set) is not generic. ``details["K"]`` holds
    the 1-based indices of a minimal violating subset.
    """

    code = "not-generic"


class DegenerateSubsetError(DiscrimError):
    code = "degenerate-subset"


class DuplicateLineError(DiscrimError):
    code = "duplicate-line"


class NoCollinearitiesError(DiscrimError):
    code = "no-collinearities"


class NotStrongError(DiscrimError):
    code = "not-strong"


class UncoverableFixedPointError(DiscrimError):
    code = "uncoverable-fixed-point"


class AmbiguousCoverError(DiscrimError):
    code = "ambiguous-cover"


class PatternError(DiscrimError):
    code = "pattern"


class DegenerateParametersError(DiscrimError):
    code = "degenerate-parameters"


class NoRationalSolutionError(DiscrimError):
    code = "no-rational-solution"


class InvolutionParseError(DiscrimError):
    """
    An involution is malformed: bad cycle notation, an index outside ``1..n``,
    overlapping transpositions, or the wrong number of points.
    """

    code = "bad-involution"


class PreconditionError(DiscrimError):
    """
    A request the computation cannot start from, such as a missing option,
    a chart line that is one of the lines, or an input too large to search.
    """

    code = "precondition"


class SamplingExhaustedError(DiscrimError):
    code = "sampling-exhausted"
