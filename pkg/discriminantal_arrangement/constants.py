# -*- coding: utf-8 -*-

import enum


DEFAULT_SEED = 20231014
"""
Seed used for every randomized choice (translate sampling, random controls)
when neither the config file nor the command line provides one.
"""

DEFAULT_SAMPLE_BOUND = 3
DEFAULT_MAX_SAMPLE_ROUNDS = 24
ORCHARD_MAX_N = 9

DEFAULT_CONFIG_FILENAME = "discrim.toml"
CONFIG_TABLE = ("tool", "discrim")


class FieldTypeEnum(str, enum.Enum):
    """
    Scalar field of an arrangement.
    """

    rational = "rational"
    quadratic = "quadratic"


class PappusCarrierEnum(str, enum.Enum):
    """
    Placement of the two carrier lines of a Pappus configuration.

    - ``crossing``: ``A_i = (a_i, 0)`` on ``y = 0``, ``B_j = (0, b_j)`` on ``x = 0``.
    - ``parallel``: ``A_i = (a_i, 0)`` on ``y = 0``, ``B_j = (b_j, 1)`` on ``y = 1``,
      so the carriers meet at infinity.
    """

    crossing = "crossing"
    parallel = "parallel"


class PappusKindEnum(str, enum.Enum):
    """
    Shipped Pappus instances, selected by ``discrim pappus --make``.
    """

    p = "p"  # axes concurrent, three collinearities
    pc = "pc"  # axes concurrent, fourth collinearity
    skew = "skew"  # axes not concurrent


class CommandEnum(str, enum.Enum):
    """
    Verbs of the ``discrim`` command line.
    """

    check_generic = "check-generic"
    build = "build"
    lattice = "lattice"
    very_generic = "very-generic"
    qsets = "qsets"
    orchard = "orchard"
    pappus = "pappus"
    sigma_complete = "sigma-complete"
    certify_union = "certify-union"
    conjecture = "conjecture"
    stats = "stats"
    render = "render"


class ExitCodeEnum(int, enum.Enum):
    """
    Process exit codes of the ``discrim`` command line.
    """

    success = 0
    internal_error = 1
    precondition = 2
