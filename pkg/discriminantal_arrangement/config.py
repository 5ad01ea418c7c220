# -*- coding: utf-8 -*-

"""
Run configuration.

Values come from the ``[tool.discrim]`` table of a TOML file, either a
stand-alone ``discrim.toml`` or the project's ``pyproject.toml``. Command
line flags override file values. Example::

    [tool.discrim]
    seed = 7
    max_rank = 3
    sample_bound = 3
"""

import typing as T
import dataclasses
from pathlib import Path

try:
    import tomllib  # Python 3.11+
except ImportError:  # pragma: no cover
    import tomli as tomllib  # Python < 3.11

from func_args.api import BaseFrozenModel

from .constants import (
    DEFAULT_SEED,
    DEFAULT_SAMPLE_BOUND,
    DEFAULT_MAX_SAMPLE_ROUNDS,
    ORCHARD_MAX_N,
    DEFAULT_CONFIG_FILENAME,
    CONFIG_TABLE,
)


@dataclasses.dataclass(frozen=True)
class Config(BaseFrozenModel):
    """
    :param seed: seed of every random choice
    :param max_rank: deepest lattice rank to enumerate, ``None`` for ``n - k``
    :param sample_bound: initial coefficient bound when sampling translates
    :param max_sample_rounds: how many times the bound may be doubled
    :param orchard_max_n: largest arrangement the orchard search accepts
    :param verbose: print progress to standard error
    """

    seed: int = dataclasses.field(default=DEFAULT_SEED)
    max_rank: int | None = dataclasses.field(default=None)
    sample_bound: int = dataclasses.field(default=DEFAULT_SAMPLE_BOUND)
    max_sample_rounds: int = dataclasses.field(default=DEFAULT_MAX_SAMPLE_ROUNDS)
    orchard_max_n: int = dataclasses.field(default=ORCHARD_MAX_N)
    verbose: bool = dataclasses.field(default=False)

    @classmethod
    def from_toml_dict(cls, data: dict[str, T.Any]) -> "Config":
        table = data
        for key in CONFIG_TABLE:
            table = table.get(key, {})
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(table) - names)
        if unknown:
            raise ValueError(f"unknown keys in [tool.discrim]: {unknown}")
        return cls(**table)

    @classmethod
    def load(cls, path: Path) -> "Config":
        data = tomllib.loads(Path(path).read_text(encoding="utf-8"))
        return cls.from_toml_dict(data)

    @classmethod
    def find(cls, dir_cwd: Path | None = None) -> "Config":
        """
        Try ``discrim.toml`` then ``pyproject.toml`` in ``dir_cwd``; fall back
        to defaults when neither exists.
        """
        dir_cwd = Path.cwd() if dir_cwd is None else Path(dir_cwd)
        for name in [DEFAULT_CONFIG_FILENAME, "pyproject.toml"]:
            path = dir_cwd / name
            if path.exists():
                return cls.load(path)
        return cls()

    def override(self, **kwargs) -> "Config":
        """
        Replace the values given as not ``None``.
        """
        changes = {k: v for k, v in kwargs.items() if v is not None}
        return dataclasses.replace(self, **changes)
