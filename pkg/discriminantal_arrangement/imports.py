# -*- coding: utf-8 -*-

from soft_deps.api import MissingDependency

try:
    from rich.console import Console
except ImportError as e:  # pragma: no cover
    Console = MissingDependency(
        name="rich",
        error_message="please do 'pip install discriminantal_arrangement[pretty]'",
    )


def has_rich() -> bool:
    return isinstance(Console, MissingDependency) is False
