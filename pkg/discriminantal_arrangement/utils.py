# -*- coding: utf-8 -*-

import typing as T
import json
from pathlib import Path


def write_bytes(path: Path, content: bytes):
    """
    Write bytes to a file, creating parent directories if they don't exist.
    """
    try:
        path.write_bytes(content)
    except FileNotFoundError:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(content)


def to_report_json(data: T.Any) -> str:
    """
    Deterministic JSON text of a report: sorted keys, two space indentation
    and a trailing newline, so equal inputs give byte-identical files.
    """
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def format_index_set(indices: T.Iterable[int]) -> str:
    """
    ``(1, 2, 3) -> "123"``. Only meaningful for indices below 10, which is the
    range every search in this package is capped at.
    """
    return "".join(str(i) for i in indices)


def parse_index_set(text: str) -> tuple[int, ...]:
    """
    ``"123" -> (1, 2, 3)``; also accepts ``"1,2,3"`` and ``"1 2 3"``.
    """
    text = text.strip()
    if "," in text or " " in text:
        parts = [p for p in text.replace(",", " ").split() if p]
        values = [int(p) for p in parts]
    else:
        if not text.isdigit():
            raise ValueError(f"not an index set: {text!r}")
        values = [int(ch) for ch in text]
    if len(set(values)) != len(values) or any(v < 1 for v in values):
        raise ValueError(f"index set must hold distinct positive indices, got {text!r}")
    return tuple(sorted(values))


def format_family(family: T.Iterable[T.Iterable[int]]) -> list[str]:
    return [format_index_set(L) for L in family]
