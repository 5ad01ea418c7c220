# -*- coding: utf-8 -*-

"""
Affine hyperplane arrangements over an exact field.

An :class:`Arrangement` is an ordered tuple of :class:`Hyperplane`
``normal . x = offset`` in ``k``-space. The order matters: it fixes the
coordinates of the translate space, i.e. the offsets vector ``c`` that
:func:`translate` adds.
"""

import typing as T
import json
import hashlib
import itertools
import dataclasses
from fractions import Fraction
from pathlib import Path
from functools import cached_property

from .exactfield import (
    Scalar,
    Field,
    format_scalar,
    parse_scalar,
    canonical_vector,
    rank,
    solution_space,
)
from .exc import NotGenericError, ScalarParseError
from .utils import write_bytes


@dataclasses.dataclass(frozen=True)
class Hyperplane:
    """
    ``{x : normal . x = offset}``.
    """

    normal: tuple[Scalar, ...]
    offset: Scalar
    label: str

    def __post_init__(self):
        if not isinstance(self.normal, tuple):
            object.__setattr__(self, "normal", tuple(self.normal))
        if all(x == 0 for x in self.normal):
            raise ValueError(f"hyperplane {self.label!r} has a zero normal")

    def homogeneous(self) -> tuple[Scalar, ...]:
        """
        Coefficients of the projective closure, ``(a_1, ..., a_k, -offset)``.
        """
        return self.normal + (-self.offset,)

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "label": self.label,
            "normal": [format_scalar(x) for x in self.normal],
            "offset": format_scalar(self.offset),
        }


@dataclasses.dataclass(frozen=True)
class ProjectiveFlat:
    """
    A projective class of a nonzero coefficient vector, stored in the normal
    form of :func:`~discriminantal_arrangement.exactfield.canonical_vector`.
    Equality and hashing go through the normal form, so parallel hyperplanes
    have equal traces at infinity.
    """

    coefficients: tuple[Scalar, ...]

    @classmethod
    def of(cls, vector: T.Sequence[Scalar]) -> "ProjectiveFlat":
        return cls(coefficients=canonical_vector(vector))

    def __str__(self):
        return "[" + ", ".join(format_scalar(x) for x in self.coefficients) + "]"

    def to_list(self) -> list[str]:
        return [format_scalar(x) for x in self.coefficients]


@dataclasses.dataclass(frozen=True)
class GenericityReport:
    generic: bool
    witness: tuple[int, ...] | None = None

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "generic": self.generic,
            "witness": None if self.witness is None else list(self.witness),
        }


@dataclasses.dataclass(frozen=True)
class Arrangement:
    """
    Ordered affine arrangement of ``n`` hyperplanes in ``k``-space.

    :param dimension: the ambient dimension ``k``
    :param hyperplanes: the hyperplanes, order defines translate coordinates
    :param field: the scalar field every coefficient lives in
    """

    dimension: int
    hyperplanes: tuple[Hyperplane, ...]
    field: Field = dataclasses.field(default_factory=Field)

    def __post_init__(self):
        if not isinstance(self.hyperplanes, tuple):
            object.__setattr__(self, "hyperplanes", tuple(self.hyperplanes))
        labels = [h.label for h in self.hyperplanes]
        if len(set(labels)) != len(labels):
            raise ValueError(f"hyperplane labels must be unique, got {labels}")
        for h in self.hyperplanes:
            if len(h.normal) != self.dimension:
                raise ValueError(
                    f"hyperplane {h.label!r} has {len(h.normal)} coefficients, "
                    f"expected {self.dimension}"
                )
            for x in h.normal + (h.offset,):
                self.field.check(x)

    @classmethod
    def new(
        cls,
        normals: T.Sequence[T.Sequence[Scalar]],
        offsets: T.Sequence[Scalar] | None = None,
        labels: T.Sequence[str] | None = None,
        field: Field | None = None,
    ) -> "Arrangement":
        """
        Convenience constructor. Labels default to ``l1, l2, ...``, offsets to
        zero and the field to the smallest one holding every coefficient.
        """
        n = len(normals)
        if n == 0:
            raise ValueError("an arrangement needs at least one hyperplane")
        if offsets is None:
            offsets = [Fraction(0)] * n
        if labels is None:
            labels = [f"l{i}" for i in range(1, n + 1)]
        if len(offsets) != n or len(labels) != n:
            raise ValueError("normals, offsets and labels must have equal length")
        normals = [tuple(_to_scalar(x) for x in v) for v in normals]
        offsets = [_to_scalar(x) for x in offsets]
        if field is None:
            field = Field.of(itertools.chain(offsets, *normals))
        return cls(
            dimension=len(normals[0]),
            hyperplanes=tuple(
                Hyperplane(normal=v, offset=c, label=label)
                for v, c, label in zip(normals, offsets, labels)
            ),
            field=field,
        )

    @classmethod
    def from_trace(
        cls,
        lines: T.Sequence["ProjectiveFlat | T.Sequence[Scalar]"],
        labels: T.Sequence[str] | None = None,
    ) -> "Arrangement":
        """
        Central arrangement of planes through the origin of 3-space (more
        generally of ``(k+1)``-space) whose trace at infinity is ``lines``.
        """
        normals = [
            line.coefficients if isinstance(line, ProjectiveFlat) else tuple(line)
            for line in lines
        ]
        return cls.new(normals=normals, labels=labels)

    @property
    def n(self) -> int:
        return len(self.hyperplanes)

    @cached_property
    def normals(self) -> tuple[tuple[Scalar, ...], ...]:
        return tuple(h.normal for h in self.hyperplanes)

    @cached_property
    def offsets(self) -> tuple[Scalar, ...]:
        return tuple(h.offset for h in self.hyperplanes)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(h.label for h in self.hyperplanes)

    def rescale(self, i: int, factor: Scalar) -> "Arrangement":
        """
        Multiply the equation of the ``i``-th (1-based) hyperplane by ``factor``.
        """
        if factor == 0:
            raise ValueError("cannot rescale by zero")
        hyperplanes = list(self.hyperplanes)
        h = hyperplanes[i - 1]
        hyperplanes[i - 1] = Hyperplane(
            normal=tuple(factor * x for x in h.normal),
            offset=factor * h.offset,
            label=h.label,
        )
        return dataclasses.replace(self, hyperplanes=tuple(hyperplanes))

    # --- serialization
    def to_dict(self) -> dict[str, T.Any]:
        return {
            "dimension": self.dimension,
            "field": self.field.to_dict(),
            "hyperplanes": [h.to_dict() for h in self.hyperplanes],
        }

    @classmethod
    def from_dict(cls, data: dict[str, T.Any]) -> "Arrangement":
        field = Field.from_dict(data.get("field", {"type": "rational"}))
        hyperplanes = []
        for i, item in enumerate(data["hyperplanes"], start=1):
            try:
                normal = tuple(field.parse(x) for x in item["normal"])
                offset = field.parse(item.get("offset", 0))
            except ScalarParseError as e:
                e.details["hyperplane"] = i
                raise
            hyperplanes.append(
                Hyperplane(normal=normal, offset=offset, label=item.get("label", f"l{i}"))
            )
        return cls(
            dimension=int(data["dimension"]),
            hyperplanes=tuple(hyperplanes),
            field=field,
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def dump(self, path: Path):
        write_bytes(path=path, content=self.to_json().encode("utf-8"))

    @classmethod
    def loads(cls, text: str) -> "Arrangement":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ScalarParseError(
                f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}",
                line=e.lineno,
                column=e.colno,
            )
        data = data.get("arrangement", data)
        try:
            return cls.from_dict(data)
        except ScalarParseError as e:
            _locate(text, e)
            raise

    @classmethod
    def load(cls, path: Path) -> "Arrangement":
        return cls.loads(Path(path).read_text(encoding="utf-8"))

    def canonical_hash(self) -> str:
        """
        SHA-256 of the canonical JSON (sorted keys, compact separators).
        """
        text = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _to_scalar(x) -> Scalar:
    if isinstance(x, (int, str)):
        return parse_scalar(x)
    return x


def _locate(text: str, error: ScalarParseError):
    """
    Point a scalar error raised while reading a document at the line of the
    document it came from.
    """
    needle = error.details.get("text")
    if not needle:
        return
    for lineno, line in enumerate(text.splitlines(), start=1):
        col = line.find(f'"{needle}"')
        if col >= 0:
            error.details["line"] = lineno
            error.details["column"] = col + 1 + error.details.get("column", 1)
            error.message = f"line {lineno}: {error.message}"
            error.args = (error.message,)
            return


# ------------------------------------------------------------------------------
# Operations
# ------------------------------------------------------------------------------
def is_generic(arrangement: Arrangement) -> GenericityReport:
    """
    An arrangement of ``n`` hyperplanes in ``k``-space is generic when every
    ``p <= k`` of them meet in a ``(k - p)``-dimensional affine subspace.

    Subsets are scanned by increasing size so the returned witness is a
    minimal violating subset (1-based).
    """
    k = arrangement.dimension
    hs = arrangement.hyperplanes
    for p in range(1, min(k, len(hs)) + 1):
        for K in itertools.combinations(range(len(hs)), p):
            m = [hs[i].normal for i in K]
            if rank(m) < p:
                return GenericityReport(generic=False, witness=tuple(i + 1 for i in K))
            space = solution_space(m, [hs[i].offset for i in K])
            if space is None or space.dimension != k - p:  # pragma: no cover
                return GenericityReport(generic=False, witness=tuple(i + 1 for i in K))
    return GenericityReport(generic=True)


def ensure_generic(arrangement: Arrangement) -> Arrangement:
    report = is_generic(arrangement)
    if report.generic is False:
        raise NotGenericError(
            f"hyperplanes {list(report.witness)} are not in general position",
            K=list(report.witness),
        )
    return arrangement


def translate(arrangement: Arrangement, c: T.Sequence[Scalar]) -> Arrangement:
    """
    Shift hyperplane ``i`` to ``normal_i . x = offset_i + c_i``.
    """
    if len(c) != arrangement.n:
        raise ValueError(f"translate vector needs {arrangement.n} entries, got {len(c)}")
    hyperplanes = tuple(
        Hyperplane(normal=h.normal, offset=h.offset + arrangement.field.check(ci), label=h.label)
        for h, ci in zip(arrangement.hyperplanes, c)
    )
    return dataclasses.replace(arrangement, hyperplanes=hyperplanes)


def with_offsets(arrangement: Arrangement, offsets: T.Sequence[Scalar]) -> Arrangement:
    """
    Same normals, absolute offsets ``offsets``.
    """
    return translate(
        arrangement, [c - o for c, o in zip(offsets, arrangement.offsets, strict=True)]
    )


def trace_at_infinity(arrangement: Arrangement) -> list[ProjectiveFlat]:
    """
    The hyperplane at infinity of each member: its normal up to scale.
    """
    return [ProjectiveFlat.of(h.normal) for h in arrangement.hyperplanes]


def homogeneous_lines(arrangement: Arrangement) -> list[ProjectiveFlat]:
    """
    Projective lines ``a_1 x + a_2 y - c z = 0`` of a planar arrangement.
    """
    if arrangement.dimension != 2:
        raise ValueError("homogeneous_lines needs a planar arrangement")
    return [ProjectiveFlat.of(h.homogeneous()) for h in arrangement.hyperplanes]
