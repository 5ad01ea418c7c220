# -*- coding: utf-8 -*-

"""
Planar line configurations.

Lines are handled projectively (homogeneous coefficient vectors), so
intersections at infinity are ordinary points here. This module computes
incidence censuses, finds the collinearities among double points of a
generic line set, moves between affine charts, and realizes flats of
``B(n, 2, A)`` as concrete translates.
"""

import typing as T
import math
import random
import itertools
import dataclasses
from fractions import Fraction
from collections import Counter

from .constants import DEFAULT_SEED, DEFAULT_SAMPLE_BOUND, DEFAULT_MAX_SAMPLE_ROUNDS
from .exactfield import (
    Scalar,
    Field,
    cross,
    dot,
    rank,
    det,
    kernel,
    inverse,
    vec_mat,
    is_zero_vector,
)
from .arrangement import (
    Arrangement,
    ProjectiveFlat,
    homogeneous_lines,
    with_offsets,
)
from .discriminantal import DiscriminantalArrangement, build
from .lattice import Flat, flats_up_to_rank, classify
from .exc import (
    NotGenericError,
    DuplicateLineError,
    PreconditionError,
    SamplingExhaustedError,
)
from .typehint import T_PAIR
from .utils import format_index_set, format_family

T_LINES = T.Union[Arrangement, T.Sequence[ProjectiveFlat]]


def as_projective_lines(lines: T_LINES) -> list[ProjectiveFlat]:
    if isinstance(lines, Arrangement):
        return homogeneous_lines(lines)
    return [
        line if isinstance(line, ProjectiveFlat) else ProjectiveFlat.of(line)
        for line in lines
    ]


# ------------------------------------------------------------------------------
# Incidences
# ------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class IncidencePoint:
    point: ProjectiveFlat
    lines: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.lines)

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "point": self.point.to_list(),
            "lines": list(self.lines),
            "multiplicity": self.multiplicity,
        }


@dataclasses.dataclass(frozen=True)
class IncidenceStats:
    """
    :param s: number of lines
    :param points: every intersection point with the (1-based) lines on it
    :param t: ``t[k]`` is the number of points lying on exactly ``k`` lines
    """

    s: int
    points: tuple[IncidencePoint, ...]
    t: dict[int, int]

    def __post_init__(self):
        pairs = sum(count * math.comb(k, 2) for k, count in self.t.items())
        if pairs != math.comb(self.s, 2):
            raise ValueError(
                f"incidence census {self.t} does not account for "
                f"C({self.s}, 2) = {math.comb(self.s, 2)} pairs"
            )

    def count(self, k: int) -> int:
        return self.t.get(k, 0)

    def to_dict(self, include_points: bool = False) -> dict[str, T.Any]:
        data = {
            "s": self.s,
            "t": {str(k): v for k, v in sorted(self.t.items())},
        }
        if include_points:
            data["points"] = [p.to_dict() for p in self.points]
        return data


def incidence_stats(lines: T_LINES) -> IncidenceStats:
    """
    Intersect every pair of lines and group the intersections by point.

    :raises DuplicateLineError: when two lines are equal.
    """
    lines = as_projective_lines(lines)
    seen: dict[ProjectiveFlat, int] = {}
    for i, line in enumerate(lines, start=1):
        if line in seen:
            raise DuplicateLineError(
                f"lines {seen[line]} and {i} coincide",
                lines=[seen[line], i],
            )
        seen[line] = i
    groups: dict[ProjectiveFlat, set[int]] = {}
    for (i, li), (j, lj) in itertools.combinations(enumerate(lines, start=1), 2):
        p = ProjectiveFlat.of(cross(li.coefficients, lj.coefficients))
        groups.setdefault(p, set()).update((i, j))
    points = tuple(
        sorted(
            (IncidencePoint(point=p, lines=tuple(sorted(ls))) for p, ls in groups.items()),
            key=lambda x: x.lines,
        )
    )
    t = dict(sorted(Counter(p.multiplicity for p in points).items()))
    return IncidenceStats(s=len(lines), points=points, t=t)


def triple_points(stats: IncidenceStats) -> list[tuple[int, ...]]:
    return [p.lines for p in stats.points if p.multiplicity == 3]


def is_central(lines: T_LINES) -> bool:
    """
    All lines pass through one point.
    """
    lines = as_projective_lines(lines)
    return rank([line.coefficients for line in lines]) <= 2


def double_points(lines: T_LINES) -> dict[T_PAIR, ProjectiveFlat]:
    """
    ``P_ij = l_i ∩ l_j`` for every pair, keyed by the sorted 1-based pair.
    """
    lines = as_projective_lines(lines)
    return {
        (i, j): ProjectiveFlat.of(cross(lines[i - 1].coefficients, lines[j - 1].coefficients))
        for i, j in itertools.combinations(range(1, len(lines) + 1), 2)
    }


# ------------------------------------------------------------------------------
# Collinearities
# ------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class Collinearity:
    """
    Double points on pairwise disjoint index pairs lying on a common line,
    the ``axis``.
    """

    axis: ProjectiveFlat
    points: tuple[T_PAIR, ...]

    @property
    def name(self) -> str:
        return " ".join(format_index_set(p) for p in self.points)

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "axis": self.axis.to_list(),
            "points": [list(p) for p in self.points],
        }


def ensure_no_triple_points(lines: T.Sequence[ProjectiveFlat]):
    stats = incidence_stats(lines)
    for p in stats.points:
        if p.multiplicity >= 3:
            raise NotGenericError(
                f"lines {list(p.lines)} are concurrent",
                K=list(p.lines),
            )
    return stats


def collinearity_conditions(lines: T_LINES) -> list[Collinearity]:
    """
    Every maximal set of at least three double points, on pairwise disjoint
    index pairs, lying on one line.

    Two double points on disjoint pairs span a line that is not one of the
    input lines, so every double point on that line automatically has a pair
    disjoint from the others.

    :raises NotGenericError: if three input lines are concurrent.
    """
    lines = as_projective_lines(lines)
    ensure_no_triple_points(lines)
    doubles = double_points(lines)
    found: dict[ProjectiveFlat, tuple[T_PAIR, ...]] = {}
    for (p, P), (q, Q) in itertools.combinations(doubles.items(), 2):
        if set(p) & set(q):
            continue
        axis = ProjectiveFlat.of(cross(P.coefficients, Q.coefficients))
        if axis in found:
            continue
        on_axis = tuple(
            pair for pair, X in doubles.items() if dot(axis.coefficients, X.coefficients) == 0
        )
        found[axis] = on_axis
    result = [
        Collinearity(axis=axis, points=points)
        for axis, points in found.items()
        if len(points) >= 3
    ]
    return sorted(result, key=lambda c: c.points)


# ------------------------------------------------------------------------------
# Charts
# ------------------------------------------------------------------------------
Z_AT_INFINITY = (0, 0, 1)


@dataclasses.dataclass(frozen=True)
class ChartedArrangement:
    """
    An affine view of projective lines: ``chart`` is the line sent to
    infinity.
    """

    chart: ProjectiveFlat
    arrangement: Arrangement


def chart_matrix(chart: ProjectiveFlat | None) -> list[list[Scalar]]:
    """
    Invertible ``M`` with last row ``chart``; the new homogeneous coordinates
    are ``M x``, so the chart line becomes ``z = 0``.
    """
    h = ProjectiveFlat.of(Z_AT_INFINITY if chart is None else chart.coefficients)
    units = [tuple(Fraction(int(i == j)) for j in range(3)) for i in range(3)]
    for e1, e2 in itertools.combinations(units, 2):
        m = [list(e1), list(e2), list(h.coefficients)]
        if det(m) != 0:
            return m
    raise ValueError(f"cannot complete {h} to a basis")  # pragma: no cover


def affine_chart(
    lines: T_LINES,
    chart: ProjectiveFlat | None = None,
    labels: T.Sequence[str] | None = None,
) -> ChartedArrangement | None:
    """
    Map projective lines into the affine chart whose line at infinity is
    ``chart`` (``None`` means ``z = 0``). A line ``l`` becomes ``l M^-1``.

    Returns ``None`` when one of the lines is the chart line itself.
    """
    lines = as_projective_lines(lines)
    m = chart_matrix(chart)
    m_inv = inverse(m)
    normals = []
    offsets = []
    for line in lines:
        a, b, c = vec_mat(line.coefficients, m_inv)
        if a == 0 and b == 0:
            return None
        normals.append((a, b))
        offsets.append(-c)
    field = Field.of(itertools.chain(offsets, *normals))
    arrangement = Arrangement.new(normals=normals, offsets=offsets, labels=labels, field=field)
    return ChartedArrangement(chart=ProjectiveFlat.of(m[2]), arrangement=arrangement)


# ------------------------------------------------------------------------------
# Realization of flats
# ------------------------------------------------------------------------------
def realize_translate(
    arrangement: Arrangement,
    flat: Flat,
    rng: random.Random | None = None,
    bound: int | None = None,
    max_rounds: int | None = None,
    discriminantal: DiscriminantalArrangement | None = None,
) -> Arrangement:
    """
    A translate of ``arrangement`` lying in ``flat`` and in no other
    hyperplane of ``B(n, 2, A)``.

    The offsets vector is an integer combination of a kernel basis of the
    flat's normals, sampled with ``rng``; samples on an excluded ``D_L`` are
    rejected and the coefficient bound doubles every round. The hyperplanes
    indexed by ``L`` in the flat are concurrent in the result, no other
    triple is.

    :raises SamplingExhaustedError: when ``max_rounds`` rounds find no
        translate off every excluded ``D_L``.
    """
    if arrangement.dimension != 2:
        raise PreconditionError("realize_translate needs a planar arrangement")
    if discriminantal is None:
        discriminantal = build(arrangement)
    rng = random.Random(DEFAULT_SEED) if rng is None else rng
    bound = DEFAULT_SAMPLE_BOUND if bound is None else bound
    max_rounds = DEFAULT_MAX_SAMPLE_ROUNDS if max_rounds is None else max_rounds
    members = set(flat.indices)
    excluded = [h.alpha for h in discriminantal.hyperplanes if h.L not in members]
    basis = kernel(list(flat.subspace), n_cols=arrangement.n)
    for _ in range(max_rounds):
        for _ in range(8):
            coefficients = [rng.randint(-bound, bound) for _ in basis]
            c = [Fraction(0)] * arrangement.n
            for coef, v in zip(coefficients, basis):
                if coef:
                    c = [x + coef * y for x, y in zip(c, v)]
            if excluded and is_zero_vector(c):
                continue
            if all(dot(alpha, c) != 0 for alpha in excluded):
                return with_offsets(arrangement, [arrangement.field.check(x) for x in c])
        bound *= 2
    raise SamplingExhaustedError(
        f"no translate found in {max_rounds} rounds; flat {flat.indices} may be degenerate",
        family=format_family(flat.indices),
        rounds=max_rounds,
    )


@dataclasses.dataclass(frozen=True)
class QuadrilateralTranslate:
    """
    A simple rank-3 flat of multiplicity 4 with a translate realizing it.
    """

    flat: Flat
    arrangement: Arrangement
    stats: IncidenceStats

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "family": [format_index_set(L) for L in self.flat.indices],
            "translate": self.arrangement.to_dict(),
            "stats": self.stats.to_dict(),
        }


def quadrilateral_translates(
    arrangement: Arrangement,
    rng: random.Random | None = None,
    discriminantal: DiscriminantalArrangement | None = None,
) -> list[QuadrilateralTranslate]:
    """
    Every quadrilateral set of ``B(n, 2, A)`` (a simple rank-3 flat with
    four hyperplanes) together with a translate realizing it. For six lines
    each translate has exactly four triple points.
    """
    if discriminantal is None:
        discriminantal = build(arrangement)
    rng = random.Random(DEFAULT_SEED) if rng is None else rng
    lattice = flats_up_to_rank(discriminantal, 3)
    result = []
    for flat in lattice.flats(3):
        if flat.multiplicity != 4:
            continue
        if classify(discriminantal, flat).simple is False:
            continue
        translate = realize_translate(arrangement, flat, rng=rng, discriminantal=discriminantal)
        result.append(
            QuadrilateralTranslate(
                flat=flat,
                arrangement=translate,
                stats=incidence_stats(translate),
            )
        )
    return result
