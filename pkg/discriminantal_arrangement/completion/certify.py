# -*- coding: utf-8 -*-

"""
Certification of a sigma completion.

The union of six lines and their completion has 12 lines. It has the maximal
number of triple points when ``t3 == 19``, and the minimal number of ordinary
points when ``t2 == 6``. Both are related to flats of the discriminantal
arrangement ``B(6, 3, A_inf)`` built on the trace: a collinearity
``{P_ab, P_cd, P_ef}`` gives the rank-2 flat made of the three 4-subsets
``cdef``, ``abef`` and ``abcd``.
"""

import typing as T
import itertools
import dataclasses

from ..arrangement import Arrangement, ProjectiveFlat
from ..discriminantal import build, incident_subsets
from ..lattice import Flat, closure, classify, flats_up_to_rank
from ..planar import (
    T_LINES,
    Collinearity,
    IncidenceStats,
    as_projective_lines,
    incidence_stats,
    is_central,
    affine_chart,
)
from ..exc import (
    PatternError,
    NotGenericError,
    DiscrimError,
)
from ..typehint import T_INDEX_SET
from ..utils import format_family
from .involution import Involution
from .sigma import CompletionResult, sigma_completion, union_lines

T_FAMILY = tuple[T_INDEX_SET, ...]

UNION_SIZE = 12
MAX_TRIPLE_POINTS = 19
MIN_ORDINARY_POINTS = 6


def _family(flat: "Flat | T.Iterable[T.Iterable[int]]") -> T_FAMILY:
    if isinstance(flat, Flat):
        return flat.indices
    return tuple(sorted(tuple(sorted(L)) for L in flat))


# ------------------------------------------------------------------------------
# Flats of B(n, 3, A_inf)
# ------------------------------------------------------------------------------
def collinearity_flat(collinearity: "Collinearity | T.Sequence[T.Sequence[int]]") -> T_FAMILY:
    """
    ``{P_ab, P_cd, P_ef}`` to ``{cdef, abef, abcd}``.

    :raises PatternError: unless there are exactly three points.
    """
    points = collinearity.points if isinstance(collinearity, Collinearity) else collinearity
    points = [tuple(p) for p in points]
    if len(points) != 3:
        raise PatternError(
            f"a collinearity flat needs exactly 3 points, got {len(points)}",
            points=[list(p) for p in points],
        )
    family = []
    for i in range(3):
        others = points[:i] + points[i + 1 :]
        family.append(tuple(sorted(itertools.chain.from_iterable(others))))
    return tuple(sorted(family))


def independent(P, Q) -> bool:
    """
    Two flats are independent when they share no hyperplane. A flat is never
    independent of itself.
    """
    P, Q = _family(P), _family(Q)
    if P == Q:
        return False
    return not (set(P) & set(Q))


def purely_dependent(P, P1, P2, P3) -> bool:
    """
    ``P`` has exactly three hyperplanes, one taken from each of ``P1``,
    ``P2`` and ``P3`` and none shared by two of them.
    """
    P = _family(P)
    others = [set(_family(X)) for X in (P1, P2, P3)]
    if len(P) != 3:
        return False
    used = []
    for L in P:
        owners = [i for i, X in enumerate(others) if L in X]
        if len(owners) != 1:
            return False
        used.append(owners[0])
    return sorted(used) == [0, 1, 2]


def triple_flats(lines: T_LINES) -> list[Flat]:
    """
    Rank-2 flats of multiplicity 3 in ``B(n, 3, A_inf)``, where ``A_inf`` is
    the central arrangement whose trace at infinity is ``lines``.
    """
    lines = as_projective_lines(lines)
    discriminantal = build(Arrangement.from_trace(lines))
    lattice = flats_up_to_rank(discriminantal, 2)
    return [flat for flat in lattice.flats(2) if flat.multiplicity == 3]


def max_independent_count(flats: T.Sequence) -> int:
    """
    Size of a largest pairwise independent sub-family of ``flats``.
    """
    families = list(dict.fromkeys(_family(f) for f in flats))
    for size in range(len(families), 0, -1):
        for sub in itertools.combinations(families, size):
            if all(independent(p, q) for p, q in itertools.combinations(sub, 2)):
                return size
    return 0


def purely_dependent_fixed(flats: T.Sequence, sigma: Involution) -> list[T_FAMILY]:
    """
    ``sigma``-fixed flats that are purely dependent on three other flats of
    ``flats``.
    """
    families = list(dict.fromkeys(_family(f) for f in flats))
    result = []
    for P in families:
        if not sigma.fixes_family(P):
            continue
        others = [Q for Q in families if Q != P]
        if any(purely_dependent(P, *triple) for triple in itertools.combinations(others, 3)):
            result.append(P)
    return result


# ------------------------------------------------------------------------------
# Union census
# ------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class UnionCertificate:
    stats: IncidenceStats
    max_triple: bool
    min_ordinary: bool
    completion_central: bool
    purely_dependent_fixed: tuple[T_FAMILY, ...]
    independent_count: int

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "stats": self.stats.to_dict(),
            "max_triple": self.max_triple,
            "min_ordinary": self.min_ordinary,
            "completion_central": self.completion_central,
            "purely_dependent_fixed": [format_family(P) for P in self.purely_dependent_fixed],
            "independent_count": self.independent_count,
        }


def union_certify(lines: T_LINES, completion: CompletionResult) -> UnionCertificate:
    lines = as_projective_lines(lines)
    stats = incidence_stats(union_lines(lines, completion))
    flats = triple_flats(lines)
    return UnionCertificate(
        stats=stats,
        max_triple=stats.count(3) == MAX_TRIPLE_POINTS and stats.s == UNION_SIZE,
        min_ordinary=stats.count(2) == MIN_ORDINARY_POINTS and stats.s == UNION_SIZE,
        completion_central=is_central(list(completion.lines)),
        purely_dependent_fixed=tuple(purely_dependent_fixed(flats, completion.sigma)),
        independent_count=max_independent_count(flats),
    )


# ------------------------------------------------------------------------------
# Charts of the completion
# ------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class ChartWitness:
    """
    The completion seen in the affine chart ``chart``, as a translate of an
    arrangement with normals pairwise independent, and the flat of
    ``B(s, 2, .)`` its offsets lie in.
    """

    chart: ProjectiveFlat
    arrangement: Arrangement
    flat: Flat
    simple: bool

    @property
    def is_quadrilateral(self) -> bool:
        return self.simple and self.flat.rank == 3 and self.flat.multiplicity == 4

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "chart": self.chart.to_list(),
            "family": format_family(self.flat.indices),
            "rank": self.flat.rank,
            "multiplicity": self.flat.multiplicity,
            "simple": self.simple,
        }


def completion_charts(
    completion_lines: T.Sequence[ProjectiveFlat],
    charts: T.Iterable[ProjectiveFlat | None],
) -> T.Iterator[ChartWitness]:
    """
    Yield a witness for every chart in which no completion line is at
    infinity and no two completion lines are parallel, skipping charts in
    which the completion has no triple point.
    """
    seen = set()
    for chart in charts:
        charted = affine_chart(completion_lines, chart=chart)
        if charted is None or charted.chart in seen:
            continue
        seen.add(charted.chart)
        arrangement = charted.arrangement
        try:
            discriminantal = build(arrangement)
        except NotGenericError:
            # two lines meet on the chart line
            continue
        subsets = incident_subsets(discriminantal, arrangement.offsets)
        if not subsets:
            continue
        flat = closure(discriminantal, subsets)
        yield ChartWitness(
            chart=charted.chart,
            arrangement=arrangement,
            flat=flat,
            simple=classify(discriminantal, flat).simple,
        )


# ------------------------------------------------------------------------------
# Conjecture harness
# ------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class ClauseVerdict:
    applicable: bool
    lhs: bool | None = None
    rhs: bool | None = None
    details: dict[str, T.Any] = dataclasses.field(default_factory=dict)

    @property
    def agree(self) -> bool | None:
        if not self.applicable:
            return None
        return self.lhs == self.rhs

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "applicable": self.applicable,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "agree": self.agree,
            "details": self.details,
        }


@dataclasses.dataclass(frozen=True)
class ConjectureReport:
    sigma: Involution
    independent_count: int
    sigma_fixes_triple_flats: bool
    clause_1: ClauseVerdict
    clause_2: ClauseVerdict
    certificate: UnionCertificate | None = None
    completion_error: str | None = None

    @property
    def hypotheses_hold(self) -> bool:
        return self.independent_count == 3 and self.sigma_fixes_triple_flats

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "sigma": str(self.sigma),
            "hypotheses": {
                "independent_count": self.independent_count,
                "sigma_fixes_triple_flats": self.sigma_fixes_triple_flats,
                "hold": self.hypotheses_hold,
            },
            "clause_1": self.clause_1.to_dict(),
            "clause_2": self.clause_2.to_dict(),
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "completion_error": self.completion_error,
        }


def conjecture_report(lines: T_LINES, sigma: Involution) -> ConjectureReport:
    """
    Evaluate both clauses on one instance.

    - clause 1: ``t2 == 6`` iff some ``sigma``-fixed triple flat is purely
      dependent and the completion is central.
    - clause 2: ``t3 == 19`` iff in some chart (``z = 0`` or one of the 12
      union lines) the completion is a translate lying in a simple rank-3
      flat of multiplicity 4 of ``B(6, 2, .)``.

    Both clauses are inapplicable when the completion does not exist, for
    any reason ``sigma_completion`` reports; the error code is kept in
    ``completion_error``.
    """
    lines = as_projective_lines(lines)
    flats = triple_flats(lines)
    independent_count = max_independent_count(flats)
    fixes_all = sigma.n == len(lines) and all(sigma.fixes_family(f.indices) for f in flats)
    try:
        completion = sigma_completion(lines, sigma)
    except DiscrimError as e:
        inapplicable = ClauseVerdict(applicable=False, details={"reason": e.code})
        return ConjectureReport(
            sigma=sigma,
            independent_count=independent_count,
            sigma_fixes_triple_flats=fixes_all,
            clause_1=inapplicable,
            clause_2=inapplicable,
            completion_error=e.code,
        )
    certificate = union_certify(lines, completion)

    clause_1 = ClauseVerdict(
        applicable=True,
        lhs=certificate.min_ordinary,
        rhs=bool(certificate.purely_dependent_fixed) and certificate.completion_central,
        details={
            "t2": certificate.stats.count(2),
            "purely_dependent_fixed": [format_family(P) for P in certificate.purely_dependent_fixed],
            "completion_central": certificate.completion_central,
        },
    )

    charts = [None] + union_lines(lines, completion)
    witnesses = list(completion_charts(list(completion.lines), charts))
    quadrilateral = next((w for w in witnesses if w.is_quadrilateral), None)
    multiplicities = [w.flat.multiplicity for w in witnesses if w.simple and w.flat.rank == 3]
    details = {
        "t3": certificate.stats.count(3),
        "charts_tried": len(witnesses),
        "max_simple_rank_3_multiplicity": max(multiplicities, default=0),
        "witness": None if quadrilateral is None else quadrilateral.to_dict(),
    }
    if len(completion.lines) == 6:
        clause_2 = ClauseVerdict(
            applicable=True,
            lhs=certificate.max_triple,
            rhs=quadrilateral is not None,
            details=details,
        )
    else:
        details["reason"] = f"completion has {len(completion.lines)} lines, not 6"
        clause_2 = ClauseVerdict(applicable=False, details=details)

    return ConjectureReport(
        sigma=sigma,
        independent_count=independent_count,
        sigma_fixes_triple_flats=fixes_all,
        clause_1=clause_1,
        clause_2=clause_2,
        certificate=certificate,
    )
