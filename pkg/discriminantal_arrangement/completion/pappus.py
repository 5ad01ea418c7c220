# -*- coding: utf-8 -*-

"""
Pappus six-line configurations.

Three points ``A_1, A_2, A_3`` on carrier ``a`` and three points
``B_1, B_2, B_3`` on carrier ``b`` give the six lines

====  =======
l1    A1 B2
l2    A1 B3
l3    A2 B1
l4    A2 B3
l5    A3 B1
l6    A3 B2
====  =======

whose double points carry three collinearities: ``{12, 34, 56}`` on carrier
``a``, ``{16, 24, 35}`` on carrier ``b`` and ``{13, 25, 46}`` on the Pappus
axis. The parameters can be tuned so that the three axes are concurrent,
and additionally so that ``{16, 25, 34}`` becomes a fourth collinearity.

With the crossing carriers and ``u = 1/a``, ``v = 1/b`` both conditions are
linear in ``v``::

    concurrency:   (u3 - u2) v1 + (u1 - u3) v2 + (u2 - u1) v3 = 0
    fourth line:   (u2 - u1) v1 + (u1 - u3) v2 + (u3 - u2) v3 = 0

and together (with ``v1 != v3``) they amount to concurrency plus
``2 u2 = u1 + u3``. The tuning functions solve them with ``sympy`` instead of
relying on these closed forms, so they also work for the parallel carriers.
"""

import typing as T
import dataclasses
from fractions import Fraction

import sympy as sp

from ..constants import PappusCarrierEnum, PappusKindEnum
from ..exactfield import cross, det, format_scalar, parse_scalar
from ..arrangement import Arrangement
from ..planar import incidence_stats, collinearity_conditions
from ..exc import (
    DegenerateParametersError,
    DuplicateLineError,
    NoRationalSolutionError,
    PreconditionError,
)

PARAMETER_NAMES = ("a1", "a2", "a3", "b1", "b2", "b3")

LINE_POINTS = ((1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2))
"""
``(i, j)`` such that line ``l_k`` joins ``A_i`` and ``B_j``.
"""

PAPPUS_AXIS_POINTS = ((1, 3), (2, 5))
FOURTH_COLLINEARITY = ((1, 6), (2, 5), (3, 4))


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        value = parse_scalar(x)
        if not isinstance(value, Fraction):
            raise PreconditionError(f"Pappus parameters are rational, got {x!r}")
        return value
    raise PreconditionError(f"Pappus parameters are rational, got {x!r}")


@dataclasses.dataclass(frozen=True)
class PappusParams:
    a: tuple[Fraction, Fraction, Fraction]
    b: tuple[Fraction, Fraction, Fraction]
    carriers: PappusCarrierEnum = PappusCarrierEnum.crossing

    def __post_init__(self):
        for name in ("a", "b"):
            values = tuple(_to_fraction(x) for x in getattr(self, name))
            if len(values) != 3:
                raise PreconditionError(f"{name} needs three values, got {len(values)}")
            object.__setattr__(self, name, values)
        object.__setattr__(self, "carriers", PappusCarrierEnum(self.carriers))

    def get(self, name: str) -> Fraction:
        return self._values()[PARAMETER_NAMES.index(name)]

    def _values(self) -> tuple[Fraction, ...]:
        return self.a + self.b

    def replace(self, name: str, value) -> "PappusParams":
        if name not in PARAMETER_NAMES:
            raise PreconditionError(
                f"unknown parameter {name!r}, choose from {PARAMETER_NAMES}",
                name=name,
            )
        values = list(self._values())
        values[PARAMETER_NAMES.index(name)] = _to_fraction(value)
        return PappusParams(a=tuple(values[:3]), b=tuple(values[3:]), carriers=self.carriers)

    def symbolic(self, symbols: dict[str, sp.Symbol]) -> tuple[list, list]:
        values = [
            symbols[name] if name in symbols else sp.Rational(v.numerator, v.denominator)
            for name, v in zip(PARAMETER_NAMES, self._values())
        ]
        return values[:3], values[3:]

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "a": [format_scalar(x) for x in self.a],
            "b": [format_scalar(x) for x in self.b],
            "carriers": self.carriers.value,
        }

    @classmethod
    def from_dict(cls, data: dict[str, T.Any]) -> "PappusParams":
        return cls(
            a=tuple(data["a"]),
            b=tuple(data["b"]),
            carriers=data.get("carriers", PappusCarrierEnum.crossing.value),
        )


PAPPUS_INSTANCES: dict[PappusKindEnum, PappusParams] = {
    # b3 solved by concurrency_tune with b = (1, -1, ?)
    PappusKindEnum.p: PappusParams(a=(1, 2, 4), b=(1, -1, "-1/2")),
    PappusKindEnum.pc: PappusParams(a=(1, -2, "-1/2"), b=(1, 3, -3)),
    PappusKindEnum.skew: PappusParams(a=(1, 2, 4), b=(1, 3, 5)),
}


# ------------------------------------------------------------------------------
# Geometry, written once for exact and for symbolic values
# ------------------------------------------------------------------------------
def _points(a: T.Sequence, b: T.Sequence, carriers: PappusCarrierEnum, zero, one):
    A = [(ai, zero, one) for ai in a]
    if carriers == PappusCarrierEnum.crossing:
        B = [(zero, bj, one) for bj in b]
    else:
        B = [(bj, one, one) for bj in b]
    return A, B


def _lines(a, b, carriers, zero, one) -> list[tuple]:
    A, B = _points(a, b, carriers, zero, one)
    return [cross(A[i - 1], B[j - 1]) for i, j in LINE_POINTS]


def _axes(a, b, carriers, zero, one) -> list[tuple]:
    A, B = _points(a, b, carriers, zero, one)
    lines = _lines(a, b, carriers, zero, one)
    (p, q), (r, s) = PAPPUS_AXIS_POINTS
    pappus_axis = cross(
        cross(lines[p - 1], lines[q - 1]),
        cross(lines[r - 1], lines[s - 1]),
    )
    return [cross(A[0], A[1]), cross(B[0], B[1]), pappus_axis]


def _fourth_points(a, b, carriers, zero, one) -> list[tuple]:
    lines = _lines(a, b, carriers, zero, one)
    return [cross(lines[i - 1], lines[j - 1]) for i, j in FOURTH_COLLINEARITY]


def _exact(params: PappusParams):
    return params.a, params.b, params.carriers, Fraction(0), Fraction(1)


def _symbolic(params: PappusParams, symbols: dict[str, sp.Symbol]):
    a, b = params.symbolic(symbols)
    return a, b, params.carriers, sp.Integer(0), sp.Integer(1)


def axes_concurrent(params: PappusParams) -> bool:
    """
    The two carriers and the Pappus axis share a point, possibly at infinity.
    """
    return det(_axes(*_exact(params))) == 0


def pappus_generator(params: PappusParams) -> Arrangement:
    """
    The six lines ``l1..l6`` as a planar arrangement.

    :raises DegenerateParametersError: on coincident points, a point at the
        meet of the carriers, or three concurrent lines.
    """
    a, b = params.a, params.b
    if len(set(a)) != 3 or len(set(b)) != 3:
        raise DegenerateParametersError(
            "points on a carrier must be distinct", **params.to_dict()
        )
    if params.carriers == PappusCarrierEnum.crossing and (0 in a or 0 in b):
        raise DegenerateParametersError(
            "no point may sit at the meet of the carriers", **params.to_dict()
        )
    homogeneous = _lines(*_exact(params))
    arrangement = Arrangement.new(
        normals=[(-p, -q) for p, q, _ in homogeneous],
        offsets=[r for _, _, r in homogeneous],
    )
    try:
        stats = incidence_stats(arrangement)
    except DuplicateLineError as e:  # pragma: no cover
        raise DegenerateParametersError(e.message, **params.to_dict())
    for point in stats.points:
        if point.multiplicity >= 3:
            raise DegenerateParametersError(
                f"lines {list(point.lines)} are concurrent",
                K=list(point.lines),
                **params.to_dict(),
            )
    return arrangement


def _numerator(expr) -> sp.Expr:
    numer, _ = sp.fraction(sp.together(expr))
    return sp.expand(numer)


def _to_fraction_value(r: sp.Rational) -> Fraction:
    return Fraction(int(r.p), int(r.q))


def _is_usable(params: PappusParams) -> bool:
    try:
        pappus_generator(params)
    except DegenerateParametersError:
        return False
    return True


def concurrency_tune(params: PappusParams, free: str) -> PappusParams:
    """
    Solve for the parameter named ``free`` so that the three axes are
    concurrent.

    :raises NoRationalSolutionError: when the condition does not depend on
        ``free`` or has no rational, nondegenerate root.
    """
    symbol = sp.Symbol(free)
    numer = _numerator(sp.Matrix(_axes(*_symbolic(params, {free: symbol}))).det())
    if numer == 0:
        # concurrent whatever the value
        return params
    poly = sp.Poly(numer, symbol)
    if poly.degree() <= 0:
        raise NoRationalSolutionError(
            f"axis concurrency does not depend on {free}", free=free, **params.to_dict()
        )
    for root in sorted(sp.roots(poly, filter="Q")):
        candidate = params.replace(free, _to_fraction_value(root))
        if _is_usable(candidate) and axes_concurrent(candidate):
            return candidate
    raise NoRationalSolutionError(
        f"no rational nondegenerate value of {free} makes the axes concurrent",
        free=free,
        **params.to_dict(),
    )


def four_collinearity_tune(
    params: PappusParams,
    free: tuple[str, str] = ("a2", "b3"),
) -> PappusParams:
    """
    Solve for two parameters so that the axes are concurrent and
    ``P16, P25, P34`` are collinear.
    """
    x, y = (sp.Symbol(name) for name in free)
    exprs = _symbolic(params, {free[0]: x, free[1]: y})
    e1 = _numerator(sp.Matrix(_axes(*exprs)).det())
    e2 = _numerator(sp.Matrix(_fourth_points(*exprs)).det())
    solutions = []
    for sol in sp.solve([e1, e2], [x, y], dict=True):
        if x not in sol or y not in sol:
            continue
        vx, vy = sol[x], sol[y]
        if not (vx.is_Rational and vy.is_Rational):
            continue
        solutions.append((_to_fraction_value(vx), _to_fraction_value(vy)))
    for vx, vy in sorted(solutions):
        candidate = params.replace(free[0], vx).replace(free[1], vy)
        if not _is_usable(candidate):
            continue
        if len(collinearity_conditions(pappus_generator(candidate))) == 4:
            return candidate
    raise NoRationalSolutionError(
        f"no rational nondegenerate values of {free} give four collinearities",
        free=list(free),
        **params.to_dict(),
    )
