# -*- coding: utf-8 -*-

"""
Sigma completion of a line set.

For a strong involution ``sigma`` every 2-element orbit ``{P, sigma(P)}`` of
double points spans an **orbit line**. The completion is the set of those
lines, and it is well defined when every double point lies on exactly one
of them: a non-fixed point on its own orbit line only, a fixed point on a
single orbit line.
"""

import typing as T
import dataclasses

from ..exactfield import cross, dot, parse_scalar
from ..arrangement import ProjectiveFlat
from ..planar import T_LINES, as_projective_lines, collinearity_conditions, double_points
from ..exc import (
    NoCollinearitiesError,
    NotStrongError,
    UncoverableFixedPointError,
    AmbiguousCoverError,
    InvolutionParseError,
)
from ..typehint import T_PAIR
from ..utils import format_index_set
from .involution import Involution, is_strong


@dataclasses.dataclass(frozen=True)
class CompletionResult:
    """
    :param sigma: the strong involution
    :param lines: orbit lines, in order of their first orbit
    :param orbit_map: double point ``(i, j)`` to the 0-based index of the
        completion line through it
    :param axes: indices of completion lines that are collinearity axes
    """

    sigma: Involution
    lines: tuple[ProjectiveFlat, ...]
    orbit_map: dict[T_PAIR, int]
    axes: tuple[int, ...]

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "sigma": self.sigma.to_list(),
            "lines": [line.to_list() for line in self.lines],
            "orbit_map": {
                f"{i},{j}": index for (i, j), index in sorted(self.orbit_map.items())
            },
            "axes": list(self.axes),
        }

    @classmethod
    def from_dict(cls, data: dict[str, T.Any], n: int) -> "CompletionResult":
        orbit_map = {}
        for key, index in data.get("orbit_map", {}).items():
            i, j = (int(x) for x in key.split(","))
            orbit_map[(i, j)] = int(index)
        return cls(
            sigma=Involution(n=n, transpositions=tuple(tuple(p) for p in data["sigma"])),
            lines=tuple(
                ProjectiveFlat.of([parse_scalar(x) for x in line]) for line in data["lines"]
            ),
            orbit_map=orbit_map,
            axes=tuple(data.get("axes", ())),
        )


def _on(line: ProjectiveFlat, point: ProjectiveFlat) -> bool:
    return dot(line.coefficients, point.coefficients) == 0


def sigma_completion(lines: T_LINES, sigma: Involution) -> CompletionResult:
    """
    :raises InvolutionParseError: when ``sigma`` does not act on the lines.
    :raises NoCollinearitiesError: when the double points have no collinearity.
    :raises NotStrongError: unless ``sigma`` is a strong non-identity
        involution of the lines.
    :raises AmbiguousCoverError: when two orbits share a line, or a
        non-fixed point lies on two orbit lines.
    :raises UncoverableFixedPointError: when a fixed point lies on no orbit
        line or on several.
    """
    lines = as_projective_lines(lines)
    if sigma.n != len(lines):
        raise InvolutionParseError(
            f"sigma acts on {sigma.n} indices but there are {len(lines)} lines",
            n=sigma.n,
            lines=len(lines),
        )
    collinearities = collinearity_conditions(lines)
    if not collinearities:
        raise NoCollinearitiesError("the double points have no collinearity")
    if sigma.is_identity or not is_strong(sigma, collinearities):
        raise NotStrongError(
            f"{sigma} is not a strong involution of the collinearities "
            f"{[c.name for c in collinearities]}",
            sigma=sigma.to_list(),
        )
    doubles = double_points(lines)

    # step 1: one line per 2-element orbit
    orbit_lines: list[ProjectiveFlat] = []
    orbit_of_line: dict[ProjectiveFlat, tuple[T_PAIR, T_PAIR]] = {}
    fixed: list[T_PAIR] = []
    for p in doubles:
        q = sigma.act_pair(p)
        if q == p:
            fixed.append(p)
            continue
        if q < p:
            continue
        line = ProjectiveFlat.of(cross(doubles[p].coefficients, doubles[q].coefficients))
        if line in orbit_of_line:
            other = orbit_of_line[line]
            raise AmbiguousCoverError(
                f"orbits {{{format_index_set(other[0])}, {format_index_set(other[1])}}} and "
                f"{{{format_index_set(p)}, {format_index_set(q)}}} span the same line",
                orbits=[list(map(list, other)), [list(p), list(q)]],
            )
        orbit_of_line[line] = (p, q)
        orbit_lines.append(line)

    # step 2: every double point on exactly one orbit line
    orbit_map: dict[T_PAIR, int] = {}
    for p, point in doubles.items():
        on = [index for index, line in enumerate(orbit_lines) if _on(line, point)]
        if p in fixed:
            if len(on) != 1:
                raise UncoverableFixedPointError(
                    f"fixed point P{format_index_set(p)} lies on {len(on)} orbit lines",
                    point=list(p),
                    lines=on,
                )
        elif len(on) != 1:
            raise AmbiguousCoverError(
                f"point P{format_index_set(p)} lies on {len(on)} orbit lines",
                point=list(p),
                lines=on,
            )
        orbit_map[p] = on[0]

    axes = {c.axis for c in collinearities}
    return CompletionResult(
        sigma=sigma,
        lines=tuple(orbit_lines),
        orbit_map=orbit_map,
        axes=tuple(i for i, line in enumerate(orbit_lines) if line in axes),
    )


def union_lines(lines: T_LINES, completion: CompletionResult) -> list[ProjectiveFlat]:
    return as_projective_lines(lines) + list(completion.lines)
