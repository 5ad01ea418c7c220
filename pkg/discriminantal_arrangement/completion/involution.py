# -*- coding: utf-8 -*-

"""
Involutions of ``[n]`` and their action on double points.

An involution ``sigma`` acts on pairs ``{i, j}`` (i.e. on the double points
``P_ij`` of a line set) and on index subsets. It is **strong** for a line
set when it maps the point set of every collinearity to itself.
"""

import typing as T
import re
import dataclasses
from functools import cached_property

from ..planar import T_LINES, Collinearity, as_projective_lines, collinearity_conditions
from ..exc import NoCollinearitiesError, InvolutionParseError
from ..typehint import T_PAIR, T_INDEX_SET

_CYCLE_PATTERN = re.compile(r"\(\s*(\d+)\s*[ ,]\s*(\d+)\s*\)")


@dataclasses.dataclass(frozen=True)
class Involution:
    """
    Product of disjoint transpositions of ``[n]``; the empty product is the
    identity.
    """

    n: int
    transpositions: tuple[T_PAIR, ...] = ()

    def __post_init__(self):
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.transpositions))
        seen = set()
        for i, j in pairs:
            if i == j:
                raise InvolutionParseError(
                    f"transposition ({i} {j}) swaps an index with itself",
                    transposition=[i, j],
                )
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise InvolutionParseError(
                    f"transposition ({i} {j}) is outside 1..{self.n}",
                    transposition=[i, j],
                    n=self.n,
                )
            if i in seen or j in seen:
                raise InvolutionParseError(
                    f"transpositions {pairs} are not disjoint",
                    transpositions=[list(p) for p in pairs],
                )
            seen.update((i, j))
        object.__setattr__(self, "transpositions", pairs)

    @classmethod
    def parse(cls, text: str, n: int) -> "Involution":
        """
        Parse cycle notation such as ``"(1 6)(2 5)(3 4)"``; ``"()"`` or
        ``"id"`` is the identity.
        """
        compact = text.strip()
        if compact in ("", "()", "id"):
            return cls(n=n)
        pairs = []
        pos = 0
        for m in _CYCLE_PATTERN.finditer(compact):
            if compact[pos : m.start()].strip():
                raise InvolutionParseError(f"cannot parse involution {text!r}", text=text)
            pairs.append((int(m.group(1)), int(m.group(2))))
            pos = m.end()
        if not pairs or compact[pos:].strip():
            raise InvolutionParseError(f"cannot parse involution {text!r}", text=text)
        return cls(n=n, transpositions=tuple(pairs))

    @cached_property
    def mapping(self) -> dict[int, int]:
        m = {i: i for i in range(1, self.n + 1)}
        for i, j in self.transpositions:
            m[i] = j
            m[j] = i
        return m

    @property
    def is_identity(self) -> bool:
        return len(self.transpositions) == 0

    @property
    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i, j in self.mapping.items() if i == j)

    def apply(self, i: int) -> int:
        return self.mapping[i]

    def act_pair(self, pair: T.Sequence[int]) -> T_PAIR:
        i, j = pair
        return tuple(sorted((self.apply(i), self.apply(j))))

    def act_subset(self, subset: T.Iterable[int]) -> T_INDEX_SET:
        return tuple(sorted(self.apply(i) for i in subset))

    def act_family(self, family: T.Iterable[T.Iterable[int]]) -> tuple[T_INDEX_SET, ...]:
        return tuple(sorted(self.act_subset(L) for L in family))

    def fixes_family(self, family: T.Iterable[T.Iterable[int]]) -> bool:
        family = tuple(sorted(tuple(sorted(L)) for L in family))
        return self.act_family(family) == family

    def one_line(self) -> str:
        """
        One-line notation, e.g. ``"215634"`` for ``(1 2)(3 5)(4 6)``.
        """
        return "".join(str(self.apply(i)) for i in range(1, self.n + 1))

    def to_list(self) -> list[list[int]]:
        return [list(p) for p in self.transpositions]

    def __str__(self):
        if self.is_identity:
            return "()"
        return "".join(f"({i} {j})" for i, j in self.transpositions)


def all_involutions(n: int) -> list[Involution]:
    """
    Every involution of ``[n]``, identity included (76 for ``n = 6``).
    """

    def extend(free: tuple[int, ...]) -> T.Iterator[tuple[T_PAIR, ...]]:
        if not free:
            yield ()
            return
        first, rest = free[0], free[1:]
        yield from extend(rest)
        for idx, other in enumerate(rest):
            remaining = rest[:idx] + rest[idx + 1 :]
            for tail in extend(remaining):
                yield ((first, other),) + tail

    return sorted(
        (Involution(n=n, transpositions=pairs) for pairs in extend(tuple(range(1, n + 1)))),
        key=lambda s: (len(s.transpositions), s.transpositions),
    )


def is_strong(sigma: Involution, collinearities: T.Sequence[Collinearity]) -> bool:
    """
    ``sigma`` maps the point set of every collinearity onto itself.
    """
    for c in collinearities:
        points = set(c.points)
        if {sigma.act_pair(p) for p in points} != points:
            return False
    return True


def strong_involutions(lines: T_LINES) -> list[Involution]:
    """
    Non-identity involutions that are strong for ``lines``.

    The identity fixes every collinearity but has no 2-element orbit, so it
    completes nothing and is left out.

    :raises NoCollinearitiesError: when the lines have no collinearity.
    """
    lines = as_projective_lines(lines)
    collinearities = collinearity_conditions(lines)
    if not collinearities:
        raise NoCollinearitiesError("the double points have no collinearity")
    n = len(lines)
    return [
        sigma
        for sigma in all_involutions(n)
        if not sigma.is_identity and is_strong(sigma, collinearities)
    ]
