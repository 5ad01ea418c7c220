# -*- coding: utf-8 -*-

"""
The discriminantal arrangement ``B(n, k, A)``.

Given a generic arrangement ``A`` of ``n`` hyperplanes in ``k``-space, the
space of translates ``A^t`` is parametrized by the offsets vector
``c in K^n``. For every ``(k+1)``-subset ``L`` of ``[n]`` the translates
whose hyperplanes indexed by ``L`` share a point form a hyperplane ``D_L``
through the origin of ``K^n``. Its normal ``alpha_L`` is the cofactor
expansion of the augmented ``(k+1) x (k+1)`` system along the offsets
column, which is why ``alpha_L . c = 0`` iff those hyperplanes of the
translate with offsets ``c`` are concurrent.

Only the trace at infinity (the normals) enters the construction.
"""

import typing as T
import itertools
import dataclasses
from fractions import Fraction
from functools import cached_property

from .exactfield import Scalar, Field, det, dot, rank, canonical_vector, format_scalar
from .arrangement import Arrangement, ensure_generic
from .exc import DegenerateSubsetError
from .typehint import T_INDEX_SET
from .utils import format_index_set


def alpha_normal(
    arrangement: Arrangement,
    L: T.Sequence[int],
) -> tuple[Scalar, ...]:
    """
    Canonical normal of ``D_L``.

    The coordinate at ``i_j`` (``j`` the 1-based position in sorted ``L``) is
    ``(-1)^j`` times the determinant of the normals indexed by ``L`` without
    ``i_j``; all other coordinates are zero.

    :raises DegenerateSubsetError: when one of those ``k x k`` minors
        vanishes, i.e. ``L`` is not in general position.
    """
    L = tuple(sorted(L))
    k = arrangement.dimension
    if len(L) != k + 1 or len(set(L)) != len(L):
        raise ValueError(f"L must hold {k + 1} distinct indices, got {L}")
    n = arrangement.n
    if L[0] < 1 or L[-1] > n:
        raise ValueError(f"L = {L} is outside 1..{n}")
    normals = arrangement.normals
    alpha: list[Scalar] = [Fraction(0)] * n
    for j, i in enumerate(L, start=1):
        minor = det([normals[m - 1] for m in L if m != i])
        if minor == 0:
            raise DegenerateSubsetError(
                f"normals {[m for m in L if m != i]} are linearly dependent",
                L=list(L),
            )
        alpha[i - 1] = minor if j % 2 == 0 else -minor
    return canonical_vector(alpha)


@dataclasses.dataclass(frozen=True)
class DiscriminantalHyperplane:
    """
    ``D_L`` with its canonical normal ``alpha``; ``alpha`` is nonzero exactly
    on ``L``.
    """

    L: T_INDEX_SET
    alpha: tuple[Scalar, ...]

    @property
    def name(self) -> str:
        return format_index_set(self.L)

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "L": list(self.L),
            "alpha": [format_scalar(x) for x in self.alpha],
        }


@dataclasses.dataclass(frozen=True)
class DiscriminantalArrangement:
    """
    ``B(n, k, A)``: ``C(n, k+1)`` central hyperplanes of ``K^n`` in
    lexicographic order of ``L``.
    """

    n: int
    k: int
    hyperplanes: tuple[DiscriminantalHyperplane, ...]
    field: Field = dataclasses.field(default_factory=Field)
    #: normals of the source arrangement, the only data the construction reads
    normals: tuple[tuple[Scalar, ...], ...] = ()

    @cached_property
    def _position(self) -> dict[T_INDEX_SET, int]:
        return {h.L: i for i, h in enumerate(self.hyperplanes)}

    @cached_property
    def rank(self) -> int:
        return rank([h.alpha for h in self.hyperplanes])

    @property
    def subsets(self) -> list[T_INDEX_SET]:
        return [h.L for h in self.hyperplanes]

    def index_of(self, L: T.Sequence[int]) -> int:
        """
        0-based position of ``D_L``.
        """
        try:
            return self._position[tuple(sorted(L))]
        except KeyError:
            raise ValueError(f"{tuple(L)} is not a {self.k + 1}-subset of 1..{self.n}")

    def alpha_of(self, L: T.Sequence[int]) -> tuple[Scalar, ...]:
        return self.hyperplanes[self.index_of(L)].alpha

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "n": self.n,
            "k": self.k,
            "rank": self.rank,
            "normals": [[format_scalar(x) for x in v] for v in self.normals],
            "hyperplanes": [h.to_dict() for h in self.hyperplanes],
        }


def build(arrangement: Arrangement) -> DiscriminantalArrangement:
    """
    All ``C(n, k+1)`` hyperplanes of ``B(n, k, A)``, ordered
    lexicographically by ``L``.

    :raises NotGenericError: when ``A`` is not generic.
    """
    ensure_generic(arrangement)
    n = arrangement.n
    k = arrangement.dimension
    if n < k + 1:
        raise ValueError(f"B(n, k) needs n > k, got n = {n}, k = {k}")
    hyperplanes = tuple(
        DiscriminantalHyperplane(L=L, alpha=alpha_normal(arrangement, L))
        for L in itertools.combinations(range(1, n + 1), k + 1)
    )
    return DiscriminantalArrangement(
        n=n,
        k=k,
        hyperplanes=hyperplanes,
        field=arrangement.field,
        normals=tuple(arrangement.normals),
    )


def incident_subsets(
    discriminantal: DiscriminantalArrangement,
    c: T.Sequence[Scalar],
) -> list[T_INDEX_SET]:
    """
    Every ``L`` with ``alpha_L . c = 0``: the ``(k+1)``-subsets of hyperplanes
    that are concurrent in the translate with absolute offsets ``c``.
    """
    if len(c) != discriminantal.n:
        raise ValueError(f"c needs {discriminantal.n} entries, got {len(c)}")
    return [h.L for h in discriminantal.hyperplanes if dot(h.alpha, c) == 0]
