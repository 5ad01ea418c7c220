# -*- coding: utf-8 -*-

"""
Intersection lattice of a discriminantal arrangement.

A **flat** is an intersection of hyperplanes ``D_L``; it is stored by its
closure (every ``L`` whose ``D_L`` contains it), its rank and the RREF basis
of the span of its normals, which is the canonical key used to deduplicate
flats during enumeration.

A flat of ``B(n, k, A)`` is **simple** when no sub-family of its hyperplanes
intersects exactly in some ``D_K = ∩_{L ⊆ K} D_L`` with ``|K| >= k + 2``.
Since every ``(k+1)``-subset of ``K`` is then among the flat's indices, a flat
is not simple iff some ``(k+2)``-subset ``K`` has all of its
``(k+1)``-subsets in the closure; that is the test :func:`classify` runs.
A simple flat whose multiplicity exceeds its rank is **non very generic**.
"""

import typing as T
import itertools
import dataclasses
from collections import Counter

from func_args.api import REQ

from .exactfield import Scalar, rref, in_row_space
from .discriminantal import DiscriminantalArrangement
from .foundation import BaseLogger
from .typehint import T_INDEX_SET
from .utils import format_family


@dataclasses.dataclass(frozen=True)
class Flat:
    """
    :param indices: sorted ``L``s of every ``D_L`` containing the flat
    :param rank: codimension of the flat
    :param witness: first spanning sub-family, chosen greedily in index order
    :param subspace: RREF rows spanning the normals
    :param pivots: pivot columns of ``subspace``
    """

    indices: tuple[T_INDEX_SET, ...]
    rank: int
    witness: tuple[T_INDEX_SET, ...]
    subspace: tuple[tuple[Scalar, ...], ...]
    pivots: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.indices)

    def contains_normal(self, alpha: T.Sequence[Scalar]) -> bool:
        return in_row_space(alpha, self.subspace, self.pivots)

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "indices": format_family(self.indices),
            "rank": self.rank,
            "multiplicity": self.multiplicity,
            "witness": format_family(self.witness),
        }


def closure(
    discriminantal: DiscriminantalArrangement,
    subsets: T.Iterable[T.Sequence[int]],
) -> Flat:
    """
    Smallest flat containing the hyperplanes indexed by ``subsets``: every
    ``D_L`` whose normal lies in the span of theirs.
    """
    alphas = [discriminantal.alpha_of(L) for L in subsets]
    if not alphas:
        raise ValueError("closure of an empty family is the whole space")
    rows, pivots = rref(alphas)
    indices = tuple(
        h.L for h in discriminantal.hyperplanes if in_row_space(h.alpha, rows, pivots)
    )
    witness = []
    span_rows, span_pivots = (), ()
    for L in indices:
        alpha = discriminantal.alpha_of(L)
        if not in_row_space(alpha, span_rows, span_pivots):
            witness.append(L)
            span_rows, span_pivots = rref([discriminantal.alpha_of(W) for W in witness])
            if len(witness) == len(rows):
                break
    return Flat(
        indices=indices,
        rank=len(rows),
        witness=tuple(witness),
        subspace=rows,
        pivots=pivots,
    )


def D_K(
    discriminantal: DiscriminantalArrangement,
    K: T.Sequence[int],
) -> Flat:
    """
    ``∩_{L ⊆ K} D_L``: the translates in which the hyperplanes of ``K`` are
    concurrent.
    """
    K = tuple(sorted(K))
    if len(K) < discriminantal.k + 1:
        raise ValueError(f"|K| must be at least {discriminantal.k + 1}")
    return closure(discriminantal, itertools.combinations(K, discriminantal.k + 1))


@dataclasses.dataclass(frozen=True)
class Lattice:
    """
    Flats of rank ``1..r_max``, each rank sorted by indices.
    """

    flats_by_rank: dict[int, tuple[Flat, ...]]

    @property
    def r_max(self) -> int:
        return max(self.flats_by_rank, default=0)

    def flats(self, rank: int) -> tuple[Flat, ...]:
        return self.flats_by_rank.get(rank, ())

    def all_flats(self) -> T.Iterator[Flat]:
        for rank in sorted(self.flats_by_rank):
            yield from self.flats_by_rank[rank]

    def census(self, rank: int) -> dict[int, int]:
        """
        Multiplicity histogram of the flats of one rank.
        """
        return dict(sorted(Counter(f.multiplicity for f in self.flats(rank)).items()))

    def to_dict(self, include_flats: bool = True) -> dict[str, T.Any]:
        data = {}
        for rank in sorted(self.flats_by_rank):
            item = {
                "count": len(self.flats_by_rank[rank]),
                "census": {str(m): c for m, c in self.census(rank).items()},
            }
            if include_flats:
                item["flats"] = [f.to_dict() for f in self.flats_by_rank[rank]]
            data[str(rank)] = item
        return {"ranks": data}


@dataclasses.dataclass(frozen=True)
class LatticeBuilder(BaseLogger):
    """
    Breadth-first enumeration of the flats of rank ``<= r_max``.

    Rank 1 is the hyperplanes themselves. Each rank-``r`` flat is the closure
    of a rank-``(r-1)`` flat plus one hyperplane not already in it; new flats
    are deduplicated by their RREF subspace. While extending one parent, the
    hyperplanes already swallowed by a discovered child are skipped since
    they would lead to the same child.
    """

    discriminantal: DiscriminantalArrangement = dataclasses.field(default=REQ)
    r_max: int | None = dataclasses.field(default=None)

    @property
    def target_rank(self) -> int:
        full = self.discriminantal.rank
        if self.r_max is None:
            return full
        if self.r_max < 1:
            raise ValueError(f"r_max must be positive, got {self.r_max}")
        return min(self.r_max, full)

    def run(self) -> Lattice:
        B = self.discriminantal
        self.log(f"--- Build intersection lattice of B({B.n}, {B.k})")
        flats_by_rank = {1: self.step_1_atoms()}
        for rank in range(2, self.target_rank + 1):
            flats_by_rank[rank] = self.step_2_extend(rank, flats_by_rank[rank - 1])
        return Lattice(flats_by_rank=flats_by_rank)

    def step_1_atoms(self) -> tuple[Flat, ...]:
        self.log("--- Step 1 - Rank 1 Flats")
        flats = tuple(closure(self.discriminantal, [h.L]) for h in self.discriminantal.hyperplanes)
        self.log(f"found {len(flats)} flats of rank 1")
        return flats

    def step_2_extend(self, rank: int, parents: T.Sequence[Flat]) -> tuple[Flat, ...]:
        self.log(f"--- Step 2.{rank - 1} - Rank {rank} Flats")
        found: dict[tuple, Flat] = {}
        for parent in parents:
            covered = set(parent.indices)
            for h in self.discriminantal.hyperplanes:
                if h.L in covered:
                    continue
                child = closure(self.discriminantal, parent.witness + (h.L,))
                covered.update(child.indices)
                found.setdefault(child.subspace, child)
        flats = tuple(sorted(found.values(), key=lambda f: f.indices))
        census = Counter(f.multiplicity for f in flats)
        self.log(f"found {len(flats)} flats of rank {rank}, census = {dict(sorted(census.items()))}")
        return flats


def flats_up_to_rank(
    discriminantal: DiscriminantalArrangement,
    r_max: int | None = None,
    verbose: bool = False,
    printer: T.Callable[[str], None] = print,
) -> Lattice:
    return LatticeBuilder(
        discriminantal=discriminantal,
        r_max=r_max,
        verbose=verbose,
        printer=printer,
    ).run()


# ------------------------------------------------------------------------------
# Very-genericity
# ------------------------------------------------------------------------------
def athanasiadis_predicate(
    family: T.Sequence[T.Iterable[int]],
    n: int,
    k: int,
) -> bool:
    """
    Combinatorial test on a family of subsets ``S_i`` of ``[n]``, each of size
    at least ``k + 1``: for every sub-family ``I`` with ``|I| >= 2``,

    ``|∪_{i in I} S_i| > k + Σ_{i in I} (|S_i| - k)``.

    Vacuously true for families of at most one set.
    """
    sets = [frozenset(S) for S in family]
    for S in sets:
        if len(S) < k + 1:
            raise ValueError(f"every set needs at least {k + 1} elements, got {sorted(S)}")
        if not S <= frozenset(range(1, n + 1)):
            raise ValueError(f"{sorted(S)} is not a subset of 1..{n}")
    for size in range(2, len(sets) + 1):
        for sub in itertools.combinations(sets, size):
            union = frozenset().union(*sub)
            if len(union) <= k + sum(len(S) - k for S in sub):
                return False
    return True


@dataclasses.dataclass(frozen=True)
class SimpleIntersectionReport:
    flat: Flat
    simple: bool

    @property
    def non_very_generic(self) -> bool:
        return self.simple and self.flat.multiplicity > self.flat.rank

    def to_dict(self) -> dict[str, T.Any]:
        data = self.flat.to_dict()
        data["simple"] = self.simple
        data["non_very_generic"] = self.non_very_generic
        return data


def classify(discriminantal: DiscriminantalArrangement, flat: Flat) -> SimpleIntersectionReport:
    """
    A flat is simple unless, for some ``K`` with ``|K| >= k + 2``, it holds
    every ``D_L`` with ``L`` a ``(k+1)``-subset of ``K``.

    Only ``|K| = k + 2`` is scanned: the subsets of a larger such ``K`` are
    themselves subsets of any of its ``(k+2)``-subsets, so a larger witness
    always contains one of size ``k + 2``.
    """
    k = discriminantal.k
    members = set(flat.indices)
    support = sorted(set(itertools.chain.from_iterable(flat.indices)))
    simple = True
    for K in itertools.combinations(support, k + 2):
        if all(L in members for L in itertools.combinations(K, k + 1)):
            simple = False
            break
    return SimpleIntersectionReport(flat=flat, simple=simple)


def simple_intersections(
    discriminantal: DiscriminantalArrangement,
    r: int,
    lattice: Lattice | None = None,
) -> list[SimpleIntersectionReport]:
    """
    Classify every rank-``r`` flat of ``B(n, 2, A)``.
    """
    if discriminantal.k != 2:
        raise ValueError("simple intersections are defined here for planar arrangements")
    if lattice is None or lattice.r_max < r:
        lattice = flats_up_to_rank(discriminantal, r, verbose=False)
    return [classify(discriminantal, flat) for flat in lattice.flats(r)]


@dataclasses.dataclass(frozen=True)
class VeryGenericReport:
    very_generic_up_to_r_max: bool
    r_max: int
    witnesses: tuple[Flat, ...]

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "very_generic_up_to_r_max": self.very_generic_up_to_r_max,
            "r_max": self.r_max,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


def very_generic_report(
    discriminantal: DiscriminantalArrangement,
    r_max: int | None = None,
    lattice: Lattice | None = None,
) -> VeryGenericReport:
    """
    Witnesses are the simple flats of rank ``<= r_max`` whose multiplicity
    exceeds their rank. ``r_max`` defaults to the full rank.
    """
    if lattice is None:
        lattice = flats_up_to_rank(discriminantal, r_max, verbose=False)
    r_max = lattice.r_max if r_max is None else min(r_max, lattice.r_max)
    witnesses = []
    for rank in range(1, r_max + 1):
        for flat in lattice.flats(rank):
            if flat.multiplicity > flat.rank and classify(discriminantal, flat).simple:
                witnesses.append(flat)
    return VeryGenericReport(
        very_generic_up_to_r_max=len(witnesses) == 0,
        r_max=r_max,
        witnesses=tuple(witnesses),
    )
