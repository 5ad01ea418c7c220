# -*- coding: utf-8 -*-

"""
Orchard search: how many triple points can a translate of a given planar
arrangement have?

A set of triple points is described combinatorially by a **triple system**,
a family of 3-subsets of ``[n]`` pairwise sharing at most one index (two
lines meet once). It is realizable as a translate exactly when the flat it
spans in ``B(n, 2, A)`` is simple and contains no other hyperplane, and the
search below looks for the largest such system whose rank stays at most
``n - 3``.
"""

import typing as T
import random
import itertools
import dataclasses

from func_args.api import REQ

from .constants import (
    DEFAULT_SEED,
    DEFAULT_SAMPLE_BOUND,
    DEFAULT_MAX_SAMPLE_ROUNDS,
    ORCHARD_MAX_N,
)
from .exactfield import rank
from .arrangement import Arrangement
from .discriminantal import DiscriminantalArrangement, build
from .lattice import Flat, closure, classify
from .planar import IncidenceStats, incidence_stats, realize_translate
from .foundation import BaseLogger
from .exc import PreconditionError
from .typehint import T_INDEX_SET
from .utils import format_family


def m_upper_bound(n: int) -> int:
    """
    ``floor(n (n - 1) / 6)``: every triple point uses three of the
    ``C(n, 2)`` pairs of lines.
    """
    return n * (n - 1) // 6


@dataclasses.dataclass(frozen=True)
class TripleSystem:
    n: int
    triples: tuple[T_INDEX_SET, ...]

    def __post_init__(self):
        triples = tuple(sorted(tuple(sorted(t)) for t in self.triples))
        for t in triples:
            if len(t) != 3 or len(set(t)) != 3:
                raise ValueError(f"{t} is not a triple of distinct indices")
            if not all(1 <= i <= self.n for i in t):
                raise ValueError(f"{t} is outside 1..{self.n}")
        for s, t in itertools.combinations(triples, 2):
            if len(set(s) & set(t)) > 1:
                raise ValueError(f"triples {s} and {t} share more than one index")
        object.__setattr__(self, "triples", triples)

    @property
    def m(self) -> int:
        return len(self.triples)

    def degrees(self) -> dict[int, int]:
        degree = {i: 0 for i in range(1, self.n + 1)}
        for t in self.triples:
            for i in t:
                degree[i] += 1
        return degree

    def relabel(self, perm: T.Sequence[int]) -> tuple[T_INDEX_SET, ...]:
        """
        Triples after sending index ``i`` to ``perm[i - 1]``, sorted.
        """
        return tuple(sorted(tuple(sorted(perm[i - 1] for i in t)) for t in self.triples))

    def vertex_invariant(self, i: int) -> tuple[int, tuple[int, ...]]:
        """
        Degree of ``i`` and the sorted degrees of the indices it shares a
        triple with. Preserved by every relabeling.
        """
        degree = self.degrees()
        neighbours = [j for t in self.triples if i in t for j in t if j != i]
        return degree[i], tuple(sorted(degree[j] for j in neighbours))

    def canonical_form(self) -> tuple[T_INDEX_SET, ...]:
        """
        Smallest relabeling among those that give the indices with the
        smallest invariant the smallest labels, so isomorphic systems share
        it. Only permutations inside each invariant class are tried.
        """
        classes: dict[tuple, list[int]] = {}
        for i in range(1, self.n + 1):
            classes.setdefault(self.vertex_invariant(i), []).append(i)
        blocks = [classes[key] for key in sorted(classes)]
        best = None
        for images in itertools.product(
            *(itertools.permutations(block) for block in blocks)
        ):
            perm = [0] * self.n
            label = 1
            for image in images:
                for i in image:
                    perm[i - 1] = label
                    label += 1
            form = self.relabel(perm)
            if best is None or form < best:
                best = form
        return best

    def to_list(self) -> list[str]:
        return format_family(self.triples)


def enumerate_systems(
    n: int,
    m: int,
    degree_cap: int | None = None,
    canonical: bool = False,
    prune: T.Callable[[tuple[T_INDEX_SET, ...]], bool] | None = None,
) -> T.Iterator[TripleSystem]:
    """
    Every triple system of ``m`` triples on ``[n]``, in lexicographic order.

    :param degree_cap: no index in more than this many triples
    :param canonical: keep one system per isomorphism class
    :param prune: called on every partial system; returning ``True`` drops
        the whole branch
    """
    if n > ORCHARD_MAX_N:
        raise ValueError(f"triple systems are enumerated for n <= {ORCHARD_MAX_N}, got {n}")
    if m < 0:
        raise ValueError(f"m must be non negative, got {m}")
    candidates = list(itertools.combinations(range(1, n + 1), 3))
    seen: set[tuple[T_INDEX_SET, ...]] = set()

    def extend(
        start: int,
        chosen: tuple[T_INDEX_SET, ...],
        used_pairs: frozenset,
        degree: dict[int, int],
    ) -> T.Iterator[tuple[T_INDEX_SET, ...]]:
        if len(chosen) == m:
            yield chosen
            return
        # not enough triples left
        if len(candidates) - start < m - len(chosen):
            return
        for idx in range(start, len(candidates)):
            t = candidates[idx]
            pairs = frozenset(itertools.combinations(t, 2))
            if pairs & used_pairs:
                continue
            if degree_cap is not None and any(degree[i] >= degree_cap for i in t):
                continue
            new = chosen + (t,)
            if prune is not None and prune(new):
                continue
            for i in t:
                degree[i] += 1
            yield from extend(idx + 1, new, used_pairs | pairs, degree)
            for i in t:
                degree[i] -= 1

    for triples in extend(0, (), frozenset(), {i: 0 for i in range(1, n + 1)}):
        system = TripleSystem(n=n, triples=triples)
        if canonical:
            form = system.canonical_form()
            if form in seen:
                continue
            seen.add(form)
        yield system


@dataclasses.dataclass(frozen=True)
class SystemEvaluation:
    system: TripleSystem
    rank: int
    simple: bool
    non_very_generic: bool
    closure: Flat

    @property
    def closed(self) -> bool:
        return self.closure.indices == self.system.triples

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "triples": self.system.to_list(),
            "rank": self.rank,
            "simple": self.simple,
            "non_very_generic": self.non_very_generic,
            "closed": self.closed,
            "closure": self.closure.to_dict(),
        }


def evaluate_system(
    arrangement: Arrangement,
    system: TripleSystem,
    discriminantal: DiscriminantalArrangement | None = None,
) -> SystemEvaluation:
    if arrangement.dimension != 2:
        raise ValueError("triple systems describe planar arrangements")
    if system.n != arrangement.n:
        raise ValueError(f"system is on {system.n} indices, arrangement has {arrangement.n} lines")
    if discriminantal is None:
        discriminantal = build(arrangement)
    flat = closure(discriminantal, system.triples)
    simple = classify(discriminantal, flat).simple
    return SystemEvaluation(
        system=system,
        rank=flat.rank,
        simple=simple,
        non_very_generic=(
            system.m > flat.rank and simple and flat.indices == system.triples
        ),
        closure=flat,
    )


@dataclasses.dataclass(frozen=True)
class OrchardWitness:
    evaluation: SystemEvaluation
    translate: Arrangement
    stats: IncidenceStats

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "system": self.evaluation.to_dict(),
            "translate": self.translate.to_dict(),
            "stats": self.stats.to_dict(),
        }


@dataclasses.dataclass(frozen=True)
class OrchardResult:
    m_max: int
    rank: int | None
    witnesses: tuple[OrchardWitness, ...]
    examined: int

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "m_max": self.m_max,
            "rank": self.rank,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "examined": self.examined,
        }


@dataclasses.dataclass(frozen=True)
class OrchardSearch(BaseLogger):
    """
    Walk ``m`` down from :func:`m_upper_bound` and stop at the first ``m``
    with a qualifying system: rank at most ``n - 3``, closure equal to the
    system, and simple. Partial systems whose rank already exceeds ``n - 3``
    are pruned.

    :param max_witnesses: realize at most this many systems, ``None`` for all
    """

    arrangement: Arrangement = dataclasses.field(default=REQ)
    seed: int = dataclasses.field(default=DEFAULT_SEED)
    sample_bound: int = dataclasses.field(default=DEFAULT_SAMPLE_BOUND)
    max_sample_rounds: int = dataclasses.field(default=DEFAULT_MAX_SAMPLE_ROUNDS)
    max_n: int = dataclasses.field(default=ORCHARD_MAX_N)
    max_witnesses: int | None = dataclasses.field(default=None)

    def run(self) -> OrchardResult:
        discriminantal = self.step_1_build()
        n = self.arrangement.n
        examined = 0
        for m in range(m_upper_bound(n), 0, -1):
            found, count = self.step_2_search(discriminantal, m)
            examined += count
            if found:
                witnesses = self.step_3_realize(discriminantal, found)
                return OrchardResult(
                    m_max=m,
                    rank=found[0].rank,
                    witnesses=tuple(witnesses),
                    examined=examined,
                )
        return OrchardResult(m_max=0, rank=None, witnesses=(), examined=examined)

    def step_1_build(self) -> DiscriminantalArrangement:
        self.log("--- Step 1 - Build the discriminantal arrangement")
        n = self.arrangement.n
        if n > min(self.max_n, ORCHARD_MAX_N):
            raise PreconditionError(
                f"orchard search is limited to n <= {self.max_n}, got {n}",
                n=n,
                max_n=self.max_n,
            )
        if self.arrangement.dimension != 2:
            raise PreconditionError("orchard search needs a planar arrangement")
        discriminantal = build(self.arrangement)
        self.log(f"rank = {discriminantal.rank}")
        return discriminantal

    def step_2_search(
        self,
        discriminantal: DiscriminantalArrangement,
        m: int,
    ) -> tuple[list[SystemEvaluation], int]:
        self.log(f"--- Step 2 - Search systems of {m} triples")
        n = self.arrangement.n
        max_rank = n - 3

        def too_deep(partial: tuple[T_INDEX_SET, ...]) -> bool:
            return rank([discriminantal.alpha_of(t) for t in partial]) > max_rank

        found = []
        count = 0
        for system in enumerate_systems(n, m, prune=too_deep):
            count += 1
            evaluation = evaluate_system(self.arrangement, system, discriminantal)
            if evaluation.rank <= max_rank and evaluation.closed and evaluation.simple:
                found.append(evaluation)
                if self.max_witnesses is not None and len(found) >= self.max_witnesses:
                    break
        self.log(f"examined {count} systems, {len(found)} qualify")
        return found, count

    def step_3_realize(
        self,
        discriminantal: DiscriminantalArrangement,
        found: T.Sequence[SystemEvaluation],
    ) -> list[OrchardWitness]:
        self.log(f"--- Step 3 - Realize {len(found)} systems")
        rng = random.Random(self.seed)
        witnesses = []
        for evaluation in found:
            translate = realize_translate(
                self.arrangement,
                evaluation.closure,
                rng=rng,
                bound=self.sample_bound,
                max_rounds=self.max_sample_rounds,
                discriminantal=discriminantal,
            )
            stats = incidence_stats(translate)
            self.log(f"{evaluation.system.to_list()}: census = {stats.t}")
            witnesses.append(
                OrchardWitness(evaluation=evaluation, translate=translate, stats=stats)
            )
        return witnesses


def orchard_max(
    arrangement: Arrangement,
    seed: int = DEFAULT_SEED,
    max_witnesses: int | None = None,
    verbose: bool = False,
    printer: T.Callable[[str], None] = print,
) -> OrchardResult:
    return OrchardSearch(
        arrangement=arrangement,
        seed=seed,
        max_witnesses=max_witnesses,
        verbose=verbose,
        printer=printer,
    ).run()
