# -*- coding: utf-8 -*-

import math
import random
import itertools
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from discriminantal_arrangement.exactfield import dot, rank
from discriminantal_arrangement.arrangement import Arrangement, with_offsets
from discriminantal_arrangement.discriminantal import (
    alpha_normal,
    build,
    incident_subsets,
)
from discriminantal_arrangement.planar import incidence_stats
from discriminantal_arrangement.paths import path_two_quadrilaterals, path_seven_lines_six_triples
from discriminantal_arrangement.exc import NotGenericError, DegenerateSubsetError


def random_generic(rng: random.Random, n: int, k: int = 2) -> Arrangement:
    while True:
        normals = [tuple(rng.randint(-9, 9) for _ in range(k)) for _ in range(n)]
        if any(all(x == 0 for x in v) for v in normals):
            continue
        if all(
            rank([normals[i] for i in K]) == k
            for K in itertools.combinations(range(n), k)
        ):
            return Arrangement.new(normals=normals)


def test_alpha_normal():
    a = Arrangement.new(normals=[(1, 0), (0, 1), (1, 1)])
    # x = c1, y = c2, x + y = c3 are concurrent iff c1 + c2 = c3
    assert alpha_normal(a, (1, 2, 3)) == (1, 1, -1)
    assert alpha_normal(a, (3, 1, 2)) == (1, 1, -1)

    try:
        alpha_normal(a, (1, 2))
        assert False, "Should have raised ValueError"
    except ValueError:
        pass

    try:
        alpha_normal(a, (1, 2, 4))
        assert False, "Should have raised ValueError"
    except ValueError:
        pass

    b = Arrangement.new(normals=[(1, 0), (2, 0), (1, 1)])
    try:
        alpha_normal(b, (1, 2, 3))
        assert False, "Should have raised DegenerateSubsetError"
    except DegenerateSubsetError as e:
        assert e.details["L"] == [1, 2, 3]


def test_build_two_quadrilaterals():
    a = Arrangement.load(path_two_quadrilaterals)
    B = build(a)
    assert B.n == 6
    assert B.k == 2
    assert len(B.hyperplanes) == 20
    assert B.rank == 4
    assert B.subsets == sorted(B.subsets)
    for h in B.hyperplanes:
        assert {i + 1 for i, x in enumerate(h.alpha) if x != 0} == set(h.L)
    # every hyperplane is used
    assert set(itertools.chain.from_iterable(B.subsets)) == set(range(1, 7))
    assert B.index_of((4, 5, 6)) == 19
    assert B.alpha_of((1, 2, 3)) == B.hyperplanes[0].alpha
    assert B.hyperplanes[0].name == "123"
    data = B.to_dict()
    assert data["rank"] == 4
    assert len(data["hyperplanes"]) == 20
    assert B.normals == a.normals
    assert data["normals"][0] == ["-2", "2"]
    assert data["normals"][5] == ["-1", "2"]

    try:
        B.index_of((1, 2))
        assert False, "Should have raised ValueError"
    except ValueError:
        pass


def test_build_rejects_non_generic():
    a = Arrangement.new(normals=[(1, 0), (2, 0), (1, 1)], offsets=[0, 1, 2])
    try:
        build(a)
        assert False, "Should have raised NotGenericError"
    except NotGenericError as e:
        assert e.details["K"] == [1, 2]

    try:
        build(Arrangement.new(normals=[(1, 0), (0, 1)]))
        assert False, "Should have raised ValueError"
    except ValueError:
        pass


def test_rank_seven_lines():
    B = build(Arrangement.load(path_seven_lines_six_triples))
    assert len(B.hyperplanes) == math.comb(7, 3)
    assert B.rank == 5


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10**6), n=st.integers(min_value=4, max_value=6))
def test_alpha_detects_concurrency(seed, n):
    rng = random.Random(seed)
    a = random_generic(rng, n)
    B = build(a)
    assert B.rank == n - 2
    offsets = [Fraction(rng.randint(-5, 5)) for _ in range(n)]
    t = with_offsets(a, offsets)
    # only the normals enter
    assert build(t).normals == B.normals
    assert build(t).hyperplanes == B.hyperplanes
    concurrent = {p.lines for p in incidence_stats(t).points if p.multiplicity >= 3}
    incident = set(incident_subsets(B, offsets))
    expected = {
        L for L in B.subsets if any(set(L) <= set(lines) for lines in concurrent)
    }
    assert incident == expected


def test_incident_subsets():
    a = Arrangement.new(normals=[(1, 0), (0, 1), (1, 1), (1, -1)])
    B = build(a)
    # x = 0, y = 0, x + y = 0, x - y = 0 all through the origin
    assert incident_subsets(B, [0, 0, 0, 0]) == B.subsets
    assert incident_subsets(B, [0, 0, 0, 1]) == [(1, 2, 3)]
    for L in incident_subsets(B, [0, 0, 0, 1]):
        assert dot(B.alpha_of(L), [0, 0, 0, 1]) == 0

    try:
        incident_subsets(B, [0, 0])
        assert False, "Should have raised ValueError"
    except ValueError:
        pass


if __name__ == "__main__":
    from discriminantal_arrangement.tests import run_cov_test

    run_cov_test(
        __file__,
        "discriminantal_arrangement.discriminantal",
        preview=False,
    )
