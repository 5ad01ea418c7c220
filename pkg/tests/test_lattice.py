# -*- coding: utf-8 -*-

import random
import itertools

from hypothesis import given, settings, strategies as st

from discriminantal_arrangement.exactfield import rank
from discriminantal_arrangement.arrangement import Arrangement
from discriminantal_arrangement.discriminantal import build
from discriminantal_arrangement.lattice import (
    closure,
    D_K,
    LatticeBuilder,
    flats_up_to_rank,
    athanasiadis_predicate,
    classify,
    simple_intersections,
    very_generic_report,
)
from discriminantal_arrangement.paths import (
    path_two_quadrilaterals,
    path_four_quadrilaterals,
    path_eight_quadrilaterals_sqrt3,
)
from discriminantal_arrangement.utils import parse_index_set


def family(*names: str) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(parse_index_set(name) for name in names))


TWO_QUADRILATERALS = {
    family("123", "146", "256", "345"),
    family("126", "134", "235", "456"),
}

FOUR_QUADRILATERALS = {
    family("123", "156", "246", "345"),
    family("126", "135", "234", "456"),
    family("134", "156", "235", "246"),
    family("135", "146", "234", "256"),
}

EIGHT_QUADRILATERALS = {
    family("123", "145", "256", "346"),
    family("123", "146", "245", "356"),
    family("123", "146", "256", "345"),
    family("123", "156", "246", "345"),
    family("124", "136", "235", "456"),
    family("125", "134", "236", "456"),
    family("126", "134", "235", "456"),
    family("126", "135", "234", "456"),
}


def random_generic(rng: random.Random, n: int = 6) -> Arrangement:
    while True:
        normals = [(rng.randint(-40, 40), rng.randint(-40, 40)) for _ in range(n)]
        if all(rank([u, v]) == 2 for u, v in itertools.combinations(normals, 2)):
            return Arrangement.new(normals=normals)


def two_quadrilaterals_B():
    return build(Arrangement.load(path_two_quadrilaterals))


def test_closure():
    B = two_quadrilaterals_B()
    atom = closure(B, [(1, 2, 3)])
    assert atom.rank == 1
    assert atom.indices == ((1, 2, 3),)

    # all triples of a 4-set: the lines of the 4-set are concurrent
    flat = closure(B, [(1, 2, 3), (1, 2, 4)])
    assert flat.rank == 2
    assert flat.indices == family("123", "124", "134", "234")
    assert flat.multiplicity == 4
    assert len(flat.witness) == 2

    quad = closure(B, family("123", "146", "256", "345"))
    assert quad.rank == 3
    assert quad.indices == family("123", "146", "256", "345")
    assert quad.contains_normal(B.alpha_of((2, 5, 6)))
    assert not quad.contains_normal(B.alpha_of((1, 2, 4)))
    assert quad.to_dict()["indices"] == ["123", "146", "256", "345"]

    try:
        closure(B, [])
        assert False, "Should have raised ValueError"
    except ValueError:
        pass


def test_D_K():
    B = two_quadrilaterals_B()
    assert D_K(B, (1, 2, 3, 4)).rank == 2
    assert D_K(B, (1, 2, 3, 4, 5)).rank == 3
    assert D_K(B, (1, 2, 3, 4, 5)).multiplicity == 10
    assert D_K(B, range(1, 7)).multiplicity == 20

    try:
        D_K(B, (1, 2))
        assert False, "Should have raised ValueError"
    except ValueError:
        pass


def test_lattice_two_quadrilaterals():
    B = two_quadrilaterals_B()
    lattice = flats_up_to_rank(B, 3)
    assert lattice.r_max == 3
    assert len(lattice.flats(1)) == 20
    assert lattice.census(2) == {2: 100, 4: 15}
    assert lattice.census(3) == {3: 112, 4: 2, 5: 60, 10: 6}
    data = lattice.to_dict(include_flats=False)
    assert data["ranks"]["2"] == {"count": 115, "census": {"2": 100, "4": 15}}
    assert "flats" in lattice.to_dict()["ranks"]["1"]
    assert len(list(lattice.all_flats())) == 20 + 115 + 180


def test_full_lattice_has_one_top():
    B = two_quadrilaterals_B()
    lattice = flats_up_to_rank(B)
    assert lattice.r_max == 4
    assert len(lattice.flats(4)) == 1
    assert lattice.flats(4)[0].multiplicity == 20
    assert lattice.flats(5) == ()


def test_lattice_builder_logs():
    lines = []
    builder = LatticeBuilder(
        discriminantal=two_quadrilaterals_B(),
        r_max=2,
        verbose=True,
        printer=lines.append,
    )
    lattice = builder.run()
    assert lattice.r_max == 2
    assert any(line.startswith("--- Step 1 - Rank 1 Flats") for line in lines)
    assert any(line.startswith("--- Step 2.1 - Rank 2 Flats") for line in lines)

    try:
        LatticeBuilder(discriminantal=two_quadrilaterals_B(), r_max=0).run()
        assert False, "Should have raised ValueError"
    except ValueError:
        pass


def test_athanasiadis_predicate():
    assert athanasiadis_predicate([], 6, 2) is True
    assert athanasiadis_predicate([(1, 2, 3)], 6, 2) is True
    assert athanasiadis_predicate([(1, 2, 3), (1, 4, 5)], 6, 2) is True
    # two triples sharing a pair: 4 > 2 + 1 + 1 fails
    assert athanasiadis_predicate([(1, 2, 3), (1, 2, 4)], 6, 2) is False
    # a quadrilateral family: 6 > 2 + 4 fails
    assert athanasiadis_predicate(family("123", "146", "256", "345"), 6, 2) is False
    assert athanasiadis_predicate([(1, 2, 3, 4), (3, 5, 6)], 6, 2) is True

    try:
        athanasiadis_predicate([(1, 2)], 6, 2)
        assert False, "Should have raised ValueError"
    except ValueError:
        pass

    try:
        athanasiadis_predicate([(1, 2, 7)], 6, 2)
        assert False, "Should have raised ValueError"
    except ValueError:
        pass


def test_classify():
    B = two_quadrilaterals_B()
    quad = closure(B, family("123", "146", "256", "345"))
    report = classify(B, quad)
    assert report.simple is True
    assert report.non_very_generic is True
    assert report.to_dict()["non_very_generic"] is True

    five = D_K(B, (1, 2, 3, 4, 5))
    assert classify(B, five).simple is False
    assert classify(B, five).non_very_generic is False


def simple_by_every_subset(B, flat) -> bool:
    members = set(flat.indices)
    support = sorted(set(itertools.chain.from_iterable(flat.indices)))
    for size in range(B.k + 2, len(support) + 1):
        for K in itertools.combinations(support, size):
            if all(L in members for L in itertools.combinations(K, B.k + 1)):
                return False
    return True


def test_classify_matches_every_subset():
    for B in [two_quadrilaterals_B(), build(Arrangement.load(path_four_quadrilaterals))]:
        lattice = flats_up_to_rank(B, 3, verbose=False)
        for flat in lattice.all_flats():
            assert classify(B, flat).simple is simple_by_every_subset(B, flat)

    B = two_quadrilaterals_B()
    six = D_K(B, (1, 2, 3, 4, 5, 6))
    assert classify(B, six).simple is False
    assert simple_by_every_subset(B, six) is False


def test_simple_intersections():
    B = two_quadrilaterals_B()
    reports = simple_intersections(B, 3)
    assert len(reports) == 180
    found = {r.flat.indices for r in reports if r.non_very_generic}
    assert found == TWO_QUADRILATERALS

    B3 = build(Arrangement.new(normals=[(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)]))
    try:
        simple_intersections(B3, 1)
        assert False, "Should have raised ValueError"
    except ValueError:
        pass


def test_very_generic_report():
    report = very_generic_report(two_quadrilaterals_B(), r_max=3)
    assert report.very_generic_up_to_r_max is False
    assert {w.indices for w in report.witnesses} == TWO_QUADRILATERALS
    assert report.to_dict()["r_max"] == 3

    report = very_generic_report(build(Arrangement.load(path_four_quadrilaterals)), r_max=3)
    assert {w.indices for w in report.witnesses} == FOUR_QUADRILATERALS

    report = very_generic_report(build(Arrangement.load(path_eight_quadrilaterals_sqrt3)), r_max=3)
    assert len(report.witnesses) == 8
    assert {w.indices for w in report.witnesses} == EIGHT_QUADRILATERALS


def test_very_generic_census():
    # seeded random normals are very generic except on a measure zero set;
    # take the first seed whose report confirms it
    for seed in range(20):
        B = build(random_generic(random.Random(seed)))
        lattice = flats_up_to_rank(B, 3)
        if very_generic_report(B, lattice=lattice).very_generic_up_to_r_max:
            break
    else:  # pragma: no cover
        assert False, "no very generic arrangement among the seeds"
    assert lattice.census(3) == {3: 120, 5: 60, 10: 6}
    assert lattice.census(2) == {2: 100, 4: 15}


@settings(max_examples=10, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10**6))
def test_quadrilateral_count_is_even(seed):
    B = build(random_generic(random.Random(seed)))
    lattice = flats_up_to_rank(B, 3)
    assert lattice.census(3).get(4, 0) % 2 == 0
    # every rank 2 flat of B(6, 2) has multiplicity 2 or 4
    assert set(lattice.census(2)) <= {2, 4}


@settings(max_examples=20, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=10**6),
    size=st.integers(min_value=1, max_value=4),
)
def test_closure_axioms(seed, size):
    rng = random.Random(seed)
    B = build(random_generic(rng))
    S = rng.sample(B.subsets, size)
    T_ = S + rng.sample(B.subsets, 2)
    cS = closure(B, S)
    cT = closure(B, T_)
    # extensive, idempotent, monotone
    assert set(S) <= set(cS.indices)
    assert closure(B, cS.indices).indices == cS.indices
    assert closure(B, cS.witness).indices == cS.indices
    assert set(cS.indices) <= set(cT.indices)
    assert cS.rank <= cT.rank


if __name__ == "__main__":
    from discriminantal_arrangement.tests import run_cov_test

    run_cov_test(
        __file__,
        "discriminantal_arrangement.lattice",
        preview=False,
    )
