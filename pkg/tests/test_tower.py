from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from malcev.exterior import unit_kvector, wedge_basis
from malcev.lie import LieAlgebra
from malcev.linalg import Matrix, kernel
from malcev.tower import (BudgetExceededError, CupData, build_tower,
                          dual_lie_tower, roundtrip_check, tower_h2_map)


def torus_cup():
    return CupData(2, 1, [[1]])


def zero_cup(b1):
    return CupData(b1, 0, [])


def test_cup_data_validation():
    with pytest.raises(ValueError, match="cup matrix must be"):
        CupData(3, 2, [[1, 0, 0]])
    with pytest.raises(ValueError, match="sum to b1"):
        CupData(3, 1, [[1, 0, 0]], hodge_split=(1, 1))
    c = CupData(2, 1, [["1/2"]], hodge_split=(1, 1))
    assert c.cup[0, 0] == Fraction(1, 2)


def test_torus_stabilizes_at_stage_one():
    t = build_tower(torus_cup())
    assert t.stabilized
    assert [s.count for s in t.stages] == [2]
    assert t.weights() == (1, 1)
    dual = dual_lie_tower(t)
    assert len(dual.algebras) == 1
    assert dual.algebras[0].dim == 2
    assert dual.algebras[0].brackets == {}
    assert roundtrip_check(t)


def test_stage_one_h2_map_is_the_cup_matrix():
    t = build_tower(zero_cup(3), max_stage=1)
    assert not t.stabilized
    assert tower_h2_map(t) == Matrix(0, 3, ())
    t2 = build_tower(torus_cup(), max_stage=1)
    assert tower_h2_map(t2) == t2.cup_data.cup


def test_injective_cup_stabilizes_immediately():
    t = build_tower(CupData(4, 6, Matrix.identity(6)))
    assert t.stabilized and len(t.stages) == 1


def test_vanishing_cup_gives_heisenberg_dual():
    t = build_tower(zero_cup(2), max_stage=2)
    assert [s.count for s in t.stages] == [2, 1]
    assert not t.stabilized
    assert t.stages[1].differentials == ((Fraction(1),),)
    L = dual_lie_tower(t).algebras[-1]
    # heisenberg up to the sign baked into the duality convention
    assert L.brackets == {(0, 1): (0, 0, Fraction(-1))}
    assert L.nilpotency_class() == 2
    assert L.betti_numbers() == [1, 2, 2, 1]
    assert roundtrip_check(t)


def test_h2_of_second_stage_misses_the_cup():
    # classes with a stage-2 leg evaluate to zero
    t = build_tower(zero_cup(2), max_stage=2)
    rho = tower_h2_map(t)
    assert (rho.rows, rho.cols) == (0, 2)


def test_free_tower_stage_growth():
    t = build_tower(zero_cup(2), max_stage=4)
    assert [s.count for s in t.stages] == [2, 1, 2, 3]
    assert not t.stabilized
    assert t.stages[2].differentials == (unit_kvector(3, 2, (0, 2)),
                                         unit_kvector(3, 2, (1, 2)))
    L = dual_lie_tower(t).algebras[2]
    assert L.dim == 5
    assert L.nilpotency_class() == 3
    assert L.betti_numbers()[1] == 2
    assert roundtrip_check(t)


def test_stage_two_counts_pairs_of_generators():
    for g in (2, 3, 4):
        t = build_tower(zero_cup(g), max_stage=2)
        assert t.stages[1].count == comb(g, 2)


def test_differentials_respect_the_weight_filtration():
    t = build_tower(zero_cup(2), max_stage=5)
    w = t.weights()
    for s in t.stages[1:]:
        cap = 2 * (s.index - 1)
        for dg in s.differentials:
            for (a, b), c in zip(wedge_basis(s.start, 2), dg):
                if c:
                    assert w[a] + w[b] <= cap


def test_projections_are_surjective_with_central_kernel():
    t = build_tower(zero_cup(3), max_stage=2)
    dual = dual_lie_tower(t)
    small, big = dual.algebras
    proj = dual.projections[0]
    assert (proj.rows, proj.cols) == (small.dim, big.dim)
    assert proj.rank() == small.dim
    for k in range(small.dim, big.dim):
        ek = [Fraction(0)] * big.dim
        ek[k] = Fraction(1)
        for j in range(big.dim):
            ej = [Fraction(0)] * big.dim
            ej[j] = Fraction(1)
            assert not any(big.bracket(tuple(ek), tuple(ej)))


def test_generator_budget_is_enforced():
    with pytest.raises(BudgetExceededError, match="budget exceeded") as exc:
        build_tower(zero_cup(3), max_stage=2, budget=4)
    assert [s.count for s in exc.value.partial.stages] == [3]
    with pytest.raises(BudgetExceededError) as exc2:
        build_tower(zero_cup(70))
    assert exc2.value.partial.stages == []


def iwasawa():
    return LieAlgebra(6, {(0, 1): {"4": 1}, (2, 3): {"4": -1},
                          (0, 3): {"5": 1}, (1, 2): {"5": -1}})


def test_tower_rebuilds_the_iwasawa_algebra_from_its_cup_data():
    L = iwasawa()
    H2 = L.cohomology_basis(2)
    rows = [[] for _ in range(H2.dim)]
    for (a, b) in wedge_basis(4, 2):
        coords = H2.class_coordinates(unit_kvector(6, 2, (a, b)))
        for i, c in enumerate(coords):
            rows[i].append(c)
    t = build_tower(CupData(4, H2.dim, rows), max_stage=2)
    assert [s.count for s in t.stages] == [4, 2]
    dual = dual_lie_tower(t).algebras[-1]
    # isomorphic to the source (the centre flips sign), so betti agree
    assert dual.betti_numbers() == L.betti_numbers()
    assert dual.nilpotency_class() == 2
    assert roundtrip_check(t)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 3), st.integers(0, 2), st.data())
def test_random_cup_towers_pass_roundtrip(b1, b2, data):
    coeffs = st.integers(-2, 2)
    rows = [data.draw(st.lists(coeffs, min_size=comb(b1, 2),
                               max_size=comb(b1, 2)))
            for _ in range(b2)]
    t = build_tower(CupData(b1, b2, rows), max_stage=3, budget=40)
    assert roundtrip_check(t)
    for L in dual_lie_tower(t).algebras:
        assert L.is_nilpotent()
    w = t.weights()
    assert list(w) == sorted(w)
    if t.stabilized:
        assert kernel(tower_h2_map(t)).dim == 0
