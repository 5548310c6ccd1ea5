import pytest

from commgraph.errors import CommutativeSemigroupError
from commgraph.invariants import INF
from commgraph.predict import (
    component_profile,
    dp_cycle_conditions,
    predict_direct_product,
    predict_zero_union,
)
from commgraph.semigroup import generate

T2 = generate("full_transformation", 2)
C3 = generate("cyclic_group", 3)
N2 = generate("null_with_zero", 2)
L2 = generate("left_zero", 2)
T3 = generate("full_transformation", 3)


def prof(*semigroups):
    return [component_profile(s) for s in semigroups]


def test_profile_of_t2():
    p = component_profile(T2)
    assert (p.order, p.center_size, p.commutative) == (4, 1, False)
    assert p.is_null_graph and p.has_xy_pair and not p.kd.exists
    assert p.graph_invariants.girth == INF
    assert "kd_star" in p.to_json()


def test_zero_union_two_t2():
    pred = predict_zero_union(prof(T2, T2))
    assert pred.structure_claim == "equals_join"
    assert (pred.diameter, pred.clique_number, pred.chromatic_number, pred.girth, pred.kd) == (2, 2, 2, 4, 2)


def test_zero_union_single_noncommutative_passes_through():
    pred = predict_zero_union(prof(C3, T2, N2))
    assert pred.structure_claim == "equals_component" and pred.component == 1
    assert pred.diameter == INF and pred.kd is None


def test_zero_union_three_summands_has_triangles():
    assert predict_zero_union(prof(T2, T2, T2)).girth == 3
    assert predict_zero_union(prof(L2, L2)).kd is None


def test_all_commutative_is_rejected():
    with pytest.raises(CommutativeSemigroupError):
        predict_zero_union(prof(C3, N2))
    with pytest.raises(CommutativeSemigroupError):
        predict_direct_product(prof(C3))


def test_direct_product_t2_t2():
    pred = predict_direct_product(prof(T2, T2))
    assert pred.conditions_held == {5}
    assert (pred.diameter, pred.clique_number, pred.chromatic_number, pred.girth) == (3, 3, 3, 3)
    assert pred.chromatic_is_bound
    assert pred.kd is None and not pred.K and not pred.K_star


def test_direct_product_n2_t2():
    pred = predict_direct_product(prof(N2, T2))
    assert pred.K == frozenset() and pred.K_star == {1}
    assert pred.kd == 1


def test_direct_product_with_centerless_factor():
    pred = predict_direct_product(prof(C3, T2))
    assert 1 in pred.conditions_held
    assert pred.diameter == INF and not pred.connected
    assert pred.clique_number == 3 * (1 + 1) - 3 * 1


def test_cycle_conditions_of_bands():
    assert dp_cycle_conditions(prof(L2, L2)) == frozenset()
    pred = predict_direct_product(prof(L2, L2))
    assert pred.girth == INF


def test_condition_eight_alone_uses_the_cycle_component():
    # T3 has cycles in its commuting graph; a trivial commutative factor adds nothing
    one = generate("cyclic_group", 1)
    pred = predict_direct_product(prof(one, T3))
    assert pred.conditions_held == {8}
    assert pred.cycle_components == (1,)
    assert pred.girth == component_profile(T3).graph_invariants.girth
