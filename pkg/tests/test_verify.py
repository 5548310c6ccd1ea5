import dataclasses
import json

import pytest

from commgraph.constructions import ConstructionSpec
from commgraph.errors import SmgError
from commgraph.predict import component_profile
from commgraph.semigroup import Semigroup, generate, is_associative
from commgraph.verify import (
    canonical_form,
    check_construction,
    enumerate_semigroups,
    exhaustive_corpus,
    isomorphism_classes,
    run_corpus_suite,
)

T2 = generate("full_transformation", 2)


@pytest.mark.parametrize("n,labeled,classes", [(1, 1, 1), (2, 8, 5), (3, 113, 24)])
def test_enumeration_counts(n, labeled, classes):
    found = list(enumerate_semigroups(n))
    assert len(found) == labeled
    assert len({s.table for s in found}) == labeled
    assert all(is_associative(s.table) for s in found)
    assert len(isomorphism_classes(found)) == classes


def test_order_four_counts():
    found = exhaustive_corpus(4)
    assert len(found) == 3492
    assert len({s.table for s in found}) == 3492
    assert len(isomorphism_classes(found)) == 188


def test_canonical_form_is_relabel_invariant():
    perm = [2, 0, 3, 1]
    inv = [perm.index(i) for i in range(4)]
    moved = Semigroup(T2.labels, tuple(
        tuple(perm[T2.table[inv[i]][inv[j]]] for j in range(4)) for i in range(4)))
    assert canonical_form(moved) == canonical_form(T2)


@pytest.mark.parametrize("order", [3, 4, 5, 6])
def test_sampled_mode_is_deterministic(order):
    a = [s.table for s in enumerate_semigroups(order, "sampled", seed=5, count=10)]
    b = [s.table for s in enumerate_semigroups(order, "sampled", seed=5, count=10)]
    assert a == b and len(a) == 10 and len(set(a)) == 10
    assert all(len(t) == order and is_associative(t) for t in a)


def test_enumeration_limits():
    with pytest.raises(SmgError):
        list(enumerate_semigroups(5))
    with pytest.raises(SmgError):
        list(enumerate_semigroups(7, "sampled"))


def test_check_desk_cases_pass():
    for kind in ("zero_union", "direct_product"):
        report = check_construction(ConstructionSpec(kind, [T2, T2]))
        assert report.passed, report.to_json()
        assert not report.skipped()


def test_check_is_deterministic_apart_from_timing():
    spec = ConstructionSpec("direct_product", [T2, generate("null_with_zero", 2)])
    a = json.dumps(check_construction(spec).to_json(timing=False), sort_keys=True)
    b = json.dumps(check_construction(spec).to_json(timing=False), sort_keys=True)
    assert a == b


def test_commutative_construction_is_skipped_not_failed():
    c = generate("cyclic_group", 2)
    report = check_construction(ConstructionSpec("direct_product", [c, c]))
    assert report.passed
    assert report.verdict("extended_graph_lemma").status == "pass"
    assert report.verdict("diameter").reason == "commutative product"


def test_wrong_prediction_is_reported_as_failure():
    # feed a deliberately wrong profile: the check must flag it, not crash
    good = component_profile(T2)
    bad = dataclasses.replace(good, center_size=3)
    report = check_construction(ConstructionSpec("direct_product", [T2, T2]), profiles=[bad, good])
    assert not report.passed
    assert "clique_number" in {v.name for v in report.failures()}


def test_chromatic_cap_marks_skip():
    t3 = generate("full_transformation", 3)
    report = check_construction(ConstructionSpec("direct_product", [t3, generate("left_zero", 2)]), chi_cap=30)
    v = report.verdict("chromatic_number")
    assert v.status == "skipped" and v.reason.startswith("cap")
    assert report.passed


def test_suite_aggregate_shape():
    out = run_corpus_suite({2}, seed=1, triples=5)
    assert set(out) >= {"checked", "passed", "failed", "skipped"}
    assert out["checked"] == out["passed"] and out["failed"] == []
    # 8 tables, 6 commutative: 64 - 36 ordered pairs per kind, plus 5 triples
    assert out["by_kind"]["zero_union"]["checked"] == 28 + 5


def test_suite_cap_skips_are_listed():
    out = run_corpus_suite({2}, pair_cap=3, seed=2, product_cap=3)
    assert out["by_kind"]["direct_product"]["skipped"] == 3
    assert all(s["reason"].startswith("cap") for s in out["skipped"])


def test_worker_pool_merge_is_deterministic():
    serial = run_corpus_suite({2}, seed=3, triples=4)
    pooled = run_corpus_suite({2}, seed=3, triples=4, workers=2)
    assert serial == pooled
