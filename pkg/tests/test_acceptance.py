"""Acceptance criteria AC1-AC7, each at its stated tolerance and time limit.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints one
PASS/FAIL line per criterion (see ``conftest.py``).
"""

import random
import time

from commgraph.commuting import (
    commuting_graph,
    extended_commuting_graph,
    knit_degree,
    left_path_problems,
    star_knit_degree,
)
from commgraph.constructions import direct_product, product_coordinates, tuple_label, zero_union
from commgraph.graph import equal_via, graph_join, random_graph, relabel, strong_product
from commgraph.invariants import chromatic_number, clique_number, diameter, girth
from commgraph.predict import component_profile, predict_direct_product, predict_zero_union
from commgraph.semigroup import generate
from commgraph.verify import exhaustive_corpus, run_corpus_suite

import oracles


def test_ac1_t2_commuting_graph():
    start = time.perf_counter()
    t2 = generate("full_transformation", 2)
    g = commuting_graph(t2)
    elapsed = time.perf_counter() - start
    assert len(g) == 3
    assert g.edge_count == 0
    assert len(t2.center) == 1
    assert elapsed < 0.1


def test_ac2_zero_union_desk_case():
    start = time.perf_counter()
    t2 = generate("full_transformation", 2)
    s = zero_union([t2, t2])
    g = commuting_graph(s)
    pred = predict_zero_union([component_profile(t2)] * 2)
    computed = (diameter(g), clique_number(g), chromatic_number(g), girth(g), knit_degree(s, g).length)
    assert computed == (2, 2, 2, 4, 2)
    assert computed == (pred.diameter, pred.clique_number, pred.chromatic_number, pred.girth, pred.kd)
    parts = [relabel(commuting_graph(t2), lambda v, i=i: f"{i}.{v}") for i in (1, 2)]
    assert pred.structure_claim == "equals_join"
    assert equal_via(g, graph_join(parts), {v: v for v in g.vertices})
    assert time.perf_counter() - start < 1.0


def test_ac3_direct_product_desk_case():
    start = time.perf_counter()
    t2 = generate("full_transformation", 2)
    s = direct_product([t2, t2])
    g = commuting_graph(s)
    pred = predict_direct_product([component_profile(t2)] * 2)
    w, chi = clique_number(g), chromatic_number(g)
    assert w == 3 == pred.clique_number
    assert chi == 3 and w <= chi <= pred.chromatic_number == 3
    assert diameter(g) == 3 == pred.diameter
    assert pred.conditions_held == {5}
    assert girth(g) == 3 == pred.girth
    assert not knit_degree(s, g).exists
    assert pred.K == frozenset() and pred.K_star == frozenset() and pred.kd is None
    ext = extended_commuting_graph(t2)
    sp = strong_product([ext, ext])
    bij = {
        s.labels[k]: tuple_label([ext.vertices[x] for x in c])
        for k, c in enumerate(product_coordinates([t2, t2]))
    }
    assert equal_via(extended_commuting_graph(s), sp, bij)
    assert time.perf_counter() - start < 5.0


def test_ac4_corpus_audit():
    start = time.perf_counter()
    for n, count in ((2, 8), (3, 113)):
        brute = set(oracles.brute_force_semigroups(n))
        assert len(brute) == count
        assert {s.table for s in exhaustive_corpus(n)} == brute

    small = run_corpus_suite({2, 3}, seed=2024, triples=20)
    assert small["failed"] == []
    commutative = sum(s.is_commutative for n in (2, 3) for s in exhaustive_corpus(n))
    pairs = 121 ** 2 - commutative ** 2
    for kind in ("zero_union", "direct_product"):
        stats = small["by_kind"][kind]
        assert stats["checked"] == pairs + 20 and stats["skipped"] == 0

    large = run_corpus_suite({4}, pair_cap=50, seed=2024, triples=20)
    assert large["failed"] == []
    for kind in ("zero_union", "direct_product"):
        assert large["by_kind"][kind]["checked"] == 50 + 20
    assert time.perf_counter() - start < 600


def test_ac5_oracle_equivalence():
    start = time.perf_counter()
    rng = random.Random(5)
    discrepancies = []
    for k in range(200):
        g = random_graph(rng.randint(1, 12), rng.choice([0.1, 0.25, 0.4, 0.6, 0.8]), seed=rng.randrange(10**9))
        ours = (clique_number(g), chromatic_number(g), girth(g))
        ref = (oracles.clique_by_subsets(g), oracles.chromatic_by_independent_sets(g), oracles.girth_by_cycles(g))
        if ours != ref:
            discrepancies.append((k, ours, ref))
    assert discrepancies == []
    assert time.perf_counter() - start < 60


def test_ac6_knit_degree_laws():
    violations = []
    for n in (1, 2, 3):
        for s in exhaustive_corpus(n):
            ext = extended_commuting_graph(s)
            star = star_knit_degree(s, ext)
            if star.exists and left_path_problems(s, ext, star.witness):
                violations.append(("star witness", s.table))
            if s.is_commutative:
                if star.exists and star.length != 1:
                    violations.append(("commutative kd* != 1", s.table))
                continue
            g = commuting_graph(s)
            kd = knit_degree(s, g)
            if kd.exists:
                if left_path_problems(s, g, kd.witness):
                    violations.append(("witness", s.table))
                if not star.exists or star.length > kd.length:
                    violations.append(("kd* > kd", s.table))
    assert violations == []


def test_ac7_extremal_knit_degree():
    n2, t2 = generate("null_with_zero", 2), generate("full_transformation", 2)
    s = direct_product([n2, t2])
    kd = knit_degree(s)
    assert kd.exists and kd.length == 1
    assert left_path_problems(s, commuting_graph(s), kd.witness) == []
    pred = predict_direct_product([component_profile(n2), component_profile(t2)])
    assert pred.K == frozenset() and pred.K_star == {1}
    assert pred.kd == 1 == min(pred.K | pred.K_star)


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
