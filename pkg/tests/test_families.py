from __future__ import annotations

import random

import pytest

from oddhom.construct import build_GU, build_star_simplified
from oddhom.enumeration import enumerate_graphs
from oddhom.errors import InvalidInput
from oddhom.families import (
    FamilyPredicate,
    builtin_predicates,
    chromatic_number,
    cospectral_check,
    hd_closure_probe,
    indistinguishable_up_to,
    is_forest,
    padded_pair,
    parse_predicate,
    treewidth_at_most_2,
    union_lemma_check,
)
from oddhom.graph import Graph, complete, cycle, path, petersen, random_graph, rook, shrikhande, star
from oddhom.homcount import hom_count
from oddhom.minors import has_minor
from oddhom.oddo import find_weak_oddo

H3_0 = build_star_simplified(3, 0)
H3_1 = build_star_simplified(3, 1)
TWO_PIECES = FamilyPredicate("two-pieces", lambda G: len(G.components()) == 2, component_closed=False, union_closed=False)


def recheck(report, pred):
    if report.counterexample:
        F, a, b = report.counterexample
        assert pred(F)
        assert hom_count(F, report.H, guard=None) == a != b == hom_count(F, report.H2, guard=None)


def test_predicate_memberships():
    cases = {
        "forests": [(path(4), True), (cycle(3), False)],
        "tw2": [(cycle(5), True), (complete(4), False)],
        "planar": [(complete(4), True), (petersen(), False)],
        "no-odd-holes": [(cycle(4), True), (cycle(5), False), (cycle(3), True)],
        "circumference:4": [(cycle(4), True), (cycle(5), False)],
        "maxdeg:3": [(cycle(6), True), (star(3), False)],
        "no-induced-star:3": [(complete(4), True), (star(3), False)],
        "cliques:2,3": [(complete(2).union(complete(3)), True), (complete(4), False), (path(3), False)],
        "cliques:2,+": [(complete(5), True), (complete(1), False)],
        "minor-free:Bw": [(path(5), True), (cycle(4), False)],
        "minors-of:Cr": [(complete(3), True), (path(4), True), (cycle(4), True), (star(3), False)],
    }
    for spec, items in cases.items():
        pred = parse_predicate(spec)
        for G, want in items:
            assert pred(G) is want, (spec, G)


def test_predicate_errors():
    for bad in ["nope", "maxdeg:x", "cliques:0", "minor-free:"]:
        with pytest.raises(InvalidInput):
            parse_predicate(bad)
    assert "forests" in builtin_predicates()


def test_treewidth_matches_k4_minor(rng):
    for G in enumerate_graphs(6, False):
        assert treewidth_at_most_2(G) == (not has_minor(G, complete(4)))
    for _ in range(30):
        G = random_graph(rng.randint(1, 9), 0.4, rng)
        assert is_forest(G) == (not has_minor(G, complete(3)))


def test_chromatic_number():
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(petersen()) == 3
    assert chromatic_number(complete(4)) == 4
    assert chromatic_number(Graph(3)) == 1


def test_degree_pair_reports():
    rep = indistinguishable_up_to(H3_0, H3_1, parse_predicate("maxdeg:3"), 6)
    assert not rep.distinguished and rep.verdict == "indistinguishable-up-to-bound"
    assert rep.to_json()["bound"] == 6 and rep.checked > 0
    pred = parse_predicate("all")
    rep = indistinguishable_up_to(H3_0, H3_1, pred, 4)
    assert rep.distinguished
    assert rep.counterexample[0] == star(3) or rep.counterexample[0].max_degree() >= 3
    recheck(rep, pred)
    rep = indistinguishable_up_to(path(4), complete(3).union(complete(1)), parse_predicate("maxdeg:2"), 5)
    assert not rep.distinguished


def test_non_component_closed_needs_full():
    with pytest.raises(InvalidInput):
        indistinguishable_up_to(cycle(3), cycle(3), TWO_PIECES, 3)
    rep = indistinguishable_up_to(cycle(4), complete(2).union(complete(2)), TWO_PIECES, 4, full=True)
    assert not rep.connected_only and rep.distinguished
    assert len(rep.counterexample[0].components()) == 2
    recheck(rep, TWO_PIECES)


def test_probes():
    for G, spec, nmax in [(star(3), "maxdeg:3", 6), (cycle(5), "forests", 6), (complete(4), "tw2", 5)]:
        rep = hd_closure_probe(G, parse_predicate(spec), nmax)
        assert rep.passed, spec
        assert rep.to_json()["passed"] is True
    with pytest.raises(InvalidInput):
        hd_closure_probe(path(3), parse_predicate("forests"), 4)


def test_padded_pair_uses_chromatic_number():
    H, H2, r = padded_pair(cycle(5))
    assert r == 3 and H.n == H2.n == 10 + 3


def test_cospectral():
    assert cospectral_check(rook(4, 4), shrikhande(), 8)
    assert not cospectral_check(complete(3), path(3), 3)
    assert cospectral_check(petersen(), petersen(), 6)


def test_union_of_indistinguishable_pairs():
    pred = parse_predicate("maxdeg:3")
    assert union_lemma_check(H3_0, H3_1, H3_0, H3_1, pred, 5)
    assert union_lemma_check(cycle(3), cycle(3), path(3), path(3), pred, 4)
    with pytest.raises(InvalidInput):
        union_lemma_check(cycle(3), cycle(3), path(3), path(3), TWO_PIECES, 4)
    with pytest.raises(InvalidInput):
        union_lemma_check(H3_0, H3_1, cycle(3), cycle(3), parse_predicate("all"), 4)


def test_counterexamples_reverify(rng):
    preds = [parse_predicate(s) for s in ("all", "forests", "maxdeg:3", "tw2")]
    for _ in range(20):
        H, H2 = random_graph(5, 0.5, rng), random_graph(5, 0.5, rng)
        for pred in preds:
            recheck(indistinguishable_up_to(H, H2, pred, 4), pred)


def test_declared_flags_spot_check():
    rng = random.Random(4)
    for spec in ["forests", "tw2", "maxdeg:3", "no-odd-holes", "circumference:4", "no-induced-star:3", "planar"]:
        pred = parse_predicate(spec)
        members = list(enumerate_graphs(6, False, pred))
        for _ in range(50):
            G = rng.choice(members)
            if pred.component_closed:
                assert all(pred(G.induced(c)) for c in G.components())
            if pred.union_closed:
                H = rng.choice(members)
                if G.n + H.n <= 12:
                    assert pred(G.union(H))
            if pred.minor_closed and G.m:
                u, v = rng.choice(G.edges)
                assert pred(G.contract(u, v)[0]) and pred(G.delete_edge(u, v))
            if pred.hereditary and G.n:
                assert pred(G.delete_vertex(rng.randrange(G.n)))


def test_distinguished_iff_weak_oddo():
    """On padded pairs, a connected counterexample also admits a weak oddomorphism onto G."""
    for G in [cycle(5), star(3), complete(4)]:
        H, H2, _ = padded_pair(G)
        rep = indistinguishable_up_to(H, H2, parse_predicate("all"), 5)
        assert rep.distinguished
        F = rep.counterexample[0]
        assert find_weak_oddo(F, G) is not None
        G0, G1 = build_GU(G).graph, build_GU(G, (0,)).graph
        for F in enumerate_graphs(5, True):
            assert (hom_count(F, G0) != hom_count(F, G1)) == (find_weak_oddo(F, G) is not None)


def test_parallel_matches_serial():
    pred = parse_predicate("maxdeg:4")
    a = indistinguishable_up_to(H3_0, H3_1, pred, 5)
    b = indistinguishable_up_to(H3_0, H3_1, pred, 5, workers=2)
    assert a == b
