from __future__ import annotations

import networkx as nx
import pytest

from oddhom.errors import GuardExceeded
from oddhom.graph import cycle, petersen, random_graph, star
from oddhom.structure import circumference, find_induced_star, is_chordless, iter_cycles, structure_queries


def test_seven_cycle():
    r = structure_queries(cycle(7))
    assert r.circumference == 7 and len(r.longest_cycle) == 7
    assert r.odd_hole is not None and len(r.odd_hole) == 7
    assert r.max_degree == 2
    assert not r.bipartite


def test_claw():
    r = structure_queries(star(3))
    assert r.bipartite and r.max_degree == 3
    centre, leaves = r.induced_star
    assert centre == 0 and sorted(leaves) == [1, 2, 3]
    assert r.circumference == 0 and r.longest_cycle is None


def test_petersen():
    r = structure_queries(petersen())
    assert not r.planar
    assert r.circumference == 9
    assert r.odd_hole is not None and is_chordless(petersen(), r.odd_hole)
    assert r.to_json()["planar"] is False


def test_cycle_count_matches_networkx(rng):
    for _ in range(40):
        G = random_graph(rng.randint(1, 8), 0.5, rng)
        H = nx.Graph(list(G.edges))
        H.add_nodes_from(range(G.n))
        theirs = sorted(len(c) for c in nx.simple_cycles(H))
        ours = sorted(len(c) for c in iter_cycles(G))
        assert ours == theirs
        assert circumference(G)[0] == max(theirs, default=0)


def test_induced_star_absent_in_cycle():
    assert find_induced_star(cycle(6), 3) is None
    assert find_induced_star(cycle(6), 2) is not None


def test_cycle_guard():
    with pytest.raises(GuardExceeded):
        list(iter_cycles(cycle(40)))
