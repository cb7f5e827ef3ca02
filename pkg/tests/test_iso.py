from __future__ import annotations

import random

import networkx as nx
from hypothesis import given

from conftest import graphs
from oddhom.construct import build_GU
from oddhom.graph import cycle, random_graph, rook, shrikhande
from oddhom.iso import canonical_form, canonical_key, find_isomorphism, is_isomorphic, is_isomorphism


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edge_items)
    return H


def shuffled(G, rng):
    perm = list(range(G.n))
    rng.shuffle(perm)
    return G.relabel(perm)


def test_relabelled_cycle():
    C = cycle(6)
    D = shuffled(C, random.Random(3))
    f = find_isomorphism(C, D)
    assert f is not None and is_isomorphism(C, D, f)


def test_connectivity_differs():
    assert not is_isomorphic(cycle(6), cycle(3).union(cycle(3)))


def test_two_triangles_from_lift():
    assert is_isomorphic(build_GU(cycle(3)).graph, cycle(3).union(cycle(3)))


def test_rook_and_shrikhande_differ():
    assert not is_isomorphic(rook(4, 4), shrikhande())


def test_random_relabelling_is_recognised(rng):
    for _ in range(100):
        G = random_graph(rng.randint(1, 12), rng.random(), rng)
        H = shuffled(G, rng)
        assert is_isomorphic(G, G)
        assert is_isomorphic(G, H) and is_isomorphic(H, G)
        assert canonical_key(G) == canonical_key(H)
        assert is_isomorphism(G, H, find_isomorphism(G, H))


def test_agrees_with_networkx(rng):
    for _ in range(150):
        n = rng.randint(1, 8)
        G, H = random_graph(n, 0.5, rng), random_graph(n, 0.5, rng)
        assert is_isomorphic(G, H) == nx.is_isomorphic(to_nx(G), to_nx(H))


@given(graphs(max_n=8))
def test_canonical_form_is_isomorphic(G):
    C = canonical_form(G)
    assert is_isomorphic(G, C)
    assert canonical_form(C) == C
