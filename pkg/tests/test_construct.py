from __future__ import annotations

import random
from itertools import combinations

import pytest

from oddhom.construct import (
    GUVertex,
    build_G01,
    build_GU,
    build_star_simplified,
    build_tilde_GU,
    shift_isomorphism,
)
from oddhom.errors import InvalidInput
from oddhom.graph import Graph, complete, cycle, path, random_connected_graph, rook, shrikhande, star
from oddhom.homcount import hom_count
from oddhom.iso import is_isomorphic, is_isomorphism


def brute_lift(G, U):
    """Direct expansion of the lift from its definition, vertices in any order."""
    verts = []
    for v in range(G.n):
        inc = sorted(G.incident(v))
        want = 1 if v in U else 0
        for r in range(len(inc) + 1):
            for S in combinations(inc, r):
                if r % 2 == want:
                    verts.append((v, frozenset(S)))
    edges = []
    for i, (v, S) in enumerate(verts):
        for j in range(i + 1, len(verts)):
            u, T = verts[j]
            if G.has_edge(u, v) and G.edge_index[(min(u, v), max(u, v))] not in S ^ T:
                edges.append((i, j))
    return Graph(len(verts), edges)


def test_triangle_lifts():
    two = cycle(3).union(cycle(3))
    assert is_isomorphic(build_GU(cycle(3)).graph, two)
    assert is_isomorphic(build_GU(cycle(3), {0}).graph, cycle(6))


def test_k4_odd_lift_is_shrikhande():
    H = build_GU(complete(4), {0}).graph
    assert H.n == 16
    assert is_isomorphic(H, shrikhande())


def test_g01_examples():
    G0, G1 = build_G01(cycle(4))
    assert is_isomorphic(G0.graph, cycle(4).union(cycle(4)))
    assert is_isomorphic(G1.graph, cycle(8))
    G0, G1 = build_G01(complete(4))
    assert is_isomorphic(G0.graph, rook(4, 4))
    assert is_isomorphic(G1.graph, shrikhande())
    G0, _ = build_G01(complete(2))
    assert (G0.graph.n, G0.graph.m) == (2, 1)


@pytest.mark.parametrize("k", range(3, 9))
def test_cycle_lifts(k):
    G0, G1 = build_G01(cycle(k))
    assert is_isomorphic(G0.graph, cycle(k).union(cycle(k)))
    assert is_isomorphic(G1.graph, cycle(2 * k))


def test_matches_direct_expansion(rng):
    for _ in range(30):
        G = random_connected_graph(rng.randint(2, 5), 0.5, rng)
        U = {v for v in range(G.n) if rng.random() < 0.5}
        assert is_isomorphic(build_GU(G, U).graph, brute_lift(G, U))


def test_parity_law():
    rng = random.Random(77)
    for _ in range(30):
        G = random_connected_graph(rng.randint(2, 6), rng.uniform(0.3, 0.8), rng)
        U = {v for v in range(G.n) if rng.random() < 0.5}
        V = {v for v in range(G.n) if rng.random() < 0.5}
        same = len(U) % 2 == len(V) % 2
        assert is_isomorphic(build_GU(G, U).graph, build_GU(G, V).graph) == same


def test_vertex_count_and_projection(rng):
    for _ in range(30):
        G = random_connected_graph(rng.randint(2, 6), 0.5, rng)
        U = [v for v in range(G.n) if rng.random() < 0.5]
        lab = build_GU(G, U)
        assert lab.graph.n == sum(max(1, 2 ** (d - 1)) for d in G.degrees())
        assert lab.projection.is_homomorphism()
        for x in lab.labels:
            assert len(x.tail_edges()) % 2 == (x.head in U)
            assert set(x.tail_edges()) <= set(G.incident(x.head))


def test_shift_isomorphism_single_edge():
    f = shift_isomorphism(cycle(3), {0}, (0, 1))
    assert is_isomorphism(build_GU(cycle(3), {0}).graph, build_GU(cycle(3), {1}).graph, f)
    g = shift_isomorphism(complete(2), (), (0, 1))
    assert is_isomorphism(build_GU(complete(2)).graph, build_GU(complete(2), {0, 1}).graph, g)


def test_shift_isomorphism_chained_along_path(rng):
    for _ in range(10):
        G = random_connected_graph(rng.randint(3, 6), 0.4, rng)
        for w in range(1, G.n):
            # walk a BFS path 0 -> w, shifting the odd vertex one step at a time
            prev = {0: None}
            queue = [0]
            for a in queue:
                for b in G.neighbors(a):
                    if b not in prev:
                        prev[b] = a
                        queue.append(b)
            route = [w]
            while prev[route[-1]] is not None:
                route.append(prev[route[-1]])
            route.reverse()
            f = list(range(build_GU(G, {0}).graph.n))
            for a, b in zip(route, route[1:]):
                step = shift_isomorphism(G, {a}, (a, b))
                f = [step[x] for x in f]
            assert is_isomorphism(build_GU(G, {0}).graph, build_GU(G, {w}).graph, f)


def test_shift_rejects_non_edge():
    with pytest.raises(InvalidInput):
        shift_isomorphism(path(3), (), (0, 2))


def test_star_simplified():
    H0 = build_star_simplified(3, 0)
    assert H0.is_connected() and min(H0.degrees()) > 0
    H1 = build_star_simplified(3, 1)
    isolated = [v for v in range(H1.n) if H1.degree(v) == 0]
    assert len(isolated) == 1 and isolated[0] >= 3  # the subset {0, 1, 2}
    assert is_isomorphic(build_star_simplified(2, 1), complete(2).union(complete(2)))
    for d in range(0, 6):
        for i in (0, 1):
            if d == 0 and i == 1:
                continue
            lifted = build_GU(star(d), {0} if i else ()).graph if d else Graph(1)
            assert is_isomorphic(build_star_simplified(d, i), lifted), (d, i)


def test_tilde_lift():
    T = build_tilde_GU(complete(2))
    assert T.graph.n == 2 and T.graph.m == 1 and T.graph.loops == {0, 1}
    lab = build_tilde_GU(star(3), {0})
    heads = [x.head for x in lab.labels]
    for a in range(lab.graph.n):
        assert lab.graph.has_loop(a)
        for b in range(lab.graph.n):
            if a != b and heads[a] == heads[b]:
                assert lab.graph.has_edge(a, b)
    T0, T1 = build_tilde_GU(star(3)).graph, build_tilde_GU(star(3), {0}).graph
    assert hom_count(star(3), T0) != hom_count(star(3), T1)


def test_errors():
    with pytest.raises(InvalidInput):
        build_GU(Graph(2, [(0, 1)], [0]))
    with pytest.raises(InvalidInput):
        build_tilde_GU(Graph(1, [], [0]))
    with pytest.raises(InvalidInput):
        build_GU(Graph(3, [(0, 1)]), {2})
    with pytest.raises(InvalidInput):
        build_G01(complete(2).union(complete(2)))
    with pytest.raises(InvalidInput):
        build_star_simplified(3, 2)


def test_json_description():
    lab = build_GU(cycle(3), {0})
    obj = lab.to_json()
    assert len(obj["vertices"]) == lab.graph.n
    assert obj["projection"] == [x.head for x in lab.labels]
    assert obj["vertices"][0] == {"head": 0, "tail": [0]}
    assert lab.index()[GUVertex(0, 1)] == 0
