from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest

from oddhom.enumeration import enumerate_graphs
from oddhom.errors import GuardExceeded
from oddhom.families import parse_predicate
from oddhom.graph import Graph, complete, path
from oddhom.iso import is_isomorphic


def labelled_classes(n, connected):
    """Every labelled graph on n vertices, deduplicated with networkx."""
    pairs = list(combinations(range(n), 2))
    buckets: dict[str, list[nx.Graph]] = {}
    for mask in range(1 << len(pairs)):
        H = nx.Graph()
        H.add_nodes_from(range(n))
        H.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
        if connected and not nx.is_connected(H):
            continue
        bucket = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(H), [])
        if not any(nx.is_isomorphic(H, R) for R in bucket):
            bucket.append(H)
    return sum(map(len, buckets.values()))


def test_up_to_three_vertices():
    got = list(enumerate_graphs(3, True))
    expect = [complete(1), complete(2), path(3), complete(3)]
    assert len(got) == 4
    for G in expect:
        assert sum(is_isomorphic(G, H) for H in got) == 1


def test_exactly_four_vertices():
    assert len(list(enumerate_graphs(4, True, n_min=4))) == 6


def test_zero_bound():
    assert list(enumerate_graphs(0, True)) == []


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
@pytest.mark.parametrize("connected", [True, False])
def test_counts_match_labelled_oracle(n, connected):
    ours = list(enumerate_graphs(n, connected, n_min=n))
    assert all(G.n == n for G in ours)
    assert len(ours) == labelled_classes(n, connected)


def test_cumulative_counts():
    assert len(list(enumerate_graphs(7, True))) == 1 + 1 + 2 + 6 + 21 + 112 + 853
    assert len(list(enumerate_graphs(6, False))) == 1 + 2 + 4 + 11 + 34 + 156


def test_outputs_pairwise_nonisomorphic():
    out = list(enumerate_graphs(5, False))
    for i, G in enumerate(out):
        for H in out[i + 1 :]:
            if G.n == H.n and G.m == H.m:
                assert not is_isomorphic(G, H)


def test_pruning_equals_filtering():
    for spec in ["forests", "maxdeg:3", "tw2", "no-odd-holes", "circumference:4"]:
        pred = parse_predicate(spec)
        pruned = list(enumerate_graphs(6, True, pred))
        filtered = [G for G in enumerate_graphs(6, True) if pred(G)]
        assert pruned == filtered, spec


def test_looped_graphs():
    out = list(enumerate_graphs(4, False, loops=True, n_min=4))
    assert len(out) == 90
    assert any(G.loops for G in out)


def test_guard():
    with pytest.raises(GuardExceeded):
        list(enumerate_graphs(9, True))
    assert isinstance(next(iter(enumerate_graphs(9, True, override=True))), Graph)
