"""The parity-lift graphs ``G_U``, their looped variant, and simplified star lifts.

A vertex of ``G_U`` is a pair ``(v, S)``: a head ``v`` of ``G`` and a tail
``S`` of edges at ``v`` whose size has the parity of ``[v in U]``.  Two
vertices are adjacent when their heads are adjacent in ``G`` and the tails
agree on the edge joining those heads.

Tails are bitsets over ``G.edge_index``.  Vertex ids are assigned in
``(head, tail)`` order with tails compared as sorted tuples of edge
indices, so output is reproducible.  Any other fixed order gives an
isomorphic graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import InvalidInput
from .graph import Graph, VertexMap, bits, mask_of


@dataclass(frozen=True)
class GUVertex:
    head: int
    tail: int

    def tail_edges(self) -> list[int]:
        return bits(self.tail)


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[GUVertex, ...]
    projection: VertexMap

    def index(self) -> dict[GUVertex, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def to_json(self) -> dict:
        return {
            "vertices": [{"head": x.head, "tail": x.tail_edges()} for x in self.labels],
            "edges": [list(e) for e in self.graph.edges],
            "loops": sorted(self.graph.loops),
            "projection": list(self.projection.map),
        }


def _check_base(G: Graph, U: Iterable[int]) -> int:
    if G.loops:
        raise InvalidInput("the lift is defined for loopless graphs only")
    umask = 0
    for v in U:
        if not 0 <= v < G.n:
            raise InvalidInput(f"vertex {v} of U is not in G")
        umask |= 1 << v
    for v in bits(umask):
        if G.degree(v) == 0:
            raise InvalidInput(f"U contains isolated vertex {v}: its fiber would be empty")
    return umask


def _tails(G: Graph, v: int, parity: int) -> list[int]:
    inc = sorted(G.incident(v))
    out = []
    for size in range(parity, len(inc) + 1, 2):
        out.extend(mask_of(c) for c in combinations(inc, size))
    out.sort(key=bits)
    return out


def _labels(G: Graph, umask: int) -> list[GUVertex]:
    return [GUVertex(v, t) for v in range(G.n) for t in _tails(G, v, umask >> v & 1)]


def _lift(G: Graph, labels: list[GUVertex], tilde: bool) -> Graph:
    by_head: list[list[int]] = [[] for _ in range(G.n)]
    for i, lab in enumerate(labels):
        by_head[lab.head].append(i)
    adj = [0] * len(labels)
    for u, v in G.edges:
        e = G.edge_index[(u, v)]
        side = [[0, 0], [0, 0]]  # side[endpoint][bit e of tail] -> mask
        for k, w in enumerate((u, v)):
            for i in by_head[w]:
                side[k][labels[i].tail >> e & 1] |= 1 << i
        for bit in (0, 1):
            for i in bits(side[0][bit]):
                adj[i] |= side[1][bit]
            for i in bits(side[1][bit]):
                adj[i] |= side[0][bit]
    if tilde:
        for u in range(G.n):
            far_mask = 0
            for w in range(G.n):
                if G.has_edge(u, w):
                    continue
                far_mask |= mask_of(by_head[w])
            for i in by_head[u]:
                adj[i] |= far_mask
    return Graph.from_masks(adj)


def _labeled(G: Graph, U: Iterable[int], tilde: bool) -> LabeledGraph:
    labels = _labels(G, _check_base(G, U))
    H = _lift(G, labels, tilde)
    return LabeledGraph(H, tuple(labels), VertexMap(H, G, tuple(x.head for x in labels)))


def build_GU(G: Graph, U: Iterable[int] = ()) -> LabeledGraph:
    """The lift ``G_U`` with its projection onto ``G``."""
    return _labeled(G, U, tilde=False)


def build_tilde_GU(G: Graph, U: Iterable[int] = ()) -> LabeledGraph:
    """Looped variant: heads that are non-adjacent (or equal) always join, and every vertex has a loop."""
    return _labeled(G, U, tilde=True)


def build_G01(G: Graph) -> tuple[LabeledGraph, LabeledGraph]:
    """``(G_{}, G_{0})`` for connected ``G``."""
    if not G.is_connected():
        raise InvalidInput("G must be connected; build the lift of each component separately")
    if G.n == 1:
        raise InvalidInput("K_1 has no edge, so only the even lift exists")
    return build_GU(G, ()), build_GU(G, (0,))


def shift_isomorphism(G: Graph, U: Iterable[int], e: tuple[int, int]) -> list[int]:
    """Bijection ``V(G_U) -> V(G_U')`` with ``U' = U ^ {u, v}``, toggling edge ``uv`` in both endpoint tails."""
    u, v = e
    if not (0 <= u < G.n and 0 <= v < G.n) or u == v or not G.has_edge(u, v):
        raise InvalidInput(f"{u}-{v} is not an edge of G")
    U = set(U)
    src = build_GU(G, U)
    dst = build_GU(G, U ^ {u, v})
    flip = 1 << G.edge_index[(min(u, v), max(u, v))]
    where = dst.index()
    return [where[GUVertex(x.head, x.tail ^ flip if x.head in (u, v) else x.tail)] for x in src.labels]


def build_star_simplified(d: int, i: int) -> Graph:
    """Vertices ``0..d-1`` followed by subsets ``S`` of ``[d]`` with ``|S| = i`` mod 2; ``j ~ S`` iff ``j`` not in ``S``."""
    if d < 0 or i not in (0, 1):
        raise InvalidInput("need d >= 0 and i in {0, 1}")
    subsets = [mask_of(c) for size in range(i, d + 1, 2) for c in combinations(range(d), size)]
    subsets.sort(key=bits)
    edges = [(j, d + k) for k, S in enumerate(subsets) for j in range(d) if not S >> j & 1]
    return Graph(d + len(subsets), edges)
