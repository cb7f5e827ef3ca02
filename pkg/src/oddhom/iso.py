"""Colour refinement, canonical labelling and isomorphism testing.

Canonical forms come from an individualisation-refinement search that keeps
the lexicographically largest leaf certificate.  Automorphisms discovered at
equal leaves prune sibling branches lying in the same orbit of the point-wise
stabiliser of the current individualised prefix.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, bits


def _compress(values: Sequence) -> list[int]:
    order = {v: i for i, v in enumerate(sorted(set(values)))}
    return [order[v] for v in values]


def refine(G: Graph, colors: Sequence[int]) -> list[int]:
    """Equitable refinement of an ordered colouring (label-invariant)."""
    col = _compress(colors)
    ncol = max(col, default=-1) + 1
    nbrs = [G.neighbors(v) for v in range(G.n)]
    while True:
        sig = [(col[v], tuple(sorted(col[w] for w in nbrs[v]))) for v in range(G.n)]
        new = _compress(sig)
        k = max(new, default=-1) + 1
        if k == ncol:
            return new
        col, ncol = new, k


def color_refinement(G: Graph) -> list[int]:
    """Stable 1-WL colouring, seeded by the loop flag."""
    return refine(G, [int(G.has_loop(v)) for v in range(G.n)])


def wl1_equivalent(G: Graph, H: Graph) -> bool:
    """True iff colour refinement does not distinguish ``G`` and ``H``."""
    if G.n != H.n:
        return False
    col = color_refinement(G.union(H))
    return sorted(col[: G.n]) == sorted(col[G.n:])


def _individualize(col: list[int], v: int) -> list[int]:
    c2 = [2 * c for c in col]
    c2[v] -= 1
    return _compress(c2)


def _certificate(G: Graph, pos: Sequence[int]) -> tuple[int, ...]:
    rows = [0] * G.n
    for v in range(G.n):
        m = 0
        for w in bits(G.adj[v]):
            m |= 1 << pos[w]
        rows[pos[v]] = m
    return tuple(rows)


class _Search:
    def __init__(self, G: Graph):
        self.G = G
        self.best: tuple[int, ...] | None = None
        self.best_pos: list[int] | None = None
        self.autos: list[list[int]] = []

    def run(self) -> None:
        self._node(color_refinement(self.G), [])

    def _orbit_rep(self, prefix: list[int], cell: list[int]) -> dict[int, int]:
        parent = {v: v for v in cell}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.autos:
            if any(a[p] != p for p in prefix):
                continue
            for v in cell:
                w = a[v]
                if w in parent:
                    rv, rw = find(v), find(w)
                    if rv != rw:
                        parent[max(rv, rw)] = min(rv, rw)
        return {v: find(v) for v in cell}

    def _node(self, col: list[int], prefix: list[int]) -> None:
        G = self.G
        col = refine(G, col)
        ncol = max(col, default=-1) + 1
        if ncol == G.n:
            cert = _certificate(G, col)
            if self.best is None or cert > self.best:
                self.best, self.best_pos = cert, col
            elif cert == self.best:
                inv = [0] * G.n
                for v, p in enumerate(self.best_pos):
                    inv[p] = v
                auto = [inv[col[v]] for v in range(G.n)]
                if any(auto[v] != v for v in range(G.n)):
                    self.autos.append(auto)
            return
        sizes = [0] * ncol
        for c in col:
            sizes[c] += 1
        target = min((s, c) for c, s in enumerate(sizes) if s > 1)[1]
        cell = [v for v in range(G.n) if col[v] == target]
        done: set[int] = set()
        for v in cell:
            if done:
                reps = self._orbit_rep(prefix, cell)
                if reps[v] in {reps[w] for w in done}:
                    continue
            self._node(_individualize(col, v), prefix + [v])
            done.add(v)


def canonical_labeling(G: Graph) -> tuple[list[int], tuple]:
    """Return ``(pos, key)``: ``pos[v]`` is v's canonical position, ``key`` is hashable."""
    if G.n == 0:
        return [], (0, ())
    s = _Search(G)
    s.run()
    return list(s.best_pos), (G.n, s.best)


def canonical_key(G: Graph) -> tuple:
    return canonical_labeling(G)[1]


def canonical_form(G: Graph) -> Graph:
    pos, _ = canonical_labeling(G)
    return G.relabel(pos)


def _cheap_invariant(G: Graph) -> tuple:
    return (G.n, G.m, len(G.loops), tuple(sorted(G.degrees())))


def is_isomorphism(G: Graph, H: Graph, f: Sequence[int]) -> bool:
    """Check that ``f`` is a bijection preserving adjacency, non-adjacency and loops."""
    if G.n != H.n or len(f) != G.n or sorted(f) != list(range(G.n)):
        return False
    return all(
        (G.adj[u] >> v & 1) == (H.adj[f[u]] >> f[v] & 1) for u in range(G.n) for v in range(u, G.n)
    )


def find_isomorphism(G: Graph, H: Graph) -> list[int] | None:
    """A witness bijection ``V(G) -> V(H)``, or None."""
    if _cheap_invariant(G) != _cheap_invariant(H):
        return None
    pg, kg = canonical_labeling(G)
    ph, kh = canonical_labeling(H)
    if kg != kh:
        return None
    inv_h = [0] * H.n
    for v, p in enumerate(ph):
        inv_h[p] = v
    f = [inv_h[pg[v]] for v in range(G.n)]
    assert is_isomorphism(G, H, f)
    return f


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return find_isomorphism(G, H) is not None
