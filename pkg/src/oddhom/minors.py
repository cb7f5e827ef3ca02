"""Minor containment, subgraph embeddings and a desk-scale planarity test."""

from __future__ import annotations

from .errors import GuardExceeded
from .graph import Graph, bits, complete, complete_bipartite
from .iso import canonical_key

MINOR_GUARD = 12
PLANARITY_GUARD = 16


def find_monomorphism(G: Graph, H: Graph) -> list[int] | None:
    """Injective map ``V(G) -> V(H)`` sending edges to edges (loops ignored)."""
    if G.n > H.n:
        return None
    if G.n == 0:
        return []
    order: list[int] = []
    seen = 0
    for s in sorted(range(G.n), key=lambda v: -G.degree(v)):
        if seen >> s & 1:
            continue
        seen |= 1 << s
        queue = [s]
        while queue:
            a = queue.pop(0)
            order.append(a)
            for b in sorted(G.neighbors(a), key=lambda v: -G.degree(v)):
                if not seen >> b & 1:
                    seen |= 1 << b
                    queue.append(b)
    gdeg = [G.degree(v) for v in range(G.n)]
    hdeg = [H.degree(x) for x in range(H.n)]
    hnbr = [H.nbr(x) for x in range(H.n)]
    all_h = (1 << H.n) - 1
    phi = [-1] * G.n

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        a = order[i]
        cand = all_h & ~used
        for b in G.neighbors(a):
            if phi[b] >= 0:
                cand &= hnbr[phi[b]]
        for x in bits(cand):
            if hdeg[x] < gdeg[a]:
                continue
            phi[a] = x
            if extend(i + 1, used | 1 << x):
                return True
        phi[a] = -1
        return False

    return list(phi) if extend(0, 0) else None


def _split(H: Graph, min_n: int, min_m: int) -> list[Graph]:
    out = []
    for comp in H.components():
        if len(comp) >= min_n:
            C = H.induced(comp) if len(comp) < H.n else H
            if C.m >= min_m:
                out.append(C)
    return out


def has_minor(F: Graph, G: Graph, guard: int | None = MINOR_GUARD) -> bool:
    """True iff ``G`` is a minor of ``F`` (loops ignored on both sides).

    Level-by-level search over vertex deletions and edge contractions with
    canonical-form memoisation; at ``|V(G)|`` vertices the remaining edge
    deletions are decided by a spanning monomorphism test.
    """
    if guard is not None and F.n > guard:
        raise GuardExceeded(f"has_minor is limited to |V(F)| <= {guard} (got {F.n})")
    F, G = F.without_loops(), G.without_loops()
    if G.n == 0:
        return True
    if G.n > F.n or G.m > F.m:
        return False
    connected = G.is_connected()
    if connected:
        level = {canonical_key(C): C for C in _split(F, G.n, G.m)}
    else:
        level = {canonical_key(F): F}
    gdeg = sorted(G.degrees(), reverse=True)
    while level:
        nxt: dict[tuple, Graph] = {}
        for H in level.values():
            if H.n == G.n:
                hdeg = sorted(H.degrees(), reverse=True)
                if all(h >= g for h, g in zip(hdeg, gdeg)) and find_monomorphism(G, H) is not None:
                    return True
                continue
            children = [H.delete_vertex(v) for v in range(H.n)]
            children += [H.contract(u, v)[0] for u, v in H.edges]
            for C in children:
                parts = _split(C, G.n, G.m) if connected else ([C] if C.m >= G.m else [])
                for P in parts:
                    nxt.setdefault(canonical_key(P), P)
        level = nxt
    return False


def _reduce_for_planarity(G: Graph) -> Graph:
    """Drop vertices of degree <= 1 and suppress degree-2 vertices."""
    H = G.without_loops()
    changed = True
    while changed and H.n:
        changed = False
        for v in range(H.n):
            d = H.degree(v)
            if d <= 1:
                H = H.delete_vertex(v)
                changed = True
                break
            if d == 2:
                a, b = H.neighbors(v)
                if H.has_edge(a, b):
                    H = H.delete_vertex(v)
                else:
                    H = H.contract(v, a)[0]
                changed = True
                break
    return H


def _has_triangle(G: Graph) -> bool:
    return any(G.nbr(u) & G.nbr(v) for u, v in G.edges)


def planarity(G: Graph, guard: int | None = PLANARITY_GUARD) -> tuple[bool, str]:
    """``(is_planar, reason)``; reason names the Kuratowski minor or the shortcut used."""
    if guard is not None and G.n > guard:
        raise GuardExceeded(f"planarity test is limited to |V| <= {guard} (got {G.n})")
    H = _reduce_for_planarity(G)
    for comp in H.components():
        C = H.induced(comp)
        if C.n <= 4:
            continue
        if C.m > 3 * C.n - 6:
            return False, "euler-bound"
        if not _has_triangle(C) and C.m > 2 * C.n - 4:
            return False, "euler-bound-triangle-free"
        if has_minor(C, complete(5), guard=None):
            return False, "K5-minor"
        if has_minor(C, complete_bipartite(3, 3), guard=None):
            return False, "K33-minor"
    return True, "no-kuratowski-minor"


def is_planar(G: Graph, guard: int | None = PLANARITY_GUARD) -> bool:
    return planarity(G, guard)[0]
