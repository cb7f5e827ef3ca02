"""Structural queries that return checkable witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import GuardExceeded
from .graph import Graph, bits, mask_of
from .minors import PLANARITY_GUARD, planarity

CYCLE_GUARD = 16


def _guard(G: Graph, limit: int | None, what: str) -> None:
    if limit is not None and G.n > limit:
        raise GuardExceeded(f"{what} is limited to |V| <= {limit} (got {G.n})")


def iter_cycles(G: Graph, guard: int | None = CYCLE_GUARD) -> Iterator[tuple[int, ...]]:
    """Every cycle once, as a vertex sequence starting at its minimum, second < last."""
    _guard(G, guard, "cycle enumeration")
    nbr = [G.nbr(v) for v in range(G.n)]
    for s in range(G.n):
        above = ~((1 << (s + 1)) - 1)
        path = [s]

        def walk(a: int, used: int) -> Iterator[tuple[int, ...]]:
            if len(path) >= 3 and nbr[a] >> s & 1 and path[1] < a:
                yield tuple(path)
            for b in bits(nbr[a] & above & ~used):
                path.append(b)
                yield from walk(b, used | 1 << b)
                path.pop()

        yield from walk(s, 1 << s)


def is_chordless(G: Graph, cyc) -> bool:
    cm = mask_of(cyc)
    return all((G.nbr(a) & cm).bit_count() == 2 for a in cyc)


def is_cycle_of(G: Graph, cyc) -> bool:
    k = len(cyc)
    return k >= 3 and len(set(cyc)) == k and all(G.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k))


def circumference(G: Graph, guard: int | None = CYCLE_GUARD) -> tuple[int, tuple[int, ...] | None]:
    """Length of a longest cycle (0 for forests) with a witness."""
    best: tuple[int, ...] | None = None
    for cyc in iter_cycles(G, guard):
        if best is None or len(cyc) > len(best):
            best = cyc
            if len(best) == G.n:
                break
    return (len(best), best) if best else (0, None)


def find_odd_hole(G: Graph, guard: int | None = CYCLE_GUARD) -> tuple[int, ...] | None:
    """A chordless odd cycle of length at least 5, if any."""
    for cyc in iter_cycles(G, guard):
        if len(cyc) >= 5 and len(cyc) % 2 and is_chordless(G, cyc):
            return cyc
    return None


def find_induced_star(G: Graph, d: int) -> tuple[int, tuple[int, ...]] | None:
    """``(centre, leaves)`` of an induced ``K_{1,d}``, if any."""
    for v in range(G.n):
        nb = G.neighbors(v)
        for leaves in combinations(nb, d):
            lm = mask_of(leaves)
            if all(not G.nbr(x) & lm for x in leaves):
                return v, leaves
    return None


@dataclass(frozen=True)
class StructureReport:
    components: list[list[int]]
    bipartite: bool
    two_coloring: list[int] | None
    max_degree: int
    max_degree_vertex: int | None
    circumference: int
    longest_cycle: tuple[int, ...] | None
    odd_hole: tuple[int, ...] | None
    induced_star: tuple[int, tuple[int, ...]] | None
    planar: bool
    planarity_reason: str

    def to_json(self) -> dict:
        return {
            "components": self.components,
            "bipartite": self.bipartite,
            "two_coloring": self.two_coloring,
            "max_degree": self.max_degree,
            "max_degree_vertex": self.max_degree_vertex,
            "circumference": self.circumference,
            "longest_cycle": list(self.longest_cycle) if self.longest_cycle else None,
            "odd_hole": list(self.odd_hole) if self.odd_hole else None,
            "induced_star": [self.induced_star[0], list(self.induced_star[1])] if self.induced_star else None,
            "planar": self.planar,
            "planarity_reason": self.planarity_reason,
        }


def structure_queries(G: Graph, star_d: int = 3, guard: int | None = CYCLE_GUARD) -> StructureReport:
    degs = G.degrees()
    dmax = max(degs, default=0)
    circ, longest = circumference(G, guard)
    planar, reason = planarity(G, PLANARITY_GUARD if guard is not None else None)
    return StructureReport(
        components=G.components(),
        bipartite=G.is_bipartite(),
        two_coloring=G.two_coloring(),
        max_degree=dmax,
        max_degree_vertex=degs.index(dmax) if degs else None,
        circumference=circ,
        longest_cycle=longest,
        odd_hole=find_odd_hole(G, guard),
        induced_star=find_induced_star(G, star_d),
        planar=planar,
        planarity_reason=reason,
    )
