"""Exact homomorphism counts, enumeration, and fibre-wise counts via GF(2).

Backtracking visits each component of ``F`` in BFS order, so every vertex
after the first already has a mapped neighbour and its candidate set is an
intersection of neighbourhood bitsets.  The last vertex of a component is
counted by popcount instead of being branched on.

For a homomorphism ``psi: F -> G`` the maps ``phi: F -> G_U`` with
``proj . phi = psi`` correspond to choosing tails ``S_a`` for every ``a``.
Writing ``x[a, e] = [e in S_a]`` turns the constraints into a linear system
over GF(2): one parity row per vertex, one agreement row per edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GuardExceeded, InvalidInput, LimitExceeded
from .gf2 import Gf2Matrix, Gf2System, solution_count_log2
from .graph import Graph, VertexMap, bits, is_homomorphism, mask_of

HOM_SOURCE_GUARD = 10
HOM_TARGET_GUARD = 64
CYCLE_LENGTH_GUARD = 16


def _check_guard(F: Graph, G: Graph, guard: tuple[int, int] | None) -> None:
    if guard is None:
        return
    fmax, gmax = guard
    if F.n > fmax or G.n > gmax:
        raise GuardExceeded(f"hom counting is limited to |V(F)| <= {fmax}, |V(G)| <= {gmax} (got {F.n}, {G.n})")


def _bfs_order(F: Graph, comp: Sequence[int]) -> list[int]:
    order = [comp[0]]
    seen = 1 << comp[0]
    i = 0
    while i < len(order):
        for b in F.neighbors(order[i]):
            if not seen >> b & 1:
                seen |= 1 << b
                order.append(b)
        i += 1
    return order


def _plan(F: Graph, order: list[int]) -> list[tuple[int, list[int], bool]]:
    """Per step: (vertex, earlier neighbours, needs a looped image)."""
    placed = 0
    steps = []
    for a in order:
        steps.append((a, bits(F.nbr(a) & placed), F.has_loop(a)))
        placed |= 1 << a
    return steps


def _count_component(F: Graph, G: Graph, comp: Sequence[int]) -> int:
    steps = _plan(F, _bfs_order(F, comp))
    full = (1 << G.n) - 1
    img = [0] * F.n
    last = len(steps) - 1

    def rec(i: int) -> int:
        a, back, looped = steps[i]
        cand = G.loop_mask if looped else full
        for b in back:
            cand &= G.adj[img[b]]
        if i == last:
            return cand.bit_count()
        total = 0
        for x in bits(cand):
            img[a] = x
            total += rec(i + 1)
        return total

    return rec(0)


def hom_count(F: Graph, G: Graph, guard: tuple[int, int] | None = (HOM_SOURCE_GUARD, HOM_TARGET_GUARD)) -> int:
    """Number of homomorphisms ``F -> G`` (a loop at ``a`` needs a loop at its image)."""
    _check_guard(F, G, guard)
    total = 1
    for comp in F.components():
        total *= _count_component(F, G, comp)
        if not total:
            return 0
    return total


def iter_homs(F: Graph, G: Graph) -> Iterator[tuple[int, ...]]:
    """All homomorphisms as image tuples, in lexicographic order of the BFS-ordered images."""
    order: list[int] = []
    for comp in F.components():
        order.extend(_bfs_order(F, comp))
    steps = _plan(F, order)
    full = (1 << G.n) - 1
    img = [0] * F.n

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == len(steps):
            yield tuple(img)
            return
        a, back, looped = steps[i]
        cand = G.loop_mask if looped else full
        for b in back:
            cand &= G.adj[img[b]]
        for x in bits(cand):
            img[a] = x
            yield from rec(i + 1)

    return rec(0)


def hom_enumerate(F: Graph, G: Graph, limit: int = 100_000) -> list[VertexMap]:
    """Every homomorphism ``F -> G``; raises ``LimitExceeded`` past ``limit``."""
    out = []
    for psi in iter_homs(F, G):
        if len(out) == limit:
            raise LimitExceeded(f"more than {limit} homomorphisms", len(out))
        out.append(VertexMap(F, G, psi))
    return out


# -- fibred systems ------------------------------------------------------------


@dataclass(frozen=True)
class FiberedSystem:
    """Tail-choice constraints for lifts of a fixed map ``psi``.

    ``variables[j] = (a, e)``: does the tail chosen for ``a`` contain edge
    ``e`` of ``G`` (an edge at ``psi(a)``)?  Rows of ``A`` are vertex parity
    constraints with right side ``chi``; rows of ``B`` say two adjacent
    vertices agree on the edge joining their images, one per edge in
    ``edge_rows``.
    """

    psi: tuple[int, ...]
    variables: tuple[tuple[int, int], ...]
    A: Gf2Matrix
    B: Gf2Matrix
    chi: int
    edge_rows: tuple[tuple[int, int], ...]

    def system(self) -> Gf2System:
        """Stacked ``[A; B] x = [chi; 0]``."""
        return Gf2System(self.A.vstack(self.B), self.chi)

    def lift_count(self) -> int:
        k = solution_count_log2(self.system())
        return 0 if k is None else 1 << k


def build_fibered_system(
    F: Graph,
    G: Graph,
    U: Iterable[int],
    psi: Sequence[int] | VertexMap,
    require_hom: bool = True,
) -> FiberedSystem:
    """Constraint system for lifting ``psi`` to ``G_U``.

    With ``require_hom=False`` ``psi`` may be any function and agreement rows
    are emitted only for edges of ``F`` whose endpoints land on an edge of
    ``G``; that system counts lifts into the looped lift.
    """
    psi = tuple(psi.map if isinstance(psi, VertexMap) else psi)
    if G.loops:
        raise InvalidInput("target must be loopless")
    if len(psi) != F.n or any(not 0 <= x < G.n for x in psi):
        raise InvalidInput("psi is not a map V(F) -> V(G)")
    if require_hom and not is_homomorphism(F, G, psi):
        raise InvalidInput("psi is not a homomorphism")
    umask = mask_of(U)
    variables = []
    col: dict[tuple[int, int], int] = {}
    for a in range(F.n):
        for e in sorted(G.incident(psi[a])):
            col[(a, e)] = len(variables)
            variables.append((a, e))
    a_rows = []
    for a in range(F.n):
        a_rows.append(mask_of(col[(a, e)] for e in G.incident(psi[a])))
    chi = mask_of(a for a in range(F.n) if umask >> psi[a] & 1)
    b_rows, edge_rows = [], []
    for a, b in F.edges:
        x, y = psi[a], psi[b]
        if x == y or not G.has_edge(x, y):
            continue
        e = G.edge_index[(min(x, y), max(x, y))]
        b_rows.append(1 << col[(a, e)] | 1 << col[(b, e)])
        edge_rows.append((a, b))
    cols = len(variables)
    return FiberedSystem(
        psi,
        tuple(variables),
        Gf2Matrix.from_rows(a_rows, cols),
        Gf2Matrix.from_rows(b_rows, cols),
        chi,
        tuple(edge_rows),
    )


def hom_count_fibered(F: Graph, G: Graph, U: Iterable[int], psi: Sequence[int] | VertexMap) -> int:
    """Number of homomorphisms ``F -> G_U`` lying over ``psi`` (zero or a power of two)."""
    return build_fibered_system(F, G, U, psi).lift_count()


def hom_vector_cycles(G: Graph, L: int) -> list[int]:
    """``[hom(C_3, G), ..., hom(C_L, G)]`` as traces of adjacency powers."""
    if L > CYCLE_LENGTH_GUARD:
        raise GuardExceeded(f"cycle length is limited to {CYCLE_LENGTH_GUARD}")
    n = G.n
    A = [[G.adj[i] >> j & 1 for j in range(n)] for i in range(n)]
    P = [row[:] for row in A]
    out = []
    for k in range(2, L + 1):
        P = [[sum(P[i][t] * A[t][j] for t in range(n) if A[t][j]) for j in range(n)] for i in range(n)]
        if k >= 3:
            out.append(sum(P[i][i] for i in range(n)))
    return out
