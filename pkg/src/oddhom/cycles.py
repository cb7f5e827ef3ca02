"""Winding numbers of walks over a cycle, tours, and chordless odd-winding cycles.

Given ``psi: F -> C_k`` every step ``ab`` moves one position forward or back
around the target cycle; the signed sum along a walk is its psi-length and a
closed walk's psi-length is a multiple ``m k`` of ``k`` (``m`` = winding).
Oddomorphisms onto a cycle always contain a tour of odd winding, which is
then cut down to a chordless cycle of odd winding.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GuardExceeded, InvalidInput
from .graph import Graph, bits, fibers, mask_of
from .oddo import ODD, OddoCertificate, _as_tuple, certificate_violation, classify_parity, is_oddomorphism
from .structure import is_chordless, iter_cycles

STRUCTURE_GUARD = (12, 6)


def cycle_positions(G: Graph) -> list[int]:
    """Position of each vertex along a connected 2-regular ``G``, starting at 0 then its lower neighbour."""
    if G.n < 3 or not G.is_connected() or any(d != 2 for d in G.degrees()) or G.loops:
        raise InvalidInput("target is not a cycle")
    pos = [-1] * G.n
    prev, cur = -1, 0
    for i in range(G.n):
        pos[cur] = i
        nxt = [w for w in G.neighbors(cur) if w != prev]
        prev, cur = cur, min(nxt) if i == 0 else nxt[0]
    return pos


def _positions(psi, G: Graph | int) -> tuple[list[int], int]:
    psi = _as_tuple(psi)
    if isinstance(G, int):
        return list(psi), G
    pos = cycle_positions(G)
    return [pos[x] for x in psi], G.n


def _step(p: int, q: int, k: int) -> int:
    d = (q - p) % k
    if d == 1:
        return 1
    if d == k - 1:
        return -1
    raise InvalidInput(f"positions {p} and {q} are not adjacent on C_{k}")


@dataclass(frozen=True)
class Walk:
    vertices: tuple[int, ...]
    closed: bool = False

    def check(self, F: Graph) -> None:
        vs = self.vertices
        if any(not F.has_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1)):
            raise InvalidInput("consecutive walk vertices are not adjacent")
        if self.closed and vs and vs[0] != vs[-1]:
            raise InvalidInput("closed walk must end where it starts")

    def steps(self) -> list[tuple[int, int]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def reversed(self) -> "Walk":
        return Walk(self.vertices[::-1], self.closed)


def psi_length(walk: Walk | list[int], psi, G: Graph | int) -> int:
    """Signed number of forward steps minus backward steps around the target cycle."""
    vs = walk.vertices if isinstance(walk, Walk) else list(walk)
    pos, k = _positions(psi, G)
    return sum(_step(pos[a], pos[b], k) for a, b in zip(vs, vs[1:]))


@dataclass(frozen=True)
class TourWitness:
    """A closed walk without repeated edges, its winding, and the per-position crossing tallies.

    ``forward[i]`` counts steps from position ``i`` to ``i + 1``,
    ``backward[i]`` steps from ``i + 1`` back to ``i``.
    """

    walk: Walk
    winding: int
    forward: tuple[int, ...]
    backward: tuple[int, ...]
    used_edges: frozenset = field(default_factory=frozenset)

    def to_json(self) -> dict:
        return {
            "walk": list(self.walk.vertices),
            "winding": self.winding,
            "forward": list(self.forward),
            "backward": list(self.backward),
        }


def tour_witness(vertices, psi, G: Graph | int) -> TourWitness:
    pos, k = _positions(psi, G)
    fwd, bwd = [0] * k, [0] * k
    total = 0
    for a, b in zip(vertices, vertices[1:]):
        s = _step(pos[a], pos[b], k)
        total += s
        if s == 1:
            fwd[pos[a]] += 1
        else:
            bwd[pos[b]] += 1
    if total % k:
        raise InvalidInput("walk is not closed over the cycle")
    used = frozenset((min(a, b), max(a, b)) for a, b in zip(vertices, vertices[1:]))
    return TourWitness(Walk(tuple(vertices), True), total // k, tuple(fwd), tuple(bwd), used)


def _odd_set(F: Graph, pos: list[int], k: int) -> int:
    tags = classify_parity(F, None, pos, _std_cycle(k)).tags
    return mask_of(a for a, t in enumerate(tags) if t == ODD)


def _std_cycle(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def _status_walk(F: Graph, pos: list[int], k: int) -> TourWitness:
    C = _std_cycle(k)
    if not is_oddomorphism(F, pos, C):
        raise InvalidInput("map is not an oddomorphism onto the cycle")
    status = _odd_set(F, pos, k)
    fib = fibers(pos, k)
    a0 = next(a for a in bits(fib[0]) if status >> a & 1)
    used: set[tuple[int, int]] = set()
    walk = [a0]
    a, d = a0, 1
    status &= ~(1 << a0)
    while True:
        want = fib[(pos[a] + d) % k]
        nxt = next((b for b in bits(F.nbr(a) & want) if (min(a, b), max(a, b)) not in used), None)
        if nxt is None:
            raise InvalidInput(f"status walk stuck at vertex {a}")
        used.add((min(a, nxt), max(a, nxt)))
        walk.append(nxt)
        if nxt == a0 and d == 1 and pos[a] == k - 1:
            break
        a = nxt
        if status >> a & 1:
            status &= ~(1 << a)
        else:
            d = -d
    return tour_witness(walk, pos, k)


def find_tour_nonzero(F: Graph, psi, G: Graph | int) -> TourWitness:
    """Status walk from the lowest odd vertex over position 0; the result has nonzero winding."""
    pos, k = _positions(psi, G)
    return _status_walk(F, pos, k)


def find_odd_winding_tour(F: Graph, psi, G: Graph | int) -> TourWitness:
    """Take tours, deleting each one of even winding, until a tour of odd winding appears."""
    pos, k = _positions(psi, G)
    H = F
    while True:
        t = _status_walk(H, pos, k)
        if t.winding % 2:
            return t
        H = Graph(H.n, [e for e in H.edges if e not in t.used_edges])


def _shorten(F: Graph, cyc: list[int], pos: list[int], k: int) -> list[int]:
    """Split a closed walk (first == last) until it is a chordless cycle of odd winding."""
    w = list(cyc)
    while True:
        seen: dict[int, int] = {}
        split = None
        for i, a in enumerate(w[:-1]):
            if a in seen:
                split = (seen[a], i)
                break
            seen[a] = i
        if split is None:
            break
        i, j = split
        inner = w[i : j + 1]
        outer = w[: i + 1] + w[j + 1 :]
        w = inner if psi_length(inner, pos, k) // k % 2 else outer
    while True:
        body = w[:-1]
        L = len(body)
        where = {a: i for i, a in enumerate(body)}
        chord = None
        for i, a in enumerate(body):
            for b in bits(F.nbr(a)):
                j = where.get(b)
                if j is not None and j > i + 1 and not (i == 0 and j == L - 1):
                    chord = (i, j)
                    break
            if chord:
                break
        if chord is None:
            return w
        i, j = chord
        first = body[i : j + 1] + [body[i]]
        second = body[j:] + body[: i + 1] + [body[j]]
        w = first if psi_length(first, pos, k) // k % 2 else second


@dataclass(frozen=True)
class ChordlessCycle:
    vertices: tuple[int, ...]
    winding: int

    def to_json(self) -> dict:
        return {"cycle": list(self.vertices), "length": len(self.vertices), "winding": self.winding}


def extract_chordless_odd_cycle(F: Graph, cert: OddoCertificate | tuple) -> ChordlessCycle:
    """A chordless cycle of ``F`` whose winding over the target cycle is odd.

    ``cert`` is an ``OddoCertificate`` onto a cycle, or a pair ``(psi, G)``
    for an oddomorphism ``F -> G``.
    """
    if isinstance(cert, OddoCertificate):
        bad = certificate_violation(cert)
        if bad:
            raise InvalidInput(f"invalid certificate: {bad}")
        if cert.source != F:
            raise InvalidInput("certificate is for a different source graph")
        W = cert.witness_graph()
        psi, G = cert.psi, cert.target
    else:
        psi, G = cert
        W = F
    pos, k = _positions(psi, G)
    tour = find_odd_winding_tour(W, pos, k)
    cyc = _shorten(F, list(tour.walk.vertices), pos, k)
    return ChordlessCycle(tuple(cyc[:-1]), psi_length(cyc, pos, k) // k)


def check_chordless_odd_cycle(F: Graph, psi, G: Graph | int, cyc) -> str | None:
    """First failed property of an extracted cycle, or None."""
    pos, k = _positions(psi, G)
    cyc = list(cyc)
    L = len(cyc)
    if L < 3 or len(set(cyc)) != L or any(not F.has_edge(cyc[i], cyc[(i + 1) % L]) for i in range(L)):
        return "not a cycle of F"
    if not is_chordless(F, cyc):
        return "cycle has a chord"
    m = psi_length(cyc + cyc[:1], pos, k) // k
    if m % 2 == 0:
        return "winding is even"
    if L < k or (L - k) % 2:
        return "length is shorter than k or has the wrong parity"
    crossed = {min(pos[a], pos[b]) if abs(pos[a] - pos[b]) == 1 else k - 1 for a, b in zip(cyc, cyc[1:] + cyc[:1])}
    if len(crossed) != k:
        return "some edge of the target cycle is not covered"
    return None


# -- cycle structures ---------------------------------------------------------------


@dataclass(frozen=True)
class CycleStructureSpec:
    """Template graph ``R`` with chordless flags ``c`` and length bounds ``ell`` (each >= 3)."""

    R: Graph
    c: tuple[int, ...]
    ell: tuple[int, ...]

    def __post_init__(self):
        if len(self.c) != self.R.n or len(self.ell) != self.R.n:
            raise InvalidInput("c and ell need one entry per vertex of R")
        if any(x < 3 for x in self.ell) or any(x not in (0, 1) for x in self.c):
            raise InvalidInput("ell values must be >= 3 and c values 0/1")


def has_cycle_structure(G: Graph, spec: CycleStructureSpec, guard: tuple[int, int] | None = STRUCTURE_GUARD):
    """``(True, cycles)`` with one cycle per template vertex, or ``(False, None)``.

    Cycles are pairwise distinct and vertex-disjoint across template edges.
    """
    if guard is not None and (G.n > guard[0] or spec.R.n > guard[1]):
        raise GuardExceeded(f"cycle-structure search is limited to |V(G)| <= {guard[0]}, |V(R)| <= {guard[1]}")
    allc = [(cyc, mask_of(cyc), is_chordless(G, cyc)) for cyc in iter_cycles(G, None)]
    R = spec.R
    cands = []
    for u in range(R.n):
        lo = spec.ell[u]
        cands.append([t for t in allc if len(t[0]) >= lo and (len(t[0]) - lo) % 2 == 0 and (t[2] or not spec.c[u])])
    order = sorted(range(R.n), key=lambda u: len(cands[u]))
    chosen: dict[int, tuple] = {}

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        u = order[i]
        for t in cands[u]:
            if any(t[0] == s[0] for s in chosen.values()):
                continue
            if any(R.has_edge(u, w) and t[1] & s[1] for w, s in chosen.items()):
                continue
            chosen[u] = t
            if rec(i + 1):
                return True
            del chosen[u]
        return False

    if rec(0):
        return True, [chosen[u][0] for u in range(R.n)]
    return False, None
