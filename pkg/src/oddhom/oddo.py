"""Oddomorphisms: parity tags, certificate search, and the standard constructions.

For a map ``psi: V(F) -> V(G)`` a vertex ``a`` is *odd* if it has an odd
number of neighbours in every fibre over a neighbour of ``psi(a)``, *even* if
all those counts are even.  An oddomorphism is a homomorphism in which every
vertex is odd or even and every fibre holds an odd number of odd vertices.

A vertex whose image is isolated in ``G`` is vacuously both odd and even; we
tag it ``"both"``.  The fibre of an isolated target vertex then only has to
be nonempty, since one of its vertices can be declared odd.

Search runs over homomorphisms ``psi`` and asks whether the lifting system
for ``psi`` into the odd lift is inconsistent.  An inconsistency certificate
``(y, z)`` is read directly as an odd set ``O = supp(y)`` and a witness
edge set ``supp(z)``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GuardExceeded, InvalidInput
from .gf2 import Gf2Matrix, Gf2System, fredholm_certificate, solve
from .graph import Graph, VertexMap, bits, fibers, from_json, is_homomorphism, mask_of, to_json
from .homcount import build_fibered_system, hom_count, iter_homs

ODDISM_GUARD = 1_000_000

ODD, EVEN, NEITHER, BOTH = "odd", "even", "neither", "both"


def _as_tuple(psi: Sequence[int] | VertexMap) -> tuple[int, ...]:
    return tuple(psi.map if isinstance(psi, VertexMap) else psi)


def _edge_pairs(edges: Iterable[Sequence[int]]) -> list[tuple[int, int]]:
    return sorted({(min(int(e[0]), int(e[1])), max(int(e[0]), int(e[1]))) for e in edges})


# -- parity -------------------------------------------------------------------


@dataclass(frozen=True)
class ParityClassification:
    """Per-vertex tags; ``odd``/``even`` masks both contain vacuous vertices."""

    tags: tuple[str, ...]

    @property
    def odd(self) -> int:
        return mask_of(a for a, t in enumerate(self.tags) if t in (ODD, BOTH))

    @property
    def even(self) -> int:
        return mask_of(a for a, t in enumerate(self.tags) if t in (EVEN, BOTH))

    @property
    def neither(self) -> int:
        return mask_of(a for a, t in enumerate(self.tags) if t == NEITHER)


def _nbr_masks(n: int, edges: Sequence[tuple[int, int]]) -> list[int]:
    nb = [0] * n
    for a, b in edges:
        if a != b:
            nb[a] |= 1 << b
            nb[b] |= 1 << a
    return nb


def classify_parity(
    F: Graph, witness_edges: Iterable[Sequence[int]] | None, psi: Sequence[int] | VertexMap, G: Graph
) -> ParityClassification:
    """Tag each vertex of ``(V(F), witness_edges)`` as odd, even, neither, or both.

    ``witness_edges=None`` means all of ``E(F)``.  ``psi`` need not be a
    homomorphism.  Loops never count, since the target is loopless.
    """
    psi = _as_tuple(psi)
    if len(psi) != F.n or any(not 0 <= x < G.n for x in psi):
        raise InvalidInput("psi is not a map V(F) -> V(G)")
    if witness_edges is None:
        edges = list(F.edges)
    else:
        edges = _edge_pairs(witness_edges)
        for a, b in edges:
            if not (0 <= a < F.n and 0 <= b < F.n) or not F.has_edge(a, b):
                raise InvalidInput(f"{a}-{b} is not an edge of F")
    nb = _nbr_masks(F.n, edges)
    fib = fibers(psi, G.n)
    tags = []
    for a in range(F.n):
        around = G.neighbors(psi[a])
        if not around:
            tags.append(BOTH)
            continue
        par = {(nb[a] & fib[v]).bit_count() & 1 for v in around}
        tags.append(NEITHER if len(par) == 2 else (ODD if par == {1} else EVEN))
    return ParityClassification(tuple(tags))


def _oddism_odd_set(F: Graph, edges, psi: tuple[int, ...], G: Graph) -> int | None:
    """An odd set making ``psi`` an oddism on ``(V(F), edges)``, or None."""
    tags = classify_parity(F, edges, psi, G).tags
    if NEITHER in tags:
        return None
    fib = fibers(psi, G.n)
    O = 0
    for v in range(G.n):
        if not fib[v]:
            return None
        if G.degree(v) == 0:
            O |= fib[v] & -fib[v]  # declare the lowest vacuous vertex odd
            continue
        odd_here = mask_of(a for a in bits(fib[v]) if tags[a] == ODD)
        if not odd_here.bit_count() & 1:
            return None
        O |= odd_here
    return O


def is_oddism(F: Graph, psi: Sequence[int] | VertexMap, G: Graph, witness_edges=None) -> bool:
    """Parity conditions only; ``psi`` need not preserve adjacency."""
    return _oddism_odd_set(F, witness_edges, _as_tuple(psi), G) is not None


def is_oddomorphism(F: Graph, psi: Sequence[int] | VertexMap, G: Graph, witness_edges=None) -> bool:
    """Homomorphism on ``(V(F), witness_edges)`` plus both parity conditions."""
    psi = _as_tuple(psi)
    if len(psi) != F.n or any(not 0 <= x < G.n for x in psi):
        return False
    H = F if witness_edges is None else F.spanning(_edge_pairs(witness_edges))
    if not is_homomorphism(H.without_loops(), G, psi):
        return False
    return _oddism_odd_set(F, witness_edges, psi, G) is not None


def odd_vertices(F: Graph, psi: Sequence[int] | VertexMap, G: Graph, witness_edges=None) -> int:
    """The odd set of a valid oddomorphism (vacuous fibres contribute their lowest vertex)."""
    O = _oddism_odd_set(F, witness_edges, _as_tuple(psi), G)
    if O is None:
        raise InvalidInput("map is not an oddomorphism")
    return O


# -- certificates -----------------------------------------------------------------


@dataclass(frozen=True)
class OddoCertificate:
    """A weak oddomorphism (or weak oddism) with its parity witness.

    ``witness_edges`` span a subgraph on all of ``V(F)`` on which ``psi`` is
    an oddomorphism with odd set ``odd_set``.  ``connected_witness`` is a
    connected piece ``(vertices, edges)`` that works on its own.
    """

    source: Graph
    target: Graph
    psi: tuple[int, ...]
    odd_set: tuple[int, ...]
    witness_edges: tuple[tuple[int, int], ...]
    connected_witness: tuple[tuple[int, ...], tuple[tuple[int, int], ...]] | None = None
    kind: str = "weak-oddomorphism"

    def to_json(self) -> dict:
        cw = None
        if self.connected_witness is not None:
            vs, es = self.connected_witness
            cw = {"vertices": list(vs), "edges": [list(e) for e in es]}
        return {
            "version": 1,
            "kind": self.kind,
            "source": to_json(self.source),
            "target": to_json(self.target),
            "psi": list(self.psi),
            "odd_set": list(self.odd_set),
            "witness_edges": [list(e) for e in self.witness_edges],
            "connected_witness": cw,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "OddoCertificate":
        try:
            cw = obj.get("connected_witness")
            if cw is not None:
                cw = (tuple(cw["vertices"]), tuple(tuple(e) for e in cw["edges"]))
            return cls(
                from_json(obj["source"]),
                from_json(obj["target"]),
                tuple(int(x) for x in obj["psi"]),
                tuple(int(x) for x in obj["odd_set"]),
                tuple((int(a), int(b)) for a, b in obj["witness_edges"]),
                cw,
                obj.get("kind", "weak-oddomorphism"),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed certificate: {exc}") from exc

    def witness_graph(self) -> Graph:
        return self.source.spanning(self.witness_edges)


def certificate_violation(cert: OddoCertificate) -> str | None:
    """First violated clause of the definition, or None when the certificate holds."""
    F, G, psi = cert.source, cert.target, cert.psi
    if G.loops:
        return "target has loops"
    if len(psi) != F.n or any(not 0 <= x < G.n for x in psi):
        return "psi is not a map V(F) -> V(G)"
    for a, b in cert.witness_edges:
        if not (0 <= a < F.n and 0 <= b < F.n) or a == b or not F.has_edge(a, b):
            return f"witness edge {a}-{b} is not an edge of F"
    if cert.kind != "weak-oddism" and not is_homomorphism(F, G, psi):
        return "psi is not a homomorphism F -> G"
    for a, b in cert.witness_edges:
        if not G.has_edge(psi[a], psi[b]):
            return f"witness edge {a}-{b} does not map onto an edge of G"
    if any(not 0 <= a < F.n for a in cert.odd_set):
        return "odd set names a vertex outside F"
    O = mask_of(cert.odd_set)
    tags = classify_parity(F, cert.witness_edges, psi, G).tags
    for a, t in enumerate(tags):
        if t == NEITHER:
            return f"vertex {a} is neither odd nor even"
        if t == ODD and not O >> a & 1:
            return f"vertex {a} is odd but missing from the odd set"
        if t == EVEN and O >> a & 1:
            return f"vertex {a} is even but listed as odd"
    fib = fibers(psi, G.n)
    for v in range(G.n):
        if not (fib[v] & O).bit_count() & 1:
            return f"fibre over {v} holds an even number of odd vertices"
    if cert.connected_witness is not None:
        vs, es = cert.connected_witness
        if not set(vs) <= set(range(F.n)) or not vs:
            return "connected witness has bad vertices"
        sub_index = {a: i for i, a in enumerate(vs)}
        for a, b in es:
            if a not in sub_index or b not in sub_index or not F.has_edge(a, b):
                return f"connected witness edge {a}-{b} is invalid"
        S = Graph(len(vs), [(sub_index[a], sub_index[b]) for a, b in es])
        if not S.is_connected():
            return "connected witness is disconnected"
        if not is_oddomorphism(S, [psi[a] for a in vs], G):
            return "connected witness is not an oddomorphism"
    return None


def verify_certificate(cert: OddoCertificate) -> bool:
    return certificate_violation(cert) is None


def _connected_piece(F: Graph, edges: Sequence[tuple[int, int]], psi, O: int, G: Graph, root: int):
    """Component of the witness meeting fibre ``root`` in odd many odd vertices (lowest first)."""
    W = F.spanning(edges)
    fib = fibers(psi, G.n)
    for comp in sorted(W.components()):
        cm = mask_of(comp)
        if (cm & fib[root] & O).bit_count() & 1:
            return tuple(comp), tuple(e for e in edges if cm >> e[0] & 1)
    return None


def _decode(F, G, psi, system, y, root, kind) -> OddoCertificate:
    O = y & ((1 << F.n) - 1)
    z = y >> F.n
    edges = tuple(sorted(system.edge_rows[i] for i in bits(z)))
    cw = _connected_piece(F, edges, psi, O, G, root) if G.is_connected() else None
    return OddoCertificate(F, G, tuple(psi), tuple(bits(O)), edges, cw, kind)


def certificate_for_map(F: Graph, G: Graph, psi: Sequence[int] | VertexMap, root: int = 0, oddism: bool = False):
    """Certificate that ``psi`` is a weak oddomorphism (weak oddism), or None.

    For connected ``G`` this is the inconsistency certificate of the lifting
    system with ``U = {root}``.  For disconnected ``G`` the dual system is
    solved directly with one parity equation per component.
    """
    psi = _as_tuple(psi)
    if G.n == 0:
        return None
    system = build_fibered_system(F, G, (root,) if G.degree(root) else (), psi, require_hom=not oddism)
    kind = "weak-oddism" if oddism else "weak-oddomorphism"
    fib = fibers(psi, G.n)
    if any(not f for f in fib):
        return None
    if G.is_connected() and G.n > 1:
        y = fredholm_certificate(system.system())
        return None if y is None else _decode(F, G, psi, system, y, root, kind)
    # dual unknowns: y over V(F), then z over edge rows
    n_y, n_z = F.n, len(system.edge_rows)
    cols = n_y + n_z
    rows = []
    A, B = system.A, system.B
    for j in range(len(system.variables)):
        r = 0
        for a in range(F.n):
            if A.bits[a] >> j & 1:
                r |= 1 << a
        for i in range(n_z):
            if B.bits[i] >> j & 1:
                r |= 1 << (n_y + i)
        rows.append(r)
    rhs = 0
    for comp in G.components():
        rhs |= 1 << len(rows)
        rows.append(fib[comp[0]])
    sol = solve(Gf2System(Gf2Matrix.from_rows(rows, cols), rhs))
    return None if sol is None else _decode(F, G, psi, system, sol, root, kind)


def _necessary(F: Graph, G: Graph) -> bool:
    return F.n >= G.n and F.m >= G.m and F.max_degree() >= G.max_degree()


def _extend(F: Graph, G: Graph, comp: list[int], psi_part: Sequence[int], others: list[list[int]]):
    """Glue a map on ``comp`` with the first homomorphism of every other component."""
    psi = [0] * F.n
    for a, x in zip(comp, psi_part):
        psi[a] = x
    for other in others:
        sub = F.induced(other)
        h = next(iter_homs(sub, G))
        for a, x in zip(other, h):
            psi[a] = x
    return psi


def find_weak_oddo(F: Graph, G: Graph, guard: tuple[int, int] | None = (10, 64)) -> OddoCertificate | None:
    """A weak oddomorphism ``F -> G`` with certificate, or None if none exists.

    For connected ``G`` the search runs per component of ``F``: one component
    must carry the witness and every other must map to ``G`` at all.
    """
    if F.loops or G.loops:
        raise InvalidInput("weak oddomorphisms are defined for loopless graphs")
    if guard is not None and (F.n > guard[0] or G.n > guard[1]):
        raise GuardExceeded(f"oddomorphism search is limited to |V(F)| <= {guard[0]}, |V(G)| <= {guard[1]}")
    if G.n == 0 or not _necessary(F, G):
        return None
    if G.is_connected():
        comps = F.components()
        if len(comps) > 1:
            if any(hom_count(F.induced(c), G, guard=None) == 0 for c in comps):
                return None
            for i, comp in enumerate(comps):
                sub = F.induced(comp)
                if not _necessary(sub, G):
                    continue
                cert = find_weak_oddo(sub, G, guard=None)
                if cert is None:
                    continue
                psi = _extend(F, G, comp, cert.psi, comps[:i] + comps[i + 1:])
                back = lambda e: (comp[e[0]], comp[e[1]])
                cw_v, cw_e = cert.connected_witness
                return OddoCertificate(
                    F,
                    G,
                    tuple(psi),
                    tuple(sorted(comp[a] for a in cert.odd_set)),
                    tuple(sorted(back(e) for e in cert.witness_edges)),
                    (tuple(sorted(comp[a] for a in cw_v)), tuple(sorted(back(e) for e in cw_e))),
                )
            return None
    for psi in iter_homs(F, G):
        cert = certificate_for_map(F, G, psi)
        if cert is not None:
            return cert
    return None


def has_weak_oddo(F: Graph, G: Graph) -> bool:
    return find_weak_oddo(F, G, guard=None) is not None


def find_weak_oddism(F: Graph, G: Graph, guard: int | None = ODDISM_GUARD) -> OddoCertificate | None:
    """A weak oddism (any function, loops in ``F`` allowed) into loopless connected ``G``."""
    if G.loops:
        raise InvalidInput("target must be loopless")
    if not G.is_connected():
        raise InvalidInput("target must be connected")
    if guard is not None and G.n ** F.n > guard:
        raise GuardExceeded(f"oddism search enumerates |V(G)|^|V(F)| = {G.n ** F.n} maps (guard {guard})")
    if F.n < G.n:
        return None
    for psi in itertools.product(range(G.n), repeat=F.n):
        if len(set(psi)) < G.n:
            continue
        cert = certificate_for_map(F, G, psi, oddism=True)
        if cert is not None:
            return cert
    return None


# -- constructions ------------------------------------------------------------------


def _require_oddo(F: Graph, psi, G: Graph, what: str) -> tuple[int, ...]:
    psi = _as_tuple(psi)
    if not is_oddomorphism(F, psi, G):
        raise InvalidInput(f"{what} is not an oddomorphism")
    return psi


def compose_oddo(F: Graph, psi1, G: Graph, psi2, H: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(psi2 . psi1, odd set)`` for oddomorphisms ``F -> G -> H``."""
    psi1 = _require_oddo(F, psi1, G, "first map")
    psi2 = _require_oddo(G, psi2, H, "second map")
    O1 = odd_vertices(F, psi1, G)
    O2 = odd_vertices(G, psi2, H)
    comp = tuple(psi2[x] for x in psi1)
    odd = tuple(a for a in range(F.n) if O1 >> a & 1 and O2 >> psi1[a] & 1)
    return comp, odd


def preimage_subgraph(F: Graph, psi, G: Graph, vertices: Iterable[int], edges: Iterable[Sequence[int]]):
    """``psi^{-1}(G')`` for the subgraph ``G' = (vertices, edges)`` of ``G``.

    Returns ``(F', kept, G', psi')``: ``kept`` lists the original ids of the
    vertices of ``F'`` and both subgraphs are relabelled in increasing order.
    """
    psi = _as_tuple(psi)
    gv = sorted(set(vertices))
    ge = _edge_pairs(edges)
    gset = set(gv)
    for v in gv:
        if not 0 <= v < G.n:
            raise InvalidInput(f"{v} is not a vertex of G")
    for x, y in ge:
        if x not in gset or y not in gset or x == y or not G.has_edge(x, y):
            raise InvalidInput(f"{x}-{y} is not an edge of the subgraph")
    g_index = {v: i for i, v in enumerate(gv)}
    kept = [a for a in range(F.n) if psi[a] in gset]
    f_index = {a: i for i, a in enumerate(kept)}
    ge_set = set(ge)
    fe = [
        (f_index[a], f_index[b])
        for a, b in F.edges
        if a in f_index and b in f_index and (min(psi[a], psi[b]), max(psi[a], psi[b])) in ge_set
    ]
    Gs = Graph(len(gv), [(g_index[x], g_index[y]) for x, y in ge])
    Fs = Graph(len(kept), fe)
    return Fs, kept, Gs, tuple(g_index[psi[a]] for a in kept)


def restrict_oddo(F: Graph, psi, G: Graph, vertices: Iterable[int], edges: Iterable[Sequence[int]]):
    """Restrict an oddomorphism to the preimage of a subgraph of ``G``."""
    psi = _require_oddo(F, psi, G, "psi")
    return preimage_subgraph(F, psi, G, vertices, edges)


def minor_oddo(F: Graph, psi, G: Graph, e: tuple[int, int]) -> tuple[Graph, tuple[int, ...], Graph, list]:
    """Transport an oddomorphism along the contraction of ``uv`` in ``G``.

    Returns ``(F', psi', G/uv, parts)`` where ``parts[i]`` lists the original
    vertices merged into vertex ``i`` of ``F'``.  Steps: drop edges between
    the ``v`` fibre and fibres over common neighbours of ``u`` and ``v``;
    contract each component of ``F[psi^-1(u) + psi^-1(v)]``; keep an edge
    from an outside vertex to a contracted vertex only when it had odd
    multiplicity.
    """
    u, v = e
    if not (0 <= u < G.n and 0 <= v < G.n) or u == v or not G.has_edge(u, v):
        raise InvalidInput(f"{u}-{v} is not an edge of G")
    psi = _require_oddo(F, psi, G, "psi")
    common = G.nbr(u) & G.nbr(v)
    fib = fibers(psi, G.n)
    v_side = fib[v]
    x_side = 0
    for x in bits(common):
        x_side |= fib[x]
    adj = list(F.adj)
    for a in bits(v_side):
        adj[a] &= ~x_side
    for a in bits(x_side):
        adj[a] &= ~v_side
    F2 = Graph.from_masks(adj)
    uv_mask = fib[u] | fib[v]
    blobs = sorted(F2.induced(bits(uv_mask)).components())
    members = bits(uv_mask)
    blobs = [[members[i] for i in comp] for comp in blobs]
    outside = [a for a in range(F.n) if not uv_mask >> a & 1]
    parts: list[list[int]] = [[a] for a in outside] + blobs
    new_id = {a: i for i, a in enumerate(outside)}
    edges = [(new_id[a], new_id[b]) for a, b in F2.edges if a in new_id and b in new_id]
    for k, blob in enumerate(blobs):
        bm = mask_of(blob)
        c = len(outside) + k
        for a in outside:
            if (F2.adj[a] & bm).bit_count() & 1:
                edges.append((new_id[a], c))
    Fp = Graph(len(parts), edges)
    Gp, gmap = G.contract(u, v)
    psi_p = tuple(gmap[psi[a]] for a in outside) + (gmap[u],) * len(blobs)
    return Fp, psi_p, Gp, parts


def odd_subdivision(G: Graph, lengths: Sequence[int] | dict | None = None) -> tuple[Graph, tuple[int, ...]]:
    """Replace edge ``ij`` (``i < j``) by a path of odd length, folded back onto ``ij``.

    Vertices of ``G`` keep their ids; internal path vertices follow, edge by
    edge.  Internal vertex ``k`` of the path from ``i`` maps to ``j`` for odd
    ``k`` and to ``i`` for even ``k``.
    """
    if lengths is None:
        lengths = [1] * G.m
    if isinstance(lengths, dict):
        lengths = [lengths.get(e, 1) for e in G.edges]
    if len(lengths) != G.m:
        raise InvalidInput(f"need one length per edge ({G.m}), got {len(lengths)}")
    psi = list(range(G.n))
    edges = []
    for (i, j), L in zip(G.edges, lengths):
        if L < 1 or L % 2 == 0:
            raise InvalidInput(f"edge {i}-{j}: length {L} is not a positive odd number")
        prev = i
        for k in range(1, L):
            w = len(psi)
            psi.append(j if k % 2 else i)
            edges.append((prev, w))
            prev = w
        edges.append((prev, j))
    return Graph(len(psi), edges), tuple(psi)


def odd_cover(G: Graph, k: int, voltages: Sequence[Sequence[int]] | dict | None = None) -> tuple[Graph, tuple[int, ...]]:
    """``k``-fold cover on ``V(G) x [k]``; edge ``uv`` with permutation ``p`` joins ``(u,i)`` to ``(v,p[i])``.

    Vertex ``(v, i)`` gets id ``v * k + i``.  Missing voltages are identities.
    """
    if k < 1 or k % 2 == 0:
        raise InvalidInput(f"cover degree {k} must be odd and positive")
    if voltages is None:
        voltages = {}
    if not isinstance(voltages, dict):
        if len(voltages) != G.m:
            raise InvalidInput(f"need one permutation per edge ({G.m})")
        voltages = dict(zip(G.edges, voltages))
    ident = list(range(k))
    edges = []
    for u, v in G.edges:
        p = list(voltages.get((u, v), ident))
        if sorted(p) != ident:
            raise InvalidInput(f"voltage on {u}-{v} is not a permutation of range({k})")
        edges.extend((u * k + i, v * k + p[i]) for i in range(k))
    return Graph(G.n * k, edges), tuple(v for v in range(G.n) for _ in range(k))


def random_odd_cover(G: Graph, k: int, rng: random.Random) -> tuple[Graph, tuple[int, ...]]:
    voltages = {}
    for e in G.edges:
        p = list(range(k))
        rng.shuffle(p)
        voltages[e] = p
    return odd_cover(G, k, voltages)


def k5_oddomorphism_without_subdivision() -> tuple[Graph, tuple[int, ...]]:
    """An 8-vertex graph with an oddomorphism onto ``K_5`` that contains no subdivided ``K_5``.

    Vertices 0..4 form a 5-cycle plus its pentagram except that the cycle
    edges 0-1 and 4-0 are rerouted through three even vertices 5, 6, 7
    (fibres over 0, 1 and 4); vertex 5 also takes over the edges 1-0 and
    4-0 of vertex 0.
    """
    edges = [
        (0, 6), (6, 5), (5, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 7), (7, 0),
        (0, 2), (2, 4), (4, 1), (1, 3), (3, 0),
    ]
    return Graph(8, edges), (0, 1, 2, 3, 4, 0, 1, 4)


def find_oddomorphism(F: Graph, G: Graph, guard: tuple[int, int] | None = (10, 64)) -> OddoCertificate | None:
    """An oddomorphism of all of ``F`` (every edge kept), or None."""
    if F.loops or G.loops:
        raise InvalidInput("oddomorphisms are defined for loopless graphs")
    if guard is not None and (F.n > guard[0] or G.n > guard[1]):
        raise GuardExceeded(f"oddomorphism search is limited to |V(F)| <= {guard[0]}, |V(G)| <= {guard[1]}")
    if G.n == 0 or not _necessary(F, G):
        return None
    for psi in iter_homs(F, G):
        O = _oddism_odd_set(F, None, psi, G)
        if O is not None:
            cw = _connected_piece(F, F.edges, psi, O, G, 0) if G.is_connected() else None
            return OddoCertificate(F, G, psi, tuple(bits(O)), F.edges, cw, "oddomorphism")
    return None
