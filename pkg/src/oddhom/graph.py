"""Immutable small graphs on dense vertex ids with bit-packed neighbourhoods.

Vertices are ``0..n-1``.  ``adj[v]`` is an ``int`` bitset of the neighbours of
``v``; a loop at ``v`` is stored as bit ``v`` of ``adj[v]``, so looped vertices
count themselves as neighbours.  Non-loop edges are indexed in lexicographic
order of their endpoint pairs ``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidInput, ParseError

Edge = tuple[int, int]


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


class Graph:
    """Undirected graph without multi-edges; loops optional."""

    __slots__ = ("n", "adj", "__dict__")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), loops: Iterable[int] = ()):
        if n < 0:
            raise InvalidInput(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        for v in loops:
            if not 0 <= v < n:
                raise InvalidInput(f"loop at {v} out of range for n={n}")
            adj[v] |= 1 << v
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Build from neighbourhood bitsets (assumed symmetric)."""
        g = cls.__new__(cls)
        g.n = len(masks)
        g.adj = tuple(masks)
        return g

    # -- basic structure -------------------------------------------------

    @cached_property
    def loops(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if self.adj[v] >> v & 1)

    @cached_property
    def loop_mask(self) -> int:
        return mask_of(self.loops)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """Non-loop edges ``(u, v)``, ``u < v``, lexicographically ordered."""
        return tuple((u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1)))

    @cached_property
    def edge_items(self) -> tuple[Edge, ...]:
        """Non-loop edges and loops ``(v, v)`` together, lexicographic."""
        return tuple(sorted(self.edges + tuple((v, v) for v in self.loops)))

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edge_items)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def nbr(self, v: int) -> int:
        """Neighbour bitset of ``v`` excluding ``v`` itself."""
        return self.adj[v] & ~(1 << v)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.nbr(v))

    def degree(self, v: int) -> int:
        return self.nbr(v).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def has_loop(self, v: int) -> bool:
        return bool(self.adj[v] >> v & 1)

    def incident(self, v: int) -> list[int]:
        """Indices (into ``edge_items``) of the non-loop edges at ``v``."""
        idx = self.edge_index
        return [idx[_norm(v, u)] for u in self.neighbors(v)]

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        loops = f", loops={sorted(self.loops)}" if self.loops else ""
        return f"Graph(n={self.n}, edges={list(self.edges)}{loops})"

    # -- derived graphs --------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex ``perm[v]`` plays the role of ``v``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges], [perm[v] for v in self.loops])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertex ``i`` of the result is ``vertices[i]``."""
        pos = {v: i for i, v in enumerate(vertices)}
        es = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(vertices), es, [pos[v] for v in self.loops if v in pos])

    def spanning(self, edges: Iterable[Sequence[int]], keep_loops: bool = False) -> "Graph":
        """Subgraph on all vertices with the given edge subset (must lie in E)."""
        es = [_norm(int(a), int(b)) for a, b in edges]
        for u, v in es:
            if u == v or not self.has_edge(u, v):
                raise InvalidInput(f"{u}-{v} is not an edge of the graph")
        return Graph(self.n, es, self.loops if keep_loops else ())

    def without_loops(self) -> "Graph":
        return Graph(self.n, self.edges)

    def with_loops(self, loops: Iterable[int]) -> "Graph":
        return Graph(self.n, self.edges, set(self.loops) | set(loops))

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.n) if u != v])

    def delete_edge(self, u: int, v: int) -> "Graph":
        e = _norm(u, v)
        return Graph(self.n, [f for f in self.edges if f != e], self.loops)

    def contract(self, u: int, v: int) -> tuple["Graph", list[int]]:
        """Contract ``uv`` (simple result, no loop created).

        Returns the contracted graph and the map old vertex -> new vertex.
        The merged vertex takes id ``min(u, v)``; later ids shift down.
        """
        if u == v or not self.has_edge(u, v):
            raise InvalidInput(f"{u}-{v} is not an edge")
        lo, hi = min(u, v), max(u, v)
        new = [w if w < hi else w - 1 for w in range(self.n)]
        new[hi] = lo
        es = {_norm(new[a], new[b]) for a, b in self.edges}
        es.discard((lo, lo))
        loops = {new[w] for w in self.loops}
        return Graph(self.n - 1, sorted(es), loops), new

    def union(self, other: "Graph") -> "Graph":
        """Disjoint union; ``other``'s vertices are shifted by ``self.n``."""
        k = self.n
        return Graph(
            self.n + other.n,
            list(self.edges) + [(u + k, v + k) for u, v in other.edges],
            list(self.loops) + [v + k for v in other.loops],
        )

    def complement(self) -> "Graph":
        return Graph(self.n, [(u, v) for u, v in combinations(range(self.n), 2) if not self.has_edge(u, v)])

    # -- connectivity ----------------------------------------------------

    def component_masks(self) -> list[int]:
        """Vertex bitsets of the connected components, ordered by least vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for w in bits(frontier):
                    nxt |= self.adj[w]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def components(self) -> list[list[int]]:
        return [bits(c) for c in self.component_masks()]

    def is_connected(self) -> bool:
        return len(self.component_masks()) <= 1

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    def two_coloring(self) -> list[int] | None:
        """A proper 2-colouring, or None (loops make it impossible)."""
        if self.loops:
            return None
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                a = stack.pop()
                for b in self.neighbors(a):
                    if color[b] < 0:
                        color[b] = 1 - color[a]
                        stack.append(b)
                    elif color[b] == color[a]:
                        return None
        return color


# -- vertex maps ---------------------------------------------------------


@dataclass(frozen=True)
class VertexMap:
    """A total function ``V(source) -> V(target)``; homomorphism not assumed."""

    source: Graph
    target: Graph
    map: tuple[int, ...]

    def __post_init__(self):
        if len(self.map) != self.source.n:
            raise InvalidInput(f"map has {len(self.map)} entries, source has {self.source.n} vertices")
        for x in self.map:
            if not 0 <= x < self.target.n:
                raise InvalidInput(f"image {x} outside target of size {self.target.n}")

    def __getitem__(self, a: int) -> int:
        return self.map[a]

    def fibers(self) -> list[int]:
        return fibers(self.map, self.target.n)

    def is_homomorphism(self) -> bool:
        return is_homomorphism(self.source, self.target, self.map)


def fibers(psi: Sequence[int], n_target: int) -> list[int]:
    """Bitsets ``psi^{-1}(v)`` for every target vertex ``v``."""
    out = [0] * n_target
    for a, v in enumerate(psi):
        out[v] |= 1 << a
    return out


def is_homomorphism(F: Graph, G: Graph, psi: Sequence[int]) -> bool:
    """Adjacency preservation, loops included (a loop needs a looped image)."""
    if len(psi) != F.n:
        return False
    for a in range(F.n):
        img_nbrs = G.adj[psi[a]]
        for b in bits(F.adj[a]):
            if not img_nbrs >> psi[b] & 1:
                return False
    return True


# -- generators ------------------------------------------------------------


def cycle(k: int) -> Graph:
    if k < 3:
        raise InvalidInput(f"cycle length must be at least 3, got {k}")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    if n < 0:
        raise InvalidInput("path needs n >= 0")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(d: int) -> Graph:
    """``K_{1,d}`` with centre 0."""
    if d < 0:
        raise InvalidInput("star needs d >= 0")
    return Graph(d + 1, [(0, i) for i in range(1, d + 1)])


def complete(n: int) -> Graph:
    if n < 0:
        raise InvalidInput("complete graph needs n >= 0")
    return Graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    if n < 0:
        raise InvalidInput("empty graph needs n >= 0")
    return Graph(n)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def rook(a: int, b: int) -> Graph:
    """Rook's graph ``K_a x K_b`` (Cartesian product); vertex ``i*b + j``."""
    es = []
    for i in range(a):
        for j in range(b):
            for jj in range(j + 1, b):
                es.append((i * b + j, i * b + jj))
            for ii in range(i + 1, a):
                es.append((i * b + j, ii * b + j))
    return Graph(a * b, es)


def shrikhande() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}."""
    es = set()
    for x in range(4):
        for y in range(4):
            for dx, dy in ((1, 0), (0, 1), (1, 1)):
                u, v = 4 * x + y, 4 * ((x + dx) % 4) + (y + dy) % 4
                es.add(_norm(u, v))
    return Graph(16, sorted(es))


def generate(kind: str, *params: int) -> Graph:
    """Named generator: cycle k | path n | star d | complete n | empty n (and a few extras)."""
    table = {
        "cycle": cycle,
        "path": path,
        "star": star,
        "complete": complete,
        "empty": empty,
        "complete_bipartite": complete_bipartite,
        "petersen": petersen,
        "rook": rook,
        "shrikhande": shrikhande,
    }
    if kind not in table:
        raise InvalidInput(f"unknown graph kind {kind!r}")
    try:
        return table[kind](*params)
    except TypeError as exc:
        raise InvalidInput(f"bad parameters for {kind}: {params}") from exc


def random_graph(n: int, p: float, rng: random.Random, loops: float = 0.0) -> Graph:
    es = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    ls = [v for v in range(n) if loops and rng.random() < loops]
    return Graph(n, es, ls)


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    es = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        es.add(_norm(order[i], order[rng.randrange(i)]))
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            es.add((u, v))
    return Graph(n, sorted(es))


# -- graph6 ----------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise InvalidInput(f"graph6 writer supports n <= 258047, got {n}")


def write_graph6(G: Graph) -> str:
    """graph6 encoding (loops are not representable and are rejected)."""
    if G.loops:
        raise InvalidInput("graph6 cannot encode loops; use the edge-list format")
    out = [_encode_n(G.n)]
    acc = nbits = 0
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Parse a graph6 string (optional ``>>graph6<<`` header, trailing newline)."""
    data = text.strip("\r\n")
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise ParseError("empty input", 0)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"character {ch!r} outside graph6 range 63..126", i)
    if data[0] == "~":
        if len(data) >= 2 and data[1] == "~":
            raise ParseError("8-byte graph6 size header is not supported", 1)
        if len(data) < 4:
            raise ParseError("truncated size header", len(data))
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
    else:
        n = ord(data[0]) - 63
        pos = 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise ParseError(f"truncated bit stream: expected {need} data bytes, got {len(body)}", len(data))
    if len(body) > need:
        raise ParseError("unexpected trailing bytes", pos + need)
    es = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                es.append((i, j))
            k += 1
    return Graph(n, es)


# -- edge-list text format ---------------------------------------------------


def write_edgelist(G: Graph) -> str:
    """``n m`` header, then one ``u v`` line per edge and ``loop v`` per loop."""
    lines = [f"{G.n} {G.m + len(G.loops)}"]
    for u, v in G.edge_items:
        lines.append(f"loop {u}" if u == v else f"{u} {v}")
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty input", 0)
    head = lines[0].split()
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise ParseError(f"bad header {lines[0]!r}; expected 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ParseError(f"header announces {m} edge lines, found {len(lines) - 1}")
    es, ls = [], []
    for ln in lines[1:]:
        tok = ln.split()
        try:
            if len(tok) == 2 and tok[0] == "loop":
                ls.append(int(tok[1]))
            elif len(tok) == 2:
                u, v = int(tok[0]), int(tok[1])
                if u == v:
                    ls.append(u)
                else:
                    es.append((u, v))
            else:
                raise ValueError
        except ValueError:
            raise ParseError(f"bad edge line {ln!r}") from None
    return Graph(n, es, ls)


def parse_graph(text: str) -> Graph:
    """Accept either format: edge-list if the first line holds two integers."""
    first = text.strip().splitlines()[0].split() if text.strip() else []
    if len(first) == 2 and all(t.isdigit() for t in first):
        return parse_edgelist(text)
    return parse_graph6(text)


def to_json(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges], "loops": sorted(G.loops)}


def from_json(obj: dict) -> Graph:
    try:
        return Graph(int(obj["n"]), [tuple(e) for e in obj.get("edges", [])], obj.get("loops", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad graph object: {exc}") from None
