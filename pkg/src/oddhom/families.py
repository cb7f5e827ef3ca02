"""Graph families and bounded homomorphism-indistinguishability checks.

A predicate carries declared closure flags.  For component-closed families
it is enough to compare counts from connected members: counts multiply over
components, so two targets that agree on every connected member agree on
every member.  Verdicts are always relative to the enumeration bound.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .construct import build_GU
from .errors import GuardExceeded, InvalidInput
from .enumeration import enumerate_graphs
from .graph import Graph, bits, complete, parse_graph, write_graph6
from .homcount import hom_count, hom_vector_cycles
from .minors import has_minor, is_planar
from .structure import circumference, find_induced_star, find_odd_hole

HOST_GUARD = 64


@dataclass(frozen=True)
class FamilyPredicate:
    name: str
    test: Callable[[Graph], bool] = field(compare=False)
    component_closed: bool = True
    union_closed: bool = True
    minor_closed: bool = False
    hereditary: bool = False

    def __call__(self, G: Graph) -> bool:
        return self.test(G)

    def flags(self) -> dict:
        return {
            "component_closed": self.component_closed,
            "union_closed": self.union_closed,
            "minor_closed": self.minor_closed,
            "hereditary": self.hereditary,
        }


def is_forest(G: Graph) -> bool:
    return G.without_loops().m == G.n - len(G.components())


def treewidth_at_most_2(G: Graph) -> bool:
    """Series-parallel reduction: strip vertices of degree <= 2, bridging degree-2 ones."""
    adj = {v: set(G.neighbors(v)) for v in range(G.n)}
    stack = [v for v in adj if len(adj[v]) <= 2]
    while stack:
        v = stack.pop()
        if v not in adj or len(adj[v]) > 2:
            continue
        nb = adj.pop(v)
        for w in nb:
            adj[w].discard(v)
        if len(nb) == 2:
            a, b = nb
            adj[a].add(b)
            adj[b].add(a)
        stack.extend(w for w in nb if len(adj[w]) <= 2)
    return not adj


def chromatic_number(G: Graph) -> int:
    if G.loops:
        raise InvalidInput("looped graphs have no proper colouring")
    if G.n == 0:
        return 0
    order = sorted(range(G.n), key=lambda v: -G.degree(v))
    for k in range(1, G.n + 1):
        col = [-1] * G.n

        def rec(i: int) -> bool:
            if i == len(order):
                return True
            a = order[i]
            banned = {col[b] for b in G.neighbors(a)}
            for c in range(min(k, max(col) + 2)):
                if c not in banned:
                    col[a] = c
                    if rec(i + 1):
                        return True
            col[a] = -1
            return False

        if rec(0):
            return k
    return G.n


def _clique_union(sizes: frozenset[int], larger: bool) -> Callable[[Graph], bool]:
    top = max(sizes, default=0)

    def test(G: Graph) -> bool:
        if G.loops:
            return False
        for comp in G.components():
            s = len(comp)
            if G.induced(comp).m != s * (s - 1) // 2:
                return False
            if s not in sizes and not (larger and s > top):
                return False
        return True

    return test


def builtin_predicates() -> dict[str, str]:
    """Names accepted by ``parse_predicate`` with a short description each."""
    return {
        "all": "every graph",
        "forests": "acyclic graphs",
        "tw2": "treewidth at most 2 (no K_4 minor)",
        "circumference:k": "every cycle has length at most k",
        "planar": "planar graphs",
        "maxdeg:d": "maximum degree less than d",
        "no-odd-holes": "no chordless odd cycle of length >= 5",
        "no-induced-star:d": "no induced K_{1,d}",
        "cliques:s1,s2[,+]": "disjoint unions of K_s with s listed ('+' admits every size above the largest)",
        "minor-free:<graph>": "graphs without the given graph (graph6 or edge list) as a minor",
        "minors-of:<graph>": "minors of the given graph",
    }


def parse_predicate(spec: str) -> FamilyPredicate:
    name, _, arg = spec.partition(":")
    if name == "all":
        return FamilyPredicate("all", lambda G: True, minor_closed=True, hereditary=True)
    if name == "forests":
        return FamilyPredicate("forests", is_forest, minor_closed=True, hereditary=True)
    if name in ("tw2", "treewidth2"):
        return FamilyPredicate("tw2", treewidth_at_most_2, minor_closed=True, hereditary=True)
    if name == "planar":
        return FamilyPredicate("planar", lambda G: is_planar(G, guard=None), minor_closed=True, hereditary=True)
    if name == "no-odd-holes":
        return FamilyPredicate(name, lambda G: find_odd_hole(G, None) is None, hereditary=True)
    try:
        if name == "circumference":
            k = int(arg)
            return FamilyPredicate(spec, lambda G: circumference(G, None)[0] <= k, minor_closed=True, hereditary=True)
        if name == "maxdeg":
            d = int(arg)
            return FamilyPredicate(spec, lambda G: G.max_degree() < d, hereditary=True)
        if name == "no-induced-star":
            d = int(arg)
            return FamilyPredicate(spec, lambda G: find_induced_star(G, d) is None, hereditary=True)
        if name == "cliques":
            parts = [p.strip() for p in arg.split(",") if p.strip()]
            larger = "+" in parts
            sizes = frozenset(int(p) for p in parts if p != "+")
            if any(s < 1 for s in sizes):
                raise ValueError("clique sizes must be positive")
            return FamilyPredicate(spec, _clique_union(sizes, larger))
    except ValueError as exc:
        raise InvalidInput(f"bad predicate argument in {spec!r}: {exc}") from exc
    if name in ("minor-free", "minors-of"):
        if not arg:
            raise InvalidInput(f"{name} needs a graph argument")
        return graph_predicate(name, parse_graph(arg.replace("\\n", "\n")))
    raise InvalidInput(f"unknown predicate {spec!r}; known: {', '.join(builtin_predicates())}")


def graph_predicate(kind: str, G: Graph) -> FamilyPredicate:
    """``minor-free`` or ``minors-of`` relative to a fixed graph."""
    label = f"{kind}:{write_graph6(G)}"
    if kind == "minor-free":
        return FamilyPredicate(
            label, lambda F: not has_minor(F, G, guard=None), union_closed=G.is_connected(), minor_closed=True, hereditary=True
        )
    if kind == "minors-of":
        return FamilyPredicate(label, lambda F: has_minor(G, F, guard=None), union_closed=False, minor_closed=True, hereditary=True)
    raise InvalidInput(f"unknown graph predicate kind {kind!r}")


# -- indistinguishability ------------------------------------------------------------


@dataclass(frozen=True)
class DistinguishReport:
    H: Graph
    H2: Graph
    predicate: str
    n_max: int
    connected_only: bool
    checked: int
    counterexample: tuple[Graph, int, int] | None = None

    @property
    def verdict(self) -> str:
        return "distinguished" if self.counterexample else "indistinguishable-up-to-bound"

    @property
    def distinguished(self) -> bool:
        return self.counterexample is not None

    def to_json(self) -> dict:
        cx = None
        if self.counterexample:
            F, a, b = self.counterexample
            cx = {"graph6": write_graph6(F), "hom_H": a, "hom_H2": b}
        return {
            "version": 1,
            "H": write_graph6(self.H),
            "H2": write_graph6(self.H2),
            "predicate": self.predicate,
            "bound": self.n_max,
            "connected_only": self.connected_only,
            "checked": self.checked,
            "verdict": self.verdict,
            "counterexample": cx,
        }


def _counts(args: tuple[Graph, Graph, Graph]) -> tuple[int, int]:
    F, H, H2 = args
    return hom_count(F, H, guard=None), hom_count(F, H2, guard=None)


def indistinguishable_up_to(
    H: Graph,
    H2: Graph,
    pred: FamilyPredicate,
    n_max: int,
    full: bool = False,
    workers: int = 1,
) -> DistinguishReport:
    """Compare ``hom(F, H)`` and ``hom(F, H2)`` over members ``F`` with at most ``n_max`` vertices.

    Component-closed predicates are checked on connected members unless
    ``full`` is set; other predicates require ``full=True``.  The reported
    counterexample is the first one in enumeration order.
    """
    if max(H.n, H2.n) > HOST_GUARD:
        raise GuardExceeded(f"host graphs are limited to {HOST_GUARD} vertices")
    if not pred.component_closed and not full:
        raise InvalidInput(f"{pred.name} is not component-closed; pass full=True to enumerate disconnected members")
    connected_only = not full
    members = list(enumerate_graphs(n_max, connected_only, pred))
    checked = 0
    if workers > 1 and len(members) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_counts, [(F, H, H2) for F in members], chunksize=8))
    else:
        results = None
    for i, F in enumerate(members):
        a, b = results[i] if results is not None else _counts((F, H, H2))
        checked += 1
        if a != b:
            return DistinguishReport(H, H2, pred.name, n_max, connected_only, checked, (F, a, b))
    return DistinguishReport(H, H2, pred.name, n_max, connected_only, checked)


@dataclass(frozen=True)
class ProbeReport:
    G: Graph
    r: int
    H: Graph
    H2: Graph
    hom_G_H: int
    hom_G_H2: int
    family: DistinguishReport

    @property
    def passed(self) -> bool:
        return self.hom_G_H != self.hom_G_H2 and not self.family.distinguished

    def to_json(self) -> dict:
        return {
            "version": 1,
            "G": write_graph6(self.G),
            "r": self.r,
            "H": write_graph6(self.H),
            "H2": write_graph6(self.H2),
            "hom_G_H": self.hom_G_H,
            "hom_G_H2": self.hom_G_H2,
            "separates_G": self.hom_G_H != self.hom_G_H2,
            "family": self.family.to_json(),
            "passed": self.passed,
        }


def padded_pair(G: Graph, r: int | None = None) -> tuple[Graph, Graph, int]:
    """``(G_0 + K_r, G_1 + K_r, r)`` with ``r`` defaulting to the chromatic number of ``G``."""
    if not G.is_connected() or G.n < 2:
        raise InvalidInput("G must be connected with at least one edge")
    if r is None:
        r = chromatic_number(G)
    K = complete(r)
    return build_GU(G).graph.union(K), build_GU(G, (0,)).graph.union(K), r


def hd_closure_probe(G: Graph, pred: FamilyPredicate, n_max: int, r: int | None = None, workers: int = 1) -> ProbeReport:
    """Build the padded pair for ``G`` outside the family and test both halves of the closure argument."""
    if pred(G):
        raise InvalidInput(f"G belongs to {pred.name}; the probe would be vacuous")
    H, H2, r = padded_pair(G, r)
    fam = indistinguishable_up_to(H, H2, pred, n_max, full=not pred.component_closed, workers=workers)
    return ProbeReport(G, r, H, H2, hom_count(G, H, guard=None), hom_count(G, H2, guard=None), fam)


def cospectral_check(H: Graph, H2: Graph, L: int) -> bool:
    """Equal closed-walk counts of every length 3..L (and equal order)."""
    return H.n == H2.n and hom_vector_cycles(H, L) == hom_vector_cycles(H2, L)


def union_lemma_check(H1: Graph, H1p: Graph, H2: Graph, H2p: Graph, pred: FamilyPredicate, n_max: int) -> bool:
    """Whether ``H1 + H2`` and ``H1' + H2'`` stay indistinguishable once both pairs are."""
    if not pred.component_closed:
        raise InvalidInput(f"{pred.name} is not component-closed")
    for a, b in ((H1, H1p), (H2, H2p)):
        if indistinguishable_up_to(a, b, pred, n_max).distinguished:
            raise InvalidInput("an input pair is already distinguished within the bound")
    return not indistinguishable_up_to(H1.union(H2), H1p.union(H2p), pred, n_max).distinguished
