"""Seeded verification suites, shared by the CLI and the acceptance tests.

Every suite returns a ``SuiteReport`` whose JSON form depends only on its
arguments (no timings), so identical runs give byte-identical output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .construct import build_G01, build_star_simplified, build_tilde_GU
from .cycles import check_chordless_odd_cycle, extract_chordless_odd_cycle
from .enumeration import enumerate_graphs
from .gf2 import Gf2Matrix, Gf2System, check_certificate, check_solution, fredholm_certificate, solution_count_log2, solve
from .graph import Graph, bits, complete, cycle, path, random_connected_graph, star, write_graph6
from .homcount import build_fibered_system, hom_count, hom_vector_cycles, iter_homs
from .iso import is_isomorphic
from .minors import has_minor
from .oddo import (
    certificate_violation,
    compose_oddo,
    find_weak_oddism,
    find_weak_oddo,
    is_oddomorphism,
    minor_oddo,
    odd_subdivision,
    odd_vertices,
    random_odd_cover,
)

DEFAULT_SEED = 20240601


@dataclass
class SuiteReport:
    name: str
    params: dict
    checks: int = 0
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, **instance) -> bool:
        self.checks += 1
        if not ok:
            self.failures.append(instance)
        return ok

    def to_json(self) -> dict:
        return {
            "version": 1,
            "suite": self.name,
            "params": self.params,
            "checks": self.checks,
            "passed": self.passed,
            "failures": self.failures,
            "notes": self.notes,
        }


def _g6(G: Graph) -> str:
    return write_graph6(G.without_loops()) if not G.loops else f"{write_graph6(G.without_loops())}+loops{sorted(G.loops)}"


# -- 1, 2: constructions -----------------------------------------------------------


def suite_construction(k_max: int = 8) -> SuiteReport:
    rep = SuiteReport("construction", {"k_max": k_max})
    for k in range(3, k_max + 1):
        G0, G1 = build_G01(cycle(k))
        rep.check(is_isomorphic(G0.graph, cycle(k).union(cycle(k))), k=k, clause="G_0(C_k) ~ 2C_k")
        rep.check(is_isomorphic(G1.graph, cycle(2 * k)), k=k, clause="G_1(C_k) ~ C_2k")
    return rep


def suite_k4_landmark() -> SuiteReport:
    rep = SuiteReport("k4-landmark", {})
    G0, G1 = (x.graph for x in build_G01(complete(4)))
    for name, H in (("G_0", G0), ("G_1", G1)):
        rep.check(H.n == 16 and set(H.degrees()) == {6}, clause=f"{name} is 16-vertex 6-regular")
    rep.check(not is_isomorphic(G0, G1), clause="G_0 and G_1 non-isomorphic")
    v0, v1 = hom_vector_cycles(G0, 8), hom_vector_cycles(G1, 8)
    rep.check(v0 == v1, clause="equal cycle vectors up to 8", G0=v0, G1=v1)
    h0, h1 = hom_count(complete(4), G0), hom_count(complete(4), G1)
    rep.notes["hom_K4"] = [h0, h1]
    rep.check(h0 != h1, clause="hom(K_4, .) differs", counts=[h0, h1])
    return rep


# -- 3, 4, 12: the duality grid ---------------------------------------------------------


def _fibered_sum(F: Graph, G: Graph, U) -> int:
    total = 0
    for psi in iter_homs(F, G):
        total += build_fibered_system(F, G, U, psi).lift_count()
    return total


def suite_main_dual(gmax: int = 5, fmax: int = 5) -> SuiteReport:
    """Counts, certificates and fibre sums over every connected ``G`` (2..gmax) and every ``F`` (<= fmax)."""
    rep = SuiteReport("main-dual", {"gmax": gmax, "fmax": fmax})
    sources = list(enumerate_graphs(fmax, connected_only=False))
    strict = 0
    for G in enumerate_graphs(gmax, connected_only=True, n_min=2):
        G0, G1 = (x.graph for x in build_G01(G))
        for F in sources:
            h0, h1 = hom_count(F, G0), hom_count(F, G1)
            cert = find_weak_oddo(F, G)
            tag = {"F": _g6(F), "G": _g6(G)}
            rep.check(h1 <= h0, clause="hom(F,G_1) <= hom(F,G_0)", counts=[h0, h1], **tag)
            rep.check((h0 > h1) == (cert is not None), clause="strict iff weak oddomorphism", counts=[h0, h1], **tag)
            if cert is not None:
                strict += 1
                bad = certificate_violation(cert)
                rep.check(bad is None, clause=f"certificate: {bad}", **tag)
            rep.check(_fibered_sum(F, G, ()) == h0, clause="fibre sum U={}", **tag)
            rep.check(_fibered_sum(F, G, (0,)) == h1, clause="fibre sum U={0}", **tag)
    rep.notes["strict_pairs"] = strict
    return rep


def suite_zero_iso(nmax: int = 5) -> SuiteReport:
    rep = SuiteReport("zero-iso", {"nmax": nmax})
    for G in enumerate_graphs(nmax, connected_only=True, n_min=2):
        G0, G1 = (x.graph for x in build_G01(G))
        h0, h1 = hom_count(G, G0), hom_count(G, G1)
        rep.check(h0 != h1, clause="hom(G,G_0) != hom(G,G_1)", G=_g6(G), counts=[h0, h1])
        rep.check(is_oddomorphism(G, range(G.n), G), clause="identity is an oddomorphism", G=_g6(G))
    return rep


def suite_bipartite(fmax: int = 6, gmax: int = 5) -> SuiteReport:
    rep = SuiteReport("bipartite-obstruction", {"fmax": fmax, "gmax": gmax})
    targets = [G for G in enumerate_graphs(gmax, connected_only=True, n_min=2) if not G.is_bipartite()]
    for F in enumerate_graphs(fmax, connected_only=False):
        if not F.is_bipartite():
            continue
        for G in targets:
            rep.check(find_weak_oddo(F, G) is None, clause="no certificate from bipartite F", F=_g6(F), G=_g6(G))
    return rep


# -- 5: cycles --------------------------------------------------------------------------------


def suite_cycle_oddos(lo: int = 3, hi: int = 8) -> SuiteReport:
    rep = SuiteReport("cycle-oddos", {"lo": lo, "hi": hi})
    for kp in range(lo, hi + 1):
        for k in range(lo, hi + 1):
            found = find_weak_oddo(cycle(kp), cycle(k)) is not None
            rep.check(found == (kp >= k and (kp - k) % 2 == 0), k_prime=kp, k=k, found=found)
    return rep


# -- 6: bounded degree ---------------------------------------------------------------------


def suite_bounded_degree(d: int = 3, nmax: int = 7) -> SuiteReport:
    rep = SuiteReport("bounded-degree", {"d": d, "nmax": nmax})
    H, H2 = build_star_simplified(d, 0), build_star_simplified(d, 1)
    members = 0
    for F in enumerate_graphs(nmax, connected_only=True):
        if F.max_degree() >= d:
            continue
        members += 1
        a, b = hom_count(F, H), hom_count(F, H2)
        rep.check(a == b, clause="equal counts below the degree bound", F=_g6(F), counts=[a, b])
    rep.notes["members"] = members
    a, b = hom_count(star(d), H), hom_count(star(d), H2)
    rep.check(a != b, clause="K_{1,d} separates", counts=[a, b])
    rep.check(H.is_connected(), clause="G^d_0 connected")
    rep.check(any(H2.degree(v) == 0 for v in range(H2.n)), clause="G^d_1 has an isolated vertex")
    a, b = hom_count(star(2), path(4)), hom_count(star(2), complete(3).union(complete(1)))
    rep.check((a, b) == (10, 12), clause="P_4 vs K_3+K_1 under K_{1,2}", counts=[a, b])
    return rep


# -- 7: minor transport ------------------------------------------------------------------------


def _random_oddo_instance(rng: random.Random, budget: int = 12) -> tuple[Graph, tuple[int, ...], Graph]:
    """A small connected ``G`` and an oddomorphism onto it from a subdivision or an odd cover."""
    while True:
        n = rng.randint(3, 5)
        G = random_connected_graph(n, rng.uniform(0.3, 0.9), rng)
        if rng.random() < 0.5:
            lengths = [rng.choice((1, 1, 3)) for _ in range(G.m)]
            F, psi = odd_subdivision(G, lengths)
        else:
            F, psi = random_odd_cover(G, rng.choice((1, 3)), rng)
        if F.n <= budget:
            return F, psi, G


def suite_minor_transport(seed: int = DEFAULT_SEED, count: int = 100) -> SuiteReport:
    rep = SuiteReport("minor-transport", {"seed": seed, "count": count})
    rng = random.Random(seed)
    for i in range(count):
        F, psi, G = _random_oddo_instance(rng)
        u, v = rng.choice(G.edges)
        Fp, psip, Gp, parts = minor_oddo(F, psi, G, (u, v))
        tag = {"instance": i, "F": _g6(F), "G": _g6(G), "psi": list(psi), "edge": [u, v]}
        rep.check(is_oddomorphism(Fp, psip, Gp), clause="transported map is an oddomorphism", **tag)
        rep.check(has_minor(F, Fp), clause="F' is a minor of F", **tag)
    return rep


# -- 8: composition and order ------------------------------------------------------------------


def suite_composition(seed: int = DEFAULT_SEED, count: int = 100, nmax: int = 5) -> SuiteReport:
    rep = SuiteReport("composition", {"seed": seed, "count": count, "nmax": nmax})
    rng = random.Random(seed)
    for i in range(count):
        G, psi2, H = _random_oddo_instance(rng, budget=8)
        if rng.random() < 0.5:
            F, psi1 = odd_subdivision(G, [rng.choice((1, 1, 3)) for _ in range(G.m)])
        else:
            F, psi1 = random_odd_cover(G, rng.choice((1, 3)), rng)
        comp, odd = compose_oddo(F, psi1, G, psi2, H)
        ok = is_oddomorphism(F, comp, H) and set(odd) == set(bits(odd_vertices(F, comp, H)))
        rep.check(ok, clause="composition is an oddomorphism with the product odd set", instance=i)
    graphs = list(enumerate_graphs(nmax, connected_only=False))
    reach = {}
    for a, A in enumerate(graphs):
        for b, B in enumerate(graphs):
            reach[a, b] = find_weak_oddo(A, B) is not None
    for a in range(len(graphs)):
        rep.check(reach[a, a], clause="reflexive", G=_g6(graphs[a]))
        for b in range(a + 1, len(graphs)):
            rep.check(not (reach[a, b] and reach[b, a]), clause="antisymmetric", G=_g6(graphs[a]), H=_g6(graphs[b]))
    for a in range(len(graphs)):
        for b in range(len(graphs)):
            if not reach[a, b]:
                continue
            for c in range(len(graphs)):
                if reach[b, c] and not reach[a, c]:
                    rep.check(False, clause="transitive", F=_g6(graphs[a]), G=_g6(graphs[b]), H=_g6(graphs[c]))
    for n in range(1, nmax + 1):
        K = complete(n)
        for B in graphs:
            found = find_weak_oddo(K, B) is not None
            rep.check(not found or is_isomorphic(B, K), clause="clique rigidity", n=n, G=_g6(B))
    rep.notes["pairs_with_weak_oddo"] = sum(reach.values())
    return rep


# -- 9: winding ---------------------------------------------------------------------------------


def suite_winding(seed: int = DEFAULT_SEED, count: int = 50, kmax: int = 7, fmax: int = 10) -> SuiteReport:
    rep = SuiteReport("winding", {"seed": seed, "count": count, "kmax": kmax, "fmax": fmax})
    rng = random.Random(seed)
    done = 0
    while done < count:
        k = rng.randint(3, kmax)
        G = cycle(k)
        if rng.random() < 0.5:
            F, psi = odd_subdivision(G, [rng.choice((1, 1, 3)) for _ in range(k)])
        else:
            F, psi = random_odd_cover(G, rng.choice((1, 3)), rng)
        if F.n > fmax:
            continue
        edges = list(F.edges)
        for _ in range(rng.randint(0, 4)):
            a, b = rng.randrange(F.n), rng.randrange(F.n)
            if G.has_edge(psi[a], psi[b]):
                edges.append((a, b))
        F = Graph(F.n, edges)
        cert = find_weak_oddo(F, G)
        tag = {"instance": done, "F": _g6(F), "k": k}
        if not rep.check(cert is not None, clause="certificate exists", **tag):
            done += 1
            continue
        cyc = extract_chordless_odd_cycle(F, cert)
        bad = check_chordless_odd_cycle(F, cert.psi, G, cyc.vertices)
        rep.check(bad is None, clause=f"extracted cycle: {bad}", cycle=list(cyc.vertices), **tag)
        done += 1
    return rep


# -- 10: GF(2) ----------------------------------------------------------------------------------


def suite_gf2(seed: int = DEFAULT_SEED, count: int = 1000, max_vars: int = 12) -> SuiteReport:
    rep = SuiteReport("gf2", {"seed": seed, "count": count, "max_vars": max_vars})
    rng = random.Random(seed)
    for i in range(count):
        cols = rng.randint(1, max_vars)
        rows = rng.randint(1, max_vars + 2)
        density = rng.random()
        M = Gf2Matrix.from_rows(
            (sum(1 << j for j in range(cols) if rng.random() < density) for _ in range(rows)), cols
        )
        S = Gf2System(M, rng.getrandbits(rows))
        exhaustive = sum(1 for x in range(1 << cols) if M.matvec(x) == S.b)
        k = solution_count_log2(S)
        rep.check((exhaustive == 0 and k is None) or (k is not None and exhaustive == 1 << k), clause="count", instance=i)
        x, y = solve(S), fredholm_certificate(S)
        rep.check((x is None) != (y is None), clause="exactly one of solve/certificate", instance=i)
        if x is not None:
            rep.check(check_solution(S, x), clause="solution verifies", instance=i)
        if y is not None:
            rep.check(check_certificate(S, y), clause="certificate verifies", instance=i)
    return rep


# -- 11: loops ----------------------------------------------------------------------------------


def suite_loops(fmax: int = 4, dmax: int = 3) -> SuiteReport:
    rep = SuiteReport("loops", {"fmax": fmax, "dmax": dmax})
    sources = list(enumerate_graphs(fmax, connected_only=False, loops=True))
    for name, G in (("K_{1,2}", star(2)), ("K_{1,3}", star(3)), ("C_3", cycle(3))):
        T0, T1 = build_tilde_GU(G).graph, build_tilde_GU(G, (0,)).graph
        for F in sources:
            h0, h1 = hom_count(F, T0), hom_count(F, T1)
            cert = find_weak_oddism(F, G)
            tag = {"G": name, "F": _g6(F)}
            rep.check(h1 <= h0, clause="looped lift monotone", counts=[h0, h1], **tag)
            rep.check((h0 > h1) == (cert is not None), clause="strict iff weak oddism", counts=[h0, h1], **tag)
            if cert is not None:
                bad = certificate_violation(cert)
                rep.check(bad is None, clause=f"oddism certificate: {bad}", **tag)
    for d in range(1, dmax + 1):
        for F in sources:
            wide = any(F.degree(v) >= d for v in range(F.n))
            found = find_weak_oddism(F, star(d)) is not None
            rep.check(found == wide, clause="loop-degree characterisation", d=d, F=_g6(F))
    return rep


SUITES = {
    "construction": suite_construction,
    "k4-landmark": suite_k4_landmark,
    "main-dual": suite_main_dual,
    "zero-iso": suite_zero_iso,
    "bipartite": suite_bipartite,
    "cycle-oddos": suite_cycle_oddos,
    "bounded-degree": suite_bounded_degree,
    "minor-transport": suite_minor_transport,
    "composition": suite_composition,
    "winding": suite_winding,
    "gf2": suite_gf2,
    "loops": suite_loops,
}
