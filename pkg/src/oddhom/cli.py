"""Command-line interface.

Graphs are given as file paths (graph6 or edge list, detected from the
content) or inline as ``gen:KIND:ARGS``, e.g. ``gen:cycle:5``.
Exit codes: 0 success, 1 a checked property failed, 2 bad input,
3 a size guard refused the request.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import suites
from .construct import build_GU, build_star_simplified, build_tilde_GU
from .cycles import extract_chordless_odd_cycle
from .enumeration import enumerate_graphs
from .errors import GuardExceeded, InvalidInput
from .families import builtin_predicates, hd_closure_probe, indistinguishable_up_to, parse_predicate
from .graph import Graph, generate, parse_graph, write_graph6
from .homcount import hom_count, hom_vector_cycles
from .oddo import OddoCertificate, certificate_violation, find_oddomorphism, find_weak_oddism, find_weak_oddo
from .structure import structure_queries


def read_graph(spec: str) -> Graph:
    if spec.startswith("gen:"):
        kind, *params = spec[4:].split(":")
        try:
            nums = [int(p) for p in params for p in p.split(",") if p]
        except ValueError:
            raise InvalidInput(f"bad generator parameters in {spec!r}") from None
        return generate(kind, *nums)
    path = Path(spec)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InvalidInput(f"cannot read {spec}: {exc.strerror or exc}") from None
    return parse_graph(text)


def _vertex_set(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InvalidInput(f"bad vertex list {text!r}") from None


def _emit(obj, out: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    if args.kind == "star-simple":
        if args.d is None:
            raise InvalidInput("star-simple needs --d")
        H = build_star_simplified(args.d, args.i)
        payload = {"graph6": write_graph6(H), "n": H.n, "edges": [list(e) for e in H.edges]}
    else:
        if args.g is None:
            raise InvalidInput(f"{args.kind} needs --g")
        G = read_graph(args.g)
        lab = (build_tilde_GU if args.kind == "tilde" else build_GU)(G, _vertex_set(args.u))
        H = lab.graph
        payload = lab.to_json()
        payload["graph6"] = write_graph6(H.without_loops())
    if args.out:
        Path(args.out + ".g6").write_text(payload["graph6"] + "\n")
        _emit(payload, args.out + ".json")
    else:
        print(payload["graph6"])
        if args.json:
            _emit(payload, None)
    return 0


def cmd_hom(args) -> int:
    print(hom_count(read_graph(args.F), read_graph(args.G)))
    return 0


def cmd_homvec(args) -> int:
    print(json.dumps(hom_vector_cycles(read_graph(args.G), args.max_cycle)))
    return 0


def cmd_oddo_find(args) -> int:
    F, G = read_graph(args.F), read_graph(args.G)
    if args.oddism:
        cert = find_weak_oddism(F, G)
    elif args.weak:
        cert = find_weak_oddo(F, G)
    else:
        cert = find_oddomorphism(F, G)
    if cert is None:
        print("none")
        return 0
    _emit(cert.to_json(), args.out)
    return 0


def _load_certificate(path: str) -> OddoCertificate:
    try:
        obj = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not JSON: {exc}") from None
    return OddoCertificate.from_json(obj)


def cmd_oddo_verify(args) -> int:
    bad = certificate_violation(_load_certificate(args.cert))
    print("pass" if bad is None else f"fail: {bad}")
    return 0 if bad is None else 1


def cmd_cycles_extract(args) -> int:
    F = read_graph(args.F)
    cert = _load_certificate(args.cert)
    _emit(extract_chordless_odd_cycle(F, cert).to_json(), args.out)
    return 0


def cmd_families_probe(args) -> int:
    pred = parse_predicate(args.pred)
    rep = hd_closure_probe(read_graph(args.g), pred, args.nmax, r=args.r, workers=args.workers)
    _emit(rep.to_json(), args.out)
    return 0 if rep.passed else 1


def cmd_families_compare(args) -> int:
    pred = parse_predicate(args.pred)
    rep = indistinguishable_up_to(read_graph(args.h), read_graph(args.h2), pred, args.nmax, full=args.full, workers=args.workers)
    _emit(rep.to_json(), args.out)
    return 0


def cmd_families_list(args) -> int:
    for name, desc in builtin_predicates().items():
        print(f"{name:22s} {desc}")
    return 0


VERIFY_PARAMS = {
    "main-dual": ("gmax", "fmax"),
    "zero-iso": ("nmax",),
    "winding": ("seed", "count"),
    "minor-transport": ("seed", "count"),
    "bounded-degree": ("d", "nmax"),
    "construction": ("k_max",),
    "k4-landmark": (),
    "bipartite": ("fmax", "gmax"),
    "cycle-oddos": ("lo", "hi"),
    "composition": ("seed", "count", "nmax"),
    "gf2": ("seed", "count"),
    "loops": ("fmax",),
}


def cmd_verify(args) -> int:
    kwargs = {}
    for name in VERIFY_PARAMS[args.suite]:
        val = getattr(args, name, None)
        if val is not None:
            kwargs[name] = val
    for name, val in kwargs.items():
        if name != "seed" and val <= 0:
            raise InvalidInput(f"--{name} must be positive")
    rep = suites.SUITES[args.suite](**kwargs)
    out = rep.to_json()
    out["seed"] = kwargs.get("seed", args.seed)
    _emit(out, args.out)
    return 0 if rep.passed else 1


def cmd_enumerate(args) -> int:
    pred = parse_predicate(args.pred) if args.pred else None
    for G in enumerate_graphs(args.nmax, connected_only=args.connected, predicate=pred, n_min=args.nmin, override=args.override):
        print(write_graph6(G))
    return 0


def cmd_structure(args) -> int:
    _emit(structure_queries(read_graph(args.G), star_d=args.star).to_json(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oddhom", description="Parity lifts, homomorphism counts and oddomorphisms.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build G_U, its looped variant, or a simplified star lift")
    c.add_argument("kind", choices=["gu", "tilde", "star-simple"])
    c.add_argument("--g", help="base graph")
    c.add_argument("--u", help="comma-separated vertex set U (default empty)")
    c.add_argument("--d", type=int, help="star degree for star-simple")
    c.add_argument("--i", type=int, default=0, choices=[0, 1], help="parity for star-simple")
    c.add_argument("--out", help="write OUT.g6 and OUT.json instead of printing")
    c.add_argument("--json", action="store_true", help="also print the labelled JSON description")
    c.set_defaults(func=cmd_construct)

    h = sub.add_parser("hom", help="count homomorphisms F -> G")
    h.add_argument("F")
    h.add_argument("G")
    h.set_defaults(func=cmd_hom)

    hv = sub.add_parser("homvec", help="closed-walk counts hom(C_k, G) for k = 3..L")
    hv.add_argument("G")
    hv.add_argument("--max-cycle", type=int, default=8)
    hv.set_defaults(func=cmd_homvec)

    o = sub.add_parser("oddo", help="search for or verify oddomorphism certificates")
    osub = o.add_subparsers(dest="oddo_command", required=True)
    of = osub.add_parser("find")
    of.add_argument("F")
    of.add_argument("G")
    mode = of.add_mutually_exclusive_group()
    mode.add_argument("--weak", action="store_true", help="weak oddomorphism (some subgraph)")
    mode.add_argument("--oddism", action="store_true", help="weak oddism (any map; loops allowed in F)")
    of.add_argument("--out")
    of.set_defaults(func=cmd_oddo_find)
    ov = osub.add_parser("verify")
    ov.add_argument("cert")
    ov.set_defaults(func=cmd_oddo_verify)

    cy = sub.add_parser("cycles", help="winding-number tools")
    cysub = cy.add_subparsers(dest="cycles_command", required=True)
    ce = cysub.add_parser("extract", help="chordless cycle of odd winding from a certificate onto a cycle")
    ce.add_argument("F")
    ce.add_argument("cert")
    ce.add_argument("--out")
    ce.set_defaults(func=cmd_cycles_extract)

    fa = sub.add_parser("families", help="bounded indistinguishability checks")
    fsub = fa.add_subparsers(dest="families_command", required=True)
    fp = fsub.add_parser("probe", help="padded G_0/G_1 pair against a family")
    fp.add_argument("--g", required=True)
    fp.add_argument("--pred", required=True)
    fp.add_argument("--nmax", type=int, default=6)
    fp.add_argument("--r", type=int, help="padding clique size (default: chromatic number)")
    fp.add_argument("--workers", type=int, default=1)
    fp.add_argument("--out")
    fp.set_defaults(func=cmd_families_probe)
    fc = fsub.add_parser("compare", help="compare two graphs over a family")
    fc.add_argument("--h", required=True)
    fc.add_argument("--h2", required=True)
    fc.add_argument("--pred", required=True)
    fc.add_argument("--nmax", type=int, default=6)
    fc.add_argument("--full", action="store_true", help="enumerate disconnected members too")
    fc.add_argument("--workers", type=int, default=1)
    fc.add_argument("--out")
    fc.set_defaults(func=cmd_families_compare)
    fl = fsub.add_parser("list", help="list predicate names")
    fl.set_defaults(func=cmd_families_list)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(suites.SUITES))
    v.add_argument("--seed", type=int, default=suites.DEFAULT_SEED)
    v.add_argument("--count", type=int)
    v.add_argument("--nmax", type=int)
    v.add_argument("--gmax", type=int)
    v.add_argument("--fmax", type=int)
    v.add_argument("--d", type=int)
    v.add_argument("--k-max", dest="k_max", type=int)
    v.add_argument("--lo", type=int)
    v.add_argument("--hi", type=int)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="one graph6 line per isomorphism class")
    e.add_argument("--nmax", type=int, required=True)
    e.add_argument("--nmin", type=int, default=1)
    e.add_argument("--all", dest="connected", action="store_false", help="include disconnected graphs")
    e.add_argument("--pred")
    e.add_argument("--override", action="store_true", help="lift the size guard")
    e.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("structure", help="components, bipartiteness, cycles, planarity")
    s.add_argument("G")
    s.add_argument("--star", type=int, default=3)
    s.add_argument("--out")
    s.set_defaults(func=cmd_structure)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
