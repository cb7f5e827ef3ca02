"""Parity lifts of graphs, fibred homomorphism counts, and oddomorphisms."""

from __future__ import annotations

from .construct import build_G01, build_GU, build_star_simplified, build_tilde_GU, shift_isomorphism
from .enumeration import enumerate_graphs
from .errors import GuardExceeded, InvalidInput, LimitExceeded, OddhomError, ParseError
from .gf2 import Gf2Matrix, Gf2System, fredholm_certificate, rank, solution_count_log2, solve
from .graph import Graph, VertexMap, generate, parse_graph, parse_graph6, write_graph6
from .homcount import build_fibered_system, hom_count, hom_count_fibered, hom_enumerate, hom_vector_cycles
from .iso import find_isomorphism, is_isomorphic
from .minors import has_minor, is_planar
from .oddo import (
    OddoCertificate,
    classify_parity,
    compose_oddo,
    find_oddomorphism,
    find_weak_oddism,
    find_weak_oddo,
    is_oddomorphism,
    minor_oddo,
    odd_cover,
    odd_subdivision,
    restrict_oddo,
    verify_certificate,
)

__all__ = [name for name in dir() if not name.startswith("_") and name != "annotations"]
