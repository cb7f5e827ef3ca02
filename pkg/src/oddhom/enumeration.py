"""Isomorphism-free generation of small graphs by vertex augmentation.

Every graph on ``n`` vertices is a one-vertex extension of an induced
subgraph on ``n - 1`` vertices; for connected graphs that subgraph can be
chosen connected (delete a non-cut vertex).  Children are deduplicated by
canonical form.  Predicates flagged ``hereditary`` (closed under induced
subgraphs) prune during generation; others filter the finished level.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator

from .errors import GuardExceeded
from .graph import Graph
from .iso import canonical_labeling

ENUM_GUARD = 8


def _children(parent: Graph, connected: bool, loops: bool) -> Iterator[Graph]:
    n = parent.n
    base = list(parent.adj) + [0]
    for s in range(1 if connected else 0, 1 << n):
        for lp in ((0, 1) if loops else (0,)):
            masks = base[:]
            for v in range(n):
                if s >> v & 1:
                    masks[v] |= 1 << n
            masks[n] = s | (lp << n)
            yield Graph.from_masks(masks)


def _next_level(prev: list[Graph], connected: bool, loops: bool, keep: Callable[[Graph], bool] | None) -> list[Graph]:
    found: dict[tuple, Graph] = {}
    for parent in prev:
        for child in _children(parent, connected, loops):
            pos, key = canonical_labeling(child)
            if key in found:
                continue
            if keep is not None and not keep(child):
                found[key] = None  # remember rejection
                continue
            found[key] = child.relabel(pos)
    return [found[k] for k in sorted(found) if found[k] is not None]


def _first_level(loops: bool) -> list[Graph]:
    return [Graph(1), Graph(1, loops=[0])] if loops else [Graph(1)]


@lru_cache(maxsize=None)
def _level(n: int, connected: bool, loops: bool) -> tuple[Graph, ...]:
    if n == 1:
        return tuple(_first_level(loops))
    return tuple(_next_level(list(_level(n - 1, connected, loops)), connected, loops, None))


def enumerate_graphs(
    n_max: int,
    connected_only: bool = True,
    predicate: Callable[[Graph], bool] | None = None,
    *,
    n_min: int = 1,
    loops: bool = False,
    override: bool = False,
) -> Iterator[Graph]:
    """One canonical representative per isomorphism class with ``n_min <= |V| <= n_max``.

    Graphs come out level by level, each level sorted by canonical key.
    ``predicate`` may carry a truthy ``hereditary`` attribute to enable
    pruning.  ``n_max`` above the guard needs ``override=True``.
    """
    if n_max > ENUM_GUARD and not override:
        raise GuardExceeded(f"enumerate_graphs guard is n_max <= {ENUM_GUARD}; pass override=True")
    hereditary = predicate is not None and getattr(predicate, "hereditary", False)
    if hereditary:
        level = [g for g in _first_level(loops) if predicate(g)]
        for n in range(1, n_max + 1):
            if n > 1:
                level = _next_level(level, connected_only, loops, predicate)
            if n >= n_min:
                yield from level
        return
    for n in range(max(1, n_min), n_max + 1):
        for g in _level(n, connected_only, loops):
            if predicate is None or predicate(g):
                yield g
