from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from oddhom.graph import Graph, random_connected_graph


@st.composite
def graphs(draw, min_n=0, max_n=7, loops=False, connected=False):
    n = draw(st.integers(min_n, max_n))
    if connected and n:
        seed = draw(st.integers(0, 2**32 - 1))
        return random_connected_graph(n, draw(st.floats(0.1, 0.9)), random.Random(seed))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    ls = draw(st.lists(st.integers(0, n - 1), unique=True)) if loops and n else []
    return Graph(n, chosen, ls)


@pytest.fixture
def rng():
    return random.Random(12345)


# one (number, title, passed, seconds, limit) row per acceptance criterion
ACCEPTANCE: list[tuple[int, str, bool, float, float]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, secs, limit in sorted(ACCEPTANCE):
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d} {verdict}  {title}  ({secs:.2f}s, limit {limit:g}s)")
