from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oddhom.errors import InvalidInput
from oddhom.gf2 import (
    Gf2Matrix,
    Gf2System,
    check_certificate,
    check_solution,
    fredholm_certificate,
    rank,
    solution_count_log2,
    solve,
)


def span_rank(M):
    span = {0}
    for r in M.bits:
        span |= {s ^ r for s in span}
    return len(span).bit_length() - 1


def brute_count(S):
    return sum(S.M.matvec(x) == S.b for x in range(1 << S.M.cols))


def random_system(rng, max_vars=12):
    cols = rng.randint(1, max_vars)
    rows = rng.randint(1, max_vars + 2)
    M = Gf2Matrix.from_rows([rng.getrandbits(cols) for _ in range(rows)], cols)
    return Gf2System(M, rng.getrandbits(rows))


@st.composite
def systems(draw, max_vars=10):
    cols = draw(st.integers(1, max_vars))
    rows = draw(st.integers(1, max_vars + 2))
    M = Gf2Matrix.from_rows(draw(st.lists(st.integers(0, (1 << cols) - 1), min_size=rows, max_size=rows)), cols)
    return Gf2System(M, draw(st.integers(0, (1 << rows) - 1)))


def test_rank_examples():
    assert rank(Gf2Matrix.identity(3)) == 3
    assert rank(Gf2Matrix.zeros(3, 3)) == 0
    rng = random.Random(8)
    for _ in range(20):
        M = Gf2Matrix.from_rows([rng.getrandbits(12) for _ in range(8)], 12)
        assert rank(M) == span_rank(M)


def test_solve_examples():
    x = solve(Gf2System(Gf2Matrix.identity(3), 0b101))
    assert Gf2Matrix.identity(3).to_lists() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert [x >> i & 1 for i in range(3)] == [1, 0, 1]
    S = Gf2System(Gf2Matrix.from_lists([[1, 1]]), 1)
    x = solve(S)
    assert (x & 1) ^ (x >> 1 & 1) == 1
    assert solve(Gf2System(Gf2Matrix.zeros(1, 1), 1)) is None


def test_count_examples():
    M = Gf2Matrix.from_lists([[1, 0, 1], [0, 1, 1]])
    assert solution_count_log2(Gf2System.homogeneous(M)) == 1
    assert solution_count_log2(Gf2System(Gf2Matrix.zeros(1, 1), 1)) is None


def test_certificate_examples():
    assert fredholm_certificate(Gf2System(Gf2Matrix.zeros(1, 1), 1)) == 1
    assert fredholm_certificate(Gf2System(Gf2Matrix.identity(2), 0b11)) is None
    assert fredholm_certificate(Gf2System(Gf2Matrix.from_lists([[1, 1], [1, 1]]), 0b10)) == 0b11


def test_matrix_validation():
    with pytest.raises(InvalidInput):
        Gf2Matrix(1, 2, (0b100,))
    with pytest.raises(InvalidInput):
        Gf2System(Gf2Matrix.identity(2), 0b100)


def test_thousand_random_systems():
    rng = random.Random(20240601)
    for _ in range(1000):
        S = random_system(rng)
        x, y = solve(S), fredholm_certificate(S)
        assert (x is None) != (y is None)
        if x is not None:
            assert check_solution(S, x)
        else:
            assert check_certificate(S, y)
        count = brute_count(S)
        k = solution_count_log2(S)
        assert count == (0 if k is None else 1 << k)


@given(systems())
def test_duality_property(S):
    x, y = solve(S), fredholm_certificate(S)
    assert (x is None) != (y is None)
    assert check_solution(S, x) if x is not None else check_certificate(S, y)


@given(systems())
def test_rank_of_transpose(S):
    assert rank(S.M) == rank(S.M.transpose()) == span_rank(S.M)


@given(systems(max_vars=8))
def test_count_matches_rank(S):
    k = solution_count_log2(S)
    if k is not None:
        assert k == S.M.cols - rank(S.M)


@given(systems(max_vars=8), st.integers(0, 255))
def test_matvec_rmatvec_adjoint(S, x):
    x &= (1 << S.M.cols) - 1
    y = S.b
    lhs = (S.M.matvec(x) & y).bit_count() & 1
    rhs = (S.M.rmatvec(y) & x).bit_count() & 1
    assert lhs == rhs
