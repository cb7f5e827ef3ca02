"""Dense linear algebra over GF(2) with rows packed into Python ints.

Bit ``j`` of a row is the coefficient of variable ``j``.  Elimination keeps,
for every working row, the set of original rows that were summed into it;
a row that collapses to ``0 = 1`` therefore hands back a certificate of
unsolvability directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInput
from .graph import bits


@dataclass(frozen=True)
class Gf2Matrix:
    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != self.rows:
            raise InvalidInput(f"expected {self.rows} rows, got {len(self.bits)}")
        limit = 1 << self.cols
        for r in self.bits:
            if r < 0 or r >= limit:
                raise InvalidInput(f"row {r:#x} has entries beyond column {self.cols - 1}")

    @classmethod
    def from_rows(cls, rows: Iterable[int], cols: int) -> "Gf2Matrix":
        rows = tuple(rows)
        return cls(len(rows), cols, rows)

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], cols: int | None = None) -> "Gf2Matrix":
        if cols is None:
            cols = len(entries[0]) if entries else 0
        packed = []
        for row in entries:
            if len(row) != cols:
                raise InvalidInput("ragged matrix")
            packed.append(sum(1 << j for j, x in enumerate(row) if x & 1))
        return cls(len(packed), cols, tuple(packed))

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Gf2Matrix":
        return cls(rows, cols, (0,) * rows)

    def entry(self, i: int, j: int) -> int:
        return self.bits[i] >> j & 1

    def to_lists(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.cols)] for r in self.bits]

    def transpose(self) -> "Gf2Matrix":
        out = [0] * self.cols
        for i, r in enumerate(self.bits):
            for j in bits(r):
                out[j] |= 1 << i
        return Gf2Matrix(self.cols, self.rows, tuple(out))

    def matvec(self, x: int) -> int:
        """``M x`` with ``x`` packed over columns; result packed over rows."""
        y = 0
        for i, r in enumerate(self.bits):
            if (r & x).bit_count() & 1:
                y |= 1 << i
        return y

    def rmatvec(self, y: int) -> int:
        """``M^T y``: XOR of the rows selected by ``y``."""
        acc = 0
        for i in bits(y):
            acc ^= self.bits[i]
        return acc

    def vstack(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if other.cols != self.cols:
            raise InvalidInput("column counts differ")
        return Gf2Matrix(self.rows + other.rows, self.cols, self.bits + other.bits)


@dataclass(frozen=True)
class Gf2System:
    """``M x = b`` with ``b`` packed over rows."""

    M: Gf2Matrix
    b: int

    def __post_init__(self):
        if self.b < 0 or self.b >> self.M.rows:
            raise InvalidInput("right-hand side longer than the row count")

    @classmethod
    def homogeneous(cls, M: Gf2Matrix) -> "Gf2System":
        return cls(M, 0)


@dataclass
class _Echelon:
    pivots: list[tuple[int, int, int]]  # (pivot column, row with rhs at bit cols, history)
    rank: int
    conflict: int | None  # history of a row reducing to 0 = 1


def _eliminate(M: Gf2Matrix, b: int) -> _Echelon:
    cols = M.cols
    rhs_bit = 1 << cols
    pivots: list[tuple[int, int, int]] = []
    conflict = None
    for i, r in enumerate(M.bits):
        row = r | (rhs_bit if b >> i & 1 else 0)
        hist = 1 << i
        for col, prow, phist in pivots:
            if row >> col & 1:
                row ^= prow
                hist ^= phist
        coeff = row & (rhs_bit - 1)
        if coeff:
            col = (coeff & -coeff).bit_length() - 1
            pivots.append((col, row, hist))
        elif row and conflict is None:
            conflict = hist
    return _Echelon(pivots, len(pivots), conflict)


def rank(M: Gf2Matrix) -> int:
    return _eliminate(M, 0).rank


def solve(S: Gf2System) -> int | None:
    """Some ``x`` (packed over columns) with ``M x = b``, or None if inconsistent."""
    ech = _eliminate(S.M, S.b)
    if ech.conflict is not None:
        return None
    cols = S.M.cols
    x = 0
    # back-substitute with free variables set to zero
    for col, row, _ in reversed(ech.pivots):
        val = row >> cols & 1
        val ^= (row & x & ((1 << cols) - 1)).bit_count() & 1
        x |= val << col
    return x


def solution_count_log2(S: Gf2System) -> int | None:
    """``log2`` of the number of solutions, or None when there are none."""
    ech = _eliminate(S.M, S.b)
    if ech.conflict is not None:
        return None
    return S.M.cols - ech.rank


def fredholm_certificate(S: Gf2System) -> int | None:
    """``y`` (packed over rows) with ``M^T y = 0`` and ``b . y = 1``; None if solvable."""
    return _eliminate(S.M, S.b).conflict


def check_solution(S: Gf2System, x: int) -> bool:
    return S.M.matvec(x) == S.b


def check_certificate(S: Gf2System, y: int) -> bool:
    return S.M.rmatvec(y) == 0 and (S.b & y).bit_count() & 1 == 1
