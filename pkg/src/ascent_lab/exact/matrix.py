"""Integer matrices, Smith normal form, and membership in the image lattice."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ascent_lab.errors import (
    DimensionMismatch,
    NotInjective,
    NotProperlyAscending,
    ParseError,
)


@dataclass(frozen=True)
class IntegerMatrix:
    """A ``rows x cols`` integer matrix, entries held as a tuple of row tuples."""

    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.data or not self.data[0]:
            raise DimensionMismatch("matrix must have at least one row and column")
        width = len(self.data[0])
        if any(len(r) != width for r in self.data):
            raise DimensionMismatch("ragged matrix rows")

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "IntegerMatrix":
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0])

    def entries(self) -> tuple[int, ...]:
        """Row-major entry list."""
        return tuple(x for r in self.data for x in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.data[i][j]

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.data))
        return IntegerMatrix(tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.data))

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.data)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(tuple(zip(*self.data)))

    def det(self) -> int:
        """Fraction-free Bareiss determinant."""
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        a = [list(r) for r in self.data]
        n = len(a)
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def inverse_unimodular(self) -> "IntegerMatrix":
        """Exact integer inverse; raises ValueError unless ``|det| == 1``."""
        inv = _rational_inverse(self)
        if any(x.denominator != 1 for r in inv for x in r):
            raise ValueError("matrix is not unimodular")
        return IntegerMatrix.of([[int(x) for x in r] for r in inv])

    def is_diagonal(self) -> bool:
        return all(self.data[i][j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.data[i][i] for i in range(min(self.rows, self.cols)))

    def to_literal(self) -> str:
        return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]" for r in self.data) + "]"

    def __str__(self) -> str:
        return self.to_literal()


def _rational_inverse(m: IntegerMatrix) -> list[list[Fraction]]:
    if not m.is_square():
        raise DimensionMismatch("inverse of a non-square matrix")
    n = m.rows
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m.data)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise NotInjective("singular matrix")
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [r[n:] for r in a]


def parse_matrix(text: str) -> IntegerMatrix:
    """Parse a nested-bracket literal such as ``[[2,0],[0,3]]``."""
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad matrix literal {text!r}: {exc}") from None
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError(f"matrix literal must be a list of rows: {text!r}")
    if not all(isinstance(x, int) and not isinstance(x, bool) for r in rows for x in r):
        raise ParseError(f"matrix entries must be integers: {text!r}")
    try:
        return IntegerMatrix.of(rows)
    except DimensionMismatch as exc:
        raise ParseError(str(exc)) from None


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ phi @ V == D`` with U, V unimodular and D diagonal with d1 | d2 | ..."""

    U: IntegerMatrix
    V: IntegerMatrix
    D: IntegerMatrix

    @property
    def invariants(self) -> tuple[int, ...]:
        return self.D.diagonal()


def smith_normal_form(phi: IntegerMatrix) -> SmithDecomposition:
    """Smith normal form by repeated least-absolute-value pivoting.

    The pivot is the nonzero entry of least absolute value in the active
    submatrix, ties going to the smaller row index and then the smaller
    column index.  Diagonal entries are made nonnegative by negating rows.
    """
    m, n = phi.rows, phi.cols
    a = [list(r) for r in phi.data]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for r in a:
            r[dst] += c * r[src]
        for r in V:
            r[dst] += c * r[src]

    for k in range(min(m, n)):
        while True:
            best = None
            for i in range(k, m):
                for j in range(k, n):
                    x = a[i][j]
                    if x != 0 and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != k:
                swap_rows(k, pi)
            if pj != k:
                swap_cols(k, pj)
            p = a[k][k]
            for i in range(k + 1, m):
                if a[i][k]:
                    add_row(i, k, -(a[i][k] // p))
            for j in range(k + 1, n):
                if a[k][j]:
                    add_col(j, k, -(a[k][j] // p))
            if any(a[i][k] for i in range(k + 1, m)) or any(a[k][j] for j in range(k + 1, n)):
                continue
            bad = next(
                (i for i in range(k + 1, m) for j in range(k + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(k, bad, 1)
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            U[k] = [-x for x in U[k]]
    return SmithDecomposition(IntegerMatrix.of(U), IntegerMatrix.of(V), IntegerMatrix.of(a))


def _require_injective(phi: IntegerMatrix, snf: SmithDecomposition | None = None) -> SmithDecomposition:
    if not phi.is_square():
        raise DimensionMismatch(f"expected a square matrix, got {phi.shape}")
    snf = snf or smith_normal_form(phi)
    if any(d == 0 for d in snf.invariants):
        raise NotInjective(f"det {phi} = 0")
    return snf


def image_membership(
    phi: IntegerMatrix, x: Sequence[int], snf: SmithDecomposition | None = None
) -> tuple[bool, tuple[int, ...] | None]:
    """Decide whether ``x = phi @ w`` for an integer vector ``w``.

    Returns ``(True, w)`` or ``(False, None)``.  A precomputed ``snf`` of
    ``phi`` may be passed to skip the decomposition.
    """
    if len(x) != phi.cols:
        raise DimensionMismatch(f"vector of length {len(x)} for {phi.shape} matrix")
    snf = _require_injective(phi, snf)
    y = snf.U.apply(x)
    z = []
    for yi, di in zip(y, snf.invariants):
        q, r = divmod(yi, di)
        if r:
            return False, None
        z.append(q)
    return True, snf.V.apply(z)


def vector_outside_image(phi: IntegerMatrix, snf: SmithDecomposition | None = None) -> tuple[int, ...]:
    """A vector not in ``phi(Z^d)``: U^-1 e_i for the least i with d_i > 1."""
    snf = _require_injective(phi, snf)
    i = next((i for i, d in enumerate(snf.invariants) if d > 1), None)
    if i is None:
        raise NotProperlyAscending(f"|det {phi}| = 1, so the image is the whole lattice")
    uinv = snf.U.inverse_unimodular()
    return tuple(r[i] for r in uinv.data)
