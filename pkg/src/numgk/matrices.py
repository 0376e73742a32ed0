"""Immutable square matrices over exact rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .polynomials import IntPolynomial, clear_denominators


@dataclass(frozen=True)
class Matrix:
    """Square matrix of Fractions; rows are tuples, values immutable."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n < 1:
            raise ValueError("dimension must be >= 1")
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "Matrix":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)))

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    @property
    def is_integer(self) -> bool:
        return all(x.denominator == 1 for row in self.rows for x in row)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def transpose(self) -> "Matrix":
        n = self.dimension
        return Matrix(tuple(tuple(self.rows[j][i] for j in range(n)) for i in range(n)))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_dim(other)
        return Matrix(tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_dim(other)
        return Matrix(tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)))

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix(tuple(tuple(c * x for x in row) for row in self.rows))

    def __mul__(self, other: "Matrix") -> "Matrix":
        self._check_dim(other)
        n = self.dimension
        cols = other.transpose().rows
        return Matrix(tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows))

    def __pow__(self, k: int) -> "Matrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = Matrix.identity(self.dimension)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def apply(self, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(vec) != self.dimension:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.rows)

    def _check_dim(self, other: "Matrix") -> None:
        if self.dimension != other.dimension:
            raise ValueError("dimension mismatch")

    def trace(self) -> Fraction:
        return sum(self.rows[i][i] for i in range(self.dimension))

    def det(self) -> Fraction:
        """Determinant by fraction Gaussian elimination with row pivoting."""
        n = self.dimension
        a = [list(row) for row in self.rows]
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                det = -det
            det *= a[col][col]
            inv = 1 / a[col][col]
            for r in range(col + 1, n):
                if a[r][col] == 0:
                    continue
                factor = a[r][col] * inv
                for c in range(col, n):
                    a[r][c] -= factor * a[col][c]
        return det

    def inverse(self) -> "Matrix":
        n = self.dimension
        a = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)] for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            a[col], a[pivot] = a[pivot], a[col]
            inv = 1 / a[col][col]
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r == col or a[r][col] == 0:
                    continue
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
        return Matrix(tuple(tuple(row[n:]) for row in a))

    def inf_norm(self) -> Fraction:
        return max(sum(abs(x) for x in row) for row in self.rows)

    def __str__(self) -> str:  # pragma: no cover
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows)


def block_diagonal(a: Matrix, b: Matrix | None) -> Matrix:
    """diag(a, b); b may be None for an empty second block."""
    if b is None:
        return a
    na, nb = a.dimension, b.dimension
    rows = []
    for i in range(na):
        rows.append(tuple(a.rows[i]) + (Fraction(0),) * nb)
    for i in range(nb):
        rows.append((Fraction(0),) * na + tuple(b.rows[i]))
    return Matrix(tuple(rows))


def char_poly(m: Matrix) -> IntPolynomial:
    """Characteristic polynomial det(x*I - m), denominators cleared.

    Faddeev–LeVerrier over exact rationals; for integer matrices the result
    is monic with integer coefficients, in general it is the primitive
    integer polynomial equal to det(x*I - m) up to a positive rational
    scalar.
    """
    n = m.dimension
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = Matrix.identity(n)
    for k in range(1, n + 1):
        am = m * mk
        c = -am.trace() / k
        coeffs[n - k] = c
        if k < n:
            mk = am + Matrix.identity(n).scale(c)
    cleared = clear_denominators(coeffs)
    return cleared.primitive()
