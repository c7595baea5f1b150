"""Exact rational scalars and dense matrices, plus the elimination oracles.

Scalars are plain ``int`` and :class:`fractions.Fraction`; both normalise
eagerly (lowest terms, positive denominator), so equality is structural.
:class:`DenseMatrix` is an immutable row-major grid of ``Fraction``.

The two oracles every closed form is checked against live here:
:func:`det_bareiss` (fraction-free elimination) and :func:`invert_exact`
(Gauss-Jordan over the rationals).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable

Rational = Fraction


class ShapeError(ValueError):
    """Operand shapes are incompatible with the requested operation."""

    def __init__(self, message, *shapes):
        super().__init__(message)
        self.shapes = shapes


class SingularMatrixError(ZeroDivisionError):
    def __init__(self, determinant=Fraction(0)):
        super().__init__(f"matrix is singular (determinant {determinant})")
        self.determinant = determinant


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and decimal/ratio strings to a Fraction.

    Floats are rejected: silently importing binary rounding error would
    defeat the point of exact arithmetic.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, (int, str)):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; pass a Fraction or int")
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def to_integer(value) -> int:
    """Round-trip a Rational with unit denominator back to ``int``."""
    q = as_rational(value)
    if q.denominator != 1:
        raise ValueError(f"{q} is not an integer")
    return q.numerator


class DenseMatrix:
    """Immutable ``rows x cols`` matrix of exact rationals."""

    __slots__ = ("_rows", "_cols", "_data")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(as_rational(v) for v in row) for row in rows)
        if not data or not data[0]:
            raise ShapeError("matrix must have at least one row and one column")
        width = len(data[0])
        for i, row in enumerate(data):
            if len(row) != width:
                raise ShapeError(f"row {i} has {len(row)} entries, expected {width}")
        self._rows = len(data)
        self._cols = width
        self._data = data

    @classmethod
    def _trusted(cls, data):
        # skips coercion; callers guarantee a non-empty rectangular Fraction grid
        obj = cls.__new__(cls)
        obj._data = data
        obj._rows = len(data)
        obj._cols = len(data[0])
        return obj

    @classmethod
    def identity(cls, n: int) -> DenseMatrix:
        one, zero = Fraction(1), Fraction(0)
        return cls._trusted(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> DenseMatrix:
        cols = rows if cols is None else cols
        if rows < 1 or cols < 1:
            raise ShapeError("matrix must have at least one row and one column")
        zero = Fraction(0)
        return cls._trusted(tuple((zero,) * cols for _ in range(rows)))

    @classmethod
    def from_function(cls, rows: int, cols: int, fn) -> DenseMatrix:
        return cls((fn(i, j) for j in range(cols)) for i in range(rows))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._rows, self._cols)

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    def __getitem__(self, index):
        i, j = index
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self._data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    def entries(self):
        """Yield ``(i, j, value)`` in row-major order."""
        for i, row in enumerate(self._data):
            for j, v in enumerate(row):
                yield i, j, v

    def transpose(self) -> DenseMatrix:
        return DenseMatrix._trusted(tuple(zip(*self._data)))

    def submatrix(self, row_slice: slice, col_slice: slice) -> DenseMatrix:
        return DenseMatrix(row[col_slice] for row in self._data[row_slice])

    def scale(self, factor) -> DenseMatrix:
        factor = as_rational(factor)
        return DenseMatrix._trusted(tuple(tuple(v * factor for v in row) for row in self._data))

    def __matmul__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return mat_mul(self, other)

    def __add__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}", self.shape, other.shape)
        return DenseMatrix._trusted(
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self._data, other._data))
        )

    def __sub__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        body = "; ".join(", ".join(str(v) for v in row) for row in self._data)
        return f"DenseMatrix[{self._rows}x{self._cols}]({body})"

    def is_upper_triangular(self) -> bool:
        return not self.below_diagonal_nonzeros()

    def below_diagonal_nonzeros(self) -> list[tuple[int, int, Fraction]]:
        return [(i, j, v) for i, j, v in self.entries() if j < i and v != 0]

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self._data[i][i] for i in range(min(self._rows, self._cols)))

    def to_json(self):
        return [[rational_to_json(v) for v in row] for row in self._data]

    @classmethod
    def from_json(cls, payload) -> DenseMatrix:
        return cls([rational_from_json(v) for v in row] for row in payload)


def mat_mul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    if a.cols != b.rows:
        raise ShapeError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}", a.shape, b.shape
        )
    bt = b.transpose()._data
    zero = Fraction(0)
    out = []
    for row in a._data:
        nz = [(k, v) for k, v in enumerate(row) if v]
        out.append(tuple(sum((v * col[k] for k, v in nz), zero) for col in bt))
    return DenseMatrix._trusted(tuple(out))


def direct_sum(*blocks: DenseMatrix) -> DenseMatrix:
    """Block-diagonal matrix with the given blocks in order."""
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    grid = [[Fraction(0)] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i, j, v in b.entries():
            grid[r0 + i][c0 + j] = v
        r0 += b.rows
        c0 += b.cols
    return DenseMatrix._trusted(tuple(tuple(r) for r in grid))


def _bareiss_int(m: list[list[int]]) -> int:
    # fraction-free elimination, in place; every division below is exact
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_bareiss(m: DenseMatrix) -> Fraction:
    """Exact determinant by Bareiss elimination on the denominator-cleared matrix."""
    if not m.is_square:
        raise ShapeError(f"determinant needs a square matrix, got {m.rows}x{m.cols}", m.shape)
    scale = 1
    ints = []
    for row in m._data:
        d = lcm(*(v.denominator for v in row))
        scale *= d
        ints.append([v.numerator * (d // v.denominator) for v in row])
    return Fraction(_bareiss_int(ints), scale)


def invert_exact(m: DenseMatrix) -> DenseMatrix:
    """Gauss-Jordan inverse over the rationals, first nonzero pivot per column."""
    if not m.is_square:
        raise ShapeError(f"inverse needs a square matrix, got {m.rows}x{m.cols}", m.shape)
    n = m.rows
    one, zero = Fraction(1), Fraction(0)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(m._data)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError(det_bareiss(m))
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        inv_p = 1 / aug[col][col]
        prow = [v * inv_p for v in aug[col]]
        aug[col] = prow
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], prow)]
    return DenseMatrix._trusted(tuple(tuple(row[n:]) for row in aug))


def rational_to_json(value) -> dict:
    q = as_rational(value)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_from_json(payload) -> Fraction:
    if isinstance(payload, dict):
        return Fraction(int(payload["num"]), int(payload["den"]))
    return as_rational(payload)


def integer_to_json(value: int) -> str:
    return str(int(value))
