"""Generic circulant algebra.

``circ(c_0, ..., c_{n-1})`` has entry ``c_{(j - i) mod n}`` at row ``i``,
column ``j``: each row is the previous one shifted one place to the right.
Its eigenvalues are the DFT values ``lambda_j = sum_k c_k w^{jk}`` with
``w = exp(2 pi i / n)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_core import DenseMatrix, ShapeError, as_rational, rational_from_json, rational_to_json

# |Im det| allowed relative to max(1, |Re det|) before a determinant is called non-real
IMAG_TOLERANCE = 1e-6
# |lambda_k| below this (relative to max(1, max |lambda|)) counts as singular
SINGULAR_TOLERANCE = 1e-12


class SingularCirculantError(ZeroDivisionError):
    def __init__(self, k: int, modulus: float):
        super().__init__(f"eigenvalue lambda_{k} vanishes (|lambda_{k}| = {modulus:.3e})")
        self.k = k
        self.modulus = modulus


@dataclass(frozen=True)
class CirculantMatrix:
    first_row: tuple[Fraction, ...]

    def __init__(self, first_row: Sequence):
        row = tuple(as_rational(v) for v in first_row)
        if not row:
            raise ValueError("circulant needs at least one entry")
        object.__setattr__(self, "first_row", row)

    @property
    def n(self) -> int:
        return len(self.first_row)

    @classmethod
    def identity(cls, n: int) -> CirculantMatrix:
        return cls([1] + [0] * (n - 1))

    def entry(self, i: int, j: int) -> Fraction:
        return self.first_row[(j - i) % self.n]

    def to_dense(self) -> DenseMatrix:
        return to_dense(self)

    def __matmul__(self, other):
        if not isinstance(other, CirculantMatrix):
            return NotImplemented
        return cyclic_convolve(self, other)

    def to_json(self) -> dict:
        return {"n": self.n, "first_row": [rational_to_json(v) for v in self.first_row]}

    @classmethod
    def from_json(cls, payload) -> CirculantMatrix:
        row = [rational_from_json(v) for v in payload["first_row"]]
        if len(row) != payload["n"]:
            raise ValueError("first_row length disagrees with n")
        return cls(row)


@dataclass(frozen=True)
class EigenSystem:
    n: int
    lambdas: tuple[complex, ...]
    omega: complex
    lambda0: Fraction

    def eigenvector(self, j: int) -> tuple[complex, ...]:
        return tuple(self.omega ** (j * k) for k in range(self.n))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "omega": complex_to_json(self.omega),
            "lambdas": [complex_to_json(z) for z in self.lambdas],
            "lambda0": rational_to_json(self.lambda0),
        }


@dataclass(frozen=True)
class ApproxCirculant:
    """Circulant with a complex double-precision first row."""

    first_row: tuple[complex, ...]

    @property
    def n(self) -> int:
        return len(self.first_row)

    def nearest_rational(self, max_denominator: int = 10**6) -> CirculantMatrix:
        return CirculantMatrix(
            [Fraction(z.real).limit_denominator(max_denominator) for z in self.first_row]
        )

    def to_json(self) -> dict:
        return {"n": self.n, "first_row": [complex_to_json(z) for z in self.first_row]}


def complex_to_json(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def root_of_unity(n: int, k: int = 1) -> complex:
    """``exp(2 pi i k / n)``, with exact values at the quarter turns."""
    k %= n
    if (4 * k) % n == 0:
        return (1, 1j, -1, -1j)[4 * k // n]
    return cmath.exp(2j * math.pi * k / n)


def to_dense(c: CirculantMatrix) -> DenseMatrix:
    n = c.n
    row = c.first_row
    return DenseMatrix._trusted(tuple(row[n - i:] + row[: n - i] for i in range(n)))


def eigenvalues_dft(c: CirculantMatrix) -> EigenSystem:
    n = c.n
    coeffs = [float(v) for v in c.first_row]
    powers = [root_of_unity(n, m) for m in range(n)]
    lambdas = [complex(sum(coeffs))]
    for j in range(1, n):
        lambdas.append(sum(ck * powers[(j * k) % n] for k, ck in enumerate(coeffs)))
    return EigenSystem(n=n, lambdas=tuple(lambdas), omega=powers[1 % n], lambda0=sum(c.first_row, Fraction(0)))


def det_via_eigenvalues(c: CirculantMatrix) -> complex:
    out = complex(1)
    for lam in eigenvalues_dft(c).lambdas:
        out *= lam
    return out


def is_effectively_real(z: complex, tol: float = IMAG_TOLERANCE) -> bool:
    return abs(z.imag) <= tol * max(1.0, abs(z.real))


def inverse_via_eigenvalues(c: CirculantMatrix, tol: float = SINGULAR_TOLERANCE) -> ApproxCirculant:
    """Inverse first row ``a_j = (1/n) sum_k lambda_k^{-1} w^{-kj}``."""
    eig = eigenvalues_dft(c)
    n = eig.n
    scale = max(1.0, max(abs(lam) for lam in eig.lambdas))
    for k, lam in enumerate(eig.lambdas):
        if abs(lam) <= tol * scale:
            raise SingularCirculantError(k, abs(lam))
    recip = [1 / lam for lam in eig.lambdas]
    powers = [root_of_unity(n, -m) for m in range(n)]
    row = tuple(sum(r * powers[(k * j) % n] for k, r in enumerate(recip)) / n for j in range(n))
    return ApproxCirculant(row)


def cyclic_convolve(a: CirculantMatrix, b: CirculantMatrix) -> CirculantMatrix:
    if a.n != b.n:
        raise ShapeError(f"circulant orders differ: {a.n} vs {b.n}", (a.n, a.n), (b.n, b.n))
    n = a.n
    out = [Fraction(0)] * n
    for i, x in enumerate(a.first_row):
        if x:
            for j, y in enumerate(b.first_row):
                out[(i + j) % n] += x * y
    return CirculantMatrix(out)


def is_circulant(m: DenseMatrix) -> bool:
    """Every row is the right cyclic shift of the row above it."""
    if not m.is_square:
        return False
    first = m.row(0)
    return to_dense(CirculantMatrix(first)) == m
