"""Closed-form eigenvalues of the sequence circulants.

Summing the Binet forms as geometric series gives, at ``u = w^k``,

    lambda_k = (c0 + c1 u) / (1 - u - 2u^2),    1 - u - 2u^2 = (1 - 2u)(1 + u)

with integer ``c0, c1`` depending on the kind and ``n``. The denominator
vanishes at ``u = -1`` (``k = n/2`` for even ``n``), where the numerator
vanishes too. The geometric sum over the root -1 degenerates there
(``(-1 * u)^r = 1`` for every ``r``), so that term contributes ``n`` times
its coefficient instead; :func:`minus_one_eigenvalue` evaluates it exactly.
Any other zero of the denominator is reported as singular.
"""

from __future__ import annotations

from fractions import Fraction

from ..circulant import CirculantMatrix, eigenvalues_dft, root_of_unity
from ..sequences import SequenceKind, prefix
from .determinants import JACOBSTHAL, build_sequence_circulant, require_order, seq

DENOMINATOR_TOLERANCE = 1e-12


class ClosedFormSingularity(ZeroDivisionError):
    def __init__(self, k: int, value: complex):
        super().__init__(f"closed-form denominator vanishes at k = {k} (1 - u - 2u^2 = {value})")
        self.k = k
        self.value = value


def numerator_coefficients(kind: SequenceKind, n: int) -> tuple[int, int]:
    """``(c0, c1)`` such that ``lambda_k (1 - u - 2u^2) = c0 + c1 u``."""
    s = seq(kind, n)
    if kind is JACOBSTHAL:
        return 1 - s[n + 1], -2 * s[n]
    return 2 - s[n], -(1 + 2 * s[n - 1])


def literal_numerator_coefficients(kind: SequenceKind, n: int) -> tuple[int, int]:
    """Numerators ``1 - J_{n+1} - 2J_n u`` and ``1 - j_{n+1} + 2(2 - j_n) u``.

    The Lucas one sums ``j_1 .. j_n`` rather than ``j_0 .. j_{n-1}``, so it
    belongs to ``circ(j_1, ..., j_n)``; see :func:`shifted_lucas_circulant`.
    """
    s = seq(kind, n)
    if kind is JACOBSTHAL:
        return 1 - s[n + 1], -2 * s[n]
    return 1 - s[n + 1], 2 * (2 - s[n])


def shifted_lucas_circulant(n: int) -> CirculantMatrix:
    return CirculantMatrix(prefix(SequenceKind.JACOBSTHAL_LUCAS, n)[1:])


def numerator_at_minus_one(kind: SequenceKind, n: int, literal: bool = True) -> int:
    c0, c1 = (literal_numerator_coefficients if literal else numerator_coefficients)(kind, n)
    return c0 - c1


def minus_one_eigenvalue(kind: SequenceKind, n: int) -> Fraction:
    """``lambda_{n/2}`` for even ``n``: the 2-part as a geometric sum, the (-1)-part as ``n`` equal terms."""
    if n % 2:
        raise ValueError(f"-1 is not an n-th root of unity for odd n = {n}")
    if kind is JACOBSTHAL:
        # (1/3) sum_{r=1}^{n} (2^r - (-1)^r) (-1)^{r-1}
        return Fraction(2 * (1 - 2**n), 9) + Fraction(n, 3)
    # sum_{r=0}^{n-1} (2^r + (-1)^r) (-1)^r
    return Fraction(1 - 2**n, 3) + n


def _evaluate(c0: int, c1: int, n: int, k: int, at_minus_one=None) -> complex:
    u = root_of_unity(n, k)
    den = 1 - u - 2 * u * u
    if abs(den) > DENOMINATOR_TOLERANCE:
        return (c0 + c1 * u) / den
    if u == -1 and c0 == c1 and at_minus_one is not None:
        return complex(at_minus_one)
    raise ClosedFormSingularity(k, den)


def _row_sum(kind: SequenceKind, n: int) -> Fraction:
    return sum(build_sequence_circulant(kind, n).first_row, Fraction(0))


def eigenvalue_closed(kind: SequenceKind, n: int, k: int) -> complex:
    """Eigenvalue ``lambda_k`` of the order-``n`` sequence circulant; ``k = 0`` is the row sum."""
    require_order(n, 5, "closed-form eigenvalue")
    if not 0 <= k < n:
        raise ValueError(f"eigenvalue index must satisfy 0 <= k < {n}, got {k}")
    if k == 0:
        return complex(_row_sum(kind, n))
    at_minus_one = minus_one_eigenvalue(kind, n) if 2 * k == n else None
    return _evaluate(*numerator_coefficients(kind, n), n, k, at_minus_one)


def eigenvalue_literal(kind: SequenceKind, n: int, k: int) -> complex:
    require_order(n, 5, "closed-form eigenvalue")
    if not 1 <= k < n:
        raise ValueError(f"eigenvalue index must satisfy 1 <= k < {n}, got {k}")
    # undefined (0/0) at u = -1
    return _evaluate(*literal_numerator_coefficients(kind, n), n, k)


def eigenvalues_closed(kind: SequenceKind, n: int) -> list[complex]:
    return [eigenvalue_closed(kind, n, k) for k in range(n)]


def eigenvalue_discrepancy(kind: SequenceKind, n: int) -> tuple[int, float]:
    """Worst ``(k, |closed - dft| / (1 + |dft|))`` over ``k = 1 .. n-1``."""
    dft = eigenvalues_dft(build_sequence_circulant(kind, n)).lambdas
    worst = (0, 0.0)
    for k in range(1, n):
        err = abs(eigenvalue_closed(kind, n, k) - dft[k]) / (1 + abs(dft[k]))
        if err > worst[1]:
            worst = (k, err)
    return worst


def eigenvalue_product(kind: SequenceKind, n: int) -> complex:
    out = complex(1)
    for lam in eigenvalues_closed(kind, n):
        out *= lam
    return out


def minimum_modulus(kind: SequenceKind, n: int) -> float:
    return min(abs(eigenvalue_closed(kind, n, k)) for k in range(1, n))
