"""Closed-form determinants and the triangularizing reductions behind them.

Notation used throughout the ``forms`` package, for order ``n``:

* Jacobsthal kind: ``C = circ(J_1, ..., J_n)``, ratio ``x = 2J_n / (1 - J_{n+1})``.
* Lucas kind: ``C = circ(j_0, ..., j_{n-1})``, ratio ``x = (1 + 2j_{n-1}) / (2 - j_n)``.

Left-multiplying by ``P`` (resp. ``K``) and right-multiplying by ``Q``
(resp. ``M``) turns ``C`` into an upper-triangular matrix whose rows from
the third on carry only a constant diagonal and superdiagonal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from ..circulant import CirculantMatrix, to_dense
from ..exact_core import DenseMatrix, det_bareiss, mat_mul
from ..sequences import SequenceKind, prefix

JACOBSTHAL = SequenceKind.JACOBSTHAL
LUCAS = SequenceKind.JACOBSTHAL_LUCAS


class TransformId(enum.Enum):
    P = "P"
    Q = "Q"
    R = "R"
    K = "K"
    M = "M"
    Z = "Z"

    @property
    def kind(self) -> SequenceKind:
        return JACOBSTHAL if self in (TransformId.P, TransformId.Q, TransformId.R) else LUCAS


def require_order(n: int, minimum: int, what: str) -> None:
    if n < minimum:
        raise ValueError(f"{what} requires n >= {minimum}, got n = {n}")


def seq(kind: SequenceKind, n: int) -> tuple[int, ...]:
    """Terms x_0 .. x_{n+2}; enough for every formula at order n."""
    return prefix(kind, n + 2)


def ratio(kind: SequenceKind, n: int) -> Fraction:
    s = seq(kind, n)
    if kind is JACOBSTHAL:
        return Fraction(2 * s[n], 1 - s[n + 1])
    return Fraction(1 + 2 * s[n - 1], 2 - s[n])


def build_sequence_circulant(kind: SequenceKind, n: int) -> CirculantMatrix:
    require_order(n, 3, "sequence circulant")
    s = seq(kind, n)
    if kind is JACOBSTHAL:
        return CirculantMatrix(s[1 : n + 1])
    return CirculantMatrix(s[0:n])


def det_closed(kind: SequenceKind, n: int) -> int:
    require_order(n, 3, "closed-form determinant")
    s = seq(kind, n)
    if kind is JACOBSTHAL:
        a, b = 1 - s[n + 1], 2 * s[n]
        total = a ** (n - 2) * (1 - s[n]) + 2 * sum(
            s[k] * a ** (k - 1) * b ** (n - k - 1) for k in range(1, n - 1)
        )
    else:
        a, b = 2 - s[n], 1 + 2 * s[n - 1]
        total = a ** (n - 2) * (4 - s[n - 1]) + sum(
            (2 * s[k] - s[k - 1]) * a ** (k - 2) * b ** (n - k) for k in range(2, n)
        )
    # every term is an integer here, but keep the guard in case the sum is reworked
    total = Fraction(total)
    assert total.denominator == 1, f"closed-form determinant {total} is not an integer"
    return total.numerator


@dataclass(frozen=True)
class ScalarSet:
    """Leading-row scalars of the reduced matrix.

    ``f``/``g`` are populated for the Jacobsthal kind, ``y_prime``/``y``
    for the Lucas kind; the other pair is ``None``.
    """

    kind: SequenceKind
    n: int
    f: Fraction | None = None
    g: Fraction | None = None
    y: Fraction | None = None
    y_prime: Fraction | None = None


def scalars(kind: SequenceKind, n: int) -> ScalarSet:
    require_order(n, 3, "scalar set")
    s = seq(kind, n)
    x = ratio(kind, n)
    if kind is JACOBSTHAL:
        f = sum((s[k + 1] * x ** (n - k - 1) for k in range(1, n)), Fraction(0))
        g = 1 - s[n] + 2 * sum((s[n - k - 1] * x**k for k in range(1, n - 1)), Fraction(0))
        return ScalarSet(kind, n, f=f, g=g)
    y = Fraction(1, 2) * (
        (4 - s[n - 1]) + sum(((2 * s[k] - s[k - 1]) * x ** (n - k) for k in range(2, n)), Fraction(0))
    )
    y_prime = sum((s[k] * x ** (n - k - 1) for k in range(1, n)), Fraction(0))
    return ScalarSet(kind, n, y=y, y_prime=y_prime)


def _left_band(n: int, corner: Fraction) -> DenseMatrix:
    # row 0 = e_0; row r >= 1 carries 1, -1, -2 from column n-r rightwards,
    # plus `corner` (row 1) and -2 (row 2) in column 0
    grid = [[Fraction(0)] * n for _ in range(n)]
    grid[0][0] = Fraction(1)
    grid[1][0] = corner
    grid[2][0] += -2
    for r in range(1, n):
        for offset, v in ((0, 1), (1, -1), (2, -2)):
            c = n - r + offset
            if c < n:
                grid[r][c] += v
    return DenseMatrix(grid)


def _right_geometric(n: int, x: Fraction) -> DenseMatrix:
    # column 1 holds x^{n-2}, ..., x, 1 below row 0; rows 2..n-1 carry -1 at column n+1-r
    grid = [[Fraction(0)] * n for _ in range(n)]
    grid[0][0] = Fraction(1)
    for r in range(1, n):
        grid[r][1] = x ** (n - 1 - r)
        if r >= 2:
            grid[r][n + 1 - r] = Fraction(-1)
    return DenseMatrix(grid)


def _eliminator_jacobsthal(n: int) -> DenseMatrix:
    sc = scalars(JACOBSTHAL, n)
    J = seq(JACOBSTHAL, n)
    f, g = sc.f, sc.g
    top = [Fraction(1), -f, f / g * (J[n] - 1) + J[n]]
    second = [Fraction(0), Fraction(1), -Fraction(J[n] - 1) / g]
    for c in range(3, n):
        top.append(J[n + 2 - c] - 2 * f / g * J[n + 1 - c])
        second.append(Fraction(2 * J[n + 1 - c]) / g)
    return _unit_below(n, top, second)


def _eliminator_lucas(n: int) -> DenseMatrix:
    sc = scalars(LUCAS, n)
    j = seq(LUCAS, n)
    y, yp = sc.y, sc.y_prime
    top = [Fraction(1), -yp / 2, yp / (4 * y) * (j[n - 1] - 2 * j[0]) + Fraction(j[n - 1], 2)]
    second = [Fraction(0), Fraction(1), (2 * j[0] - j[n - 1]) / (2 * y)]
    for c in range(3, n):
        lo, hi = j[n + 1 - c], j[n + 2 - c]
        top.append(yp / (4 * y) * (lo - 2 * hi) + Fraction(lo, 2))
        second.append((2 * hi - lo) / (2 * y))
    return _unit_below(n, top, second)


def _unit_below(n: int, top, second) -> DenseMatrix:
    grid = [list(top[:n]), list(second[:n])]
    for r in range(2, n):
        grid.append([Fraction(int(r == c)) for c in range(n)])
    return DenseMatrix(grid)


def _transform(tid: TransformId, n: int) -> DenseMatrix:
    if tid is TransformId.P:
        return _left_band(n, Fraction(-1))
    if tid is TransformId.K:
        return _left_band(n, Fraction(-1, 2))
    if tid is TransformId.Q:
        return _right_geometric(n, ratio(JACOBSTHAL, n))
    if tid is TransformId.M:
        return _right_geometric(n, ratio(LUCAS, n))
    if tid is TransformId.R:
        return _eliminator_jacobsthal(n)
    return _eliminator_lucas(n)


def build_transform(tid: TransformId, n: int) -> DenseMatrix:
    require_order(n, 4, f"transform {tid.value}")
    return _transform(tid, n)


def sequence_dense(kind: SequenceKind, n: int) -> DenseMatrix:
    return to_dense(build_sequence_circulant(kind, n))


def _left_right(kind: SequenceKind) -> tuple[TransformId, TransformId]:
    return (TransformId.P, TransformId.Q) if kind is JACOBSTHAL else (TransformId.K, TransformId.M)


def triangularize(kind: SequenceKind, n: int) -> DenseMatrix:
    """``P C Q`` (Jacobsthal) or ``K C M`` (Lucas), exactly."""
    require_order(n, 4, "triangular reduction")
    left, right = _left_right(kind)
    return mat_mul(mat_mul(_transform(left, n), sequence_dense(kind, n)), _transform(right, n))


def expected_diagonal(kind: SequenceKind, n: int) -> tuple[Fraction, ...]:
    s = seq(kind, n)
    sc = scalars(kind, n)
    if kind is JACOBSTHAL:
        head, tail = (Fraction(1), sc.g), Fraction(2 * s[n])
    else:
        head, tail = (Fraction(2), sc.y), Fraction(1 + 2 * s[n - 1])
    return head + (tail,) * (n - 2)


def reduction_defects(kind: SequenceKind, n: int, reduced: DenseMatrix) -> list[tuple[int, int, Fraction, Fraction]]:
    """Entries of a reduced matrix that break the expected shape.

    Returns ``(row, col, expected, actual)`` for every nonzero below the
    diagonal and every diagonal entry that differs from the closed form.
    """
    out = [(i, j, Fraction(0), v) for i, j, v in reduced.below_diagonal_nonzeros()]
    for i, want in enumerate(expected_diagonal(kind, n)):
        if reduced[i, i] != want:
            out.append((i, i, want, reduced[i, i]))
    return out


def reduced_determinant(kind: SequenceKind, n: int) -> Fraction:
    """Product of the expected diagonal: ``(2J_n)^{n-2} g_n`` or ``2(1+2j_{n-1})^{n-2} y_n``."""
    s = seq(kind, n)
    sc = scalars(kind, n)
    if kind is JACOBSTHAL:
        return (2 * s[n]) ** (n - 2) * sc.g
    return 2 * (1 + 2 * s[n - 1]) ** (n - 2) * sc.y


def transform_det_sign(tid: TransformId, n: int) -> Fraction:
    """Determinant of P, Q, K or M from the mod-4 case table."""
    require_order(n, 4, "transform determinant")
    if tid in (TransformId.R, TransformId.Z):
        raise ValueError("the case table covers P, Q, K and M only")
    sign = 1 if n % 4 in (1, 2) else -1
    if tid in (TransformId.P, TransformId.K):
        return Fraction(sign)
    return sign * ratio(tid.kind, n) ** (n - 2)


def transform_det_oracle(tid: TransformId, n: int) -> Fraction:
    return det_bareiss(build_transform(tid, n))
