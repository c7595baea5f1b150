import cmath
import math

import pytest

from jacobsthal_circulant.forms import eigen
from jacobsthal_circulant.forms.determinants import JACOBSTHAL, LUCAS, det_closed
from oracles import jacobsthal_binet, lucas_binet

KINDS = (JACOBSTHAL, LUCAS)


def first_row(kind, n):
    if kind is JACOBSTHAL:
        return [jacobsthal_binet(k) for k in range(1, n + 1)]
    return [lucas_binet(k) for k in range(n)]


def naive_eigenvalue(row, k):
    n = len(row)
    return sum(c * cmath.exp(2j * math.pi * k * r / n) for r, c in enumerate(row))


def close(a, b, tol=1e-9):
    return abs(a - b) <= tol * (1 + abs(b))


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", range(5, 17))
def test_closed_eigenvalues_match_naive_dft(kind, n):
    row = first_row(kind, n)
    for k in range(n):
        assert close(eigen.eigenvalue_closed(kind, n, k), naive_eigenvalue(row, k))


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", [6, 8, 10, 20])
def test_minus_one_eigenvalue_direct(kind, n):
    row = first_row(kind, n)
    exact = sum(c * (-1) ** r for r, c in enumerate(row))
    assert eigen.minus_one_eigenvalue(kind, n) == exact


def test_minus_one_eigenvalue_needs_even_order():
    with pytest.raises(ValueError):
        eigen.minus_one_eigenvalue(JACOBSTHAL, 7)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", [6, 12, 64])
def test_numerators_vanish_at_minus_one_for_even_order(kind, n):
    # (1 + u) divides both numerator polynomials when n is even
    assert eigen.numerator_at_minus_one(kind, n, literal=True) == 0
    assert eigen.numerator_at_minus_one(kind, n, literal=False) == 0


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", [5, 7, 33, 63])
def test_numerators_nonzero_at_minus_one_for_odd_order(kind, n):
    assert eigen.numerator_at_minus_one(kind, n, literal=True) != 0


@pytest.mark.parametrize("n", [5, 7, 9])
def test_literal_lucas_form_belongs_to_shifted_circulant(n):
    shifted = [lucas_binet(k) for k in range(1, n + 1)]
    for k in range(1, n):
        assert close(eigen.eigenvalue_literal(LUCAS, n, k), naive_eigenvalue(shifted, k))
    assert not close(eigen.eigenvalue_literal(LUCAS, n, 1), naive_eigenvalue(first_row(LUCAS, n), 1))


def test_literal_form_is_singular_at_minus_one():
    with pytest.raises(eigen.ClosedFormSingularity):
        eigen.eigenvalue_literal(JACOBSTHAL, 8, 4)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", range(5, 13))
def test_eigenvalue_product_is_determinant(kind, n):
    det = det_closed(kind, n)
    assert abs(eigen.eigenvalue_product(kind, n) - det) <= 1e-9 * abs(det)


@pytest.mark.parametrize("kind", KINDS)
def test_sequence_circulants_nonsingular(kind):
    for n in range(5, 40):
        assert eigen.minimum_modulus(kind, n) > 0.5


def test_eigenvalue_index_checks():
    with pytest.raises(ValueError):
        eigen.eigenvalue_closed(JACOBSTHAL, 6, 6)
    with pytest.raises(ValueError):
        eigen.eigenvalue_closed(JACOBSTHAL, 4, 1)
