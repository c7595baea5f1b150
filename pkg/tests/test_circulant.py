import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobsthal_circulant.circulant import (
    CirculantMatrix,
    SingularCirculantError,
    cyclic_convolve,
    det_via_eigenvalues,
    eigenvalues_dft,
    inverse_via_eigenvalues,
    is_circulant,
    is_effectively_real,
    root_of_unity,
    to_dense,
)
from jacobsthal_circulant.exact_core import DenseMatrix, ShapeError, det_bareiss
from oracles import adjugate_inverse, circulant_rows, cofactor_det, naive_matmul

rows_st = st.integers(min_value=2, max_value=6).flatmap(
    lambda n: st.lists(st.integers(-9, 9), min_size=n, max_size=n)
)


def test_convention_rows_shift_right():
    assert to_dense(CirculantMatrix([1, 2, 3])) == DenseMatrix([[1, 2, 3], [3, 1, 2], [2, 3, 1]])


def test_entry_accessor():
    c = CirculantMatrix([1, 2, 3, 4])
    assert all(c.entry(i, j) == c.to_dense()[i, j] for i in range(4) for j in range(4))


@settings(max_examples=80)
@given(rows_st)
def test_dense_matches_oracle_layout(row):
    assert to_dense(CirculantMatrix(row)).tolist() == circulant_rows(row)
    assert is_circulant(to_dense(CirculantMatrix(row)))


def test_non_circulant_detected():
    assert not is_circulant(DenseMatrix([[1, 2], [3, 4]]))


@settings(max_examples=80)
@given(rows_st, st.data())
def test_convolution_is_dense_product(a, data):
    b = data.draw(st.lists(st.integers(-9, 9), min_size=len(a), max_size=len(a)))
    prod = cyclic_convolve(CirculantMatrix(a), CirculantMatrix(b))
    assert prod.to_dense().tolist() == naive_matmul(circulant_rows(a), circulant_rows(b))


def test_convolution_order_mismatch():
    with pytest.raises(ShapeError):
        CirculantMatrix([1, 2]) @ CirculantMatrix([1, 2, 3])


def test_quarter_turn_roots_are_exact():
    assert root_of_unity(4, 1) == 1j
    assert root_of_unity(8, 4) == -1
    assert root_of_unity(6, 0) == 1
    assert abs(root_of_unity(5, 2) - cmath.exp(4j * cmath.pi / 5)) < 1e-15


@settings(max_examples=60)
@given(rows_st)
def test_eigen_product_matches_determinant(row):
    det = cofactor_det(circulant_rows(row))
    z = det_via_eigenvalues(CirculantMatrix(row))
    assert abs(z - float(det)) <= 1e-8 * max(1.0, abs(float(det)))
    assert is_effectively_real(z)


def test_eigenvectors():
    c = CirculantMatrix([2, 1, 5, 7])
    eig = eigenvalues_dft(c)
    dense = c.to_dense()
    for j in range(4):
        v = eig.eigenvector(j)
        av = [sum(float(dense[i, k]) * v[k] for k in range(4)) for i in range(4)]
        assert all(abs(av[i] - eig.lambdas[j] * v[i]) < 1e-9 for i in range(4))
    assert eig.lambda0 == 15


def test_inverse_via_eigenvalues_matches_adjugate():
    row = [2, 1, 5]
    approx = inverse_via_eigenvalues(CirculantMatrix(row))
    exact = adjugate_inverse(circulant_rows(row))[0]
    assert all(abs(z - float(q)) < 1e-12 for z, q in zip(approx.first_row, exact))
    assert approx.nearest_rational(1000).first_row == tuple(exact)


def test_inverse_via_eigenvalues_singular():
    with pytest.raises(SingularCirculantError):
        inverse_via_eigenvalues(CirculantMatrix([1, 1, 1]))


def test_json_round_trip():
    c = CirculantMatrix([Fraction(1, 3), -2, 10**30])
    assert CirculantMatrix.from_json(c.to_json()) == c
    assert det_bareiss(c.to_dense()) == cofactor_det(circulant_rows(c.first_row))
