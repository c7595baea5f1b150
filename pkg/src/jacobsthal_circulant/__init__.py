"""Exact determinants, inverses and eigenvalues of Jacobsthal circulants."""

from .circulant import CirculantMatrix, cyclic_convolve, eigenvalues_dft, to_dense
from .exact_core import DenseMatrix, det_bareiss, invert_exact, mat_mul
from .forms import det_closed, inverse_closed, verify_all
from .sequences import SequenceKind, term, term_binet

__version__ = "0.1.0"
