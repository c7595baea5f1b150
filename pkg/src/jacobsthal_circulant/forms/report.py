"""Closed form vs. oracle sweeps.

Every claim for a given ``(kind, n)`` is evaluated both ways and stored as a
:class:`ClaimRecord`. Failures are data, never exceptions. Status values:

``pass`` / ``fail``
    closed form and oracle agree / disagree.
``skipped``
    ``n`` is below the claim's threshold.
``deviation``
    a reference formula known to be wrong is evaluated literally and
    disagrees with the oracle; both values are kept, the sweep still passes.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from ..circulant import CirculantMatrix, complex_to_json, cyclic_convolve, eigenvalues_dft
from ..exact_core import DenseMatrix, det_bareiss, invert_exact, mat_mul, rational_to_json
from ..sequences import SequenceKind
from . import eigen
from .determinants import (
    JACOBSTHAL,
    LUCAS,
    TransformId,
    build_sequence_circulant,
    det_closed,
    ratio,
    reduced_determinant,
    reduction_defects,
    sequence_dense,
    transform_det_sign,
    triangularize,
    _transform,
)
from .inverses import (
    H_TAIL_CHOSEN,
    bidiag_block,
    bidiag_inverse_closed,
    direct_sum_factorization,
    entry_labels,
    hankel_block,
    hankel_inverse,
    inverse_entries,
    is_hankel,
    lucas_tail_entry,
)

EIGEN_TOLERANCE = 1e-6
EIGEN_PRODUCT_MAX_N = 12

STATUSES = ("pass", "fail", "skipped", "deviation")


@dataclass(frozen=True)
class ClaimRecord:
    kind: SequenceKind
    n: int
    claim: str
    status: str
    detail: str = ""
    closed_form: object = None
    oracle: object = None

    def to_json(self) -> dict:
        out = {"n": self.n, "kind": self.kind.value, "claim": self.claim, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.status in ("fail", "deviation"):
            out["closed_form"] = jsonable(self.closed_form)
            out["oracle"] = jsonable(self.oracle)
        return out


def jsonable(value):
    if value is None or isinstance(value, (bool, str, float)):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return rational_to_json(value)
    if isinstance(value, complex):
        return complex_to_json(value)
    if isinstance(value, (DenseMatrix, CirculantMatrix)):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


@dataclass(frozen=True)
class VerificationReport:
    records: tuple[ClaimRecord, ...]

    def by_status(self, status: str) -> list[ClaimRecord]:
        return [r for r in self.records if r.status == status]

    @property
    def fails(self) -> list[ClaimRecord]:
        return self.by_status("fail")

    @property
    def ok(self) -> bool:
        return not self.fails

    def claims(self, name: str) -> list[ClaimRecord]:
        return [r for r in self.records if r.claim == name]

    def counts(self) -> dict[str, int]:
        return {s: len(self.by_status(s)) for s in STATUSES}

    def __add__(self, other: VerificationReport) -> VerificationReport:
        return VerificationReport(self.records + other.records)

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.records]

    def dumps(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json(), indent=indent)


class _Cell:
    """Collects the records of one ``(kind, n)`` cell."""

    def __init__(self, kind: SequenceKind, n: int):
        self.kind = kind
        self.n = n
        self.records: list[ClaimRecord] = []

    def add(self, claim, status, detail="", closed=None, oracle=None):
        self.records.append(ClaimRecord(self.kind, self.n, claim, status, detail, closed, oracle))

    def compare(self, claim, closed, oracle, detail=""):
        self.add(claim, "pass" if closed == oracle else "fail", detail, closed, oracle)

    def skip(self, claim, minimum):
        self.add(claim, "skipped", f"needs n >= {minimum}")


def _check_cell(kind: SequenceKind, n: int, perturb: Mapping[str, Fraction] | None = None) -> list[ClaimRecord]:
    cell = _Cell(kind, n)
    dense = sequence_dense(kind, n)
    circ = build_sequence_circulant(kind, n)

    cell.compare("determinant", Fraction(det_closed(kind, n)), det_bareiss(dense))

    labels = entry_labels(kind, n)
    entries = inverse_entries(kind, n)
    if perturb:
        entries = [e + Fraction(perturb.get(lab, 0)) for lab, e in zip(labels, entries)]
    product = cyclic_convolve(circ, CirculantMatrix(entries))
    identity = CirculantMatrix.identity(n)
    cell.add("inverse-product", "pass" if product == identity else "fail", "", product.first_row, identity.first_row)
    oracle_row = invert_exact(dense).row(0)
    for lab, closed, oracle in zip(labels, entries, oracle_row):
        cell.compare("inverse-entry", closed, oracle, lab)
    if kind is LUCAS:
        for i in range(4, n):
            literal = lucas_tail_entry(n, i, "literal")
            status = "pass" if literal == oracle_row[i] else "deviation"
            cell.add("inverse-entry-literal", status, f"h{i} read literally (used: {H_TAIL_CHOSEN})", literal, oracle_row[i])

    left, right = (TransformId.P, TransformId.Q) if kind is JACOBSTHAL else (TransformId.K, TransformId.M)
    block = "A" if kind is JACOBSTHAL else "S"
    if n >= 4:
        reduced = triangularize(kind, n)
        defects = reduction_defects(kind, n, reduced)
        cell.add("triangular", "fail" if defects else "pass", "", defects or None, None)

        det_left, det_right = det_bareiss(_transform(left, n)), det_bareiss(_transform(right, n))
        chain = det_left * det_bareiss(dense) * det_right
        cell.compare("reduced-determinant", reduced_determinant(kind, n), chain, "vs det(L) det(C) det(R)")
        cell.compare("reduced-determinant", reduced_determinant(kind, n), det_bareiss(reduced), "vs det of reduced matrix")
        cell.compare(f"sign-{left.value}", transform_det_sign(left, n), det_left)
        cell.compare(f"sign-{right.value}", transform_det_sign(right, n), det_right)
        cell.compare("sign-product", ratio(kind, n) ** (n - 2), det_left * det_right)

        a, a_inv = bidiag_block(kind, n), bidiag_inverse_closed(kind, n)
        cell.compare("block-inverse", mat_mul(a, a_inv), DenseMatrix.identity(n - 2), f"{block} * {block}^-1")
        cell.compare("block-inverse", a_inv, invert_exact(a), f"{block}^-1 vs elimination")

        fac = direct_sum_factorization(kind, n)
        cell.compare("direct-sum", fac.product, fac.direct_sum)
        cell.compare("direct-sum-inverse", fac.inverse, invert_exact(dense))
    else:
        for claim in ("triangular", "reduced-determinant", f"sign-{left.value}", f"sign-{right.value}",
                      "sign-product", "block-inverse", "direct-sum", "direct-sum-inverse"):
            cell.skip(claim, 4)

    hankel_min = 3 if kind is JACOBSTHAL else 4
    if n >= hankel_min:
        h = hankel_inverse(left, n)
        cell.compare("hankel", mat_mul(_transform(left, n), h), DenseMatrix.identity(n), f"{left.value} * {left.value}^-1")
        cell.add("hankel", "pass" if is_hankel(hankel_block(left, h)) else "fail", "Hankel structure", h, None)
    else:
        cell.skip("hankel", hankel_min)

    _eigen_claims(cell, kind, n, circ)
    return cell.records


def _eigen_claims(cell: _Cell, kind: SequenceKind, n: int, circ: CirculantMatrix) -> None:
    names = ("eigenvalue", "eigenvalue-product", "minus-one-numerator", "nonsingular")
    if n < 5:
        for name in names:
            cell.skip(name, 5)
        return
    k, err = eigen.eigenvalue_discrepancy(kind, n)
    dft = eigenvalues_dft(circ).lambdas
    status = "pass" if err <= EIGEN_TOLERANCE else "fail"
    cell.add("eigenvalue", status, f"worst k = {k}, relative error {err:.2e}", eigen.eigenvalue_closed(kind, n, max(k, 1)), dft[max(k, 1)])

    if kind is LUCAS:
        dft_shift = eigenvalues_dft(eigen.shifted_lucas_circulant(n)).lambdas
        for k in range(1, n):
            if 2 * k == n:
                continue
            literal = eigen.eigenvalue_literal(kind, n, k)
            if abs(literal - dft[k]) > EIGEN_TOLERANCE * (1 + abs(dft[k])):
                where = "circ(j_1..j_n)" if abs(literal - dft_shift[k]) <= EIGEN_TOLERANCE * (1 + abs(dft_shift[k])) else "no circulant"
                cell.add("eigenvalue-literal", "deviation", f"k = {k}; literal form is an eigenvalue of {where}", literal, dft[k])
                break
        else:
            cell.add("eigenvalue-literal", "pass")

    if n <= EIGEN_PRODUCT_MAX_N:
        prod = eigen.eigenvalue_product(kind, n)
        det = det_closed(kind, n)
        ok = abs(prod - det) <= EIGEN_TOLERANCE * abs(det)
        cell.add("eigenvalue-product", "pass" if ok else "fail", "", prod, det)
    else:
        cell.add("eigenvalue-product", "skipped", f"float product only checked for n <= {EIGEN_PRODUCT_MAX_N}")

    at_minus_one = eigen.numerator_at_minus_one(kind, n, literal=True)
    if at_minus_one != 0:
        cell.add("minus-one-numerator", "pass", f"numerator at u = -1 is {at_minus_one}")
    else:
        # the closed form is 0/0 at u = -1; the eigenvalue there comes from direct evaluation
        direct = eigen.minus_one_eigenvalue(kind, n)
        status = "deviation" if direct != 0 else "fail"
        cell.add("minus-one-numerator", status,
                 f"u = -1 zeroes numerator and denominator; direct lambda_{n // 2} = {direct}",
                 at_minus_one, direct)

    modulus = eigen.minimum_modulus(kind, n)
    cell.add("nonsingular", "pass" if modulus > 0 else "fail", f"min |lambda_k| = {modulus:.6g}", modulus, None)


def _cell_job(args):
    return _check_cell(*args)


def verify_all(
    kind: SequenceKind,
    n_range: Iterable[int],
    perturb: Mapping[str, Fraction] | None = None,
    workers: int = 1,
) -> VerificationReport:
    """Run every closed form against its oracle for each ``n`` in ``n_range``.

    ``perturb`` adds offsets to named closed-form inverse entries (``"m2"``,
    ``"h0"``, ...) before checking; it exists to test the harness itself.
    """
    ns = sorted(set(n_range))
    if ns and ns[0] < 3:
        raise ValueError(f"verification requires n >= 3, got n = {ns[0]}")
    jobs = [(kind, n, perturb) for n in ns]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(_cell_job, jobs))
    else:
        cells = [_cell_job(job) for job in jobs]
    return VerificationReport(tuple(r for cell in cells for r in cell))
