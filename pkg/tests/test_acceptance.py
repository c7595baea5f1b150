"""Acceptance gate: one check per criterion, each at its stated tolerance.

Run ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion is
printed in the terminal summary) or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from jacobsthal_circulant.bench import COLUMNS, read_csv, run_bench, to_csv  # noqa: E402
from jacobsthal_circulant.circulant import CirculantMatrix, cyclic_convolve  # noqa: E402
from jacobsthal_circulant.exact_core import DenseMatrix, det_bareiss, invert_exact, mat_mul  # noqa: E402
from jacobsthal_circulant.forms import eigen  # noqa: E402
from jacobsthal_circulant.forms.determinants import (  # noqa: E402
    JACOBSTHAL,
    LUCAS,
    TransformId,
    build_sequence_circulant,
    build_transform,
    det_closed,
    expected_diagonal,
    reduced_determinant,
    sequence_dense,
    transform_det_sign,
    triangularize,
)
from jacobsthal_circulant.forms.inverses import (  # noqa: E402
    bidiag_block,
    bidiag_inverse_closed,
    direct_sum_factorization,
    hankel_block,
    hankel_inverse,
    inverse_closed,
    is_hankel,
)
from jacobsthal_circulant.forms.report import verify_all  # noqa: E402
from jacobsthal_circulant.sequences import SequenceKind, prefix, term_binet  # noqa: E402
from oracles import jacobsthal_binet, lucas_binet  # noqa: E402

KINDS = (JACOBSTHAL, LUCAS)
EIGEN_REL_TOL = 1e-6

# filled as checks run; printed by the terminal-summary hook in conftest
RESULTS: dict[str, tuple[bool, str]] = {}


def _record(key: str, title: str, ok: bool, detail: str) -> bool:
    RESULTS[key] = (ok, f"{title}: {detail}")
    return ok


def check_1():
    t0 = time.perf_counter()
    want = {(JACOBSTHAL, 3): 20, (JACOBSTHAL, 4): -400, (LUCAS, 3): 104, (LUCAS, 4): -675}
    bad = [
        (k.value, n, det_closed(k, n), det_bareiss(sequence_dense(k, n)))
        for (k, n), v in want.items()
        if not det_closed(k, n) == det_bareiss(sequence_dense(k, n)) == v
    ]
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 1.0
    return _record("1", "reference small determinants", ok, f"mismatches={bad}, {elapsed:.3f}s (< 1s)")


def check_2():
    t0 = time.perf_counter()
    bad = [(k.value, n) for k in KINDS for n in range(3, 33) if det_closed(k, n) != det_bareiss(sequence_dense(k, n))]
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed <= 60.0
    return _record("2", "det_closed == det_bareiss, 3 <= n <= 32", ok, f"mismatches={bad}, {elapsed:.2f}s (<= 60s)")


def check_3():
    product_bad = []
    for k in KINDS:
        for n in range(3, 13):
            inv = inverse_closed(k, n, validate=False).circulant
            if cyclic_convolve(build_sequence_circulant(k, n), inv) != CirculantMatrix.identity(n):
                product_bad.append((k.value, n))
    entry_fails = [
        (r.kind.value, r.n, r.detail)
        for k in KINDS
        for r in verify_all(k, range(3, 13)).claims("inverse-entry")
        if r.status == "fail"
    ]
    probe = verify_all(JACOBSTHAL, [7], perturb={"m3": Fraction(1, 10**9)})
    caught = [r for r in probe.fails if r.claim == "inverse-entry"]
    self_test = len(caught) == 1 and caught[0].detail == "m3" and caught[0].closed_form != caught[0].oracle
    ok = not product_bad and self_test
    return _record(
        "3", "closed inverses, 3 <= n <= 12", ok,
        f"product failures={product_bad}, entry deviations recorded={entry_fails}, perturbation detected={self_test}",
    )


def check_4():
    bad = []
    for k in KINDS:
        left, right = (TransformId.P, TransformId.Q) if k is JACOBSTHAL else (TransformId.K, TransformId.M)
        for n in range(4, 17):
            reduced = triangularize(k, n)
            chain = det_bareiss(build_transform(left, n)) * det_bareiss(sequence_dense(k, n)) * det_bareiss(build_transform(right, n))
            closed = reduced_determinant(k, n)
            if not (
                reduced.is_upper_triangular()
                and reduced.diagonal() == expected_diagonal(k, n)
                and closed == det_bareiss(reduced) == chain
            ):
                bad.append((k.value, n))
    return _record("4", "triangular reductions, 4 <= n <= 16", not bad, f"failures={bad}")


def check_5():
    bad = []
    for k in KINDS:
        for n in range(4, 11):
            fac = direct_sum_factorization(k, n)
            if fac.product != fac.direct_sum or fac.inverse != invert_exact(sequence_dense(k, n)):
                bad.append((k.value, n))
    return _record("5", "direct-sum factorizations and rebuilt inverses, 4 <= n <= 10", not bad, f"failures={bad}")


def check_6():
    bad = []
    for k in KINDS:
        for n in range(4, 21):
            if mat_mul(bidiag_block(k, n), bidiag_inverse_closed(k, n)) != DenseMatrix.identity(n - 2):
                bad.append(("block", k.value, n))
    for tid in (TransformId.P, TransformId.K):
        for n in range(4, 17):
            h = hankel_inverse(tid, n)
            if mat_mul(build_transform(tid, n), h) != DenseMatrix.identity(n) or not is_hankel(hankel_block(tid, h)):
                bad.append(("hankel", tid.value, n))
    for tid in (TransformId.P, TransformId.Q, TransformId.K, TransformId.M):
        for n in range(4, 21):
            if transform_det_sign(tid, n) != det_bareiss(build_transform(tid, n)):
                bad.append(("sign", tid.value, n))
    return _record("6", "block, Hankel and sign-table closures", not bad, f"failures={bad}")


def _naive_row(kind, n):
    if kind is JACOBSTHAL:
        return [jacobsthal_binet(k) for k in range(1, n + 1)]
    return [lucas_binet(k) for k in range(n)]


def check_7a():
    from jacobsthal_circulant.circulant import eigenvalues_dft

    worst = (0.0, None)
    for k in KINDS:
        for n in range(5, 17):
            dft = eigenvalues_dft(build_sequence_circulant(k, n)).lambdas
            for j in range(n):
                err = abs(eigen.eigenvalue_closed(k, n, j) - dft[j]) / abs(dft[j])
                if err > worst[0]:
                    worst = (err, (k.value, n, j))
    ok = worst[0] <= EIGEN_REL_TOL
    return _record("7a", "closed eigenvalues vs DFT, 5 <= n <= 16", ok, f"max relative error {worst[0]:.2e} at {worst[1]}")


def check_7b():
    worst = (0.0, None)
    for k in KINDS:
        for n in range(5, 13):
            det = det_closed(k, n)
            err = abs(eigen.eigenvalue_product(k, n) - det) / abs(det)
            if err > worst[0]:
                worst = (err, (k.value, n))
    ok = worst[0] <= EIGEN_REL_TOL
    return _record("7b", "eigenvalue product vs det_closed, n <= 12", ok, f"max relative error {worst[0]:.2e} at {worst[1]}")


def check_7c():
    zeros = [(k.value, n) for k in KINDS for n in range(5, 65) if eigen.numerator_at_minus_one(k, n, literal=True) == 0]
    shown = zeros[:4] + (["..."] if len(zeros) > 4 else [])
    return _record(
        "7c", "u = -1 never zeroes a numerator, 5 <= n <= 64", not zeros,
        f"{len(zeros)} zero cases (every even n for both kinds): {shown}",
    )


def check_8():
    bad = []
    for kind in SequenceKind:
        p = prefix(kind, 256)
        for k in range(257):
            ref = jacobsthal_binet(k) if kind is SequenceKind.JACOBSTHAL else lucas_binet(k)
            if not p[k] == term_binet(kind, k) == ref:
                bad.append((kind.value, k))
    return _record("8", "recurrence == Binet, 0 <= k <= 256", not bad, f"mismatches={bad}")


def check_9():
    rows = run_bench(KINDS, [64], ["det_closed", "det_bareiss"], repeat=1)
    parsed = read_csv(to_csv(rows, repeat=1))
    csv_ok = len(parsed) == 4 and tuple(parsed[0]) == COLUMNS
    times = {(r.kind, r.method): r.time_ns for r in rows}
    faster = all(times[(k, "det_closed")] < times[(k, "det_bareiss")] for k in KINDS)
    speed = ", ".join(f"{r.kind.value} x{r.speedup:.0f}" for r in rows if r.speedup)
    return _record("9", "det_closed faster than det_bareiss at n = 64", faster and csv_ok, f"speedup {speed}; CSV parsed={csv_ok}")


CHECKS = {
    "1": check_1,
    "2": check_2,
    "3": check_3,
    "4": check_4,
    "5": check_5,
    "6": check_6,
    "7a": check_7a,
    "7b": check_7b,
    "7c": check_7c,
    "8": check_8,
    "9": check_9,
}


@pytest.mark.parametrize("key", list(CHECKS))
def test_criterion(key):
    assert CHECKS[key](), RESULTS[key][1]


def format_line(key: str) -> str:
    ok, text = RESULTS[key]
    return f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {text}"


if __name__ == "__main__":
    failed = 0
    for key, fn in CHECKS.items():
        fn()
        print(format_line(key))
        failed += not RESULTS[key][0]
    sys.exit(1 if failed else 0)
