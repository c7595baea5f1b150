"""Wall-clock comparison of the closed forms against general elimination."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .exact_core import det_bareiss, invert_exact
from .forms.determinants import det_closed, sequence_dense
from .forms.inverses import inverse_closed
from .sequences import SequenceKind

METHODOLOGY = "# wall-clock time.perf_counter_ns, best of {repeat} runs per cell; speedup = oracle time / closed-form time"
COLUMNS = ("kind", "n", "method", "time_ns", "value_digits", "speedup")

# (method, oracle it is paired with or None)
METHODS = {
    "det_closed": "det_bareiss",
    "det_bareiss": None,
    "inverse_closed": "invert_exact",
    "invert_exact": None,
}


@dataclass(frozen=True)
class BenchRow:
    kind: SequenceKind
    n: int
    method: str
    time_ns: int
    value_digits: int
    speedup: float | None = None

    def as_csv(self) -> list:
        speed = "" if self.speedup is None else f"{self.speedup:.3f}"
        return [self.kind.value, self.n, self.method, self.time_ns, self.value_digits, speed]


def _digits(value) -> int:
    if isinstance(value, int):
        return len(str(abs(value)))
    if isinstance(value, Fraction):
        return max(_digits(value.numerator), _digits(value.denominator))
    return max(_digits(v) for v in value)


def best_time_ns(fn: Callable[[], object], repeat: int = 3) -> tuple[int, object]:
    best = None
    result = None
    for _ in range(max(1, repeat)):
        t0 = time.perf_counter_ns()
        result = fn()
        elapsed = time.perf_counter_ns() - t0
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def _runner(method: str, kind: SequenceKind, n: int) -> Callable[[], object]:
    if method == "det_closed":
        return lambda: det_closed(kind, n)
    if method == "det_bareiss":
        return lambda: det_bareiss(sequence_dense(kind, n))
    if method == "inverse_closed":
        return lambda: inverse_closed(kind, n, validate=False).first_row
    if method == "invert_exact":
        return lambda: invert_exact(sequence_dense(kind, n)).row(0)
    raise ValueError(f"unknown method {method!r}")


def run_bench(
    kinds: Iterable[SequenceKind],
    ns: Iterable[int],
    methods: Iterable[str] = tuple(METHODS),
    repeat: int = 3,
) -> list[BenchRow]:
    methods = list(methods)
    rows = []
    for kind in kinds:
        for n in ns:
            timed = {}
            for method in methods:
                elapsed, value = best_time_ns(_runner(method, kind, n), repeat)
                timed[method] = (elapsed, _digits(value))
            for method in methods:
                elapsed, digits = timed[method]
                oracle = METHODS.get(method)
                speedup = timed[oracle][0] / max(elapsed, 1) if oracle in timed else None
                rows.append(BenchRow(kind, n, method, elapsed, digits, speedup))
    return rows


def to_csv(rows: list[BenchRow], repeat: int = 3) -> str:
    buf = io.StringIO()
    buf.write(METHODOLOGY.format(repeat=repeat) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow(row.as_csv())
    return buf.getvalue()


def read_csv(text: str) -> list[dict]:
    lines = [line for line in text.splitlines() if line and not line.startswith("#")]
    return list(csv.DictReader(lines))
