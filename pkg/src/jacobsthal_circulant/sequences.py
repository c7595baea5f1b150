"""Jacobsthal and Jacobsthal-Lucas numbers.

Both satisfy ``x_k = x_{k-1} + 2 x_{k-2}``; the characteristic polynomial
``x^2 - x - 2`` has roots 2 and -1, which gives the Binet forms

    J_k = (2^k - (-1)^k) / 3        j_k = 2^k + (-1)^k
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache


class SequenceKind(enum.Enum):
    JACOBSTHAL = "jacobsthal"
    JACOBSTHAL_LUCAS = "jacobsthal-lucas"

    @classmethod
    def parse(cls, text: str) -> SequenceKind:
        key = text.strip().lower().replace("_", "-")
        aliases = {"j": cls.JACOBSTHAL, "lucas": cls.JACOBSTHAL_LUCAS}
        if key in aliases:
            return aliases[key]
        return cls(key)


JACOBSTHAL = SequenceKind.JACOBSTHAL
JACOBSTHAL_LUCAS = SequenceKind.JACOBSTHAL_LUCAS


@dataclass(frozen=True)
class RecurrenceConstants:
    alpha: int = 2
    beta: int = -1

    def __post_init__(self):
        for root in (self.alpha, self.beta):
            assert root * root - root - 2 == 0


ROOTS = RecurrenceConstants()

_INITIAL = {
    SequenceKind.JACOBSTHAL: (0, 1),
    SequenceKind.JACOBSTHAL_LUCAS: (2, 1),
}


def _check_index(k: int) -> None:
    if k < 0:
        raise ValueError(f"sequence index must be >= 0, got {k}")


@lru_cache(maxsize=64)
def prefix(kind: SequenceKind, k: int) -> tuple[int, ...]:
    """Terms ``x_0 .. x_k`` of the sequence, by the recurrence."""
    _check_index(k)
    a, b = _INITIAL[kind]
    out = [a, b]
    while len(out) <= k:
        out.append(out[-1] + 2 * out[-2])
    return tuple(out[: k + 1])


def term(kind: SequenceKind, k: int) -> int:
    _check_index(k)
    a, b = _INITIAL[kind]
    if k == 0:
        return a
    for _ in range(k - 1):
        a, b = b, b + 2 * a
    return b


def term_binet(kind: SequenceKind, k: int) -> int:
    _check_index(k)
    alpha_k = ROOTS.alpha**k
    beta_k = ROOTS.beta**k
    if kind is SequenceKind.JACOBSTHAL_LUCAS:
        return alpha_k + beta_k
    q, r = divmod(alpha_k - beta_k, ROOTS.alpha - ROOTS.beta)
    assert r == 0, f"3 does not divide 2^{k} - (-1)^{k}"
    return q


def jacobsthal(k: int) -> int:
    return term(SequenceKind.JACOBSTHAL, k)


def jacobsthal_lucas(k: int) -> int:
    return term(SequenceKind.JACOBSTHAL_LUCAS, k)
