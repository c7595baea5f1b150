"""Brute-force references, deliberately independent of the package code."""

from fractions import Fraction
from itertools import permutations


def _perm_sign(p):
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(rows):
    n = len(rows)
    total = Fraction(0)
    for p in permutations(range(n)):
        term = Fraction(_perm_sign(p))
        for i in range(n):
            term *= rows[i][p[i]]
            if not term:
                break
        total += term
    return total


def cofactor_det(rows):
    n = len(rows)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * Fraction(rows[0][j]) * cofactor_det(minor)
    return total


def adjugate_inverse(rows):
    n = len(rows)
    det = cofactor_det(rows)
    inv = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i]
            inv[j][i] = (-1) ** (i + j) * cofactor_det(minor) / det
    return inv


def circulant_rows(first):
    n = len(first)
    return [[Fraction(first[(j - i) % n]) for j in range(n)] for i in range(n)]


def naive_matmul(a, b):
    return [[sum((Fraction(a[i][k]) * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))] for i in range(len(a))]


def jacobsthal_binet(k):
    return (2**k - (-1) ** k) // 3


def lucas_binet(k):
    return 2**k + (-1) ** k
