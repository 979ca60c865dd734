"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from fewsmall.pfaffian import SkewPolyMatrix


def int_det(M) -> int:
    """Exact determinant by Fraction elimination."""
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            if f:
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    assert det.denominator == 1
    return int(det)


def permutation_sign(perm) -> int:
    sign = 1
    for i, j in itertools.combinations(range(len(perm)), 2):
        if perm[i] > perm[j]:
            sign = -sign
    return sign


def poly_mul(a, b, cap):
    out = [0] * (cap + 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j <= cap:
                out[i + j] += x * y
    return out


def poly_det(M, cap):
    """Leibniz expansion over polynomial entries (lists), truncated at cap."""
    n = len(M)
    total = [0] * (cap + 1)
    for perm in itertools.permutations(range(n)):
        term = [1] + [0] * cap
        for i in range(n):
            term = poly_mul(term, M[i][perm[i]], cap)
        s = permutation_sign(perm)
        total = [t + s * x for t, x in zip(total, term)]
    return total


def random_skew(rng: random.Random, n: int, max_deg: int, lo: int = -5, hi: int = 5) -> SkewPolyMatrix:
    A = SkewPolyMatrix(n, max_deg * (n // 2))
    for i in range(n):
        for j in range(i + 1, n):
            deg = rng.randint(0, max_deg)
            A[i, j] = [rng.randint(lo, hi) for _ in range(deg + 1)]
    return A


def gf_cofactor_det(F, M):
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j]:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total ^= F.mul(M[0][j], gf_cofactor_det(F, minor))
    return total
