"""Pfaffians of skew-symmetric matrices over truncated integer polynomials.

``pfaffian_coefficient`` is a division-free dynamic program over alternating
closed walks.  Fix the reference pairing {0,1}, {2,3}, ...  A perfect matching
M together with that pairing splits into alternating cycles; walking each cycle
from its smallest node h (always even) we take a matrix step u -> v, then the
pairing step v -> v^1 (sign +1 when v is even, -1 when odd), until a matrix step
lands on h+1, which closes the cycle.  The signed product over all cycles is the
Pfaffian term of M.  Relaxing cycles to walks that may revisit nodes (every
node of a walk headed at h is > h) and summing over sequences of walks with
increasing heads gives the same total, because non-simple sequences cancel in
pairs.  The program keeps, per number of matrix steps taken, the sum over
partial sequences ending at (head, current node): O(N^3) states and O(N^4)
ring operations.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .graph import perfect_matching_pairs
from .polynomial import Coeffs, TruncatedPolynomial, add_into, coeff_of_product, max_bits, mul_trunc, trim


class MatrixError(ValueError):
    pass


def matching_sign(matching: Sequence[tuple[int, int]]) -> int:
    """Sign of the permutation (1 2 3 4 ... / i1 j1 i2 j2 ...), pairs sorted internally.

    Nodes may be labelled 0..N-1 or 1..N.  The result does not depend on the
    order in which the pairs are listed.
    """
    flat = []
    for a, b in matching:
        flat.extend((a, b) if a <= b else (b, a))
    if not flat:
        return 1
    lo = min(flat)
    if sorted(flat) != list(range(lo, lo + len(flat))) or lo not in (0, 1):
        raise MatrixError(f"{list(matching)} is not a perfect matching of a node range")
    perm = [x - lo for x in flat]
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class SkewPolyMatrix:
    """N x N skew-symmetric matrix of truncated polynomials (zero diagonal).

    Only the upper triangle is stored; ``A[j, i]`` is served as ``-A[i, j]``.
    """

    def __init__(self, size: int, cap: int, upper: Optional[dict[tuple[int, int], Sequence[int]]] = None):
        if size < 0:
            raise MatrixError("negative size")
        self.size = size
        self.cap = cap
        self.upper: dict[tuple[int, int], Coeffs] = {}
        for (i, j), coeffs in (upper or {}).items():
            self[i, j] = coeffs

    def __setitem__(self, key: tuple[int, int], coeffs) -> None:
        i, j = key
        if not (0 <= i < self.size and 0 <= j < self.size):
            raise MatrixError(f"index {key} out of range")
        if isinstance(coeffs, TruncatedPolynomial):
            coeffs = coeffs.coeffs
        c = TruncatedPolynomial(coeffs, self.cap).coeffs
        if i == j:
            if c:
                raise MatrixError("diagonal of a skew-symmetric matrix must be zero")
            return
        if i > j:
            i, j, c = j, i, [-x for x in c]
        if c:
            self.upper[i, j] = c
        else:
            self.upper.pop((i, j), None)

    def __getitem__(self, key: tuple[int, int]) -> TruncatedPolynomial:
        return TruncatedPolynomial(self.entry(*key), self.cap)

    def entry(self, i: int, j: int) -> Coeffs:
        if i < j:
            return self.upper.get((i, j), [])
        if i > j:
            return [-x for x in self.upper.get((j, i), [])]
        return []

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence], cap: int) -> "SkewPolyMatrix":
        """Build from a full matrix of coefficient lists / polynomials / ints, checking skew symmetry."""
        n = len(rows)
        def norm(x):
            if isinstance(x, TruncatedPolynomial):
                return x.coeffs
            if isinstance(x, int):
                return TruncatedPolynomial([x], cap).coeffs
            return TruncatedPolynomial(x, cap).coeffs
        dense = [[norm(x) for x in row] for row in rows]
        if any(len(row) != n for row in dense):
            raise MatrixError("matrix is not square")
        for i in range(n):
            if dense[i][i]:
                raise MatrixError("diagonal must be zero")
            for j in range(i + 1, n):
                if dense[j][i] != [-x for x in dense[i][j]]:
                    raise MatrixError(f"A[{j}][{i}] != -A[{i}][{j}]")
        return cls(n, cap, {(i, j): dense[i][j] for i in range(n) for j in range(i + 1, n)})

    def rows(self) -> list[list[tuple[int, Coeffs]]]:
        out: list[list[tuple[int, Coeffs]]] = [[] for _ in range(self.size)]
        for (i, j), c in sorted(self.upper.items()):
            out[i].append((j, c))
            out[j].append((i, [-x for x in c]))
        for r in out:
            r.sort(key=lambda p: p[0])
        return out


def pfaffian_bruteforce(A: SkewPolyMatrix) -> TruncatedPolynomial:
    """Signed sum over all perfect matchings of K_N; a test oracle for N <= 12."""
    n = A.size
    if n % 2:
        raise MatrixError("Pfaffian of an odd-order matrix")
    if n > 12:
        raise MatrixError("brute-force Pfaffian is limited to N <= 12")
    total: Coeffs = []
    for matching in perfect_matching_pairs(n):
        term: Coeffs = [1]
        for i, j in matching:
            term = mul_trunc(term, A.entry(i, j), A.cap)
            if not term:
                break
        if term:
            add_into(total, term, matching_sign(matching))
    return TruncatedPolynomial(total, A.cap)


def _symmetric_mod(c: Coeffs, bits: int) -> Coeffs:
    """Reduce every coefficient into [-2^(bits-1), 2^(bits-1))."""
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    return trim([((x + half) & mask) - half for x in c])


def _pfaffian_dp(rows, n: int, cap: int, t: Optional[int], bit_limit: Optional[int],
                 modulus_bits: Optional[int] = None):
    if n == 0:
        return [1] if t is None else (1 if t == 0 else 0)
    half = n // 2
    closed: dict[int, Coeffs] = {-2: [1]}   # -2 stands for the empty walk sequence
    open_: dict[tuple[int, int], Coeffs] = {}
    for step in range(half):
        # open a new walk at every admissible head
        heads = sorted(closed)
        run: Coeffs = []
        pos = 0
        for h in range(0, n, 2):
            while pos < len(heads) and heads[pos] < h:
                add_into(run, closed[heads[pos]])
                pos += 1
            if run:
                add_into(open_.setdefault((h, h), []), run)
        last = step == half - 1
        new_open: dict[tuple[int, int], Coeffs] = {}
        new_closed: dict[int, Coeffs] = {}
        scalar = 0
        for (h, u), val in open_.items():
            if not val:
                continue
            for v, e in rows[u]:
                if v <= h:
                    continue
                if v == h + 1:
                    if last and t is not None:
                        scalar += coeff_of_product(val, e, t)
                    else:
                        add_into(new_closed.setdefault(h, []), mul_trunc(val, e, cap))
                elif not last:
                    prod = mul_trunc(val, e, cap)
                    if prod:
                        add_into(new_open.setdefault((h, v ^ 1), []), prod, 1 if v % 2 == 0 else -1)
        if last and t is not None:
            if modulus_bits is not None:
                mid = 1 << (modulus_bits - 1)
                scalar = ((scalar + mid) & ((1 << modulus_bits) - 1)) - mid
            return scalar
        if modulus_bits is not None:
            new_open = {key: _symmetric_mod(c, modulus_bits) for key, c in new_open.items()}
            new_closed = {key: _symmetric_mod(c, modulus_bits) for key, c in new_closed.items()}
        open_, closed = new_open, new_closed
        if bit_limit is not None:
            widest = max((max_bits(c) for c in (*open_.values(), *closed.values())), default=0)
            if widest > bit_limit:
                raise ArithmeticError(f"intermediate coefficient of {widest} bits exceeds the {bit_limit}-bit ceiling")
    total: Coeffs = []
    for c in closed.values():
        add_into(total, c)
    return total


def pfaffian_truncated(A: SkewPolyMatrix) -> TruncatedPolynomial:
    """pf(A) mod x^(cap+1) by the dynamic program."""
    if A.size % 2:
        raise MatrixError("Pfaffian of an odd-order matrix")
    return TruncatedPolynomial(_pfaffian_dp(A.rows(), A.size, A.cap, None, None), A.cap)


def pfaffian_coefficient(A: SkewPolyMatrix, t: int, bit_limit: Optional[int] = None,
                         modulus_bits: Optional[int] = None) -> int:
    """Coefficient of x^t in pf(A), computed with every product reduced mod x^(t+1).

    With ``modulus_bits`` the integer coefficients are also kept as symmetric
    residues modulo 2**modulus_bits; the result is exact whenever the true
    coefficient lies in [-2^(modulus_bits-1), 2^(modulus_bits-1)).
    """
    if A.size % 2:
        raise MatrixError("Pfaffian of an odd-order matrix")
    if t < 0:
        return 0
    cap = min(A.cap, t)
    if t > A.cap:
        raise MatrixError(f"t={t} exceeds the matrix degree cap {A.cap}")
    rows = [[(v, trim(e[:cap + 1])) for v, e in r] for r in A.rows()]
    if modulus_bits is not None:
        rows = [[(v, _symmetric_mod(e, modulus_bits)) for v, e in r] for r in rows]
    rows = [[(v, e) for v, e in r if e] for r in rows]
    return _pfaffian_dp(rows, A.size, cap, t, bit_limit, modulus_bits)
