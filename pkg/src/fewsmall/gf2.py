"""Arithmetic in GF(2^q), elements stored as q-bit integers.

An element is a polynomial over GF(2) reduced modulo a fixed irreducible
polynomial of degree q (bit i = coefficient of x^i).  Small fields use
log/antilog tables; larger ones fall back to carry-less multiplication.
"""

from __future__ import annotations

from functools import lru_cache

# Lexicographically least irreducible polynomial of each degree 2..32.
IRREDUCIBLE = {
    2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83, 8: 0x11B, 9: 0x203,
    10: 0x409, 11: 0x805, 12: 0x1009, 13: 0x201B, 14: 0x4021, 15: 0x8003,
    16: 0x1002B, 17: 0x20009, 18: 0x40009, 19: 0x80027, 20: 0x100009,
    21: 0x200005, 22: 0x400003, 23: 0x800021, 24: 0x100001B, 25: 0x2000009,
    26: 0x400001B, 27: 0x8000027, 28: 0x10000003, 29: 0x20000005,
    30: 0x40000003, 31: 0x80000009, 32: 0x10000008D,
}

_TABLE_LIMIT = 16


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: int) -> bool:
    """Rabin's test for a polynomial over GF(2) of degree >= 1."""
    q = f.bit_length() - 1
    if q < 1:
        return False

    def x_pow_2k(k: int) -> int:
        r = 0b10
        for _ in range(k):
            r = poly_mod(clmul(r, r), f)
        return r

    if x_pow_2k(q) != poly_mod(0b10, f):
        return False
    for p in _prime_factors(q):
        if poly_gcd(f, x_pow_2k(q // p) ^ poly_mod(0b10, f)) != 1:
            return False
    return True


def least_irreducible(q: int) -> int:
    """Exhaustive search in increasing integer order."""
    for f in range(1 << q, 1 << (q + 1)):
        if is_irreducible(f):
            return f
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


class GF2Field:
    def __init__(self, q: int):
        if q not in IRREDUCIBLE:
            raise ValueError(f"field degree {q} outside the supported range 2..32")
        self.q = q
        self.size = 1 << q
        self.modulus = IRREDUCIBLE[q]
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if q <= _TABLE_LIMIT:
            self._build_tables()

    def _build_tables(self) -> None:
        order = self.size - 1
        # search a primitive element; x itself is not always one
        for g in range(2, self.size):
            exp = [0] * (2 * order)
            log = [0] * self.size
            x = 1
            ok = True
            for i in range(order):
                if i and x == 1:
                    ok = False
                    break
                exp[i] = x
                log[x] = i
                x = self._slow_mul(x, g)
            if ok and x == 1:
                exp[order:] = exp[:order]
                self._exp, self._log = exp, log
                return
        raise AssertionError("no primitive element found")

    def _slow_mul(self, a: int, b: int) -> int:
        return poly_mod(clmul(a, b), self.modulus)

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("0 has no inverse in GF(2^q)")
        if self._exp is not None:
            return self._exp[(self.size - 1 - self._log[a]) % (self.size - 1)]
        return self.pow(a, self.size - 2)

    def sqrt(self, a: int) -> int:
        """The unique square root a^(2^(q-1)), by q-1 squarings."""
        for _ in range(self.q - 1):
            a = self.mul(a, a)
        return a


@lru_cache(maxsize=None)
def field(q: int) -> GF2Field:
    return GF2Field(q)


def determinant(F: GF2Field, M: list[list[int]]) -> int:
    """Gaussian elimination with pivot search; in characteristic 2 row swaps do not flip the sign."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    a = [list(row) for row in M]
    det = 1
    mul = F.mul
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        det = mul(det, p)
        p_inv = F.inv(p)
        row_c = a[col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = mul(a[r][col], p_inv)
                row_r = a[r]
                for c in range(col, n):
                    if row_c[c]:
                        row_r[c] ^= mul(f, row_c[c])
    return det
