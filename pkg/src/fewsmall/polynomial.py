"""Univariate integer polynomials truncated modulo x^(cap+1).

The low-level helpers work on plain coefficient lists (index = exponent,
no trailing zeros, ``[]`` is zero) because the Pfaffian dynamic program calls
them in its inner loop.  Large products go through Kronecker substitution:
both operands are packed into one integer with fixed-width slots, multiplied
with GMP, and unpacked.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import gmpy2

Coeffs = list[int]

# below this many coefficient products schoolbook multiplication is faster
_SCHOOLBOOK_LIMIT = 48


def trim(c: Coeffs) -> Coeffs:
    while c and not c[-1]:
        c.pop()
    return c


def add_into(acc: Coeffs, b: Sequence[int], scale: int = 1) -> Coeffs:
    """acc += scale * b, in place (acc may grow); returns acc trimmed."""
    if len(acc) < len(b):
        acc.extend([0] * (len(b) - len(acc)))
    if scale == 1:
        for i, x in enumerate(b):
            acc[i] += x
    elif scale == -1:
        for i, x in enumerate(b):
            acc[i] -= x
    else:
        for i, x in enumerate(b):
            acc[i] += scale * x
    return trim(acc)


def max_bits(c: Sequence[int]) -> int:
    return max((abs(x).bit_length() for x in c), default=0)


def _pack(c: Sequence[int], nbytes: int) -> int:
    pos = b"".join((x if x > 0 else 0).to_bytes(nbytes, "little") for x in c)
    neg = b"".join((-x if x < 0 else 0).to_bytes(nbytes, "little") for x in c)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(value: int, nbytes: int, count: int) -> Coeffs:
    width = 8 * nbytes
    half = 1 << (width - 1)
    mask = (1 << (width * count)) - 1
    offset = int.from_bytes((bytes(nbytes - 1) + b"\x80") * count, "little")
    raw = (((value & mask) + offset) & mask).to_bytes(nbytes * count, "little")
    return trim([int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") - half for i in range(count)])


def mul_trunc(a: Sequence[int], b: Sequence[int], cap: int) -> Coeffs:
    """(a * b) mod x^(cap+1)."""
    if not a or not b:
        return []
    la = min(len(a), cap + 1)
    lb = min(len(b), cap + 1)
    out_len = min(la + lb - 1, cap + 1)
    if out_len <= 0:
        return []
    if la * lb <= _SCHOOLBOOK_LIMIT or la == 1 or lb == 1:
        out = [0] * out_len
        for i in range(la):
            ai = a[i]
            if not ai:
                continue
            for j in range(min(lb, out_len - i)):
                out[i + j] += ai * b[j]
        return trim(out)
    # slot width: enough for any coefficient of the product plus a sign bit
    bits = max_bits(a[:la]) + max_bits(b[:lb]) + min(la, lb).bit_length() + 1
    nbytes = (bits + 7) // 8
    prod = gmpy2.mpz(_pack(a[:la], nbytes)) * gmpy2.mpz(_pack(b[:lb], nbytes))
    return _unpack(int(prod), nbytes, out_len)


def coeff_of_product(a: Sequence[int], b: Sequence[int], t: int) -> int:
    """Coefficient of x^t in a * b without forming the product."""
    lo = max(0, t - len(b) + 1)
    hi = min(len(a) - 1, t)
    return sum(a[i] * b[t - i] for i in range(lo, hi + 1))


class TruncatedPolynomial:
    """Polynomial with big-integer coefficients; all arithmetic is modulo x^(cap+1)."""

    __slots__ = ("cap", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), cap: int = 0):
        if cap < 0:
            raise ValueError("degree cap must be non-negative")
        self.cap = cap
        self.coeffs: Coeffs = trim([int(c) for c in list(coeffs)[:cap + 1]])

    @classmethod
    def monomial(cls, exponent: int, cap: int, coefficient: int = 1) -> "TruncatedPolynomial":
        if exponent > cap:
            return cls((), cap)
        return cls([0] * exponent + [coefficient], cap)

    def _check(self, other: "TruncatedPolynomial") -> None:
        if self.cap != other.cap:
            raise ValueError(f"degree caps differ ({self.cap} vs {other.cap})")

    def __add__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._check(other)
        return TruncatedPolynomial(add_into(list(self.coeffs), other.coeffs), self.cap)

    def __sub__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._check(other)
        return TruncatedPolynomial(add_into(list(self.coeffs), other.coeffs, -1), self.cap)

    def __neg__(self) -> "TruncatedPolynomial":
        return TruncatedPolynomial([-c for c in self.coeffs], self.cap)

    def __mul__(self, other) -> "TruncatedPolynomial":
        if isinstance(other, int):
            return TruncatedPolynomial([other * c for c in self.coeffs], self.cap)
        self._check(other)
        return TruncatedPolynomial(mul_trunc(self.coeffs, other.coeffs, self.cap), self.cap)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return self.cap == other.cap and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.cap, tuple(self.coeffs)))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, exponent: int) -> int:
        if exponent < 0 or exponent > self.cap:
            raise IndexError(exponent)
        return self.coeffs[exponent] if exponent < len(self.coeffs) else 0

    def __repr__(self) -> str:
        return f"TruncatedPolynomial({self.coeffs}, cap={self.cap})"
