"""Exact arithmetic in Q(zeta_m) with certified real signs.

Elements are coefficient tuples (ints or Fractions) in the power basis
1, z, ..., z^(phi-1) where z = exp(2 pi i / m).  Signs of real elements are decided by interval
evaluation with mpmath, refining precision until zero is excluded; exact zero
is detected symbolically beforehand, so refinement always terminates.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath


def _poly_divmod(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials (low degree first), den monic
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divmod(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


class CyclotomicField:
    def __init__(self, m: int):
        if m < 2:
            raise ValueError("need m >= 2")
        self.m = m
        self.modulus = cyclotomic_poly(m)
        self.degree = len(self.modulus) - 1
        # z^k reduced, for 0 <= k < m
        powers = []
        cur = [1] + [0] * (self.degree - 1)
        for _ in range(m):
            powers.append(tuple(cur))
            cur = self._shift(cur)
        self._powers = powers
        self._cos_cache: dict[int, list] = {}

    def _shift(self, coeffs):
        lead = coeffs[-1]
        out = [0] + list(coeffs[:-1])
        if lead:
            for i in range(self.degree):
                out[i] -= lead * self.modulus[i]
        return out

    def zero(self):
        return (0,) * self.degree

    def from_int(self, n):
        return (n,) + (0,) * (self.degree - 1)

    def root_power(self, k: int):
        return self._powers[k % self.m]

    def add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x, y):
        return tuple(a - b for a, b in zip(x, y))

    def scale(self, x, c):
        return tuple(a * c for a in x)

    def mul(self, x, y):
        prod = [0] * (2 * self.degree - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        prod[i + j] += a * b
        out = [0] * self.degree
        for k, c in enumerate(prod):
            if c:
                for i, r in enumerate(self.root_power(k)):
                    out[i] += c * r
        return tuple(out)

    def conj(self, x):
        out = self.zero()
        for k, c in enumerate(x):
            if c:
                out = self.add(out, self.scale(self.root_power(-k), c))
        return out

    def is_zero(self, x) -> bool:
        return not any(x)

    def inverse(self, x):
        """Inverse via the norm trick: x * prod of other Galois conjugates is rational."""
        if self.is_zero(x):
            raise ZeroDivisionError("zero in cyclotomic field")
        units = [k for k in range(2, self.m) if gcd(k, self.m) == 1]
        other = self.from_int(1)
        for k in units:
            other = self.mul(other, self.galois(x, k))
        norm = self.mul(x, other)
        if any(norm[1:]):
            raise ArithmeticError("norm is not rational")
        return self.scale(other, Fraction(1, 1) / norm[0])

    def galois(self, x, k: int):
        out = self.zero()
        for j, c in enumerate(x):
            if c:
                out = self.add(out, self.scale(self.root_power(j * k), c))
        return out

    def _cos_table(self, prec: int):
        """Rational enclosures [a, b] of cos(2 pi k / m) at the given precision."""
        if prec not in self._cos_cache:
            iv = mpmath.iv
            saved = iv.prec
            try:
                iv.prec = prec
                theta = iv.mpf(2) * iv.pi / self.m
                table = []
                for k in range(self.degree):
                    enc = iv.cos(theta * k)
                    lo, hi = enc._mpi_
                    table.append((_to_fraction(lo), _to_fraction(hi)))
            finally:
                iv.prec = saved
            self._cos_cache[prec] = table
        return self._cos_cache[prec]

    def real_sign(self, x) -> int:
        """Sign of x at z = exp(2 pi i / m); x must be a real element."""
        if self.is_zero(x):
            return 0
        prec = 64
        while prec <= 1 << 16:
            cos = self._cos_table(prec)
            lo = hi = 0
            for k, c in enumerate(x):
                if c:
                    a, b = cos[k]
                    c = Fraction(c)
                    lo += c * (a if c > 0 else b)
                    hi += c * (b if c > 0 else a)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            prec *= 2
        raise ArithmeticError("sign refinement did not terminate")


def _to_fraction(raw) -> Fraction:
    """Exact value of a raw mpmath float tuple (sign, mantissa, exponent, bits)."""
    sign, man, exp, _ = raw
    value = Fraction(int(man)) * Fraction(2) ** exp
    return -value if sign else value
