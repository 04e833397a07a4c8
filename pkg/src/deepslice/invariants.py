"""Alexander polynomial, Levine-Tristram signatures and Arf from a Seifert matrix."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .cyclotomic import CyclotomicField
from .errors import InputError, PreconditionError
from .linalg import block_diag, det_int, signature
from .seifert import SeifertMatrix

__all__ = [
    "LaurentPolynomial",
    "UnitComplexSample",
    "alexander",
    "lt_signature",
    "signature_at",
    "arf",
    "direct_sum",
    "is_prime_power",
]


@dataclass(frozen=True)
class LaurentPolynomial:
    """sum of coeffs[k] * t^(low + k); trailing and leading zeros are stripped."""

    low: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        low = self.low
        while c and c[0] == 0:
            c.pop(0)
            low += 1
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "low", low if c else 0)

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        i = k - self.low
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def items(self):
        return [(self.low + i, c) for i, c in enumerate(self.coeffs) if c]

    def __call__(self, t):
        return sum(c * Fraction(t) ** k for k, c in self.items())

    def is_palindromic(self) -> bool:
        return all(self.coefficient(k) == self.coefficient(-k) for k, _ in self.items())

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LaurentPolynomial(self.low + other.low, tuple(out))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in sorted(self.items(), reverse=True):
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sgn, body in parts[1:]:
            out += f" {sgn} {body}"
        return out

    def record(self) -> dict:
        return {str(k): c for k, c in self.items()}


def is_prime_power(m: int) -> bool:
    if m < 2:
        return False
    p = next(d for d in range(2, m + 1) if m % d == 0)
    while m % p == 0:
        m //= p
    return m == 1


@dataclass(frozen=True)
class UnitComplexSample:
    """omega = exp(2 pi i a/m), stored in lowest terms with 0 < a < m."""

    a: int
    m: int

    def __post_init__(self):
        if self.m < 2 or not 0 < self.a < self.m:
            raise InputError("omega = exp(2 pi i a/m) needs 0 < a < m (omega != 1)")
        g = gcd(self.a, self.m)
        object.__setattr__(self, "a", self.a // g)
        object.__setattr__(self, "m", self.m // g)

    @classmethod
    def parse(cls, text: str) -> "UnitComplexSample":
        text = text.strip()
        if text in ("-1", "minus1"):
            return cls(1, 2)
        try:
            a, m = text.split("/")
            return cls(int(a), int(m))
        except ValueError as exc:
            raise InputError(f"omega must be given as a/m, got {text!r}") from exc

    @property
    def exceptional_ok(self) -> bool:
        """Certified member of the set where the sliceness inequality is valid."""
        return is_prime_power(self.m)

    def __str__(self) -> str:
        return f"{self.a}/{self.m}"


MINUS_ONE = UnitComplexSample(1, 2)


def _interpolate(points: list[tuple[int, int]]) -> list[int]:
    """Coefficients (low degree first) of the polynomial through integer points."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += yi * b / denom
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("non-integral interpolation")
    return [int(c) for c in coeffs]


def alexander(v: SeifertMatrix) -> LaurentPolynomial:
    """t^(-g) det(V - t V^T): palindromic, value 1 at t = 1."""
    return _alexander_rows(tuple(tuple(r) for r in v.rows))


@lru_cache(maxsize=4096)
def _alexander_rows(rows) -> LaurentPolynomial:
    n = len(rows)
    if n == 0:
        return LaurentPolynomial(0, (1,))
    pts = []
    for t in range(n + 1):
        m = [[rows[i][j] - t * rows[j][i] for j in range(n)] for i in range(n)]
        pts.append((t, det_int(m)))
    poly = LaurentPolynomial(-(n // 2), tuple(_interpolate(pts)))
    if poly(1) != 1 or not poly.is_palindromic():
        raise AssertionError("Alexander normalization failed")
    return poly


def _hermitian_signature(field: CyclotomicField, h) -> int:
    """Fraction-free congruence diagonalization over Z[zeta].

    Eliminating with pivot p replaces the remaining block B by p*B - (col)(row),
    which is p times the true Schur complement.  ``scale`` tracks the sign of
    the accumulated real factor so each true pivot sign is recovered exactly.
    """
    n = len(h)
    h = [list(r) for r in h]
    active = list(range(n))
    pos = neg = 0
    scale = 1
    while active:
        piv = next((i for i in active if not field.is_zero(h[i][i])), None)
        if piv is None:
            pair = next(
                ((i, j) for i in active for j in active if i != j and not field.is_zero(h[i][j])),
                None,
            )
            if pair is None:
                raise ArithmeticError("singular Hermitian form")
            i, j = pair
            for c in (field.from_int(1), field.root_power(1)):
                trial = [row[:] for row in h]
                cbar = field.conj(c)
                trial[i] = [field.add(x, field.mul(c, y)) for x, y in zip(trial[i], trial[j])]
                for row in trial:
                    row[i] = field.add(row[i], field.mul(row[j], cbar))
                if not field.is_zero(trial[i][i]):
                    h = trial
                    break
            piv = i
        p = h[piv][piv]
        s = field.real_sign(p) * scale
        pos += s > 0
        neg += s < 0
        active.remove(piv)
        for i in active:
            hip = h[i][piv]
            for k in active:
                h[i][k] = field.sub(field.mul(p, h[i][k]), field.mul(hip, h[piv][k]))
        scale *= field.real_sign(p)
    return pos - neg


@lru_cache(maxsize=None)
def _field(m: int) -> CyclotomicField:
    return CyclotomicField(m)


def alexander_at(v: SeifertMatrix, omega: UnitComplexSample):
    """Delta(omega) as an exact element of Q(zeta_m), with the field."""
    field = _field(omega.m)
    val = field.zero()
    for k, c in alexander(v).items():
        val = field.add(val, field.scale(field.root_power(k * omega.a), c))
    return field, val


def lt_signature(v: SeifertMatrix, omega: UnitComplexSample = MINUS_ONE) -> int:
    """Signature of (1 - w) V + (1 - conj w) V^T, exact.

    Raises PreconditionError at roots of the Alexander polynomial.  The result
    is computed for every omega; callers check ``omega.exceptional_ok``.
    """
    rows = v.rows
    n = len(rows)
    if omega.m == 2:
        if alexander(v)(-1) == 0:
            raise PreconditionError("omega is an Alexander root; signature jump point")
        return signature([[rows[i][j] + rows[j][i] for j in range(n)] for i in range(n)])
    field, delta = alexander_at(v, omega)
    if field.is_zero(delta):
        raise PreconditionError("omega is an Alexander root; signature jump point")
    w = field.root_power(omega.a)
    one = field.from_int(1)
    c1 = field.sub(one, w)
    c2 = field.conj(c1)
    h = [[field.add(field.scale(c1, rows[i][j]), field.scale(c2, rows[j][i])) for j in range(n)] for i in range(n)]
    # the 1-norm entries stay in Z[zeta]; no division happens below
    return _hermitian_signature(field, h)


def signature_at(v: SeifertMatrix, omega: UnitComplexSample) -> dict:
    value = lt_signature(v, omega)
    return {"omega": str(omega), "signature": value, "certified": omega.exceptional_ok}


def arf(v: SeifertMatrix) -> int:
    return 0 if abs(alexander(v)(-1)) % 8 in (1, 7) else 1


def direct_sum(v1: SeifertMatrix, v2: SeifertMatrix) -> SeifertMatrix:
    return SeifertMatrix(block_diag(v1.rows, v2.rows), "direct sum")
