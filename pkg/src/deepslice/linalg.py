"""Exact integer and rational matrix routines.

Everything here works on tuples of tuples of ints (or Fractions) so results are
hashable and stable.  No floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

IntMatrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    out = tuple(tuple(int(x) for x in r) for r in rows)
    if any(len(r) != len(out) for r in out):
        raise ValueError("matrix must be square")
    return out


def transpose(m: Sequence[Sequence]) -> tuple:
    return tuple(zip(*m)) if m else ()


def is_symmetric(m: Sequence[Sequence[int]]) -> bool:
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a, b) -> tuple:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a, v) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def quadratic(q, v) -> int:
    return sum(v[i] * q[i][j] * v[j] for i in range(len(v)) for j in range(len(v)))


def block_diag(a, b) -> IntMatrix:
    n, m = len(a), len(b)
    rows = [tuple(a[i]) + (0,) * m for i in range(n)]
    rows += [(0,) * n + tuple(b[i]) for i in range(m)]
    return tuple(rows)


def det_int(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inertia(m: Sequence[Sequence]) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a symmetric rational matrix.

    Symmetric Gaussian elimination: a nonzero diagonal pivot is used directly;
    if the remaining diagonal is zero but some off-diagonal entry is not, row and
    column j are added to row and column i first, which makes the (i, i) entry
    2*a_ij != 0.
    """
    a = [[Fraction(x) for x in r] for r in m]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        p = a[piv][piv]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            f = a[i][piv] / p
            if f:
                for k in active:
                    a[i][k] -= f * a[piv][k]
        for i in active:
            a[i][piv] = a[piv][i] = Fraction(0)
    return pos, neg, n - pos - neg


def signature(m: Sequence[Sequence]) -> int:
    pos, neg, _ = inertia(m)
    return pos - neg


def smith_normal_form(m: Sequence[Sequence[int]]):
    """Return (diagonal, U, W) with U * m * W = diag, U and W unimodular.

    ``diagonal`` lists the n diagonal entries, nonnegative, each dividing the next
    (zeros last).
    """
    n = len(m)
    a = [list(r) for r in m]
    u = [list(r) for r in identity(n)]
    w = [list(r) for r in identity(n)]

    def row_op(i, j, c):  # row_i += c * row_j
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, c):  # col_i += c * col_j
        for r in a:
            r[i] += c * r[j]
        for r in w:
            r[i] += c * r[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in w:
            r[i], r[j] = r[j], r[i]

    for t in range(n):
        while True:
            entries = [(abs(a[i][j]), i, j) for i in range(t, n) for j in range(t, n) if a[i][j]]
            if not entries:
                break
            _, i, j = min(entries)
            swap_rows(t, i)
            swap_cols(t, j)
            done = True
            for i in range(t + 1, n):
                q = a[i][t] // a[t][t]
                if q:
                    row_op(i, t, -q)
                if a[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = a[t][j] // a[t][t]
                if q:
                    col_op(j, t, -q)
                if a[t][j]:
                    done = False
            if not done:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            row_op(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    diag = tuple(a[i][i] for i in range(n))
    return diag, tuple(map(tuple, u)), tuple(map(tuple, w))
