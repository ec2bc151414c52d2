"""Exact integer and rational matrix routines.

Matrices are plain lists of rows.  Nothing here uses floating point; integer
matrices hold Python ints and rational ones hold :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]
QMatrix = list[list[Fraction]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def congruence(t: Sequence[Sequence], g: Sequence[Sequence]) -> list[list]:
    """Return ``t * g * t^T``."""
    return matmul(matmul(t, g), transpose(t))


def bareiss_det(a: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mi, mk = m[i], m[k]
            f = mi[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pivot - f * mk[j]) // prev
            mi[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def rational_det(a: Sequence[Sequence]) -> Fraction:
    """Determinant of a rational matrix by clearing denominators."""
    n = len(a)
    if n == 0:
        return Fraction(1)
    rows = [[Fraction(x) for x in row] for row in a]
    total = Fraction(1)
    ints = []
    for row in rows:
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        total /= den
        ints.append([int(x * den) for x in row])
    return total * bareiss_det(ints)


def rational_inverse(a: Sequence[Sequence]) -> QMatrix:
    """Gauss-Jordan inverse over the rationals; raises on a singular matrix."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[p] = m[p], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def solve_left(x: Sequence, basis: Sequence[Sequence]) -> list[Fraction]:
    """Coordinates ``c`` with ``c * basis == x`` for a square invertible basis."""
    inv = rational_inverse(basis)
    return [sum(Fraction(xi) * inv[i][j] for i, xi in enumerate(x))
            for j in range(len(basis))]


def hnf_with_transform(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns ``(h, u)`` with ``u`` unimodular and ``h == u * a``.  The nonzero
    rows of ``h`` come first, have positive pivots, and entries above each
    pivot are reduced into ``[0, pivot)``.
    """
    m = [list(map(int, row)) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    u = identity(rows)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        # Euclid down the column until a single nonzero entry remains at row r.
        while True:
            nz = [i for i in range(r, rows) if m[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(m[i][c]))
            if p != r:
                m[r], m[p] = m[p], m[r]
                u[r], u[p] = u[p], u[r]
            done = True
            for i in range(r + 1, rows):
                if m[i][c] != 0:
                    q = m[i][c] // m[r][c]
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if m[i][c] != 0:
                        done = False
            if done:
                break
        if m[r][c] == 0:
            continue
        if m[r][c] < 0:
            m[r] = [-x for x in m[r]]
            u[r] = [-x for x in u[r]]
        piv = m[r][c]
        for i in range(r):
            q = m[i][c] // piv
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return m, u


def hnf(a: Sequence[Sequence[int]]) -> Matrix:
    """Nonzero rows of the Hermite normal form (a basis of the row lattice)."""
    h, _ = hnf_with_transform(a)
    return [row for row in h if any(row)]


def integer_kernel(a: Sequence[Sequence[int]]) -> Matrix:
    """Basis (as rows) of ``{x in Z^n : a x = 0}``."""
    n = len(a[0]) if a else 0
    if not a:
        return identity(n)
    h, u = hnf_with_transform(transpose(a))
    return [u[i] for i in range(n) if not any(h[i])]


def smith_invariants(a: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith normal form (nonzero entries, ascending)."""
    m = [list(map(int, row)) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        entries = [(abs(m[i][j]), i, j) for i in range(t, rows)
                   for j in range(t, cols) if m[i][j] != 0]
        if not entries:
            break
        _, i, j = min(entries)
        m[t], m[i] = m[i], m[t]
        for row in m:
            row[t], row[j] = row[j], row[t]
        while True:
            piv = m[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = m[i][t] // piv
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[t])]
                if m[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = m[t][j] // piv
                if q:
                    for row in m:
                        row[j] -= q * row[t]
                if m[t][j]:
                    dirty = True
            if not dirty:
                bad = next(((i, j) for i in range(t + 1, rows)
                            for j in range(t + 1, cols) if m[i][j] % piv), None)
                if bad is None:
                    break
                # Pull the offending row in so the pivot shrinks to a gcd.
                m[t] = [x + y for x, y in zip(m[t], m[bad[0]])]
                continue
            entries = [(abs(m[i][t]), i, t) for i in range(t, rows) if m[i][t]]
            entries += [(abs(m[t][j]), t, j) for j in range(t, cols) if m[t][j]]
            _, i, j = min(entries)
            if i != t:
                m[t], m[i] = m[i], m[t]
            if j != t:
                for row in m:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(m[t][t]))
        t += 1
    return sorted(diag)


def complete_to_unimodular(v: Sequence[int]) -> Matrix:
    """A unimodular matrix whose first row is the primitive vector ``v``."""
    n = len(v)
    if gcd(*v) != 1:
        raise ValueError("vector is not primitive")
    # u * v^T = e_1, so v is the first column of u^{-1}.
    _, u = hnf_with_transform([[x] for x in v])
    inv = rational_inverse(u)
    full = [[int(x) for x in row] for row in transpose(inv)]
    assert list(full[0]) == list(v), "unimodular completion failed"
    return full


def lll_gram(g: Sequence[Sequence[int]], delta: Fraction = Fraction(99, 100)
             ) -> tuple[Matrix, Matrix]:
    """LLL-reduce a positive definite integral Gram matrix.

    Returns ``(g2, t)`` with ``t`` unimodular and ``g2 == t * g * t^T``.
    Works on the Gram matrix only (no ambient coordinates needed).
    """
    n = len(g)
    a = [list(map(int, row)) for row in g]
    t = identity(n)
    if n <= 1:
        return a, t
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = [Fraction(0)] * n

    def gso(k: int) -> None:
        for j in range(k):
            s = Fraction(a[k][j])
            for i in range(j):
                s -= mu[j][i] * mu[k][i] * bstar[i]
            mu[k][j] = s / bstar[j]
        s = Fraction(a[k][k])
        for j in range(k):
            s -= mu[k][j] * mu[k][j] * bstar[j]
        if s <= 0:
            raise ValueError("Gram matrix is not positive definite")
        bstar[k] = s

    def reduce(k: int, l: int) -> None:
        m = mu[k][l]
        if abs(m) <= Fraction(1, 2):
            return
        q = (m + Fraction(1, 2)).__floor__()
        # b_k <- b_k - q b_l
        akk = a[k][k] - 2 * q * a[k][l] + q * q * a[l][l]
        for j in range(n):
            if j != k:
                a[k][j] -= q * a[l][j]
                a[j][k] = a[k][j]
        a[k][k] = akk
        t[k] = [x - q * y for x, y in zip(t[k], t[l])]
        mu[k][l] -= q
        for i in range(l):
            mu[k][i] -= q * mu[l][i]

    def swap(k: int, kmax: int) -> None:
        a[k], a[k - 1] = a[k - 1], a[k]
        for row in a:
            row[k], row[k - 1] = row[k - 1], row[k]
        t[k], t[k - 1] = t[k - 1], t[k]
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        m = mu[k][k - 1]
        b = bstar[k] + m * m * bstar[k - 1]
        mu[k][k - 1] = m * bstar[k - 1] / b
        bstar[k] = bstar[k - 1] * bstar[k] / b
        bstar[k - 1] = b
        for i in range(k + 1, kmax + 1):
            s = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * s
            mu[i][k - 1] = s + mu[k][k - 1] * mu[i][k]

    gso(0)
    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            gso(k)
        reduce(k, k - 1)
        if bstar[k] < (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            swap(k, kmax)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                reduce(k, l)
            k += 1
    return a, t
