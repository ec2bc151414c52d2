"""Exact quadratic lattices given by Gram matrices."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Iterator, Sequence

from gmpy2 import mpq

from .errors import DomainError
from .intmat import (
    complete_to_unimodular,
    congruence,
    integer_kernel,
    lll_gram,
    rational_det,
    rational_inverse,
    smith_invariants,
)


def _frac(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


@dataclass(frozen=True)
class GramLattice:
    gram: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        g = tuple(tuple(_frac(x) for x in row) for row in self.gram)
        n = len(g)
        if any(len(row) != n for row in g):
            raise DomainError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise DomainError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "GramLattice":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def rank(self) -> int:
        return len(self.gram)

    def form(self, x: Sequence, y: Sequence) -> Fraction:
        g = self.gram
        return sum((x[i] * g[i][j] * y[j] for i in range(self.rank) if x[i]
                    for j in range(self.rank) if y[j]), Fraction(0))

    def norm(self, x: Sequence) -> Fraction:
        return self.form(x, x)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.gram for x in row)

    def int_gram(self) -> list[list[int]]:
        if not self.is_integral():
            raise DomainError("lattice is not integral")
        return [[int(x) for x in row] for row in self.gram]

    @property
    def signature(self) -> tuple[int, int]:
        return signature(self.gram)

    def is_positive_definite(self) -> bool:
        return self.signature == (self.rank, 0)


def signature(g: Sequence[Sequence]) -> tuple[int, int]:
    """(p, q) of a nondegenerate symmetric rational matrix, by congruence."""
    m = [[Fraction(x) for x in row] for row in g]
    n = len(m)
    p = q = 0
    k = 0
    while k < n:
        if m[k][k] == 0:
            j = next((j for j in range(k + 1, n) if m[j][j] != 0), None)
            if j is not None:
                m[k], m[j] = m[j], m[k]
                for row in m:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
                if j is None:
                    raise DomainError("degenerate Gram matrix")
                # replace e_k by e_k + e_j; new diagonal 2 m[k][j] != 0
                m[k] = [a + b for a, b in zip(m[k], m[j])]
                for row in m:
                    row[k] += row[j]
        piv = m[k][k]
        if piv > 0:
            p += 1
        else:
            q += 1
        for i in range(k + 1, n):
            f = m[i][k] / piv
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[k])]
        for i in range(k + 1, n):
            m[k][i] = m[i][k] = Fraction(0)
        k += 1
    return p, q


def pi11() -> GramLattice:
    """The even unimodular hyperbolic plane."""
    return GramLattice.from_rows([[0, -1], [-1, 0]])


def determinant(lat: GramLattice) -> Fraction:
    return rational_det(lat.gram)


def is_even(lat: GramLattice) -> bool:
    return lat.is_integral() and all(lat.gram[i][i] % 2 == 0 for i in range(lat.rank))


def is_unimodular(lat: GramLattice) -> bool:
    return lat.is_integral() and abs(determinant(lat)) == 1


@dataclass(frozen=True)
class DiscriminantGroup:
    invariants: tuple[int, ...]

    @property
    def order(self) -> int:
        return prod(self.invariants)


def dual_and_discriminant(lat: GramLattice
                          ) -> tuple[list[list[Fraction]], DiscriminantGroup]:
    """Dual basis (rows, in lattice coordinates) and the group L*/L.

    The dual basis is the inverse Gram matrix; the group comes from the
    Smith form of the Gram matrix.
    """
    g = lat.int_gram()
    if determinant(lat) == 0:
        raise DomainError("singular Gram matrix")
    dual = rational_inverse(g)
    inv = tuple(d for d in smith_invariants(g) if d != 1)
    return dual, DiscriminantGroup(inv)


def direct_sum(*lats: GramLattice) -> GramLattice:
    n = sum(l.rank for l in lats)
    rows = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for l in lats:
        for i in range(l.rank):
            for j in range(l.rank):
                rows[off + i][off + j] = l.gram[i][j]
        off += l.rank
    return GramLattice.from_rows(rows)


def sublattice(lat: GramLattice, basis: Sequence[Sequence]) -> GramLattice:
    """Gram matrix of the vectors ``basis`` (rows in lattice coordinates)."""
    return GramLattice.from_rows(congruence(basis, lat.gram))


def lll(lat: GramLattice) -> tuple[GramLattice, list[list[int]]]:
    """LLL-reduced Gram matrix and the transform (rows: new basis)."""
    g, t = lll_gram(lat.int_gram())
    return GramLattice.from_rows(g), t


def quotient_by_isotropic(m: GramLattice, rho: Sequence[int]) -> GramLattice:
    """``rho^perp / Z rho`` for a primitive isotropic vector of a Lorentzian lattice."""
    n = m.rank
    if len(rho) != n:
        raise DomainError("vector has the wrong length")
    if any(Fraction(x).denominator != 1 for x in rho):
        raise DomainError("vector is not in the lattice")
    rho = [int(x) for x in rho]
    if not any(rho):
        raise DomainError("zero vector")
    if gcd(*rho) != 1:
        raise DomainError("vector is not primitive")
    g = m.int_gram()
    if m.signature != (n - 1, 1):
        raise DomainError(f"lattice has signature {m.signature}, need ({n - 1}, 1)")
    if m.norm(rho) != 0:
        raise DomainError("vector is not isotropic")
    g_rho = [sum(g[i][j] * rho[j] for j in range(n)) for i in range(n)]
    perp = integer_kernel([g_rho])
    # rho lies in the saturated lattice perp; find its coordinates there
    coords = _solve_in_basis(rho, perp)
    u = complete_to_unimodular(coords)
    basis = [[sum(u[a][b] * perp[b][c] for b in range(n - 1)) for c in range(n)]
             for a in range(n - 1)]
    assert basis[0] == rho
    q = congruence(basis[1:], g)
    out = GramLattice.from_rows(q)
    if out.rank and not out.is_positive_definite():
        raise DomainError("quotient is not positive definite")
    return out


def _solve_in_basis(v: Sequence[int], basis: Sequence[Sequence[int]]) -> list[int]:
    """Integer coordinates of ``v`` in a (non-square) row basis."""
    k = len(basis)
    n = len(v)
    # pick k independent columns
    cols: list[int] = []
    for c in range(n):
        trial = cols + [c]
        sub = [[basis[r][cc] for cc in trial] for r in range(k)]
        if _col_rank(sub) == len(trial):
            cols = trial
        if len(cols) == k:
            break
    sq = [[basis[r][c] for c in cols] for r in range(k)]
    inv = rational_inverse(sq)
    x = [sum(Fraction(v[c]) * inv[i][j] for i, c in enumerate(cols)) for j in range(k)]
    if any(t.denominator != 1 for t in x):
        raise DomainError("vector is not in the span")
    x = [int(t) for t in x]
    if [sum(x[r] * basis[r][c] for r in range(k)) for c in range(n)] != list(v):
        raise DomainError("vector is not in the span")
    return x


def _col_rank(a: Sequence[Sequence]) -> int:
    m = [[Fraction(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(r + 1, rows):
            f = m[i][c] / m[r][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


@dataclass(frozen=True)
class ShortVectors:
    """One representative per ``+-`` pair; ``count`` counts both signs."""

    bound: Fraction
    pairs: tuple[tuple[tuple[int, ...], Fraction], ...]

    @property
    def count(self) -> int:
        return 2 * len(self.pairs)

    def by_norm(self) -> dict[Fraction, int]:
        c = Counter(n for _, n in self.pairs)
        return {k: 2 * c[k] for k in sorted(c)}


def _cholesky_coeffs(g: Sequence[Sequence]) -> tuple[list[list[mpq]], list[mpq]]:
    """Upper-triangular ``q[i][j]`` (j > i) and diagonal ``d`` with
    ``x^T G x = sum_i d_i (x_i + sum_{j>i} q_ij x_j)^2``."""
    n = len(g)
    a = [[mpq(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in g]
    q = [[mpq(0)] * n for _ in range(n)]
    d = [mpq(0)] * n
    for i in range(n):
        s = a[i][i] - sum((q[k][i] * q[k][i] * d[k] for k in range(i)), mpq(0))
        if s <= 0:
            raise DomainError("Gram matrix is not positive definite")
        d[i] = s
        for j in range(i + 1, n):
            t = a[i][j] - sum((q[k][i] * q[k][j] * d[k] for k in range(i)), mpq(0))
            q[i][j] = t / s
    return q, d


def _enumerate(g: Sequence[Sequence], bound: Fraction) -> Iterator[tuple[list[int], mpq]]:
    """Fincke-Pohst: all x != 0 with x^T G x <= bound, first nonzero-from-top > 0."""
    n = len(g)
    q, d = _cholesky_coeffs(g)
    b = mpq(bound.numerator, bound.denominator)
    x = [0] * n

    def rec(i: int, budget: mpq, top_zero: bool) -> Iterator[tuple[list[int], mpq]]:
        c = -sum((q[i][j] * x[j] for j in range(i + 1, n) if x[j]), mpq(0))
        di = d[i]
        start = int(round(float(c)))
        # walk outward from the center in both directions; stop on exceeding budget
        for direction in (1, -1):
            v = start if direction == 1 else start - 1
            if top_zero and direction == 1:
                v = max(v, 0)
            while True:
                if top_zero and v < 0:
                    break
                t = v - c
                cost = di * t * t
                if cost > budget:
                    # the cost is convex in v: once past the center, stop
                    if (direction == 1 and v >= c) or (direction == -1 and v <= c):
                        break
                    v += direction
                    continue
                x[i] = v
                rest = budget - cost
                if i == 0:
                    if not (top_zero and v == 0):
                        yield list(x), b - rest
                else:
                    yield from rec(i - 1, rest, top_zero and v == 0)
                v += direction
        x[i] = 0

    if n:
        yield from rec(n - 1, b, True)


def short_vectors(lat: GramLattice, bound) -> ShortVectors:
    """All nonzero v with <v,v> <= bound, up to sign, in lattice coordinates.

    The basis is LLL-reduced first when the lattice is integral, which
    shrinks the search tree; vectors are mapped back to the input basis.
    """
    bound = _frac(bound)
    if not lat.is_positive_definite():
        raise DomainError("short vector enumeration needs a positive definite lattice")
    n = lat.rank
    if lat.is_integral() and n > 1:
        g, t = lll_gram(lat.int_gram())
    else:
        g, t = [list(r) for r in lat.gram], [[int(i == j) for j in range(n)] for i in range(n)]
    out = []
    for y, nrm in _enumerate(g, bound):
        v = [sum(y[k] * t[k][j] for k in range(n)) for j in range(n)]
        # canonical sign: first nonzero coordinate positive
        lead = next(c for c in v if c)
        if lead < 0:
            v = [-c for c in v]
        out.append((tuple(v), Fraction(int(nrm.numerator), int(nrm.denominator))))
    out.sort(key=lambda p: (p[1], p[0]))
    return ShortVectors(bound, tuple(out))


def count_vectors(lat: GramLattice, norm) -> int:
    """Number of vectors of exactly the given norm (both signs)."""
    norm = _frac(norm)
    return short_vectors(lat, norm).by_norm().get(norm, 0)


def is_leech(lat: GramLattice) -> bool:
    """Even, unimodular, rank 24 and no vectors of norm 2."""
    if lat.rank != 24:
        raise DomainError(f"Leech certification needs rank 24, got {lat.rank}")
    if not lat.is_positive_definite():
        raise DomainError("lattice is not positive definite")
    if not (is_even(lat) and determinant(lat) == 1):
        return False
    return short_vectors(lat, 2).count == 0


def cartan_lattice(cartan: Sequence[Sequence[int]]) -> GramLattice:
    """Root lattice of a simply-laced Cartan matrix."""
    return GramLattice.from_rows(cartan)


def dumps(lat: GramLattice) -> str:
    """Lattice file: ``{"rank": n, "gram": ["p/q", ...]}`` row-major."""
    cells = [str(x) for row in lat.gram for x in row]
    return json.dumps({"rank": lat.rank, "gram": cells})


def loads(text: str) -> GramLattice:
    try:
        obj = json.loads(text)
        n = int(obj["rank"])
        cells = [_frac(c) for c in obj["gram"]]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad lattice file: {exc}") from None
    if len(cells) != n * n:
        raise DomainError("gram has the wrong number of entries")
    return GramLattice.from_rows([cells[i * n:(i + 1) * n] for i in range(n)])
