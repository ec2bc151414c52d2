"""Finite simple Lie algebras: classification data, root systems, weights.

Everything is normalized so that long roots have norm 2 under the form
``(x|y)``.  Root systems live in explicit rational coordinates; the form is
``scale * (standard dot product)`` with a rational ``scale`` per family.
Weights are handled in Dynkin-label coordinates (integers in the basis of
fundamental weights).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial, gcd, prod
from typing import Iterable, Sequence

from .errors import DomainError
from .intmat import rational_inverse

Vector = tuple[Fraction, ...]
Weight = tuple[int, ...]

RANK_CAP = 24
FAMILIES = "ABCDEFG"


@dataclass(frozen=True, order=True)
class SimpleLieType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        f, n = self.family, self.rank
        ok = (
            (f == "A" and n >= 1)
            or (f in "BC" and n >= 2)
            or (f == "D" and n >= 3)
            or (f == "E" and n in (6, 7, 8))
            or (f == "F" and n == 4)
            or (f == "G" and n == 2)
        )
        if not isinstance(n, int) or not ok:
            raise DomainError(f"invalid simple Lie type {f}{n}")

    @classmethod
    def parse(cls, text: str) -> "SimpleLieType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?(\d+)\s*", text)
        if not m:
            raise DomainError(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"


@dataclass(frozen=True)
class AlgebraInfo:
    dim: int
    rank: int
    coxeter: int
    dual_coxeter: int
    lacing: int


@dataclass(frozen=True)
class LevelledAlgebra:
    type: SimpleLieType
    level: int

    def __post_init__(self) -> None:
        if not isinstance(self.level, int) or self.level < 1:
            raise DomainError(f"level must be a positive integer, got {self.level!r}")

    def __str__(self) -> str:
        return f"{self.type},{self.level}"


def algebra_info(t: SimpleLieType) -> AlgebraInfo:
    """Closed-form dimension, Coxeter numbers and lacing number."""
    f, n = t.family, t.rank
    if f == "A":
        return AlgebraInfo(n * (n + 2), n, n + 1, n + 1, 1)
    if f == "B":
        return AlgebraInfo(n * (2 * n + 1), n, 2 * n, 2 * n - 1, 2)
    if f == "C":
        return AlgebraInfo(n * (2 * n + 1), n, 2 * n, n + 1, 2)
    if f == "D":
        return AlgebraInfo(n * (2 * n - 1), n, 2 * n - 2, 2 * n - 2, 1)
    if f == "E":
        dim, h = {6: (78, 12), 7: (133, 18), 8: (248, 30)}[n]
        return AlgebraInfo(dim, n, h, h, 1)
    if f == "F":
        return AlgebraInfo(52, 4, 12, 9, 2)
    return AlgebraInfo(14, 2, 6, 4, 3)


def all_types(max_rank: int = RANK_CAP, *, canonical: bool = False) -> list[SimpleLieType]:
    """Every valid type of rank <= max_rank.

    With ``canonical`` each isomorphism class appears once (B2 not C2, A3 not
    D3), which is what multiset enumeration needs.
    """
    out = []
    for n in range(1, max_rank + 1):
        out.append(SimpleLieType("A", n))
        if n >= 2:
            out.append(SimpleLieType("B", n))
        if n >= (3 if canonical else 2):
            out.append(SimpleLieType("C", n))
        if n >= (4 if canonical else 3):
            out.append(SimpleLieType("D", n))
    for f, n in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)):
        if n <= max_rank:
            out.append(SimpleLieType(f, n))
    return sorted(out)


def _vec(*xs) -> Vector:
    return tuple(Fraction(x) for x in xs)


def _unit(n: int, *pairs: tuple[int, Fraction | int]) -> Vector:
    v = [Fraction(0)] * n
    for i, x in pairs:
        v[i] += x
    return tuple(v)


def _ambient_simple_roots(t: SimpleLieType) -> tuple[int, Fraction, list[Vector]]:
    """(ambient dimension, form scale, simple roots) in Bourbaki numbering."""
    f, n = t.family, t.rank
    half = Fraction(1, 2)
    if f == "A":
        return n + 1, Fraction(1), [_unit(n + 1, (i, 1), (i + 1, -1)) for i in range(n)]
    if f in "BCD":
        simple = [_unit(n, (i, 1), (i + 1, -1)) for i in range(n - 1)]
        if f == "B":
            simple.append(_unit(n, (n - 1, 1)))
            return n, Fraction(1), simple
        if f == "C":
            simple.append(_unit(n, (n - 1, 2)))
            return n, Fraction(1, 2), simple
        simple.append(_unit(n, (n - 2, 1), (n - 1, 1)))
        return n, Fraction(1), simple
    if f == "E":
        e8 = [_vec(half, -half, -half, -half, -half, -half, -half, half),
              _unit(8, (0, 1), (1, 1))]
        e8 += [_unit(8, (i, -1), (i + 1, 1)) for i in range(6)]
        return 8, Fraction(1), e8[:n]
    if f == "F":
        return 4, Fraction(1), [
            _unit(4, (1, 1), (2, -1)),
            _unit(4, (2, 1), (3, -1)),
            _unit(4, (3, 1)),
            _vec(half, -half, -half, -half),
        ]
    return 3, Fraction(1, 3), [_vec(1, -1, 0), _vec(-2, 1, 1)]


@dataclass(frozen=True)
class RootSystem:
    """A root system in explicit coordinates with form ``scale * dot``."""

    type: SimpleLieType
    ambient_dim: int
    scale: Fraction
    simple_roots: tuple[Vector, ...]
    positive_coeffs: tuple[Weight, ...] = field(repr=False)

    def form(self, x: Sequence, y: Sequence) -> Fraction:
        return self.scale * sum((a * b for a, b in zip(x, y) if a and b), Fraction(0))

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @cached_property
    def _int_simple(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        den = 1
        for a in self.simple_roots:
            for x in a:
                den = den * x.denominator // gcd(den, x.denominator)
        return den, tuple(tuple(int(x * den) for x in a) for a in self.simple_roots)

    def combine(self, coeffs: Sequence) -> Vector:
        """Ambient vector of ``sum coeffs[i] * simple_roots[i]``."""
        den, simple = self._int_simple
        if all(isinstance(c, int) for c in coeffs):
            out = [0] * self.ambient_dim
            for c, a in zip(coeffs, simple):
                if c:
                    for k, x in enumerate(a):
                        out[k] += c * x
            return tuple(Fraction(x, den) for x in out)
        acc = [Fraction(0)] * self.ambient_dim
        for c, a in zip(coeffs, simple):
            if c:
                for k, x in enumerate(a):
                    acc[k] += c * x
        return tuple(x / den for x in acc)

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        """``cartan[i][j] = <alpha_i, alpha_j^vee>``."""
        s = self.simple_roots
        rows = []
        for ai in s:
            row = []
            for aj in s:
                v = 2 * self.form(ai, aj) / self.form(aj, aj)
                assert v.denominator == 1
                row.append(int(v))
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def positive_roots(self) -> tuple[Vector, ...]:
        return tuple(self.combine(c) for c in self.positive_coeffs)

    @cached_property
    def roots(self) -> tuple[Vector, ...]:
        neg = tuple(tuple(-x for x in r) for r in self.positive_roots)
        return self.positive_roots + neg

    @cached_property
    def fundamental_weights(self) -> tuple[Vector, ...]:
        inv = rational_inverse(self.cartan)
        return tuple(self.combine(row) for row in inv)

    @cached_property
    def weyl_vector(self) -> Vector:
        """Half the sum of the positive roots."""
        total = [sum(c[i] for c in self.positive_coeffs) for i in range(self.rank)]
        return tuple(x / 2 for x in self.combine(total))

    @cached_property
    def highest_root_coeffs(self) -> Weight:
        return max(self.positive_coeffs, key=sum)

    @cached_property
    def highest_root(self) -> Vector:
        return self.combine(self.highest_root_coeffs)

    @cached_property
    def weight_form(self) -> tuple[tuple[Fraction, ...], ...]:
        """Matrix of ``(varpi_i | varpi_j)``."""
        w = self.fundamental_weights
        return tuple(tuple(self.form(a, b) for b in w) for a in w)

    @cached_property
    def comarks(self) -> Weight:
        """``(varpi_i | theta)``; the level of a weight is its pairing with these."""
        th = self.highest_root
        out = []
        for w in self.fundamental_weights:
            v = self.form(w, th)
            assert v.denominator == 1
            out.append(int(v))
        return tuple(out)

    def weight_vector(self, lam: Sequence[int]) -> Vector:
        """Ambient coordinates of the weight with Dynkin labels ``lam``."""
        out = [Fraction(0)] * self.ambient_dim
        for c, w in zip(lam, self.fundamental_weights):
            if c:
                for k, x in enumerate(w):
                    out[k] += c * x
        return tuple(out)

    def pair(self, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
        """``(lam | mu)`` for weights in Dynkin labels."""
        f = self.weight_form
        n = self.rank
        return sum((lam[i] * mu[j] * f[i][j] for i in range(n) if lam[i]
                    for j in range(n) if mu[j]), Fraction(0))

    @cached_property
    def rho_labels(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def _rho_pairing(self) -> tuple[Fraction, ...]:
        f = self.weight_form
        return tuple(sum(f[i], Fraction(0)) for i in range(self.rank))

    def rho_pair(self, lam: Sequence[int]) -> Fraction:
        """``(rho | lam)`` for a weight in Dynkin labels."""
        return sum((c * p for c, p in zip(lam, self._rho_pairing) if c), Fraction(0))

    @cached_property
    def positive_root_labels(self) -> tuple[Weight, ...]:
        """Dynkin labels of the positive roots."""
        a = self.cartan
        n = self.rank
        return tuple(tuple(sum(c[i] * a[i][j] for i in range(n)) for j in range(n))
                     for c in self.positive_coeffs)


def _positive_root_coeffs(cartan: Sequence[Sequence[int]]) -> tuple[Weight, ...]:
    """Positive roots in simple-root coordinates, by root strings."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # p: how far the alpha_i-string extends below beta
                p = 0
                cur = list(beta)
                while True:
                    cur[i] -= 1
                    if tuple(cur) in found:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        nxt.sort()
        ordered.extend(nxt)
        layer = nxt
    return tuple(ordered)


@lru_cache(maxsize=None)
def root_system(t: SimpleLieType) -> RootSystem:
    """Explicit root system of ``t`` with long roots of norm 2."""
    if t.rank > RANK_CAP:
        raise DomainError(f"rank of {t} exceeds the supported cap {RANK_CAP}")
    dim, scale, simple = _ambient_simple_roots(t)
    rs = RootSystem(t, dim, scale, tuple(simple), ())
    coeffs = _positive_root_coeffs(rs.cartan)
    return RootSystem(t, dim, scale, tuple(simple), coeffs)


def weyl_vector_norm(t: SimpleLieType) -> Fraction:
    """``(rho|rho)`` from explicit root vectors, checked against ``h^vee dim / 12``."""
    rs = root_system(t)
    explicit = rs.form(rs.weyl_vector, rs.weyl_vector)
    info = algebra_info(t)
    closed = Fraction(info.dual_coxeter * info.dim, 12)
    if explicit != closed:
        raise AssertionError(f"strange formula fails for {t}: {explicit} != {closed}")
    return explicit


def weight_level(t: SimpleLieType, lam: Sequence[int]) -> int:
    return sum(c * m for c, m in zip(lam, root_system(t).comarks))


def integrable_weights(a: LevelledAlgebra) -> list[Weight]:
    """Dominant integral weights of level at most ``a.level``, sorted."""
    marks = root_system(a.type).comarks
    n = len(marks)
    out: list[Weight] = []

    def rec(i: int, budget: int, cur: list[int]) -> None:
        if i == n:
            out.append(tuple(cur))
            return
        for c in range(budget // marks[i] + 1):
            cur.append(c)
            rec(i + 1, budget - c * marks[i], cur)
            cur.pop()

    rec(0, a.level, [])
    return sorted(out, key=lambda w: (weight_level(a.type, w), w))


def _check_dominant(t: SimpleLieType, lam: Sequence[int]) -> Weight:
    lam = tuple(int(x) for x in lam)
    if len(lam) != t.rank or any(x < 0 for x in lam):
        raise DomainError(f"{lam} is not a dominant integral weight of {t}")
    return lam


def reflect(rs: RootSystem, mu: Sequence[int], i: int) -> Weight:
    c = mu[i]
    row = rs.cartan[i]
    return tuple(m - c * a for m, a in zip(mu, row))


def to_dominant(rs: RootSystem, mu: Sequence[int]) -> Weight:
    mu = tuple(mu)
    while True:
        i = next((k for k, x in enumerate(mu) if x < 0), None)
        if i is None:
            return mu
        mu = reflect(rs, mu, i)


def to_antidominant(rs: RootSystem, mu: Sequence[int]) -> Weight:
    mu = tuple(mu)
    while True:
        i = next((k for k, x in enumerate(mu) if x > 0), None)
        if i is None:
            return mu
        mu = reflect(rs, mu, i)


def weyl_orbit(rs: RootSystem, nu: Sequence[int]) -> list[Weight]:
    """Orbit of a dominant weight (each element once)."""
    start = tuple(nu)
    seen = {start}
    layer = [start]
    while layer:
        nxt = []
        for mu in layer:
            for i, c in enumerate(mu):
                if c > 0:
                    w = reflect(rs, mu, i)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
        layer = nxt
    return sorted(seen, reverse=True)


def weyl_dimension(t: SimpleLieType, lam: Sequence[int]) -> int:
    """Weyl dimension formula ``prod (lam+rho|a) / (rho|a)``."""
    rs = root_system(t)
    lam = _check_dominant(t, lam)
    shifted = tuple(x + 1 for x in lam)
    num = Fraction(1)
    for a in rs.positive_root_labels:
        num *= rs.pair(shifted, a) / rs.pair(rs.rho_labels, a)
    assert num.denominator == 1
    return int(num)


def _dominant_weights_below(rs: RootSystem, lam: Weight) -> list[Weight]:
    """Dominant weights of V(lam), via chains of positive-root subtractions."""
    seen = {lam}
    layer = [lam]
    roots = rs.positive_root_labels
    while layer:
        nxt = []
        for mu in layer:
            for a in roots:
                nu = tuple(m - x for m, x in zip(mu, a))
                if min(nu) >= 0 and nu not in seen:
                    seen.add(nu)
                    nxt.append(nu)
        layer = nxt
    return list(seen)


def _depth(rs: RootSystem, lam: Weight, mu: Weight, inv_cartan) -> int:
    diff = [a - b for a, b in zip(lam, mu)]
    n = rs.rank
    total = Fraction(0)
    for j in range(n):
        total += sum(diff[i] * inv_cartan[i][j] for i in range(n))
    assert total.denominator == 1
    return int(total)


@lru_cache(maxsize=512)
def dominant_character(t: SimpleLieType, lam: Weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of V(lam) by Freudenthal."""
    rs = root_system(t)
    lam = _check_dominant(t, lam)
    inv = rational_inverse(rs.cartan)
    dom = _dominant_weights_below(rs, lam)
    dom.sort(key=lambda mu: _depth(rs, lam, mu, inv))
    rho = rs.rho_labels
    lr = tuple(a + b for a, b in zip(lam, rho))
    top = rs.pair(lr, lr)
    roots = rs.positive_root_labels
    mult: dict[Weight, int] = {lam: 1}
    for mu in dom[1:]:
        acc = Fraction(0)
        for a in roots:
            k = 1
            while True:
                nu = tuple(m + k * x for m, x in zip(mu, a))
                m_nu = mult.get(to_dominant(rs, nu), 0)
                if m_nu == 0:
                    break
                acc += m_nu * rs.pair(nu, a)
                k += 1
        mr = tuple(a + b for a, b in zip(mu, rho))
        val = 2 * acc / (top - rs.pair(mr, mr))
        assert val.denominator == 1
        if val:
            mult[mu] = int(val)
    return mult


def weight_system(t: SimpleLieType, lam: Sequence[int], *, max_size: int = 250_000
                  ) -> Counter:
    """All weights of V(lam) with multiplicity (Dynkin labels).

    Refuses modules larger than ``max_size``; use :func:`dominant_character`
    and :func:`pairing_extremes` for those.
    """
    rs = root_system(t)
    lam = _check_dominant(t, lam)
    d = weyl_dimension(t, lam)
    if d > max_size:
        raise DomainError(f"V({lam}) of {t} has dimension {d} > {max_size}")
    out: Counter = Counter()
    for nu, m in dominant_character(t, lam).items():
        for mu in weyl_orbit(rs, nu):
            out[mu] = m
    return out


def pairing_extremes(t: SimpleLieType, lam: Sequence[int]) -> tuple[Fraction, Fraction]:
    return _pairing_extremes(t, tuple(lam))


@lru_cache(maxsize=None)
def _pairing_extremes(t: SimpleLieType, lam: Weight) -> tuple[Fraction, Fraction]:
    """(min, max) of ``(rho|mu)`` over the weights mu of V(lam).

    On each Weyl orbit the maximum sits at the dominant element and the
    minimum at the antidominant one.  The dominant weights of V(lam) are lam
    and those of V(lam - a) for positive roots a with lam - a dominant, so the
    extremes recurse over that poset and are shared between weights.
    """
    rs = root_system(t)
    lam = _check_dominant(t, lam)
    lo = rs.rho_pair(to_antidominant(rs, lam))
    hi = rs.rho_pair(lam)
    for a in rs.positive_root_labels:
        nu = tuple(m - x for m, x in zip(lam, a))
        if min(nu) >= 0:
            l2, h2 = _pairing_extremes(t, nu)
            lo, hi = min(lo, l2), max(hi, h2)
    return lo, hi


def weyl_group_order(t: SimpleLieType) -> int:
    f, n = t.family, t.rank
    if f == "A":
        return factorial(n + 1)
    if f in "BC":
        return 2 ** n * factorial(n)
    if f == "D":
        return 2 ** (n - 1) * factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(f, n)]


def kac_labels(t: SimpleLieType) -> Weight:
    """Coefficients of the highest root in the simple roots."""
    return root_system(t).highest_root_coeffs


def rho_over_dual_coxeter(t: SimpleLieType, level: int) -> Weight | None:
    """``level * rho / h^vee`` in Dynkin labels if it is integral, else None."""
    h = algebra_info(t).dual_coxeter
    if level % h:
        return None
    return (level // h,) * t.rank


def parse_weight(text: str, t: SimpleLieType) -> Weight:
    """Parse Dynkin labels written as ``1,0,2`` or ``(1,0,2)``."""
    parts = [p for p in re.split(r"[\s,()\[\]]+", text) if p]
    try:
        lam = tuple(int(p) for p in parts)
    except ValueError:
        raise DomainError(f"cannot parse weight {text!r}") from None
    return _check_dominant(t, lam)


def product(xs: Iterable[int]) -> int:
    return prod(xs)
