"""Inner products of linear characters with the 24-dimensional character of
Co_0 over abelian subgroups of rank at most two."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, lcm
from typing import Iterator, Mapping

from sympy import cyclotomic_poly, symbols, totient

from .errors import DomainError, NotFound
from .frames import chi, class_row, power_class

_x = symbols("x")


@lru_cache(maxsize=None)
def _phi_coeffs(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    return tuple(int(c) for c in reversed(cyclotomic_poly(n, _x, polys=True).all_coeffs()))


@dataclass(frozen=True)
class Cyclo:
    """An element of Q(zeta_n) in the power basis 1, z, ..., z^{phi(n)-1}."""

    n: int
    c: tuple[Fraction, ...]

    @classmethod
    def zero(cls, n: int) -> "Cyclo":
        return cls(n, (Fraction(0),) * int(totient(n)))

    @classmethod
    def root(cls, n: int, k: int) -> "Cyclo":
        """zeta_n^k."""
        v = [Fraction(0)] * max(n, 1)
        v[k % n] = Fraction(1)
        return cls._reduce(n, v)

    @classmethod
    def _reduce(cls, n: int, v: list[Fraction]) -> "Cyclo":
        phi = _phi_coeffs(n)
        deg = len(phi) - 1
        v = list(v)
        for top in range(len(v) - 1, deg - 1, -1):
            a = v[top]
            if a:
                # z^top = z^{top-deg} * z^deg and Phi_n is monic
                for i, p in enumerate(phi):
                    v[top - deg + i] -= a * p
        v = v[:deg] + [Fraction(0)] * (deg - len(v))
        return cls(n, tuple(v))

    def __add__(self, other: "Cyclo") -> "Cyclo":
        return Cyclo(self.n, tuple(a + b for a, b in zip(self.c, other.c)))

    def scale(self, r) -> "Cyclo":
        return Cyclo(self.n, tuple(a * r for a in self.c))

    def rational(self) -> Fraction | None:
        if any(self.c[1:]):
            return None
        return self.c[0]

    def __str__(self) -> str:
        terms = [f"{a}" if i == 0 else f"{a}*z^{i}" for i, a in enumerate(self.c) if a]
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class LinearCharacter:
    """theta(tau^i sigma^j) = zeta_R^(tau_exp i + sigma_exp j)."""

    R: int
    tau_exp: int = 1
    sigma_exp: int = 0

    def __post_init__(self) -> None:
        if self.R < 1:
            raise DomainError("R must be positive")

    def value(self, i: int, j: int) -> Cyclo:
        return Cyclo.root(self.R, self.tau_exp * i + self.sigma_exp * j)


def _order(i: int, j: int, a: int, b: int) -> int:
    return lcm(b // gcd(i, b), a // gcd(j, a))


@dataclass(frozen=True)
class AbelianSubgroup:
    """G = <tau> x <sigma> with |tau| = b, |sigma| = a, a | b.

    ``classes`` maps the label (i, j) of tau^i sigma^j to a class name.
    """

    a: int
    b: int
    classes: tuple[tuple[tuple[int, int], str], ...]

    def __post_init__(self) -> None:
        if self.a < 1 or self.b % self.a:
            raise DomainError("need invariant factors a | b")
        cl = dict(self.classes)
        labels = set(self.labels())
        if set(cl) != labels:
            raise DomainError("class assignment is incomplete")
        if cl[(0, 0)] != "1A":
            raise DomainError("the identity must be in class 1A")
        for (i, j), name in cl.items():
            row = class_row(name)
            if row.order != _order(i, j, self.a, self.b):
                raise DomainError(f"class {name} has the wrong order for tau^{i} sigma^{j}")
        object.__setattr__(self, "classes", tuple(sorted(cl.items())))

    @classmethod
    def of(cls, a: int, b: int, classes: Mapping[tuple[int, int], str]) -> "AbelianSubgroup":
        return cls(a, b, tuple(classes.items()))

    def labels(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.b) for j in range(self.a)]

    @property
    def order(self) -> int:
        return self.a * self.b

    def cls(self, i: int, j: int) -> str:
        return dict(self.classes)[(i % self.b, j % self.a)]

    def power_consistent(self) -> bool:
        for (i, j), name in self.classes:
            o = class_row(name).order
            for k in range(2, o):
                if self.cls(k * i, k * j) != power_class(name, k):
                    return False
        return True

    def multiset(self) -> Counter:
        return Counter(name for _, name in self.classes)


@dataclass(frozen=True)
class InnerProduct:
    value: Cyclo
    scaled: int | None  # |G| * value when that is an integer

    @property
    def rational(self) -> Fraction | None:
        return self.value.rational()


def inner_product(g: AbelianSubgroup, theta: LinearCharacter) -> InnerProduct:
    """(1/|G|) sum_g theta(g) chi(g^{-1})."""
    total = Cyclo.zero(theta.R)
    for i, j in g.labels():
        name = g.cls(i, j)
        inv = g.cls(-i, -j)
        if chi(inv) != chi(name):
            raise AssertionError(f"chi is not real on {name}")
        total = total + theta.value(i, j).scale(chi(inv))
    q = total.rational()
    scaled = int(q) if q is not None and q.denominator == 1 else None
    return InnerProduct(total.scale(Fraction(1, g.order)), scaled)


def all_linear_characters(g: AbelianSubgroup) -> list[LinearCharacter]:
    """Every linear character, written over R = b."""
    step = g.b // g.a
    return [LinearCharacter(g.b, t, s * step) for t in range(g.b) for s in range(g.a)]


# ---------------------------------------------------------------------------
# rank-two subgroups fixing at least a 6-dimensional subspace

_ROWS = """
1 6 2 2 1A 2A -2A 2C
2 6 2 2 1A 2C 2C 2C
3 6 2 4 1A 2A 2A -2A 4C 4C 4C 4C
4 6 2 4 1A 2A 2C 2C 4C 4C 4C 4C
5 6 2 4 1A 2A 2A 2C 4C 4C 4D 4D
6 6 2 4 1A 2A 2A 2A 4C 4C -4C -4C
7 6 2 4 1A 2A 2A 2A 4D 4D 4D 4D
8 6 3 3 1A 3B 3B 3B 3B 3B 3B 3C 3C
9 6 2 6 1A 2A 2A 2A 3B 3B 6E 6E 6E 6E 6E 6E
10 6 4 4 1A 2A 2A 2A 4C 4C 4C 4C 4C 4C 4C 4C 4C 4C 4C 4C
11 8 2 2 1A 2A 2C 2C
12 8 2 2 1A 2A 2A -2A
13 8 2 4 1A 2A 2A 2A 4C 4C 4C 4C
14 8 2 4 1A 2A 2A -2A -4A -4A -4A -4A
15 8 3 3 1A 3B 3B 3B 3B 3B 3B 3B 3B
16 10 2 2 1A 2A 2A 2C
17 12 2 2 1A 2A 2A 2A
"""

# dimension-4 census: structure and number of conjugacy classes only
DIM4_COUNTS = {(2, 2): 3, (2, 4): 18, (3, 3): 2, (2, 6): 8, (4, 4): 10,
               (2, 8): 8, (3, 6): 6, (2, 12): 1, (5, 5): 1, (3, 9): 1}


@dataclass(frozen=True)
class SubgroupRow:
    number: int
    dim: int
    a: int
    b: int
    classes: tuple[str, ...]

    def multiset(self) -> Counter:
        return Counter(self.classes)


@lru_cache(maxsize=None)
def subgroup_rows() -> tuple[SubgroupRow, ...]:
    rows = []
    for line in _ROWS.strip().splitlines():
        num, dim, a, b, *names = line.split()
        row = SubgroupRow(int(num), int(dim), int(a), int(b), tuple(names))
        if len(names) != row.a * row.b:
            raise AssertionError(f"row {num} lists {len(names)} elements")
        rows.append(row)
    return tuple(rows)


def subgroup_row(number: int) -> SubgroupRow:
    for r in subgroup_rows():
        if r.number == number:
            return r
    raise NotFound(f"no subgroup row {number}")


def assignments(row: SubgroupRow, *, pins: Mapping[tuple[int, int], str] | None = None
                ) -> Iterator[AbelianSubgroup]:
    """Class assignments to tau^i sigma^j matching the row's multiset, element
    orders, and the power maps on frame shapes."""
    a, b = row.a, row.b
    labels = sorted(((i, j) for i in range(b) for j in range(a)),
                    key=lambda l: (-_order(l[0], l[1], a, b), l))
    need = row.multiset()
    pins = dict(pins or {})

    def rec(k: int, cur: dict, left: Counter) -> Iterator[dict]:
        if k == len(labels):
            yield dict(cur)
            return
        lab = labels[k]
        if lab in cur:
            yield from rec(k + 1, cur, left)
            return
        o = _order(lab[0], lab[1], a, b)
        options = [pins[lab]] if lab in pins else sorted(left)
        for name in options:
            if left[name] <= 0 or class_row(name).order != o:
                continue
            # assign lab and everything its powers force
            added = []
            ok = True
            for e in range(1, o + 1):
                target = ((lab[0] * e) % b, (lab[1] * e) % a)
                cname = power_class(name, e) if e < o else "1A"
                if target in cur:
                    if cur[target] != cname:
                        ok = False
                        break
                    continue
                if left[cname] <= 0 or (target in pins and pins[target] != cname):
                    ok = False
                    break
                cur[target] = cname
                left[cname] -= 1
                added.append(target)
            if ok:
                yield from rec(k + 1, cur, left)
            for t in added:
                left[cur.pop(t)] += 1

    seen = set()
    for cl in rec(0, {}, Counter(need)):
        key = tuple(sorted(cl.items()))
        if key in seen:
            continue
        seen.add(key)
        g = AbelianSubgroup(a, b, key)
        if g.power_consistent():
            yield g


def row_subgroup(number: int, *, pins: Mapping[tuple[int, int], str] | None = None
                 ) -> AbelianSubgroup:
    """First consistent assignment for a row (with optional pinned classes)."""
    for g in assignments(subgroup_row(number), pins=pins):
        return g
    raise NotFound(f"no consistent class assignment for row {number} with {pins}")


def fixed_dim_check(g: AbelianSubgroup) -> int:
    """(1/|G|) sum chi(g): the dimension of the fixed space of G."""
    q = inner_product(g, LinearCharacter(1, 0, 0)).rational
    assert q is not None and q.denominator == 1
    return int(q)


# ---------------------------------------------------------------------------
# Z2 x Z4


def z2z4_value(chi_tau2: int, chi_tau2_sigma: int, chi_sigma: int) -> int:
    """8 <theta, chi> = 24 - chi(tau^2) - chi(tau^2 sigma) + chi(sigma)."""
    return 24 - chi_tau2 - chi_tau2_sigma + chi_sigma


@dataclass(frozen=True)
class Z2Z4Result:
    chi_tau2: int
    chi_tau2_sigma: int
    chi_sigma: int
    value: int  # 8 <theta, chi>
    direct: int  # 8 <theta, chi> from the full character sum
    sigma_class: str
    positive: bool


def z2z4_formula(g: AbelianSubgroup) -> Z2Z4Result:
    if (g.a, g.b) != (2, 4):
        raise DomainError(f"expected Z2 x Z4, got Z{g.a} x Z{g.b}")
    t2, t2s, s = chi(g.cls(2, 0)), chi(g.cls(2, 1)), chi(g.cls(0, 1))
    v = z2z4_value(t2, t2s, s)
    ip = inner_product(g, LinearCharacter(4, 1, 0))
    if ip.scaled is None or ip.scaled != v:
        raise AssertionError("the reduced formula disagrees with the full sum")
    return Z2Z4Result(t2, t2s, s, v, ip.scaled, g.cls(0, 1), v > 0)


def z2z4_involution_sweep() -> list[tuple[str, str, str, int]]:
    """All involution classes for tau^2, tau^2 sigma, sigma with sigma != -2A."""
    out = []
    invs = ("2A", "-2A", "2C")
    for a, b, c in product(invs, invs, ("2A", "2C")):
        out.append((a, b, c, z2z4_value(chi(a), chi(b), chi(c))))
    return out
