"""Niemeier lattices from glue codes, their Weyl vectors, and the Leech lattice
as rho^perp / Z rho inside E + II_{1,1}."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import DomainError
from .intmat import hnf, rational_inverse
from .lattice import (
    GramLattice,
    determinant,
    direct_sum,
    is_even,
    is_leech,
    lll,
    pi11,
    quotient_by_isotropic,
    short_vectors,
)
from .lie import SimpleLieType, algebra_info, root_system

# Glue generators, one word per generator, letters per component in the
# listed order.  Letter conventions: A_n [i] = varpi_i; D_n [1] = varpi_n,
# [2] = varpi_1, [3] = varpi_{n-1}; E6 [1] = varpi_1, [2] = varpi_6;
# E7 [1] = varpi_7.  Data from the standard tables of Niemeier glue codes.


def _cyc(head: list[int], tail: str) -> list[list[int]]:
    t = [int(c) for c in tail]
    return [head + t[-s:] + t[:-s] if s else head + t for s in range(len(t))]


def _f4_closure(words: list[list[int]]) -> list[list[int]]:
    omega = {0: 0, 1: 2, 2: 3, 3: 1}
    out = list(words)
    for w in words:
        out.append([omega[x] for x in w])
    return out


_GLUE: dict[str, tuple[str, list[list[int]]]] = {
    "D24": ("D24", [[1]]),
    "D16+E8": ("D16 E8", [[1, 0]]),
    "E8^3": ("E8 E8 E8", []),
    "A24": ("A24", [[5]]),
    "D12^2": ("D12 D12", [[1, 2], [2, 1]]),
    "A17+E7": ("A17 E7", [[3, 1]]),
    "D10+E7^2": ("D10 E7 E7", [[1, 1, 0], [3, 0, 1]]),
    "A15+D9": ("A15 D9", [[2, 1]]),
    "D8^3": ("D8 D8 D8", [[1, 2, 2], [2, 1, 2], [2, 2, 1]]),
    "A12^2": ("A12 A12", [[1, 5]]),
    "A11+D7+E6": ("A11 D7 E6", [[1, 1, 1]]),
    "E6^4": ("E6 E6 E6 E6", _cyc([1], "012")),
    "A9^2+D6": ("A9 A9 D6", [[2, 4, 0], [5, 0, 1], [0, 5, 3]]),
    "D6^4": ("D6 D6 D6 D6", [[0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2],
                             [1, 0, 3, 2], [1, 2, 0, 3], [1, 3, 2, 0],
                             [2, 0, 1, 3], [2, 1, 3, 0], [2, 3, 0, 1],
                             [3, 0, 2, 1], [3, 1, 0, 2], [3, 2, 1, 0]]),
    "A8^3": ("A8 A8 A8", [[1, 1, 4], [4, 1, 1], [1, 4, 1]]),
    "A7^2+D5^2": ("A7 A7 D5 D5", [[1, 1, 1, 2], [1, 7, 2, 1]]),
    "A6^4": ("A6 A6 A6 A6", _cyc([1], "216")),
    "A5^4+D4": ("A5 A5 A5 A5 D4", [[2] + w + [0] for w in ([0, 2, 4], [4, 0, 2], [2, 4, 0])]
                + [[3, 3, 0, 0, 1], [3, 0, 3, 0, 2], [3, 0, 0, 3, 3]]),
    # the D4^6 code is the hexacode: closed under F4 scalars as well as sums
    "D4^6": ("D4 D4 D4 D4 D4 D4", _f4_closure([[1] * 6] + _cyc([0], "02332"))),
    "A4^6": ("A4 A4 A4 A4 A4 A4", _cyc([1], "01441")),
    "A3^8": (" ".join(["A3"] * 8), _cyc([3], "2001011")),
    "A2^12": (" ".join(["A2"] * 12), _cyc([2], "11211122212")),
    "A1^24": (" ".join(["A1"] * 24), _cyc([1], "00000101001100110101111")),
}


@dataclass(frozen=True, order=True)
class NiemeierName:
    components: tuple[SimpleLieType, ...]

    def __post_init__(self) -> None:
        comps = tuple(sorted(self.components))
        object.__setattr__(self, "components", comps)
        if not comps or any(not t.simply_laced for t in comps):
            raise DomainError("Niemeier components must be of type A, D or E")
        if sum(t.rank for t in comps) != 24:
            raise DomainError("Niemeier root systems have total rank 24")
        hs = {algebra_info(t).coxeter for t in comps}
        if len(hs) != 1:
            raise DomainError("Niemeier components share one Coxeter number")
        if str(self) not in _GLUE:
            raise DomainError(f"{self} is not a Niemeier root system")

    @classmethod
    def parse(cls, text: str) -> "NiemeierName":
        comps: list[SimpleLieType] = []
        for part in re.split(r"\s*\+\s*", text.strip()):
            m = re.fullmatch(r"([A-Ga-g]_?\d+)(?:\^(\d+))?", part)
            if not m:
                raise DomainError(f"cannot parse Niemeier name {text!r}")
            comps += [SimpleLieType.parse(m.group(1))] * int(m.group(2) or 1)
        return cls(tuple(comps))

    def __str__(self) -> str:
        out = []
        seen: dict[SimpleLieType, int] = {}
        for t in self.components:
            seen[t] = seen.get(t, 0) + 1
        for t, c in seen.items():
            out.append(f"{t}^{c}" if c > 1 else str(t))
        return "+".join(out)

    @property
    def coxeter(self) -> int:
        return algebra_info(self.components[0]).coxeter


def all_names() -> list[NiemeierName]:
    return sorted((NiemeierName.parse(k) for k in _GLUE), key=lambda n: (n.coxeter, str(n)))


def _glue_weight(t: SimpleLieType, letter: int) -> int | None:
    """Index (0-based) of the fundamental weight for a glue letter."""
    if letter == 0:
        return None
    f, n = t.family, t.rank
    if f == "A":
        return letter - 1
    if f == "D":
        return {1: n - 1, 2: 0, 3: n - 2}[letter]
    if f == "E" and n == 6:
        return {1: 0, 2: 5}[letter]
    if f == "E" and n == 7:
        return {1: 6}[letter]
    raise DomainError(f"no glue letter {letter} for {t}")


@dataclass(frozen=True)
class NiemeierData:
    name: NiemeierName
    order: tuple[SimpleLieType, ...]
    root_gram: tuple[tuple[int, ...], ...]
    basis: tuple[tuple[Fraction, ...], ...]  # lattice basis in simple-root coordinates
    lattice: GramLattice
    weyl_root_coords: tuple[Fraction, ...]
    weyl_vector: tuple[int, ...]  # in lattice-basis coordinates
    simple_roots: tuple[tuple[int, ...], ...]  # in lattice-basis coordinates


@lru_cache(maxsize=None)
def niemeier_data(name: NiemeierName) -> NiemeierData:
    order_text, words = _GLUE[str(name)]
    order = tuple(SimpleLieType.parse(x) for x in order_text.split())
    n = 24
    offs = []
    off = 0
    cartan = [[0] * n for _ in range(n)]
    inv_blocks = []
    for t in order:
        a = root_system(t).cartan
        for i in range(t.rank):
            for j in range(t.rank):
                cartan[off + i][off + j] = a[i][j]
        inv_blocks.append(rational_inverse(a))
        offs.append(off)
        off += t.rank
    gens: list[list[Fraction]] = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for w in words:
        v = [Fraction(0)] * n
        for comp, letter in enumerate(w):
            k = _glue_weight(order[comp], letter)
            if k is None:
                continue
            row = inv_blocks[comp][k]
            for j, x in enumerate(row):
                v[offs[comp] + j] += x
        gens.append(v)
    den = 1
    for v in gens:
        for x in v:
            den = lcm(den, x.denominator)
    h = hnf([[int(x * den) for x in v] for v in gens])
    basis = [[Fraction(x, den) for x in row] for row in h]
    gram = [[sum(b1[i] * cartan[i][j] * b2[j] for i in range(n) if b1[i]
                 for j in range(n) if b2[j]) for b2 in basis] for b1 in basis]
    lat = GramLattice.from_rows(gram)
    if not (is_even(lat) and determinant(lat) == 1):
        raise AssertionError(f"glue data for {name} does not give an even unimodular lattice")
    # rho = sum of fundamental weights, in simple-root coordinates
    rho = []
    for comp, t in enumerate(order):
        inv = inv_blocks[comp]
        rho += [sum(inv[i][j] for i in range(t.rank)) for j in range(t.rank)]
    binv = rational_inverse(basis)

    def to_lattice(v):
        c = [sum(v[i] * binv[i][j] for i in range(n) if v[i]) for j in range(n)]
        if any(x.denominator != 1 for x in c):
            raise AssertionError(f"vector {v} is not in the {name} lattice")
        return tuple(int(x) for x in c)

    weyl = to_lattice(rho)
    simple = tuple(to_lattice([Fraction(int(i == j)) for j in range(n)]) for i in range(n))
    return NiemeierData(name, order, tuple(map(tuple, cartan)), tuple(map(tuple, basis)),
                        lat, tuple(rho), weyl, simple)


def build_niemeier(name: NiemeierName) -> GramLattice:
    return niemeier_data(name).lattice


def niemeier_weyl_vector(name: NiemeierName) -> tuple[int, ...]:
    """The Weyl vector in lattice coordinates, checked against 2h(h+1)."""
    d = niemeier_data(name)
    lat = d.lattice
    h = name.coxeter
    nrm = lat.norm(d.weyl_vector)
    if nrm != 2 * h * (h + 1):
        raise AssertionError(f"Weyl vector norm {nrm} != 2h(h+1) for {name}")
    for b in d.simple_roots:
        if lat.form(d.weyl_vector, b) != 1:
            raise AssertionError(f"Weyl vector does not pair to 1 with a simple root of {name}")
    return d.weyl_vector


def weyl_norm_from_strange_formula(name: NiemeierName) -> Fraction:
    """sum over components of h dim / 12 (independent of the glue)."""
    return sum((Fraction(algebra_info(t).dual_coxeter * algebra_info(t).dim, 12)
                for t in name.components), Fraction(0))


def lorentzian_vector(name: NiemeierName) -> tuple[GramLattice, tuple[int, ...]]:
    """``E + II_{1,1}`` and the isotropic vector ``(rho, h, h + 1)``."""
    e = build_niemeier(name)
    h = name.coxeter
    m = direct_sum(e, pi11())
    rho = niemeier_weyl_vector(name) + (h, h + 1)
    if m.norm(rho) != 0:
        raise AssertionError("(rho, h, h+1) is not isotropic")
    return m, rho


@lru_cache(maxsize=None)
def hole_construction(name: NiemeierName) -> GramLattice:
    """``rho^perp / Z rho``, LLL-reduced."""
    m, rho = lorentzian_vector(name)
    q = quotient_by_isotropic(m, rho)
    red, _ = lll(q)
    return red


@dataclass(frozen=True)
class NiemeierReport:
    name: str
    h: int
    root_count: int
    weyl_norm: int
    leech_certified: bool
    norm4_count: int | None = None

    def as_dict(self) -> dict:
        d = {"name": self.name, "h": self.h, "root_count": self.root_count,
             "weyl_norm": self.weyl_norm, "leech_certified": self.leech_certified}
        if self.norm4_count is not None:
            d["norm4_count"] = self.norm4_count
        return d


def niemeier_report(name: NiemeierName, *, deep: bool = False) -> NiemeierReport:
    e = build_niemeier(name)
    roots = short_vectors(e, 2).count
    w = niemeier_weyl_vector(name)
    leech = hole_construction(name)
    cert = is_leech(leech)
    n4 = short_vectors(leech, 4).by_norm().get(Fraction(4), 0) if deep else None
    return NiemeierReport(str(name), name.coxeter, roots, int(e.norm(w)), cert, n4)
