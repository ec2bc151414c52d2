"""Frame shapes of Co_0 elements and the class table with nonzero fixed space.

A frame shape ``prod n^{m_n}`` stands for the characteristic polynomial
``prod (x^n - 1)^{m_n}`` on the 24-dimensional space.  Internally every
shape is also kept as cyclotomic multiplicities ``a_d`` (the power of the
d-th cyclotomic polynomial), with ``a_d = sum_{d | n} m_n``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm
from typing import Mapping

from sympy import divisors, mobius, totient

from .errors import DomainError, NotFound

DEGREE = 24


def _clean(m: Mapping[int, int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((int(n), int(e)) for n, e in m.items() if e))


@dataclass(frozen=True)
class CycloMultiset:
    a: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        a = _clean(dict(self.a))
        object.__setattr__(self, "a", a)
        if any(e < 0 for _, e in a):
            raise DomainError("cyclotomic multiplicities must be non-negative")
        deg = sum(int(totient(d)) * e for d, e in a)
        if deg != DEGREE:
            raise DomainError(f"cyclotomic degree is {deg}, not {DEGREE}")

    @classmethod
    def of(cls, a: Mapping[int, int]) -> "CycloMultiset":
        return cls(tuple(a.items()))

    def get(self, d: int) -> int:
        return dict(self.a).get(d, 0)

    @property
    def order(self) -> int:
        return lcm(*(d for d, _ in self.a))


@dataclass(frozen=True)
class FrameShape:
    m: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        m = _clean(dict(self.m))
        object.__setattr__(self, "m", m)
        if any(n < 1 for n, _ in m):
            raise DomainError("frame shape indices must be positive")
        deg = sum(n * e for n, e in m)
        if deg != DEGREE:
            raise DomainError(f"frame shape has degree {deg}, not {DEGREE}")

    @classmethod
    def of(cls, m: Mapping[int, int]) -> "FrameShape":
        return cls(tuple(m.items()))

    @classmethod
    def parse(cls, text: str) -> "FrameShape":
        """Parse ``1^8 4^8 / 2^8`` (exponents default to 1)."""
        parts = text.split("/")
        if len(parts) > 2 or not parts[0].strip():
            raise DomainError(f"cannot parse frame shape {text!r}")
        m: dict[int, int] = {}
        for sign, part in zip((1, -1), parts):
            for tok in part.split():
                mt = re.fullmatch(r"(\d+)(?:\^\{?(\d+)\}?)?", tok)
                if not mt:
                    raise DomainError(f"cannot parse frame shape token {tok!r}")
                n, e = int(mt.group(1)), int(mt.group(2) or 1)
                m[n] = m.get(n, 0) + sign * e
        return cls.of(m)

    def __str__(self) -> str:
        num = " ".join(f"{n}^{e}" for n, e in self.m if e > 0)
        den = " ".join(f"{n}^{-e}" for n, e in self.m if e < 0)
        return f"{num} / {den}" if den else num

    def get(self, n: int) -> int:
        return dict(self.m).get(n, 0)

    @property
    def order(self) -> int:
        return to_cyclotomic(self).order


def to_cyclotomic(f: FrameShape) -> CycloMultiset:
    """``a_d = sum over multiples n of d of m_n``, since x^n - 1 = prod_{d|n} Phi_d."""
    a: dict[int, int] = {}
    for n, e in f.m:
        for d in divisors(n):
            a[int(d)] = a.get(int(d), 0) + e
    if any(v < 0 for v in a.values()):
        raise DomainError(f"{f} is not a characteristic polynomial (negative cyclotomic power)")
    return CycloMultiset.of(a)


def from_cyclotomic(c: CycloMultiset) -> FrameShape:
    """Moebius inversion ``m_n = sum_{n | d} mu(d/n) a_d``."""
    a = dict(c.a)
    top = max(a)
    m = {}
    for n in range(1, top + 1):
        v = sum(int(mobius(d // n)) * a.get(d, 0) for d in range(n, top + 1, n))
        if v:
            m[n] = v
    f = FrameShape.of(m)
    if to_cyclotomic(f) != c:
        raise DomainError("no frame-shape form")
    return f


def fixed_dim(f: FrameShape) -> int:
    return sum(e for _, e in f.m)


def trace(f: FrameShape) -> int:
    return f.get(1)


def eig_mult(f: FrameShape, r: int) -> int:
    """Multiplicity of a primitive r-th root of unity: ``sum_{r | n} m_n``."""
    if r < 1:
        raise DomainError("R must be positive")
    return sum(e for n, e in f.m if n % r == 0)


def power_cyclotomic(c: CycloMultiset, k: int) -> CycloMultiset:
    """Phi_d^a under x -> x^k: a phi(d)/phi(d') copies of Phi_{d'}, d' = d / gcd(d, k)."""
    out: dict[int, int] = {}
    for d, e in c.a:
        d2 = d // gcd(d, k)
        out[d2] = out.get(d2, 0) + e * int(totient(d)) // int(totient(d2))
    return CycloMultiset.of(out)


def power(f: FrameShape, k: int) -> FrameShape:
    if k < 1:
        raise DomainError("power exponent must be positive")
    return from_cyclotomic(power_cyclotomic(to_cyclotomic(f), k))


# Classes with nonzero fixed space (names as in Harada-Lang), plus 1A.
_TABLE = """
1A 1^24 24
2A 1^8 2^8 16
-2A 2^16/1^8 8
2C 2^12 12
3B 1^6 3^6 12
3C 3^9/1^3 6
3D 3^8 8
-4A 1^8 4^8/2^8 8
4B 4^8/2^4 4
4C 1^4 2^2 4^4 10
-4C 2^6 4^4/1^4 6
4D 2^4 4^4 8
4F 4^6 6
5B 1^4 5^4 8
5C 5^5/1^1 4
6C 1^4 2^1 6^5/3^4 6
-6C 2^5 3^4 6^1/1^4 6
-6D 1^5 3^1 6^4/2^4 6
6E 1^2 2^2 3^2 6^2 8
-6E 2^4 6^4/1^2 3^2 4
6F 3^3 6^3/1^1 2^1 4
-6F 1^1 6^6/2^2 3^3 2
6G 2^3 6^3 6
6I 6^4 4
7B 1^3 7^3 6
8B 2^4 8^4/4^4 4
-8C 1^4 8^4/2^2 4^2 4
8D 8^4/4^2 2
8E 1^2 2^1 4^1 8^2 6
-8E 2^3 4^1 8^2/1^2 4
8F 4^2 8^2 4
9B 9^3/3^1 2
9C 1^3 9^3/3^2 4
10D 1^2 2^1 10^3/5^2 4
-10D 2^3 5^2 10^1/1^2 4
-10E 1^3 5^1 10^2/2^2 4
10F 2^2 10^2 4
11A 1^2 11^2 4
-12D 2^1 3^3 12^3/1^1 4^1 6^3 2
-12E 1^2 3^2 4^2 12^2/2^2 6^2 4
12G 4^2 12^2/2^1 6^1 2
12H 2^3 6^1 12^2/1^1 3^1 4^2 2
-12H 1^1 2^2 3^1 12^2/4^2 4
12I 1^2 4^1 6^2 12^1/3^2 4
-12I 2^2 3^2 4^1 12^1/1^2 4
12J 2^1 4^1 6^1 12^1 4
-12K 1^3 12^3/2^1 3^1 4^1 6^1 2
12M 12^2 2
14B 1^1 2^1 7^1 14^1 4
-14B 2^2 14^2/1^1 7^1 2
15D 1^1 3^1 5^1 15^1 4
15E 1^2 15^2/3^1 5^1 2
16A 2^2 16^2/4^1 8^1 2
-16B 1^2 16^2/2^1 8^1 2
-18B 1^2 9^1 18^1/2^1 3^1 2
18C 1^1 2^1 18^2/6^1 9^1 2
-18C 2^2 9^1 18^1/1^1 6^1 2
20B 4^1 20^1 2
20C 1^1 2^1 10^1 20^1/4^1 5^1 2
-20C 2^2 5^1 20^1/1^1 4^1 2
21C 3^1 21^1 2
22A 2^1 22^1 2
23A 1^1 23^1 2
23B 1^1 23^1 2
24E 2^1 6^1 8^1 24^1/4^1 12^1 2
24F 1^1 4^1 6^1 24^1/3^1 8^1 2
-24F 2^1 3^1 4^1 24^1/1^1 8^1 2
-28A 1^1 4^1 7^1 28^1/2^1 14^1 2
30D 1^1 6^1 10^1 15^1/3^1 5^1 2
-30D 2^1 3^1 5^1 30^1/1^1 15^1 2
-30E 2^1 3^1 5^1 30^1/6^1 10^1 2
"""


@dataclass(frozen=True)
class ClassRow:
    name: str
    shape: FrameShape
    fixed_dim: int

    @property
    def order(self) -> int:
        """Element order read off the class name."""
        return int(re.match(r"-?(\d+)", self.name).group(1))


@lru_cache(maxsize=None)
def class_table() -> tuple[ClassRow, ...]:
    """The table, validated on load."""
    rows = []
    for line in _TABLE.strip().splitlines():
        name, *rest = line.split()
        fd = int(rest[-1])
        shape = FrameShape.parse(" ".join(rest[:-1]))
        row = ClassRow(name, shape, fd)
        if fixed_dim(shape) != fd:
            raise AssertionError(f"fixed dim of {name} disagrees with its shape")
        c = to_cyclotomic(shape)  # raises on a negative cyclotomic power
        if c.order != row.order:
            raise AssertionError(f"order of {name} disagrees with its shape")
        rows.append(row)
    return tuple(rows)


def class_row(name: str) -> ClassRow:
    for r in class_table():
        if r.name == name:
            return r
    raise NotFound(f"no class named {name!r}")


def classify_shape(f: FrameShape) -> tuple[str, ...]:
    """Class names with this shape (two names only for 1^1 23^1)."""
    names = tuple(r.name for r in class_table() if r.shape == f)
    if not names:
        raise NotFound(f"frame shape {f} is not in the table")
    return names


def chi(name: str) -> int:
    """Value of the 24-dimensional character on a class."""
    return trace(class_row(name).shape)


def power_class(name: str, k: int) -> str:
    names = classify_shape(power(class_row(name).shape, k))
    if len(names) > 1:
        # 23A and 23B are not told apart by frame shapes; a power prime to 23
        # is treated as staying in the same class
        return name if name in names else names[0]
    return names[0]
