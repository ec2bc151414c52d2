"""W-element arithmetic for candidate weight-one Lie algebras.

For ``V_1 = sum_j g_{j,k_j}`` the W-element is ``alpha = sum_j rho_j / h_j``
and ``<alpha, alpha> = 2 dim / (dim - 24) = 2 K0 / N0``.  This module derives
``(K0, N0)`` and the divisibility constraints, enumerates candidates that
satisfy them, and evaluates the inequalities that rule out the composite
cases.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Sequence

from sympy import isprime

from .errors import DomainError, LeechBoundary
from .lie import RANK_CAP, SimpleLieType, algebra_info, all_types

CONSTRAINTS = {
    "i": "h/k constant and equal to (dim-24)/24",
    "ii": "K0 > N0",
    "iii": "(K0-N0) | 24",
    "iv": "N0 | h_j for all j",
    "v": "(K0-N0) | k_j for all j",
}


def _level(x) -> Fraction:
    x = Fraction(x)
    if x <= 0:
        raise DomainError(f"level must be positive, got {x}")
    return x


def _fmt_level(k: Fraction) -> str:
    return str(k.numerator) if k.denominator == 1 else f"{k.numerator}/{k.denominator}"


@dataclass(frozen=True, order=True)
class Candidate:
    """A multiset of (simple type, level); levels may be rational."""

    components: tuple[tuple[SimpleLieType, Fraction], ...]

    def __post_init__(self) -> None:
        comps = tuple(sorted((t, _level(k)) for t, k in self.components))
        if not comps:
            raise DomainError("a candidate needs at least one component")
        object.__setattr__(self, "components", comps)
        if self.rank > RANK_CAP:
            raise DomainError(f"rank {self.rank} exceeds 24")
        if self.dim < 24:
            raise DomainError(f"dim V_1 = {self.dim} < 24")

    @classmethod
    def of(cls, *pairs: tuple[SimpleLieType | str, object]) -> "Candidate":
        return cls(tuple((SimpleLieType.parse(t) if isinstance(t, str) else t, k)
                         for t, k in pairs))

    @classmethod
    def parse(cls, text: str) -> "Candidate":
        """Parse ``E8,2+B8,1`` or ``C8,1+F4,1^2``."""
        comps = []
        for part in re.split(r"\s*\+\s*", text.strip()):
            m = re.fullmatch(r"([A-Ga-g]_?\d+)\s*,\s*(\d+(?:/\d+)?)(?:\^(\d+))?", part)
            if not m:
                raise DomainError(f"cannot parse candidate {text!r}")
            t = SimpleLieType.parse(m.group(1))
            comps += [(t, Fraction(m.group(2)))] * int(m.group(3) or 1)
        return cls(tuple(comps))

    def __str__(self) -> str:
        out = []
        i = 0
        c = self.components
        while i < len(c):
            j = i
            while j < len(c) and c[j] == c[i]:
                j += 1
            t, k = c[i]
            s = f"{t},{_fmt_level(k)}"
            out.append(s + (f"^{j - i}" if j - i > 1 else ""))
            i = j
        return "+".join(out)

    @property
    def rank(self) -> int:
        return sum(t.rank for t, _ in self.components)

    @property
    def dim(self) -> int:
        return sum(algebra_info(t).dim for t, _ in self.components)


@dataclass(frozen=True)
class WReport:
    candidate: str
    dim: int
    rank: int
    ratio: Fraction | None  # common h/k, None when it varies
    alpha_norm: Fraction  # 2 dim / (dim - 24)
    alpha_norm_weyl: Fraction  # sum_j k_j dim_j / (12 h_j)
    K0: int
    N0: int
    admissible: bool
    violations: tuple[str, ...]
    T: int  # lcm of r_j h_j
    R_lower: Fraction  # T / N0; N/N0 is a multiple of it
    S: int = 1

    def as_dict(self) -> dict:
        return {
            "candidate": self.candidate, "dim": self.dim, "rank": self.rank,
            "ratio": self.ratio, "alpha_norm": self.alpha_norm,
            "alpha_norm_weyl": self.alpha_norm_weyl, "K0": self.K0, "N0": self.N0,
            "admissible": self.admissible, "violations": list(self.violations),
            "T": self.T, "R_lower": self.R_lower, "S": self.S,
        }


def w_report(c: Candidate) -> WReport:
    dim = c.dim
    if dim == 24:
        raise LeechBoundary("dim V_1 = 24: the Leech case, <alpha,alpha> is undefined")
    q = Fraction(dim, dim - 24)
    K0, N0 = q.numerator, q.denominator
    ratios = [Fraction(algebra_info(t).dual_coxeter) / k for t, k in c.components]
    common = ratios[0] if len(set(ratios)) == 1 else None
    weyl = sum((k * algebra_info(t).dim / (12 * algebra_info(t).dual_coxeter)
                for t, k in c.components), Fraction(0))
    bad = []
    if common is None or common != Fraction(dim - 24, 24):
        bad.append("i")
    if not K0 > N0:
        bad.append("ii")
    if 24 % (K0 - N0):
        bad.append("iii")
    if any(algebra_info(t).dual_coxeter % N0 for t, _ in c.components):
        bad.append("iv")
    if any((k / (K0 - N0)).denominator != 1 for _, k in c.components):
        bad.append("v")
    if not bad:
        assert weyl == 2 * q, "the two routes to <alpha,alpha> disagree"
    t = lcm(*(algebra_info(ty).lacing * algebra_info(ty).dual_coxeter for ty, _ in c.components))
    return WReport(str(c), dim, c.rank, common, 2 * q, weyl, K0, N0, not bad,
                   tuple(bad), t, Fraction(t, N0))


def is_composite(n: int) -> bool:
    return n > 1 and not isprime(n)


@lru_cache(maxsize=None)
def _max_dim(rank: int) -> int:
    """Largest dimension of a semisimple algebra of exactly this rank."""
    if rank == 0:
        return 0
    return max(algebra_info(t).dim + _max_dim(rank - t.rank)
               for t in all_types(rank) if t.rank <= rank)


def _multisets(types: Sequence[SimpleLieType], rank: int, dim: int
               ) -> list[tuple[SimpleLieType, ...]]:
    """All multisets from ``types`` with total rank ``rank`` and dim ``dim``."""
    info = [(algebra_info(t).rank, algebra_info(t).dim) for t in types]
    n = len(types)

    @lru_cache(maxsize=None)
    def feasible(i: int, r: int, d: int) -> bool:
        if r == 0:
            return d == 0
        if i == n or d < 3 * r or d > _max_dim(r):
            return False
        ri, di = info[i]
        c = 0
        while c * ri <= r and c * di <= d:
            if feasible(i + 1, r - c * ri, d - c * di):
                return True
            c += 1
        return False

    out: list[tuple[SimpleLieType, ...]] = []

    def rec(i: int, r: int, d: int, acc: list[SimpleLieType]) -> None:
        if r == 0:
            if d == 0:
                out.append(tuple(acc))
            return
        if not feasible(i, r, d):
            return
        ri, di = info[i]
        c = 0
        while c * ri <= r and c * di <= d:
            rec(i + 1, r - c * ri, d - c * di, acc + [types[i]] * c)
            c += 1

    rec(0, rank, dim, [])
    return out


@dataclass(frozen=True)
class SearchCell:
    K0: int
    N0: int
    dim: int


def search_cells(rank: int, *, strict: bool) -> list[SearchCell]:
    """(K0, N0, dim) triples with (K0-N0) | 24 that the search visits."""
    top = _max_dim(rank)
    hmax = max(algebra_info(t).dual_coxeter for t in all_types(rank))
    cells = []
    for d in (1, 2, 3, 4, 6, 8, 12, 24):
        n0 = 1
        while True:
            dim = 24 + Fraction(24 * n0, d)
            if dim > top or (strict and n0 > hmax):
                break
            if gcd(n0, d) == 1 and dim.denominator == 1:
                cells.append(SearchCell(n0 + d, n0, int(dim)))
            n0 += 1
    return sorted(cells, key=lambda c: (c.dim, c.N0))


def enumerate_candidates(rank: int, *, strict: bool = False, composite_n0: bool = False,
                         composite_k0: bool = False, n0: int | None = None,
                         k0: int | None = None) -> list[Candidate]:
    """Candidates of the given rank whose levels are forced by the dimension.

    Every component gets ``k_j = 24 h_j / (dim - 24)``.  The default keeps
    those satisfying (i)-(iii); ``strict`` also demands (iv) and (v), which
    makes every level an integer.  The composite filters drop cells where
    N0 (resp. K0) is 1 or prime.
    """
    if not 1 <= rank <= RANK_CAP:
        raise DomainError(f"rank must be in 1..24, got {rank}")
    types = [t for t in all_types(rank, canonical=True)]
    out: set[Candidate] = set()
    for cell in search_cells(rank, strict=strict):
        if composite_n0 and not is_composite(cell.N0):
            continue
        if composite_k0 and not is_composite(cell.K0):
            continue
        if n0 is not None and cell.N0 != n0:
            continue
        if k0 is not None and cell.K0 != k0:
            continue
        pool = types
        if strict:
            pool = [t for t in types if algebra_info(t).dual_coxeter % cell.N0 == 0]
        for ms in _multisets(pool, rank, cell.dim):
            comps = tuple((t, Fraction(24 * algebra_info(t).dual_coxeter, cell.dim - 24))
                          for t in ms)
            c = Candidate(comps)
            rep = w_report(c)
            allowed = set() if strict else {"iv", "v"}
            if set(rep.violations) <= allowed:
                out.add(c)
    return sorted(out, key=lambda c: (c.dim, str(c)))


def components_dividing(n0: int, max_rank: int) -> list[SimpleLieType]:
    """Simple types of rank <= max_rank whose dual Coxeter number N0 divides."""
    return [t for t in all_types(max_rank, canonical=True)
            if algebra_info(t).dual_coxeter % n0 == 0]


# ---------------------------------------------------------------------------
# k n (h + 1) = 24 (k + h): the case where every component has h = N0


def simply_laced_decompositions(h: int, n: int) -> list[tuple[SimpleLieType, ...]]:
    """Multisets of A/D/E types with Coxeter number h and total rank n."""
    types = [t for t in all_types(n, canonical=True)
             if t.simply_laced and algebra_info(t).coxeter == h]
    out = []

    def rec(i: int, r: int, acc: list[SimpleLieType]) -> None:
        if r == 0:
            out.append(tuple(acc))
            return
        if i == len(types):
            return
        for c in range(r // types[i].rank + 1):
            rec(i + 1, r - c * types[i].rank, acc + [types[i]] * c)

    rec(0, n, [])
    return out


@dataclass(frozen=True)
class NoOneCase:
    k: int
    h: int
    n: int
    reasons: tuple[str, ...]
    root_systems: tuple[str, ...] = ()


def prop_noone_search(max_h: int = 60) -> dict:
    """Solve k n (h+1) = 24 (k+h) with k | 24, (k, h) = 1, 4 <= n <= 24.

    k = 1 forces n = 24 and the solutions are the Niemeier root systems.
    Every k >= 2 solution is listed with the reasons it cannot occur.
    """
    niemeier: list[str] = []
    excluded: list[NoOneCase] = []
    admissible: list[NoOneCase] = []
    for k in (1, 2, 3, 4, 6, 8, 12, 24):
        for h in range(2, max_h + 1):
            if gcd(k, h) != 1:
                continue
            num, den = 24 * (k + h), k * (h + 1)
            if num % den:
                continue
            n = num // den
            if not 4 <= n <= 24:
                continue
            decs = simply_laced_decompositions(h, n)
            names = tuple("+".join(str(t) for t in d) for d in decs)
            if k == 1:
                niemeier.extend(names)
                continue
            reasons = []
            if k % 2 == 0:
                # only type A has odd h; then n = s(h-1) and 8 | (h-1)(h+1)
                t = k // 2
                if n % (h - 1):
                    reasons.append(f"type A_{h - 1} only, but {h - 1} does not divide n={n}")
                elif (12 * (2 * t + h)) % 8 == 0:
                    reasons.append("mod 8 obstruction fails to apply")
                else:
                    reasons.append("8 | (h-1)(h+1) but 8 does not divide 12(2t+h)")
            if not decs:
                reasons.append(f"no simply-laced root system with h={h} and rank {n}")
            case = NoOneCase(k, h, n, tuple(reasons), names)
            (excluded if not decs else admissible).append(case)
    return {"niemeier": niemeier, "excluded": excluded, "admissible": admissible}


# ---------------------------------------------------------------------------
# the composite cases


@dataclass(frozen=True)
class Inequality:
    """Claim ``lhs >= rhs`` (``lhs > rhs`` when strict) that the case needs."""

    label: str
    lhs: Fraction
    rhs: Fraction
    strict: bool = False

    @property
    def holds(self) -> bool:
        return self.lhs > self.rhs if self.strict else self.lhs >= self.rhs

    def as_dict(self) -> dict:
        return {"label": self.label, "lhs": self.lhs, "rhs": self.rhs,
                "strict": self.strict, "holds": self.holds}


@dataclass(frozen=True)
class CaseReport:
    case: str
    N0: int
    K0: int
    facts: dict = field(default_factory=dict)
    inequalities: tuple[Inequality, ...] = ()

    @property
    def contradiction(self) -> bool:
        return any(not q.holds for q in self.inequalities)

    def as_dict(self) -> dict:
        return {"case": self.case, "N0": self.N0, "K0": self.K0, "facts": self.facts,
                "inequalities": [q.as_dict() for q in self.inequalities],
                "contradiction": self.contradiction}


FINAL_CASES = ("A7,1+D9,2", "C8,1+F4,1^2", "B5,1+E7,2+F4,1", "B8,1+E8,2")


def _pairings(n0: int, k0: int, *, cap: Fraction) -> list[Fraction]:
    """Positive values of (-K0 m + N0 n) / (2 K0) with (m, N0) != 1, (n, K0) != 1,
    N0 not dividing m, K0 not dividing n, and the value at most ``cap``.

    ``m`` runs over one period mod ``2 N0`` (R = 2) and ``n`` over the range
    the cap allows.
    """
    vals = set()
    for m in range(1, 2 * n0):
        if gcd(m, n0) == 1 or m % n0 == 0:
            continue
        lo = (k0 * m) // n0 - 2 * k0
        hi = (k0 * m + 2 * k0 * cap) // n0 + 2
        for n in range(int(lo), int(hi) + 1):
            if gcd(n, k0) == 1 or n % k0 == 0:
                continue
            v = Fraction(-k0 * m + n0 * n, 2 * k0)
            if 0 < v <= cap:
                vals.add(v)
    return sorted(vals)


def _weyl_norm_type_a(q: int) -> Fraction:
    """(rho|rho) for A_q^{24/q}."""
    return Fraction(24, q) * Fraction(q * (q + 1) * (q + 2), 12)


def case_inequality_report(case: str) -> CaseReport:
    """Exact evaluation of the inequalities that exclude a composite case."""
    from .niemeier import all_names

    key = str(Candidate.parse(case)) if "," in case else case
    n0_of = {"A7,1+D9,2": 8, "C8,1+F4,1^2": 9, "B5,1+E7,2+F4,1": 9, "B8,1+E8,2": 15}
    if key in n0_of:
        n0 = n0_of[key]
    elif key in ("8", "9", "15"):
        n0 = int(key)
    else:
        raise DomainError(f"unknown case {case!r}; expected one of {', '.join(FINAL_CASES)}")
    k0 = n0 + 1
    a2 = Fraction(2 * k0, n0)
    niem_h = sorted({nm.coxeter for nm in all_names()})

    if n0 == 8:
        vals = _pairings(8, 9, cap=Fraction(1))
        kmin = vals[0]
        pair = kmin * a2
        # rho of the Niemeier root system: (rho|rho) = 2h(h+1)
        exact = min(pair * pair * 2 * h * (h + 1) for h in niem_h)
        coarse = pair * pair * Fraction(2 * 25, 12)  # h >= 2, dim > 24
        return CaseReport(key, 8, 9, {
            "alpha_norm": a2, "min_coefficient": kmin, "min_simple_pairing": pair},
            (Inequality("<x_i,alpha> >= <alpha/3,alpha> = 3/4", pair, Fraction(3, 4)),
             Inequality("<alpha,alpha> >= (9/16) h dim / 12 > 9/4 (coarse)", a2,
                        Fraction(9, 16) * 4, strict=True),
             Inequality("<alpha,alpha> >= (9/16) 2h(h+1), minimum over Niemeier h", a2, exact)))

    if n0 == 9:
        vals = _pairings(9, 10, cap=Fraction(1))
        kmin, kmax = vals[0], vals[-1]
        height = kmax / kmin  # bound on the height of the highest root
        hmax = 1 + int(height)
        qs = [q for q in range(1, hmax) if 24 % q == 0]
        pair = kmin * a2
        bounds = {q: pair * pair * _weyl_norm_type_a(q) for q in qs}
        ineqs = [Inequality(f"<alpha,alpha> >= 8(q+1)(q+2)/9 at q={q}", a2, b)
                 for q, b in bounds.items()]
        return CaseReport(key, 9, 10, {
            "alpha_norm": a2, "coefficients": vals, "max_height": int(height),
            "coxeter_bound": hmax, "q_values": qs, "min_simple_pairing": pair},
            tuple([Inequality("<x_i,alpha> >= 2/3", pair, Fraction(2, 3))] + ineqs))

    # N0 = 15: values (-16 n + 15 m)/32 with n in the T-index set and m even
    vals = []
    for n in (3, 6, 9, 12, 5, 10):
        for m in range(0, 64, 2):
            if m % 16 == 0:
                continue
            s = -16 * n + 15 * m
            if 0 < s <= 30:
                vals.append(Fraction(s, 32))
    vals = sorted(set(vals))
    pairings = [v * a2 for v in vals]
    pmin, pmax = pairings[0], pairings[-1]
    height = int(pmax / pmin)
    hmax = 1 + height
    qs = [nm.coxeter - 1 for nm in all_names()
          if nm.coxeter <= hmax and all(t.family == "A" for t in nm.components)]
    bounds = {q: pmin * pmin * _weyl_norm_type_a(q) for q in qs}
    surviving = [q for q, b in bounds.items() if a2 >= b]
    j_max = 12
    final = Fraction(1, 5) * (Fraction(2, 5) * j_max + Fraction(4, 5) * j_max
                              + (24 - 2 * j_max) * Fraction(2, 3))
    ineqs = [Inequality(f"<alpha,alpha> >= 8(q+1)(q+2)/25 at q={q}", a2, b)
             for q, b in bounds.items()]
    ineqs.append(Inequality("<alpha,alpha> >= (240-2j)/75 >= 216/75 with q=1, j<=12", a2, final))
    return CaseReport(key, 15, 16, {
        "alpha_norm": a2, "coefficients": vals, "pairings": pairings,
        "coxeter_bound": hmax, "q_values": qs, "q_surviving_first_bound": surviving},
        tuple(ineqs))


def d12_branch_check() -> dict:
    """The N0 even, K0 - N0 = 3 branch: only D12 has 22 | h with rank <= 16."""
    t = SimpleLieType("D", 12)
    dim = algebra_info(t).dim
    derived = Fraction(2 * dim, dim - 24)
    required_n0 = algebra_info(t).dual_coxeter
    return {
        "component": str(t),
        "dim": dim,
        "alpha_norm": derived,
        "derived_N0": derived.denominator if derived.numerator % 2 == 0 else 2 * derived.denominator,
        "required_N0": required_n0,
        "required_dim": 24 * (required_n0 + 3) // 3,
        "contradiction": Fraction(dim, dim - 24).denominator != required_n0,
    }


def rank_table(rank: int = 4) -> list[WReport]:
    return [w_report(c) for c in enumerate_candidates(rank)]


def sweep(ranks: Iterable[int] = (4, 6, 8, 10, 12, 16)) -> dict[int, list[Candidate]]:
    return {r: enumerate_candidates(r, strict=True, composite_n0=True, composite_k0=True)
            for r in ranks}
