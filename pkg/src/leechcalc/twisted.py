"""Grading shifts and lowest conformal weights of twisted modules."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import DomainError
from .lie import (
    LevelledAlgebra,
    SimpleLieType,
    algebra_info,
    integrable_weights,
    pairing_extremes,
    rho_over_dual_coxeter,
    root_system,
    weight_level,
    weyl_vector_norm,
)


@dataclass(frozen=True)
class TwistParams:
    N: int
    K: Fraction
    m: int
    s: Fraction

    def __post_init__(self) -> None:
        if self.N < 1:
            raise DomainError("N must be positive")
        object.__setattr__(self, "K", Fraction(self.K))
        object.__setattr__(self, "s", Fraction(self.s))

    @property
    def alpha_zero_shift(self) -> Fraction:
        """The constant -2mK/N added to alpha(0) in the m-th twisted sector."""
        return Fraction(-2 * self.m) * self.K / self.N


def grading_shift(p: TwistParams) -> Fraction:
    """L(0) - m(s - mK)/N: the shift is -m(s - mK)/N."""
    return -p.m * (p.s - p.m * p.K) / p.N


def integer_weight_sector(N: int, K) -> bool:
    """Whether s = K is an available eigenvalue index, i.e. K is an integer."""
    return Fraction(K).denominator == 1


@dataclass(frozen=True)
class WeightedComponent:
    type: SimpleLieType
    level: int
    weight: tuple[int, ...]

    def __post_init__(self) -> None:
        a = LevelledAlgebra(self.type, self.level)
        lam = tuple(int(x) for x in self.weight)
        if len(lam) != self.type.rank or min(lam, default=0) < 0:
            raise DomainError(f"{lam} is not a dominant weight of {self.type}")
        if weight_level(self.type, lam) > a.level:
            raise DomainError(f"{lam} is not integrable at level {self.level}")
        object.__setattr__(self, "weight", lam)


@dataclass(frozen=True)
class ComponentWeight:
    casimir: Fraction  # (lam | lam + 2 rho) / 2(k + h)
    min_term: Fraction  # (1/h) min over weights mu of (-rho | mu)
    rho_term: Fraction  # k (rho|rho) / 2 h^2
    closed_form: Fraction

    @property
    def three_term(self) -> Fraction:
        return self.casimir + self.min_term + self.rho_term


def component_weight(c: WeightedComponent) -> ComponentWeight:
    t, k, lam = c.type, c.level, c.weight
    rs = root_system(t)
    h = algebra_info(t).dual_coxeter
    rho = rs.rho_labels
    rr = weyl_vector_norm(t)
    lr = rs.pair(lam, tuple(x + 2 for x in lam)) if lam else Fraction(0)
    casimir = lr / (2 * (k + h))
    lo, hi = pairing_extremes(t, lam)
    # min over mu of (-rho|mu) = -max (rho|mu)
    min_term = -hi / h
    rho_term = k * rr / (2 * h * h)
    # completed square: (h lam - k rho | h lam - k rho) + k h (rho|rho)
    diff = tuple(h * a - k * b for a, b in zip(lam, rho))
    closed = (rs.pair(diff, diff) + k * h * rr) / (2 * h * h * (k + h))
    if hi != rs.rho_pair(lam) or lo != -hi:
        raise AssertionError(f"weight extremes of {lam} for {t} are not +-(rho|lam)")
    return ComponentWeight(casimir, min_term, rho_term, closed)


def twisted_conformal_weight(components: Sequence[WeightedComponent]) -> Fraction:
    total = Fraction(0)
    for c in components:
        w = component_weight(c)
        if w.three_term != w.closed_form:
            raise AssertionError(f"three-term and closed forms disagree for {c}")
        total += w.three_term
    return total


def minimize_twisted_weight(algebras: Sequence[tuple[SimpleLieType, int]]
                            ) -> tuple[Fraction, list[tuple[tuple[int, ...], ...]]]:
    """Exact minimum over all tuples of integrable weights, with every argmin.

    The sum separates over components, so each component is minimized on
    its own and the argmin set is the product of the per-component ones.
    """
    best_total = Fraction(0)
    per_comp: list[list[tuple[int, ...]]] = []
    for t, k in algebras:
        vals = {}
        for lam in integrable_weights(LevelledAlgebra(t, k)):
            vals[lam] = twisted_conformal_weight([WeightedComponent(t, k, lam)])
        lo = min(vals.values())
        best_total += lo
        per_comp.append(sorted(l for l, v in vals.items() if v == lo))
    return best_total, [tuple(p) for p in product(*per_comp)]


def rho_weight_sum(algebras: Sequence[tuple[SimpleLieType, int]]) -> Fraction:
    """sum_j k_j (rho_j|rho_j) / 2 h_j^2 = sum_j k_j dim_j / 24 h_j."""
    return sum((k * weyl_vector_norm(t) / (2 * algebra_info(t).dual_coxeter ** 2)
                for t, k in algebras), Fraction(0))


def lowest_weight_bound(candidate) -> dict:
    """For an admissible candidate: the minimum is dim/(dim-24)."""
    from .classify import w_report

    rep = w_report(candidate)
    if not rep.admissible:
        raise DomainError(f"{candidate} is not admissible: {rep.violations}")
    algs = [(t, int(k)) for t, k in candidate.components]
    total = rho_weight_sum(algs)
    expected = Fraction(rep.dim, rep.dim - 24)
    if total != expected:
        raise AssertionError("rho-term sum disagrees with dim/(dim-24)")
    return {"rho_term_sum": total, "dim_ratio": expected, "at_least_one": total >= 1}


def norm_gap(k: int, K: int, N: int) -> tuple[int, int]:
    """Both sides of (-N+kK)^2 - (N+(k-2)K)^2 = 4(k-1)K(K-N)."""
    return (-N + k * K) ** 2 - (N + (k - 2) * K) ** 2, 4 * (k - 1) * K * (K - N)


def root_pairing_bound(t: SimpleLieType) -> Fraction:
    """max over roots beta of |(rho/h|beta)|, which must lie below 1."""
    rs = root_system(t)
    h = algebra_info(t).dual_coxeter
    top = max(abs(rs.rho_pair(rs_label)) for rs_label in _root_labels(rs)) / h
    if not top < 1:
        raise AssertionError(f"(rho/h|beta) reaches {top} for {t}")
    return top


def _root_labels(rs) -> list[tuple[int, ...]]:
    pos = list(rs.positive_root_labels)
    return pos + [tuple(-x for x in a) for a in pos]


@dataclass(frozen=True)
class GridResult:
    types: int
    weights: int
    balanced_argmins: int


def identity_grid(max_rank: int = 8, max_level: int = 4) -> GridResult:
    """Check every component identity on the grid; raise on the first failure."""
    from .lie import all_types

    nw = nb = 0
    types = all_types(max_rank)
    for t in types:
        root_pairing_bound(t)
        for k in range(1, max_level + 1):
            vals = {}
            for lam in integrable_weights(LevelledAlgebra(t, k)):
                vals[lam] = twisted_conformal_weight([WeightedComponent(t, k, lam)])
                nw += 1
            lo = min(vals.values())
            bal = rho_over_dual_coxeter(t, k)
            if bal is not None:
                if [l for l, v in vals.items() if v == lo] != [bal]:
                    raise AssertionError(f"argmin for {t} level {k} is not k rho / h")
                nb += 1
    return GridResult(len(types), nw, nb)
