from collections import Counter
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from leechcalc.errors import DomainError
from leechcalc.lie import (
    LevelledAlgebra,
    SimpleLieType,
    algebra_info,
    all_types,
    dominant_character,
    integrable_weights,
    pairing_extremes,
    parse_weight,
    root_system,
    weight_system,
    weyl_dimension,
    weyl_group_order,
    weyl_orbit,
    weyl_vector_norm,
)

T = SimpleLieType.parse
SMALL = [t for t in all_types(4)] + [T("G2"), T("F4")]
MEDIUM = all_types(8)


def test_parse_and_str():
    assert str(T("e8")) == "E8"
    assert T("D_4") == SimpleLieType("D", 4)
    for bad in ("E9", "B1", "D2", "F5", "G3", "X3", "A0"):
        with pytest.raises(DomainError):
            T(bad)


def test_algebra_info_examples():
    assert (algebra_info(T("E8")).dim, algebra_info(T("E8")).dual_coxeter) == (248, 30)
    assert algebra_info(T("B4")).dim == 36
    a1 = algebra_info(T("A1"))
    assert (a1.dim, a1.coxeter, a1.dual_coxeter, a1.lacing) == (3, 2, 2, 1)


@pytest.mark.parametrize("t", all_types(), ids=str)
def test_closed_forms_against_explicit_roots(t):
    """dim, h and h^vee from tables agree with the explicit root system."""
    rs = root_system(t)
    info = algebra_info(t)
    assert len(rs.roots) == info.dim - info.rank
    assert len(rs.positive_roots) * 2 == len(rs.roots)
    assert sum(rs.highest_root_coeffs) + 1 == info.coxeter
    assert rs.form(rs.weyl_vector, rs.highest_root) == info.dual_coxeter - 1
    assert sum(rs.comarks) + 1 == info.dual_coxeter
    assert rs.form(rs.highest_root, rs.highest_root) == 2
    assert max(rs.form(a, a) for a in rs.roots) == 2
    assert {rs.form(a, a) for a in rs.roots} == {Fraction(2), Fraction(2, info.lacing)}


@pytest.mark.parametrize("t", MEDIUM, ids=str)
def test_root_system_structure(t):
    rs = root_system(t)
    n = rs.rank
    # fundamental weights are dual to the simple coroots
    for i, w in enumerate(rs.fundamental_weights):
        for j, a in enumerate(rs.simple_roots):
            assert 2 * rs.form(w, a) / rs.form(a, a) == (i == j)
    # rho is both the half sum of positive roots and the sum of fundamental weights
    half = [sum(col, Fraction(0)) / 2 for col in zip(*rs.positive_roots)]
    fund = [sum(col, Fraction(0)) for col in zip(*rs.fundamental_weights)]
    assert list(rs.weyl_vector) == half == fund
    # positive roots pair positively with rho, at most h^vee - 1
    h = algebra_info(t).dual_coxeter
    for a in rs.positive_roots:
        assert 0 < rs.form(rs.weyl_vector, a) <= h - 1
    assert len(set(rs.roots)) == len(rs.roots)
    assert rs.cartan == tuple(tuple(int(2 * rs.form(a, b) / rs.form(b, b)) for b in rs.simple_roots)
                              for a in rs.simple_roots)
    assert all(rs.cartan[i][i] == 2 for i in range(n))


def test_root_system_examples():
    a2 = root_system(T("A2"))
    assert len(a2.roots) == 6 and weyl_vector_norm(T("A2")) == 2
    assert len(root_system(T("G2")).roots) == 12 and algebra_info(T("G2")).lacing == 3
    a1 = root_system(T("A1"))
    (beta,) = a1.positive_roots
    assert a1.form(beta, beta) == 2
    assert list(a1.weyl_vector) == [x / 2 for x in beta]


@pytest.mark.parametrize("t,value", [("D4", 14), ("E8", 620), ("A1", Fraction(1, 2)),
                                     ("A2", 2), ("G2", Fraction(14, 3)), ("F4", 39)])
def test_weyl_vector_norm(t, value):
    assert weyl_vector_norm(T(t)) == value


def test_integrable_weights_examples():
    assert integrable_weights(LevelledAlgebra(T("A1"), 2)) == [(0,), (1,), (2,)]
    assert sorted(integrable_weights(LevelledAlgebra(T("A2"), 1))) == [(0, 0), (0, 1), (1, 0)]
    g2 = root_system(T("G2"))
    w = integrable_weights(LevelledAlgebra(T("G2"), 1))
    assert len(w) == 2
    (short,) = [x for x in w if any(x)]
    i = short.index(1)
    assert g2.form(g2.simple_roots[i], g2.simple_roots[i]) == Fraction(2, 3)


@given(st.integers(1, 6), st.integers(1, 5))
def test_integrable_weight_count_type_a(n, k):
    # level-k weights of A_n are compositions of at most k into n parts
    assert len(integrable_weights(LevelledAlgebra(SimpleLieType("A", n), k))) == comb(n + k, n)


@pytest.mark.parametrize("t", MEDIUM, ids=str)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_integrable_weights_contain_balanced_weight(t, k):
    ws = integrable_weights(LevelledAlgebra(t, k))
    assert len(ws) == len(set(ws)) and (0,) * t.rank in ws
    h = algebra_info(t).dual_coxeter
    if k % h == 0:
        assert (k // h,) * t.rank in ws


def test_weight_system_examples():
    assert weight_system(T("A1"), (1,)) == Counter({(1,): 1, (-1,): 1})
    assert weight_system(T("A1"), (2,)) == Counter({(2,): 1, (0,): 1, (-2,): 1})
    adj = weight_system(T("A2"), (1, 1))
    assert sum(adj.values()) == 8 and adj[(0, 0)] == 2


def _small_weights():
    out = []
    for t in SMALL:
        for lam in integrable_weights(LevelledAlgebra(t, 2)):
            out.append((t, lam))
    return out


@pytest.mark.parametrize("t,lam", _small_weights(), ids=lambda x: str(x))
def test_freudenthal_against_weyl_dimension(t, lam):
    rs = root_system(t)
    dom = dominant_character(t, lam)
    total = sum(m * len(weyl_orbit(rs, mu)) for mu, m in dom.items())
    assert total == weyl_dimension(t, lam)
    ws = weight_system(t, lam)
    assert sum(ws.values()) == total
    # Weyl invariance of the full multiset
    for i in range(t.rank):
        from leechcalc.lie import reflect
        assert Counter({reflect(rs, mu, i): m for mu, m in ws.items()}) == ws


@pytest.mark.parametrize("t,lam", _small_weights(), ids=lambda x: str(x))
def test_pairing_extremes_against_full_weight_system(t, lam):
    rs = root_system(t)
    vals = [rs.rho_pair(mu) for mu in weight_system(t, lam)]
    assert pairing_extremes(t, lam) == (min(vals), max(vals))
    assert max(vals) == rs.rho_pair(lam) == -min(vals)


@pytest.mark.parametrize("t", [T(x) for x in ("A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4")],
                         ids=str)
def test_weyl_group_order_is_regular_orbit_size(t):
    rs = root_system(t)
    assert len(weyl_orbit(rs, (1,) * t.rank)) == weyl_group_order(t)


def test_parse_weight():
    assert parse_weight("(1, 0, 2)", T("A3")) == (1, 0, 2)
    with pytest.raises(DomainError):
        parse_weight("1,-1", T("A2"))
    with pytest.raises(DomainError):
        parse_weight("1,x", T("A2"))
