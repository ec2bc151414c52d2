from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from leechcalc.classify import Candidate
from leechcalc.errors import DomainError
from leechcalc.lie import (
    LevelledAlgebra,
    SimpleLieType,
    algebra_info,
    all_types,
    integrable_weights,
    root_system,
    weight_system,
    weyl_vector_norm,
)
from leechcalc.twisted import (
    TwistParams,
    WeightedComponent,
    component_weight,
    grading_shift,
    identity_grid,
    integer_weight_sector,
    lowest_weight_bound,
    minimize_twisted_weight,
    norm_gap,
    rho_weight_sum,
    root_pairing_bound,
    twisted_conformal_weight,
)

T = SimpleLieType.parse


def brute_weight(t: SimpleLieType, k: int, lam: tuple[int, ...]) -> Fraction:
    """Three-term sum with the min taken over the full explicit weight system."""
    rs = root_system(t)
    h = algebra_info(t).dual_coxeter
    two_rho = (2,) * t.rank
    cas = rs.pair(lam, tuple(a + b for a, b in zip(lam, two_rho))) / (2 * (k + h))
    low = min(-rs.rho_pair(mu) for mu in weight_system(t, lam))
    return cas + low / h + k * weyl_vector_norm(t) / (2 * h * h)


def test_shift_examples():
    assert grading_shift(TwistParams(6, 9, 1, 3)) == 1
    assert grading_shift(TwistParams(5, 7, 0, Fraction(3, 2))) == 0
    assert grading_shift(TwistParams(5, 7, 1, 7)) == 0
    assert TwistParams(6, 9, 1, 3).alpha_zero_shift == -3
    assert integer_weight_sector(6, 9) and not integer_weight_sector(6, Fraction(9, 2))
    with pytest.raises(DomainError):
        TwistParams(0, 1, 1, 0)


@given(st.integers(1, 50), st.integers(-50, 50), st.fractions(), st.fractions())
def test_shift_strictly_decreasing_in_s(n, k, s1, s2):
    if s1 == s2:
        return
    a, b = sorted((s1, s2))
    assert grading_shift(TwistParams(n, k, 1, a)) > grading_shift(TwistParams(n, k, 1, b))
    assert grading_shift(TwistParams(n, k, 1, a)) == -(a - k) / n


@given(st.integers(-200, 200), st.integers(-200, 200), st.integers(-200, 200))
def test_norm_gap_identity(k, K, N):
    lhs, rhs = norm_gap(k, K, N)
    assert lhs == rhs


def test_a1_examples():
    a1 = T("A1")
    assert twisted_conformal_weight([WeightedComponent(a1, 2, (1,))]) == Fraction(1, 16)
    assert twisted_conformal_weight([WeightedComponent(a1, 2, (0,))]) == Fraction(1, 8)
    assert minimize_twisted_weight([(a1, 2)]) == (Fraction(1, 16), [((1,),)])


def test_a1_level_one_by_enumeration():
    a1 = T("A1")
    w0 = twisted_conformal_weight([WeightedComponent(a1, 1, (0,))])
    w1 = twisted_conformal_weight([WeightedComponent(a1, 1, (1,))])
    # by hand: 0 + 0 + 1/16 and 1/4 - 1/4 + 1/16, so the two weights tie
    assert w0 == w1 == Fraction(1, 16)
    assert minimize_twisted_weight([(a1, 1)]) == (Fraction(1, 16), [((0,),), ((1,),)])


def test_a2_level_three():
    best, arg = minimize_twisted_weight([(T("A2"), 3)])
    assert arg == [((1, 1),)]
    assert best == Fraction(1, 6)


def test_balanced_value_formula():
    # at lam = k rho / h the completed square vanishes
    for t in all_types(6):
        h = algebra_info(t).dual_coxeter
        k = h
        w = component_weight(WeightedComponent(t, k, (1,) * t.rank))
        assert w.closed_form == k * h * weyl_vector_norm(t) / (2 * h * h * (k + h))


def test_components_add():
    c1 = WeightedComponent(T("A1"), 2, (1,))
    c2 = WeightedComponent(T("A2"), 3, (1, 1))
    assert twisted_conformal_weight([c1, c2]) == Fraction(1, 16) + Fraction(1, 6)
    best, arg = minimize_twisted_weight([(T("A1"), 2), (T("A2"), 3)])
    assert best == Fraction(1, 16) + Fraction(1, 6) and arg == [((1,), (1, 1))]


@pytest.mark.parametrize("t", all_types(4), ids=str)
def test_against_explicit_weight_system(t):
    for k in (1, 2, 3):
        for lam in integrable_weights(LevelledAlgebra(t, k)):
            got = twisted_conformal_weight([WeightedComponent(t, k, lam)])
            assert got == brute_weight(t, k, lam)


@pytest.mark.parametrize("t", all_types(24), ids=str)
def test_root_pairing_bound(t):
    b = root_pairing_bound(t)
    assert 0 < b < 1
    # the highest root pairs with rho to h - 1
    assert b == Fraction(algebra_info(t).coxeter - 1, algebra_info(t).dual_coxeter) or t.family in "BCFG"


def test_rejects_bad_weights():
    with pytest.raises(DomainError):
        WeightedComponent(T("A1"), 1, (2,))
    with pytest.raises(DomainError):
        WeightedComponent(T("A2"), 1, (1,))
    with pytest.raises(DomainError):
        WeightedComponent(T("A2"), 3, (-1, 1))


def test_lowest_weight_bound():
    r = lowest_weight_bound(Candidate.parse("D4,36"))
    assert r["rho_term_sum"] == r["dim_ratio"] == Fraction(28, 4)
    assert r["at_least_one"]
    with pytest.raises(DomainError):
        lowest_weight_bound(Candidate.parse("F4,54/7"))


def test_rho_weight_sum_matches_dimension():
    for t in all_types(8):
        assert rho_weight_sum([(t, 1)]) == Fraction(algebra_info(t).dim, 24 * algebra_info(t).dual_coxeter)


def test_identity_grid():
    g = identity_grid()
    assert (g.types, g.weights, g.balanced_argmins) == (33, 5331, 9)
