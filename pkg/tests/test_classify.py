from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from leechcalc.classify import (
    FINAL_CASES,
    Candidate,
    case_inequality_report,
    components_dividing,
    d12_branch_check,
    enumerate_candidates,
    is_composite,
    prop_noone_search,
    rank_table,
    search_cells,
    simply_laced_decompositions,
    sweep,
    w_report,
)
from leechcalc.errors import DomainError, LeechBoundary
from leechcalc.lie import SimpleLieType, algebra_info, all_types

C = Candidate.parse


def brute_force(rank: int, strict: bool) -> set[str]:
    """Oracle: every multiset of simple types of this rank, levels forced by dim."""
    types = all_types(rank, canonical=True)
    out = set()

    def rec(i, r, acc):
        if r == 0:
            dim = sum(algebra_info(t).dim for t in acc)
            if dim <= 24:
                return
            c = Candidate(tuple((t, Fraction(24 * algebra_info(t).dual_coxeter, dim - 24))
                                for t in acc))
            bad = set(w_report(c).violations)
            if not bad if strict else bad <= {"iv", "v"}:
                out.add(str(c))
            return
        for j in range(i, len(types)):
            if types[j].rank <= r:
                rec(j, r - types[j].rank, acc + [types[j]])

    rec(0, rank, [])
    return out


def test_candidate_parse_and_str():
    assert str(C("D9,2+A7,1")) == "A7,1+D9,2"
    assert str(C("F4,1+C8,1+F4,1")) == "C8,1+F4,1^2"
    assert str(C("F4,54/7")) == "F4,54/7"
    assert C("E8,2 + B8,1").dim == 384
    for bad in ("E8", "E8,0", "E9,1", "E8,2+", "X1,1"):
        with pytest.raises(DomainError):
            C(bad)
    with pytest.raises(DomainError):
        C("A1,1")  # dim 3 < 24
    assert C("A24,1").rank == 24


def test_rank_cap():
    with pytest.raises(DomainError):
        C("A13,1+A12,1")


def test_leech_boundary():
    with pytest.raises(LeechBoundary):
        w_report(C("A1,1^8"))


def test_w_report_examples():
    d4 = w_report(C("D4,36"))
    assert d4.alpha_norm == 14 and d4.admissible
    f4 = w_report(C("F4,6"))
    assert f4.alpha_norm == Fraction(26, 7) and f4.N0 == 7
    # the dimension route and the Weyl-vector route disagree at level 6
    assert f4.alpha_norm_weyl == Fraction(26, 9) and not f4.admissible
    e = w_report(C("E8,2+B8,1"))
    assert (e.dim, e.alpha_norm, e.K0 - e.N0, e.admissible) == (384, Fraction(32, 15), 1, True)


def test_rank_four():
    got = {r.candidate: r.alpha_norm for r in rank_table(4)}
    assert got == {"B4,14": 6, "C4,10": 6, "D4,36": 14, "F4,54/7": Fraction(26, 7), "G2,24^2": 14}
    f4 = w_report(C("F4,54/7"))
    assert f4.N0 == 7 and set(f4.violations) == {"iv", "v"}
    assert sorted(r.N0 for r in rank_table(4)) == [1, 1, 1, 1, 7]


def test_rank_four_composite_is_empty():
    assert enumerate_candidates(4, composite_n0=True, composite_k0=True) == []


@pytest.mark.parametrize("rank", [4, 5, 6, 7, 8])
def test_default_enumeration_matches_brute_force(rank):
    assert {str(c) for c in enumerate_candidates(rank)} == brute_force(rank, strict=False)


@pytest.mark.parametrize("rank", [4, 6, 8, 10])
def test_strict_enumeration_matches_brute_force(rank):
    assert {str(c) for c in enumerate_candidates(rank, strict=True)} == brute_force(rank, strict=True)


def test_composite_sweep():
    res = sweep()
    assert all(res[r] == [] for r in (4, 6, 8, 10, 12))
    assert {str(c) for c in res[16]} == set(FINAL_CASES)
    for c in res[16]:
        r = w_report(c)
        assert r.admissible and is_composite(r.N0) and is_composite(r.K0)


@pytest.mark.parametrize("rank", [4, 6, 8])
def test_enumeration_monotone_under_filters(rank):
    base = set(enumerate_candidates(rank))
    strict = set(enumerate_candidates(rank, strict=True))
    both = set(enumerate_candidates(rank, strict=True, composite_n0=True))
    assert both <= strict <= base
    assert set(enumerate_candidates(rank, composite_k0=True)) <= base


def test_search_cells_satisfy_constraints():
    for cell in search_cells(16, strict=True):
        d = cell.K0 - cell.N0
        assert 24 % d == 0 and gcd(cell.K0, cell.N0) == 1
        assert Fraction(cell.dim, cell.dim - 24) == Fraction(cell.K0, cell.N0)


@pytest.mark.parametrize("case,n0", [("8", 8), ("9", 9), ("15", 15),
                                     ("A7,1+D9,2", 8), ("B5,1+E7,2+F4,1", 9),
                                     ("B8,1+E8,2", 15)])
def test_case_reports_are_contradictions(case, n0):
    rep = case_inequality_report(case)
    assert rep.N0 == n0 and rep.contradiction
    d = rep.as_dict()
    assert d["N0"] == n0 and d["inequalities"]


def test_case_nine_value():
    rep = case_inequality_report("9")
    assert rep.K0 == 10
    assert any(q.lhs == Fraction(48, 9) or q.rhs == Fraction(48, 9) for q in rep.inequalities)


def test_case_fifteen_value():
    rep = case_inequality_report("15")
    assert any(Fraction(216, 75) in (q.lhs, q.rhs) for q in rep.inequalities)


def test_unknown_case():
    with pytest.raises(DomainError):
        case_inequality_report("D4,36")
    with pytest.raises(DomainError):
        case_inequality_report("7")


def test_components_dividing_eight():
    assert [str(t) for t in components_dividing(8, 16)] == ["A7", "A15", "C7", "C15", "D5", "D9", "D13"]


def test_d12_branch():
    r = d12_branch_check()
    assert r["dim"] == 276 and r["alpha_norm"] == Fraction(46, 21)
    assert r["contradiction"]


def test_noone_search():
    r = prop_noone_search()
    assert r["admissible"] == []
    assert len(r["niemeier"]) == 23
    assert len(r["excluded"]) > 0


def test_simply_laced_decompositions():
    got = {tuple(str(t) for t in ms) for ms in simply_laced_decompositions(12, 24)}
    assert ("E6", "E6", "E6", "E6") in got
    assert ("A11", "D7", "E6") in got


levelled = st.tuples(st.sampled_from(all_types(8, canonical=True)), st.integers(1, 40))


@given(st.lists(levelled, min_size=1, max_size=4))
def test_w_report_invariants(comps):
    rank = sum(t.rank for t, _ in comps)
    dim = sum(algebra_info(t).dim for t, _ in comps)
    if rank > 24 or dim <= 24:
        return
    c = Candidate(tuple(comps))
    r = w_report(c)
    assert r.alpha_norm == Fraction(2 * r.K0, r.N0) and gcd(r.K0, r.N0) == 1
    assert r.alpha_norm == Fraction(2 * dim, dim - 24)
    if r.admissible:
        assert r.alpha_norm_weyl == r.alpha_norm
        for t, k in c.components:
            assert algebra_info(t).dual_coxeter % r.N0 == 0
            assert k % (r.K0 - r.N0) == 0
    # reparse round trip
    assert Candidate.parse(str(c)) == c


def test_is_composite():
    assert [n for n in range(1, 20) if is_composite(n)] == [4, 6, 8, 9, 10, 12, 14, 15, 16, 18]


def test_simple_type_canonical_pool():
    pool = all_types(4, canonical=True)
    assert SimpleLieType("C", 2) not in pool and SimpleLieType("D", 3) not in pool
