from __future__ import annotations

import pytest

from stanley_depth.core import IdealPair, ZeroModuleError, parse_ideal_pair, parse_monomial, var
from stanley_depth.generate import enumerate_all
from stanley_depth.verifiers import (
    CLAIMS,
    CONFIRMED,
    VACUOUS,
    VIOLATION,
    ImplicationReport,
    check_depth_lemma,
    check_intro_bounds,
    check_lemma_1_1,
    check_lemma_1_5,
    check_lemma_1_6,
    check_lemma_1_7,
    check_lemma_1_8,
    check_prop_1_3,
    check_prop_1_9,
    check_sdepth1_depth1,
    check_stanley,
    check_thm_1_10,
    depth_lemma_splits,
    find_isolated_monomials,
    run_claims,
    shape_data,
)


def pair(text: str) -> IdealPair:
    return parse_ideal_pair(text)


def test_verdict_table():
    assert ImplicationReport("X", False, False).verdict == VACUOUS
    assert ImplicationReport("X", False, True).verdict == VACUOUS
    assert ImplicationReport("X", True, True).verdict == CONFIRMED
    assert ImplicationReport("X", True, False).verdict == VIOLATION


def test_report_round_trip(three_vars):
    rep = check_intro_bounds(three_vars)
    assert ImplicationReport.from_dict(rep.to_dict()) == rep
    bad = rep.to_dict() | {"verdict": VIOLATION}
    with pytest.raises(ValueError):
        ImplicationReport.from_dict(bad)


# --- degree bounds ------------------------------------------------------------

def test_intro_bounds_three_vars(three_vars):
    rep = check_intro_bounds(three_vars)
    assert rep.witness["clauses"] == {"s>r+q": False, "r>q": True, "s<2r": True}
    assert rep.verdict == CONFIRMED
    assert rep.witness["sdepth"] <= 2


def test_intro_bounds_principal():
    rep = check_intro_bounds(IdealPair.make(2, [var(1)]))
    assert (rep.witness["r"], rep.witness["s"], rep.witness["q"]) == (1, 1, 0)
    assert rep.witness["sdepth"] == 2 and rep.verdict == CONFIRMED
    rep = check_intro_bounds(IdealPair.make(2, [var(1) | var(2)]))
    assert rep.witness["d"] == 2 and rep.witness["sdepth"] == 2 and rep.verdict == CONFIRMED


# --- variable-generated I -----------------------------------------------------

def test_lemma_1_1_warning_case(two_vars):
    rep = check_lemma_1_1(two_vars, 1)
    assert rep.verdict == VACUOUS
    assert "x1 is a generator of I" in rep.witness["shape_issues"]


def test_lemma_1_1_j3(two_vars):
    rep = check_lemma_1_1(two_vars, 3)
    assert rep.witness["aux_depth"] == 2
    assert rep.verdict == VACUOUS
    assert rep.witness["depth"] == 3


def test_lemma_1_1_hypothesis_met():
    for ip in enumerate_all(4):
        for j in range(1, 5):
            rep = check_lemma_1_1(ip, j)
            assert rep.verdict != VIOLATION
    # a concrete instance whose hypothesis holds
    ip = pair("n=3\nI: x1\nJ: x1*x2")
    rep = check_lemma_1_1(ip, 3)
    assert rep.witness["aux_depth"] == 1
    assert rep.verdict == CONFIRMED and rep.witness["depth"] == 2


def test_prop_1_3_examples(three_vars):
    assert check_prop_1_3(three_vars).verdict == CONFIRMED
    assert check_prop_1_3(IdealPair.make(3, [var(1)])).verdict == VACUOUS
    rep = check_prop_1_3(pair("n=4\nI: x1, x2\nJ: x1*x3*x4, x2*x3*x4"))
    assert rep.hypothesis_holds
    assert rep.verdict == CONFIRMED and rep.witness["depth"] <= 2


# --- isolated monomials -----------------------------------------------------

def test_isolated_examples(pivot_quadric):
    ip = pair("n=3\nI: x1*x2\nJ: x1*x2*x3")
    assert find_isolated_monomials(ip) == [(var(1) | var(2), 2)]
    rep = check_lemma_1_5(ip)
    assert rep.verdict == CONFIRMED and rep.witness["depth"] == 2
    assert find_isolated_monomials(pivot_quadric) == [(0b111, 3)]


def test_full_mask_always_isolated():
    for ip in enumerate_all(3):
        iso = dict(find_isolated_monomials(ip))
        if ip.member_i(0b111) and not ip.member_j(0b111):
            assert iso.get(0b111) == 3


# --- adding high-degree generators -------------------------------------------

def test_lemma_1_6_examples():
    ip = IdealPair.make(4, [var(1)])
    rep = check_lemma_1_6(ip, [parse_monomial("x2*x3*x4", 4)])
    assert rep.verdict == CONFIRMED
    assert check_lemma_1_6(ip, []).verdict == CONFIRMED
    with pytest.raises(ValueError, match="below"):
        check_lemma_1_6(ip, [parse_monomial("x2*x3", 4)])
    with pytest.raises(ValueError, match="already"):
        check_lemma_1_6(ip, [parse_monomial("x1*x2*x3", 4)])


# --- I = (x1) + (E) ---------------------------------------------------------

def test_thm_1_10_pivot_quadric(pivot_quadric):
    data = shape_data(pivot_quadric)
    assert data.sdepth == 2 and data.depth == 2
    assert data.E2 == () and data.c_outside == ()
    assert data.condition1 and not data.boundary
    rep = check_thm_1_10(pivot_quadric)
    assert rep.verdict == CONFIRMED
    for key in ("E", "E1", "E2", "B_size", "C_size", "C_outside_size"):
        assert key in rep.witness


def test_thm_1_10_outside_shape(three_vars):
    rep = check_thm_1_10(three_vars)
    assert rep.verdict == VACUOUS and rep.witness["shape"] is False


def test_boundary_cases_are_vacuous():
    seen = 0
    for ip in enumerate_all(4, "thm110"):
        data = shape_data(ip)
        if data.boundary:
            seen += 1
            assert len(data.B) == len(data.C) + 1
            assert check_thm_1_10(ip).verdict == VACUOUS
    assert seen > 0


def test_quadrics_condition_family():
    ip = pair("n=3\nI: x1, x2*x3\nJ: 0")
    # no degree-2 monomial outside I avoids x1, so the condition holds trivially
    assert shape_data(ip).quadrics_condition
    ip = pair("n=4\nI: x1, x2*x3\nJ: 0")
    assert not shape_data(ip).quadrics_condition
    ip = pair("n=4\nI: x1, x2*x3\nJ: x1*x2*x4, x1*x3*x4")
    assert shape_data(ip).quadrics_condition
    assert check_prop_1_9(ip).verdict in (CONFIRMED, VACUOUS)
    assert check_lemma_1_8(ip).verdict in (CONFIRMED, VACUOUS)


def test_lemma_1_7_exhaustive_n4():
    hits = 0
    for ip in enumerate_all(4, "thm110"):
        rep = check_lemma_1_7(ip)
        assert rep.verdict != VIOLATION, rep.witness
        hits += rep.hypothesis_holds
    assert hits > 0


# --- unconditional statements ------------------------------------------------

def test_sdepth1_depth1(two_vars_f):
    rep = check_sdepth1_depth1(two_vars_f)
    assert rep.verdict == CONFIRMED and rep.witness["depth"] == 1
    assert check_sdepth1_depth1(IdealPair.make(3, [var(1)])).verdict == VACUOUS


def test_stanley_scope(two_vars):
    assert check_stanley(two_vars).verdict == VACUOUS
    rep = check_stanley(IdealPair.make(3, [var(1), var(2) | var(3)]))
    assert rep.verdict == CONFIRMED and rep.witness["inequality_holds"]


def test_depth_lemma_examples(two_vars):
    rep = check_depth_lemma(two_vars, [var(2)])
    assert rep.verdict == CONFIRMED
    assert len(rep.witness["depths"]) == 3
    with pytest.raises(ZeroModuleError):
        check_depth_lemma(two_vars, [var(1), var(2)])
    with pytest.raises(ValueError):
        check_depth_lemma(two_vars, [var(3)])


def test_depth_lemma_splits_nonzero():
    for ip in enumerate_all(3):
        for sub in depth_lemma_splits(ip):
            check_depth_lemma(ip, sub)


# --- driver -------------------------------------------------------------------

def test_run_claims_covers_every_id(pivot_quadric):
    reports = run_claims(pivot_quadric, exhaustive=True)
    assert {r.claim_id for r in reports} == set(CLAIMS)
    assert all(r.verdict != VIOLATION for r in reports)


def test_run_claims_is_pure(three_vars):
    a = [r.to_dict() for r in run_claims(three_vars)]
    b = [r.to_dict() for r in run_claims(three_vars)]
    assert a == b


def test_run_claims_rejects_unknown(three_vars):
    with pytest.raises(ValueError):
        run_claims(three_vars, ["NOPE"])


def test_all_reports_vacuous_iff_hypothesis_false():
    for ip in enumerate_all(3):
        for rep in run_claims(ip, exhaustive=True):
            assert (rep.verdict == VACUOUS) == (not rep.hypothesis_holds)
            assert rep.verdict != VIOLATION
