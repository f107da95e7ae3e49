from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lspav import (
    BudgetExceededError,
    Election,
    audit,
    check_ejr,
    cohesive_threshold,
    exact_pav,
    ls_pav,
    min_avg_satisfaction,
    satisfaction,
)
from oracles import naive_audit
from strategies import elections_with_committee

FORCED = Election.from_ballots([[0], [0], [1], [1]], num_candidates=4)


def test_everyone_satisfied():
    e = Election.from_ballots([[0, 1], [0, 1, 2]], num_candidates=3)
    assert check_ejr(e, {0, 1}) == (True, None)


def test_forced_violation():
    holds, group = check_ejr(FORCED, {2, 3})
    assert not holds
    assert (group.ell, group.witness_candidates, group.group_voters) == (1, (0,), (0, 1))
    assert group.avg_satisfaction == 0 and group.threshold_size == 2
    report = audit(FORCED, {2, 3})
    assert not report.ejr_holds
    assert report.min_avg_satisfaction[1].avg_satisfaction == 0
    assert report.lemma1_consistent


def test_rectangle_audit(rectangle):
    report = audit(rectangle, {0, 1, 2})
    assert report.ejr_holds and report.ejr_counterexample is None
    group = report.min_avg_satisfaction[1]
    assert group.avg_satisfaction == Fraction(1, 2)
    assert group.witness_candidates == (3,)
    assert group.group_voters == (0, 9, 10, 11)  # the four d-approvers
    assert report.min_avg_satisfaction[2] is None
    assert report.lemma1_consistent
    committee, _ = ls_pav(rectangle, 3)
    assert check_ejr(rectangle, committee) == (True, None)


def test_pentagon_min_avg(pentagon):
    group = min_avg_satisfaction(pentagon, {0, 1, 2, 3}, 1)
    assert group.avg_satisfaction == Fraction(2, 5)
    assert group.witness_candidates == (4,)


def test_covered_common_candidates_give_at_least_one():
    e = Election.from_ballots([[0], [0, 1], [1], [1, 2]], num_candidates=4)
    group = min_avg_satisfaction(e, {0, 1}, 1)
    assert group.avg_satisfaction >= 1


def test_ell_range_and_budget(rectangle):
    with pytest.raises(ValueError):
        min_avg_satisfaction(rectangle, {0, 1, 2}, 4)
    with pytest.raises(BudgetExceededError):
        check_ejr(rectangle, {0, 1, 2}, cap=5)
    with pytest.raises(BudgetExceededError):
        audit(rectangle, {0, 1, 2}, cap=5)


@pytest.mark.parametrize("ell, n, k", [(1, 12, 3), (2, 12, 3), (1, 7, 3), (3, 10, 4), (5, 9, 5), (2, 1, 7)])
def test_cohesive_threshold_is_exact_ceiling(ell, n, k):
    q = Fraction(ell * n, k)
    expected = q.numerator // q.denominator + (q.denominator != 1)
    assert cohesive_threshold(ell, n, k) == expected


@settings(max_examples=300, deadline=None)
@given(elections_with_committee(max_n=8, max_m=6))
def test_agrees_with_voter_subset_brute_force(args):
    e, members = args
    ballots = [sorted(b) for b in e.ballots]
    naive_ejr, naive_minima = naive_audit(ballots, e.num_candidates, sorted(members))
    report = audit(e, members)
    assert report.ejr_holds == naive_ejr
    for ell, value in naive_minima.items():
        group = report.min_avg_satisfaction[ell]
        assert (group.avg_satisfaction if group else None) == value
    assert report.lemma1_consistent


@settings(max_examples=200, deadline=None)
@given(elections_with_committee(max_n=10, max_m=7))
def test_report_invariants(args):
    e, members = args
    k, n = len(members), e.num_voters
    sat = satisfaction(e, members)
    report = audit(e, members)
    groups = [g for g in report.min_avg_satisfaction.values() if g is not None]
    if report.ejr_counterexample is not None:
        groups.append(report.ejr_counterexample)
        assert all(sat[i] < report.ejr_counterexample.ell for i in report.ejr_counterexample.group_voters)
    else:
        assert report.ejr_holds
    for g in groups:
        assert len(g.witness_candidates) == g.ell
        assert all(set(g.witness_candidates) <= e.ballots[i] for i in g.group_voters)
        assert g.group_size >= g.threshold_size == cohesive_threshold(g.ell, n, k)
        assert g.avg_satisfaction == Fraction(sum(sat[i] for i in g.group_voters), g.group_size)
    if report.ejr_holds:
        for g in report.min_avg_satisfaction.values():
            if g is not None:
                assert g.avg_satisfaction >= Fraction(g.ell - 1, 2)


@settings(max_examples=100, deadline=None)
@given(elections_with_committee(max_n=10, max_m=7), st.sampled_from(["lspav", "exact"]))
def test_rule_outputs_beat_ell_minus_one(args, rule):
    e, members = args
    k = len(members)
    committee = ls_pav(e, k)[0] if rule == "lspav" else exact_pav(e, k)[0]
    report = audit(e, committee)
    assert report.ejr_holds
    for ell, g in report.min_avg_satisfaction.items():
        assert g is None or g.avg_satisfaction > ell - 1
