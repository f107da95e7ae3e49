import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lspav import Election, harmonic, max_pav_score, pav_score, swap_delta
from lspav.scores import format_fraction, parse_fraction
from oracles import naive_pav_score
from strategies import elections_with_committee


def test_harmonic_values():
    assert harmonic(0) == 0
    assert harmonic(1) == 1
    assert harmonic(4) == Fraction(25, 12)
    with pytest.raises(ValueError):
        harmonic(-1)


@pytest.mark.parametrize("t", range(1, 12))
def test_harmonic_step(t):
    assert harmonic(t) - harmonic(t - 1) == Fraction(1, t)


def test_pav_score_examples(rectangle):
    one = Election.from_ballots([[0, 1, 2]], num_candidates=4)
    assert pav_score(one, {0, 1, 2}) == Fraction(11, 6)
    assert pav_score(one, {3}) == 0
    # value checked against naive_pav_score in the oracle tests below
    assert pav_score(rectangle, {0, 1, 2}) == 11


def test_swap_delta_examples(rectangle):
    nobody = Election.from_ballots([[0]], num_candidates=3)
    assert swap_delta(nobody, {1}, 1, 2) == 0
    twins = Election.from_ballots([[0, 1], [0, 1], [2]], num_candidates=3)
    assert swap_delta(twins, {0, 2}, 0, 1) == 0
    assert swap_delta(rectangle, {0, 1, 2}, out=0, into=3) == 0


def test_swap_delta_preconditions(rectangle):
    with pytest.raises(ValueError):
        swap_delta(rectangle, {0, 1, 2}, out=3, into=0)
    with pytest.raises(ValueError):
        swap_delta(rectangle, {0, 1, 2}, out=0, into=1)


@given(elections_with_committee())
def test_pav_score_matches_naive_and_bound(args):
    e, members = args
    ballots = [sorted(b) for b in e.ballots]
    score = pav_score(e, members)
    assert score == naive_pav_score(ballots, members)
    assert score <= max_pav_score(e, len(members))


@given(elections_with_committee(max_n=8, max_m=6))
def test_swap_delta_equals_rescoring(args):
    e, members = args
    base = pav_score(e, members)
    for out in members:
        for into in set(range(e.num_candidates)) - members:
            after = pav_score(e, (members - {out}) | {into})
            assert swap_delta(e, members, out, into) == after - base


@given(elections_with_committee(), st.randoms(use_true_random=False))
def test_pav_score_relabelling_invariance(args, rnd):
    e, members = args
    perm = list(range(e.num_candidates))
    rnd.shuffle(perm)
    voters = list(e.ballots)
    rnd.shuffle(voters)
    relabelled = Election.from_ballots(
        [[perm[c] for c in b] for b in voters], num_candidates=e.num_candidates
    )
    assert pav_score(relabelled, {perm[c] for c in members}) == pav_score(e, members)


def test_fraction_format_round_trip():
    for q in (Fraction(11), Fraction(-3, 7), Fraction(0)):
        assert parse_fraction(format_fraction(q)) == q
    assert format_fraction(11) == "11/1"
    with pytest.raises(ValueError):
        parse_fraction("0.5")
