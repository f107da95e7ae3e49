from fractions import Fraction

import pytest

from lspav import (
    audit,
    best_min_avg_satisfaction,
    cycle_tightness,
    gen_cycle,
    gen_random,
    ls_pav,
    parse_election,
    replicate,
    serialize_election,
)
from lspav.report import fingerprint
from oracles import cycle_best_min_avg

# frozen from the first run of gen_random(8, 6, seed=42, p=1/2)
RANDOM_8_6_42 = "sha256:fd9eadd1873d554d4aefd75126ea808cc18c99241e78a6c23bcb859102a434a2"


def test_rectangle_matches_printed_profile(rectangle):
    text = serialize_election(rectangle)
    for line in ["1: a d", "2: a", "1: a b", "2: b", "1: b c", "2: c", "1: c d", "2: d"]:
        assert f"\n{line}\n" in text
    assert (rectangle.n, rectangle.m) == (12, 4)


def test_pentagon_and_triangle(pentagon):
    assert (pentagon.n, pentagon.m) == (20, 5)
    assert "\n3: e\n" in serialize_election(pentagon)
    tri = gen_cycle(2)
    assert (tri.n, tri.m) == (6, 3)
    assert sum(len(b) == 2 for b in tri.ballots) == 3
    assert sum(len(b) == 1 for b in tri.ballots) == 3


@pytest.mark.parametrize("k", range(2, 10))
def test_cycle_invariants(k):
    e = gen_cycle(k)
    assert (e.n, e.m) == (k * (k + 1), k + 1)
    assert all(e.approval_count(c) == k + 1 for c in range(e.m))
    assert sum(len(b) for b in e.ballots) == 2 * (k + 1) + (k - 1) * (k + 1)
    committee, _ = ls_pav(e, k)
    group = audit(e, committee).min_avg_satisfaction[1]
    assert group.avg_satisfaction > 0


def test_cycle_rejects_small_k():
    with pytest.raises(ValueError):
        gen_cycle(1)


@pytest.mark.parametrize("k, expected", [(3, Fraction(1, 2)), (4, Fraction(2, 5)), (5, Fraction(1, 3))])
def test_cycle_tightness_values(k, expected):
    assert cycle_tightness(k) == expected == cycle_best_min_avg(k)


def test_replicate_identity(rectangle):
    copy = replicate(rectangle, 1)
    assert copy.ballots == rectangle.ballots
    assert copy.candidate_names == ("a.1", "b.1", "c.1", "d.1")


def test_replicate_doubles_ballots(rectangle):
    e = replicate(rectangle, 2)
    assert (e.n, e.m) == (12, 8)
    assert e.ballots[0] == frozenset({0, 1, 6, 7})
    assert all(len(b) == 2 * len(base) for b, base in zip(e.ballots, rectangle.ballots))
    with pytest.raises(ValueError):
        replicate(rectangle, 0)


def test_replicated_rectangle_search_values(rectangle):
    e = replicate(rectangle, 2)
    assert best_min_avg_satisfaction(e, 3, 2)[0] is None
    value, committee, group = best_min_avg_satisfaction(e, 6, 2)
    assert value == 2
    assert group.avg_satisfaction == 2


def test_gen_random_models():
    full = gen_random(5, 4, seed=0, size=4)
    assert all(b == frozenset(range(4)) for b in full.ballots)
    assert gen_random(6, 5, seed=9, p=Fraction(1, 2)) == gen_random(6, 5, seed=9, p="1/2")
    assert all(len(b) == 2 for b in gen_random(6, 5, seed=1, size=2).ballots)
    assert fingerprint(gen_random(8, 6, seed=42, p=Fraction(1, 2))) == RANDOM_8_6_42


@pytest.mark.parametrize(
    "kwargs",
    [dict(p=0), dict(p=Fraction(3, 2)), dict(size=7), dict(), dict(p=Fraction(1, 2), size=1)],
)
def test_gen_random_invalid(kwargs):
    with pytest.raises(ValueError):
        gen_random(4, 6, seed=0, **kwargs)


def test_generated_profiles_round_trip():
    for e in (gen_cycle(5), replicate(gen_cycle(3), 3), gen_random(9, 5, seed=4, p="1/3")):
        assert parse_election(serialize_election(e)) == e
