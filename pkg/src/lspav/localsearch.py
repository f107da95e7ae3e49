"""LS-PAV: local search over single swaps with an ``n / k**2`` acceptance threshold.

Starting from ``k`` candidates, repeatedly replace a committee member by a
non-member whenever that raises the PAV score by at least ``n / k**2``.
Because every accepted swap gains at least that much and no committee scores
more than ``n * H(k)``, the loop performs at most ``ceil(k**2 * H(k))`` swaps.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .election import Committee, satisfaction
from .scores import ScaledScorer, format_fraction, harmonic

INIT_STRATEGIES = ("approval-top-k", "first-k", "seeded-random")
PIVOT_RULES = ("best-improvement", "first-improvement")


class SwapLimitExceeded(RuntimeError):
    """The search ran past its swap bound; the termination argument failed."""


@dataclass(frozen=True)
class LsPavConfig:
    """How LS-PAV picks its starting committee and which improving swap to take.

    ``seeded-random`` requires ``seed``; there is no unseeded mode.
    ``max_swaps_override`` replaces the theoretical swap bound (tests only).
    """

    init_strategy: str = "approval-top-k"
    pivot_rule: str = "best-improvement"
    seed: int | None = None
    max_swaps_override: int | None = None

    def __post_init__(self):
        if self.init_strategy not in INIT_STRATEGIES:
            raise ValueError(f"unknown init_strategy {self.init_strategy!r}")
        if self.pivot_rule not in PIVOT_RULES:
            raise ValueError(f"unknown pivot_rule {self.pivot_rule!r}")
        if self.init_strategy == "seeded-random" and self.seed is None:
            raise ValueError("seeded-random initialisation requires a seed")
        if self.max_swaps_override is not None and self.max_swaps_override < 1:
            raise ValueError("max_swaps_override must be positive")


@dataclass(frozen=True)
class SwapRecord:
    out: int
    into: int
    delta: Fraction
    score_after: Fraction


@dataclass(frozen=True)
class LsPavTrace:
    initial_committee: Committee
    initial_score: Fraction
    swaps: tuple = field(default=())
    final_committee: Committee = None

    @property
    def num_swaps(self):
        return len(self.swaps)

    @property
    def final_score(self):
        return self.swaps[-1].score_after if self.swaps else self.initial_score

    def to_dict(self, election=None):
        def name(c):
            return election.candidate_names[c] if election is not None else c

        return {
            "initial_committee": [name(c) for c in self.initial_committee],
            "initial_score": format_fraction(self.initial_score),
            "swaps": [
                {
                    "out": name(s.out),
                    "in": name(s.into),
                    "delta": format_fraction(s.delta),
                    "score_after": format_fraction(s.score_after),
                }
                for s in self.swaps
            ],
            "final_committee": [name(c) for c in self.final_committee],
            "final_score": format_fraction(self.final_score),
        }


def swap_bound(k):
    """``ceil(k**2 * H(k))``, the maximum number of accepted swaps."""
    return ceil(k * k * harmonic(k))


def swap_threshold(election, k):
    return Fraction(election.num_voters, k * k)


def approval_top_k(election, k):
    """The ``k`` most approved candidates, ties by lower index."""
    order = sorted(range(election.num_candidates), key=lambda c: (-election.approval_count(c), c))
    return frozenset(order[:k])


def initial_committee(election, k, config):
    if config.init_strategy == "first-k":
        members = range(k)
    elif config.init_strategy == "approval-top-k":
        members = approval_top_k(election, k)
    else:
        members = random.Random(config.seed).sample(range(election.num_candidates), k)
    return Committee(frozenset(members), k)


def _check_k(election, k):
    if not isinstance(k, int) or not 1 <= k <= election.num_candidates:
        raise ValueError(f"committee size must be in 1..{election.num_candidates}, got {k!r}")


def ls_pav(election, k, config=None):
    """Run LS-PAV and return ``(committee, trace)``.

    The result admits no swap whose exact score gain is ``>= n / k**2``.
    Best-improvement breaks ties by ascending (in, out) candidate index;
    first-improvement scans in that same order.
    """
    _check_k(election, k)
    config = config or LsPavConfig()
    scorer = ScaledScorer(election, k)
    num, den = scorer.threshold()
    limit = config.max_swaps_override or swap_bound(k)

    start = initial_committee(election, k, config)
    members = set(start.members)
    sat = list(satisfaction(election, start))
    score = scorer.score(sat)
    initial_score = scorer.to_fraction(score)
    swaps = []

    while True:
        deltas = scorer.swap_deltas(members, sat)
        chosen = None
        for (out, into), d in sorted(deltas.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            if d * den < num:
                continue
            if config.pivot_rule == "first-improvement":
                chosen = (out, into, d)
                break
            if chosen is None or d > chosen[2]:
                chosen = (out, into, d)
        if chosen is None:
            break
        if len(swaps) >= limit:
            raise SwapLimitExceeded(f"more than {limit} improving swaps for k={k}")
        out, into, d = chosen
        members.remove(out)
        members.add(into)
        for i in election.approvers[out]:
            sat[i] -= 1
        for i in election.approvers[into]:
            sat[i] += 1
        new_score = scorer.score(sat)
        assert new_score - score == d
        score = new_score
        swaps.append(SwapRecord(out, into, scorer.to_fraction(d), scorer.to_fraction(score)))

    final = Committee(frozenset(members), k)
    trace = LsPavTrace(start, initial_score, tuple(swaps), final)
    return final, trace


def best_swap(election, committee):
    """Largest exact swap delta available from ``committee`` and its (out, in)
    pair, or ``None`` when every candidate is already in the committee."""
    committee = election.committee(committee)
    k = committee.k
    scorer = ScaledScorer(election, k)
    sat = satisfaction(election, committee)
    deltas = scorer.swap_deltas(set(committee.members), sat)
    if not deltas:
        return None
    pair = max(sorted(deltas, key=lambda p: (p[1], p[0])), key=deltas.__getitem__)
    return pair, scorer.to_fraction(deltas[pair])


def local_optimality_certificate(election, committee):
    """True iff no single swap raises the PAV score by ``n / k**2`` or more."""
    best = best_swap(election, committee)
    if best is None:
        return True
    _, delta = best
    return delta < swap_threshold(election, election.committee(committee).k)
