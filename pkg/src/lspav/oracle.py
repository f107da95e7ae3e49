"""Exhaustive PAV winner determination for small instances."""

from dataclasses import dataclass
from math import comb

from .election import Committee
from .scores import ScaledScorer


class BudgetExceededError(RuntimeError):
    """An exhaustive procedure would enumerate more objects than allowed."""


@dataclass(frozen=True)
class OracleBudget:
    max_combinations: int = 10_000_000


def exact_pav(election, k, budget=None):
    """Return ``(committee, score)`` maximising the PAV score.

    Committees are enumerated depth-first in lexicographic order, adding and
    removing one candidate at a time so each step only touches that
    candidate's approvers. The first optimum found wins, which makes the
    tie-break the lexicographically smallest member sequence.

    Raises
    ------
    BudgetExceededError
        If ``C(m, k)`` exceeds ``budget.max_combinations``.
    """
    m = election.num_candidates
    if not isinstance(k, int) or not 1 <= k <= m:
        raise ValueError(f"committee size must be in 1..{m}, got {k!r}")
    budget = budget or OracleBudget()
    total = comb(m, k)
    if total > budget.max_combinations:
        raise BudgetExceededError(
            f"C({m}, {k}) = {total} committees exceeds budget {budget.max_combinations}"
        )

    scorer = ScaledScorer(election, k)
    inv = scorer.inv
    approvers = election.approvers
    sat = [0] * election.num_voters
    chosen = []
    best = [-1, None]

    def descend(start, score):
        if len(chosen) == k:
            if score > best[0]:
                best[0], best[1] = score, tuple(chosen)
            return
        for c in range(start, m - (k - len(chosen)) + 1):
            gain = 0
            for i in approvers[c]:
                sat[i] += 1
                gain += inv[sat[i]]
            chosen.append(c)
            descend(c + 1, score + gain)
            chosen.pop()
            for i in approvers[c]:
                sat[i] -= 1

    descend(0, 0)
    assert best[0] == scorer.score(
        [(mask & Committee(best[1]).mask).bit_count() for mask in election.masks]
    )
    return Committee(frozenset(best[1]), k), scorer.to_fraction(best[0])
