"""Extended justified representation and average satisfaction of cohesive groups.

A voter group ``V`` is ``ell``-cohesive when ``|V| >= ceil(ell * n / k)`` and
its members jointly approve at least ``ell`` candidates. Rather than
enumerating voter subsets, every check here enumerates witness sets ``T`` of
``ell`` candidates: any cohesive group approves all of some such ``T``, and
conversely any large enough subset of ``T``'s approvers is cohesive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .election import satisfaction
from .oracle import BudgetExceededError
from .scores import format_fraction

DEFAULT_AUDIT_CAP = 5_000_000


def cohesive_threshold(ell, n, k):
    """``ceil(ell * n / k)`` with integer arithmetic."""
    return -(-ell * n // k)


@dataclass(frozen=True)
class CohesiveGroupReport:
    ell: int
    witness_candidates: tuple
    group_voters: tuple
    avg_satisfaction: Fraction
    threshold_size: int

    @property
    def group_size(self):
        return len(self.group_voters)

    def to_dict(self, approx=False):
        d = {
            "ell": self.ell,
            "witness_candidates": list(self.witness_candidates),
            "group_voters": list(self.group_voters),
            "group_size": self.group_size,
            "avg_satisfaction": format_fraction(self.avg_satisfaction),
            "threshold_size": self.threshold_size,
        }
        if approx:
            d["avg_satisfaction_approx"] = float(self.avg_satisfaction)
        return d


@dataclass(frozen=True)
class AuditReport:
    ejr_holds: bool
    ejr_counterexample: CohesiveGroupReport | None
    min_avg_satisfaction: dict = field(default_factory=dict)
    lemma1_consistent: bool = True

    def to_dict(self, approx=False):
        return {
            "ejr_holds": self.ejr_holds,
            "ejr_counterexample": (
                self.ejr_counterexample.to_dict(approx) if self.ejr_counterexample else None
            ),
            "min_avg_satisfaction": {
                str(ell): (g.to_dict(approx) if g is not None else None)
                for ell, g in sorted(self.min_avg_satisfaction.items())
            },
            "lemma1_consistent": self.lemma1_consistent,
        }


def _check_budget(m, ells, cap):
    total = sum(comb(m, ell) for ell in ells)
    if total > cap:
        raise BudgetExceededError(f"{total} witness sets exceed the audit cap {cap}")


def _witness_sets(election, ell, min_size):
    """Yield ``(T, approvers of all of T)`` for size-``ell`` sets ``T`` in
    lexicographic order, skipping sets approved by fewer than ``min_size``
    voters. Branches die as soon as the common approvers drop below it."""
    m = election.num_candidates
    masks = election.masks

    def extend(start, prefix, voters):
        if len(prefix) == ell:
            yield tuple(prefix), voters
            return
        for c in range(start, m - (ell - len(prefix)) + 1):
            bit = 1 << c
            kept = [i for i in voters if masks[i] & bit]
            if len(kept) >= min_size:
                prefix.append(c)
                yield from extend(c + 1, prefix, kept)
                prefix.pop()

    yield from extend(0, [], list(range(election.num_voters)))


def _group(ell, T, voters, sat, threshold):
    voters = tuple(sorted(voters))
    total = sum(sat[i] for i in voters)
    return CohesiveGroupReport(ell, T, voters, Fraction(total, len(voters)), threshold)


def check_ejr(election, committee, cap=DEFAULT_AUDIT_CAP):
    """Return ``(holds, counterexample)``.

    EJR fails iff for some ``ell`` and size-``ell`` set ``T`` the approvers of
    ``T`` with fewer than ``ell`` committee members in their ballot number at
    least ``ceil(ell * n / k)``. The counterexample is the first such group
    (smallest ``ell``, then lexicographic ``T``) and consists of exactly
    those unsatisfied approvers.
    """
    committee = election.committee(committee)
    k, n = committee.k, election.num_voters
    _check_budget(election.num_candidates, range(1, k + 1), cap)
    sat = satisfaction(election, committee)
    for ell in range(1, k + 1):
        threshold = cohesive_threshold(ell, n, k)
        for T, voters in _witness_sets(election, ell, threshold):
            unsatisfied = [i for i in voters if sat[i] < ell]
            if len(unsatisfied) >= threshold:
                return False, _group(ell, T, unsatisfied, sat, threshold)
    return True, None


def min_avg_satisfaction(election, committee, ell, cap=DEFAULT_AUDIT_CAP):
    """Exact minimum average satisfaction over all ``ell``-cohesive groups.

    For a fixed ``T`` the minimum is attained by the ``ceil(ell * n / k)``
    approvers of ``T`` with the smallest satisfaction; adding anyone else
    cannot pull the mean lower. Returns ``None`` if no ``ell``-cohesive
    group exists. Ties go to the lexicographically smallest ``(T, voters)``.
    """
    committee = election.committee(committee)
    k, n = committee.k, election.num_voters
    if not 1 <= ell <= k:
        raise ValueError(f"ell must be in 1..{k}, got {ell}")
    _check_budget(election.num_candidates, [ell], cap)
    sat = satisfaction(election, committee)
    threshold = cohesive_threshold(ell, n, k)
    best = None
    best_key = None
    for T, voters in _witness_sets(election, ell, threshold):
        lowest = sorted(voters, key=lambda i: (sat[i], i))[:threshold]
        total = sum(sat[i] for i in lowest)
        key = (Fraction(total, threshold), T, tuple(sorted(lowest)))
        if best_key is None or key < best_key:
            best_key = key
            best = (T, lowest)
    if best is None:
        return None
    return _group(ell, best[0], best[1], sat, threshold)


def audit(election, committee, cap=DEFAULT_AUDIT_CAP):
    """Run the EJR check and the minimum-average computation for every ``ell``.

    ``lemma1_consistent`` records whether "every cohesive group averages more
    than ``ell - 1``" implies the EJR verdict, which must always hold.
    """
    committee = election.committee(committee)
    k = committee.k
    _check_budget(election.num_candidates, range(1, k + 1), cap)
    holds, counterexample = check_ejr(election, committee, cap)
    minima = {ell: min_avg_satisfaction(election, committee, ell, cap) for ell in range(1, k + 1)}
    above = all(g.avg_satisfaction > g.ell - 1 for g in minima.values() if g is not None)
    return AuditReport(holds, counterexample, minima, (not above) or holds)
