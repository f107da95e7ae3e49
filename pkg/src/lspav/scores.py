"""Exact PAV scores and single-swap score deltas.

All public values are :class:`fractions.Fraction`. The local search and the
exhaustive oracle work on integers scaled by ``lcm(1, ..., k + 1)`` instead,
which keeps every comparison exact while avoiding Fraction normalisation in
inner loops.
"""

from fractions import Fraction
from functools import lru_cache
from math import lcm

from .election import satisfaction


@lru_cache(maxsize=None)
def harmonic(t):
    """Return the harmonic number ``H(t) = 1 + 1/2 + ... + 1/t`` exactly."""
    if t < 0:
        raise ValueError(f"harmonic number undefined for t={t}")
    if t == 0:
        return Fraction(0)
    return harmonic(t - 1) + Fraction(1, t)


def format_fraction(value):
    """Render an exact rational as ``"p/q"`` (``"11/1"`` for integers)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text):
    num, sep, den = text.partition("/")
    if not sep:
        raise ValueError(f"expected 'p/q', got {text!r}")
    return Fraction(int(num), int(den))


def pav_score(election, committee):
    """PAV score of ``committee``: the sum over voters of ``H(|A_i ∩ W|)``."""
    return sum((harmonic(w) for w in satisfaction(election, committee)), Fraction(0))


def max_pav_score(election, k):
    """Upper bound ``n * H(k)`` on the PAV score of any size-``k`` committee."""
    return election.num_voters * harmonic(k)


def swap_delta(election, committee, out, into, sat=None):
    """Exact change in PAV score when ``out`` leaves and ``into`` joins.

    Only voters approving exactly one of the two candidates are touched; a
    voter gaining ``into`` contributes ``1/(w_i + 1)`` and a voter losing
    ``out`` contributes ``-1/w_i``. ``sat`` may carry a precomputed
    satisfaction vector for ``committee``.
    """
    committee = election.committee(committee)
    if out not in committee:
        raise ValueError(f"candidate {out} is not in the committee")
    if into in committee or not 0 <= into < election.num_candidates:
        raise ValueError(f"candidate {into} is not a non-member candidate")
    if sat is None:
        sat = satisfaction(election, committee)
    masks = election.masks
    bit_out, bit_in = 1 << out, 1 << into
    delta = Fraction(0)
    for i in election.approvers[into]:
        if not masks[i] & bit_out:
            delta += Fraction(1, sat[i] + 1)
    for i in election.approvers[out]:
        if not masks[i] & bit_in:
            delta -= Fraction(1, sat[i])
    return delta


class ScaledScorer:
    """Integer-scaled PAV arithmetic for committees of size at most ``k``.

    Every quantity is multiplied by ``scale = lcm(1, ..., k + 1)`` so that
    ``1/j`` for ``j <= k + 1`` is the integer ``scale // j``.
    """

    def __init__(self, election, k):
        self.election = election
        self.k = k
        self.scale = lcm(*range(1, k + 2))
        self.inv = [0] + [self.scale // j for j in range(1, k + 2)]
        self.h = [0] * (k + 2)
        for t in range(1, k + 2):
            self.h[t] = self.h[t - 1] + self.inv[t]

    def to_fraction(self, value):
        return Fraction(value, self.scale)

    def score(self, sat):
        h = self.h
        return sum(h[w] for w in sat)

    def threshold(self):
        """The acceptance threshold ``n / k**2`` as ``(numerator, denominator)``
        in scaled units, so ``delta >= n/k**2`` iff ``delta * den >= num``."""
        return self.election.num_voters * self.scale, self.k * self.k

    def swap_deltas(self, members, sat):
        """Scaled deltas for every (out, in) pair, keyed ``(out, in)``.

        Uses per-candidate gain and loss totals plus a correction for voters
        approving both candidates, whose satisfaction does not change.
        """
        election = self.election
        inv = self.inv
        approvers = election.approvers
        masks = election.masks
        outside = [c for c in range(election.num_candidates) if c not in members]
        gain = {c: sum(inv[sat[i] + 1] for i in approvers[c]) for c in outside}
        loss = {c: sum(inv[sat[i]] for i in approvers[c]) for c in members}
        deltas = {}
        for out in sorted(members):
            bit_out = 1 << out
            for into in outside:
                both = sum(
                    inv[sat[i]] - inv[sat[i] + 1] for i in approvers[into] if masks[i] & bit_out
                )
                deltas[(out, into)] = gain[into] - loss[out] + both
        return deltas
