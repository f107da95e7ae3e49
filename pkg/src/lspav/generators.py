"""Profile generators: cycle counterexamples, candidate replication, random profiles."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .audit import min_avg_satisfaction
from .election import Committee, Election, default_candidate_names


def gen_cycle(k):
    """Cycle profile on ``k + 1`` candidates for committee size ``k``.

    Around the cycle, candidate ``j`` gets one voter approving it together
    with its predecessor and ``k - 1`` voters approving only it, giving
    ``n = k(k + 1)`` voters and ``k + 1`` approvers per candidate. Since
    ``n / k = k + 1``, each candidate's approvers form a 1-cohesive group.
    ``k = 3`` is the rectangle ``{d,a}, 2x{a}, {a,b}, 2x{b}, ...``.
    """
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"cycle profiles need k >= 2, got {k!r}")
    m = k + 1
    ballots, mults = [], []
    for j in range(m):
        ballots += [[(j - 1) % m, j], [j]]
        mults += [1, k - 1]
    return Election.from_ballots(
        ballots,
        num_candidates=m,
        candidate_names=default_candidate_names(m),
        multiplicities=mults,
        default_k=k,
    )


def best_min_avg_satisfaction(election, k, ell):
    """Exhaustively find the committee maximising the worst ``ell``-cohesive average.

    Returns ``(value, committee, group)`` where ``group`` is the minimising
    :class:`~lspav.audit.CohesiveGroupReport` for the best committee. Whether
    an ``ell``-cohesive group exists does not depend on the committee; when
    none does, ``(None, first committee, None)`` is returned. Ties go to the
    lexicographically first committee.
    """
    best = None
    for members in combinations(range(election.num_candidates), k):
        committee = Committee(frozenset(members), k)
        group = min_avg_satisfaction(election, committee, ell)
        if group is None:
            return None, committee, None
        if best is None or group.avg_satisfaction > best[0]:
            best = (group.avg_satisfaction, committee, group)
    return best


def cycle_tightness(k):
    """Best achievable worst-case 1-cohesive average on :func:`gen_cycle` ``(k)``,
    by enumerating all ``k + 1`` committees."""
    value, _, _ = best_min_avg_satisfaction(gen_cycle(k), k, 1)
    return value


def replicate(base, ell, default_k=None):
    """Replace every candidate by ``ell`` copies approved by the same voters.

    Candidate ``j`` maps to ``j*ell .. j*ell + ell - 1``, named
    ``<name>.1 .. <name>.<ell>``; voters are unchanged.
    """
    if not isinstance(ell, int) or ell < 1:
        raise ValueError(f"ell must be a positive integer, got {ell!r}")
    names = [f"{name}.{r + 1}" for name in base.candidate_names for r in range(ell)]
    ballots = [[c * ell + r for c in sorted(b) for r in range(ell)] for b in base.ballots]
    return Election.from_ballots(
        ballots,
        num_candidates=base.num_candidates * ell,
        candidate_names=names,
        default_k=default_k,
    )


def gen_random(n, m, seed, p=None, size=None, k=None):
    """Seeded random profile.

    Exactly one ballot model must be chosen: ``p`` (each candidate enters
    each ballot independently with rational probability ``p``) or ``size``
    (every ballot is a uniform ``size``-subset). ``p`` is converted to a
    :class:`~fractions.Fraction` and sampled exactly.
    """
    if not (isinstance(n, int) and isinstance(m, int)) or n < 1 or m < 1:
        raise ValueError("n and m must be positive integers")
    if (p is None) == (size is None):
        raise ValueError("choose exactly one ballot model: p or size")
    rng = random.Random(seed)
    if p is not None:
        p = Fraction(p)
        if not 0 < p <= 1:
            raise ValueError(f"p must lie in (0, 1], got {p}")
        ballots = [
            [c for c in range(m) if rng.randrange(p.denominator) < p.numerator]
            for _ in range(n)
        ]
    else:
        if not isinstance(size, int) or not 0 <= size <= m:
            raise ValueError(f"ballot size must be in 0..{m}, got {size!r}")
        ballots = [sorted(rng.sample(range(m), size)) for _ in range(n)]
    return Election.from_ballots(ballots, num_candidates=m, default_k=k)
