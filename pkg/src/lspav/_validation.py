"""Input validation shared by the estimators."""

import numpy as np
from sklearn.utils.validation import check_array

from .election import Election


def check_approval_matrix(X):
    """Validate an approval matrix of shape ``(n_voters, n_candidates)``.

    Entries must be 0/1 (or booleans). Returns a boolean ndarray.
    """
    X = check_array(X, dtype=None, ensure_min_samples=1, ensure_min_features=1)
    if X.dtype != bool:
        if not np.isin(X, (0, 1)).all():
            raise ValueError("approval matrix entries must be 0 or 1")
        X = X.astype(bool)
    return X


def as_election(X, candidate_names=None):
    """Accept an :class:`Election` or an approval matrix and return an Election."""
    if isinstance(X, Election):
        return X
    X = check_approval_matrix(X)
    ballots = [np.flatnonzero(row).tolist() for row in X]
    return Election.from_ballots(
        ballots, num_candidates=X.shape[1], candidate_names=candidate_names
    )


def approval_matrix(election):
    X = np.zeros((election.num_voters, election.num_candidates), dtype=bool)
    for i, ballot in enumerate(election.ballots):
        X[i, list(ballot)] = True
    return X


def check_committee_size(k, m):
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise TypeError(f"committee_size must be an integer, got {k!r}")
    if not 1 <= k <= m:
        raise ValueError(f"committee_size must be in 1..{m}, got {k}")
    return int(k)
