"""Committee selection rules as scikit-learn style candidate selectors.

Voters are samples and candidates are features. ``fit`` chooses a committee
of ``committee_size`` candidates, after which ``transform`` keeps only the
committee's columns, so ``transform(X).sum(axis=1)`` is each voter's
satisfaction. ``fit`` also accepts an :class:`~lspav.election.Election`.
"""

from sklearn.base import BaseEstimator
from sklearn.feature_selection import SelectorMixin
from sklearn.utils.validation import check_is_fitted

import numpy as np

from ._validation import approval_matrix, as_election, check_committee_size
from .audit import audit
from .localsearch import LsPavConfig, approval_top_k, ls_pav
from .oracle import OracleBudget, exact_pav
from .scores import pav_score


class _CommitteeSelector(SelectorMixin, BaseEstimator):
    def _fit_election(self, X):
        election = as_election(X)
        self.n_features_in_ = election.num_candidates
        self.election_ = election
        k = check_committee_size(self.committee_size, election.num_candidates)
        committee = self._select(election, k)
        self.committee_ = committee
        self.pav_score_ = pav_score(election, committee)
        return self

    def fit(self, X, y=None):
        return self._fit_election(X)

    def _get_support_mask(self):
        check_is_fitted(self, "committee_")
        mask = np.zeros(self.n_features_in_, dtype=bool)
        mask[list(self.committee_.members)] = True
        return mask

    def transform(self, X):
        if hasattr(X, "ballots"):
            X = approval_matrix(X)
        return super().transform(X)

    def satisfaction(self, X):
        """Number of committee members each voter approves."""
        return np.asarray(self.transform(X), dtype=int).sum(axis=1)

    def score(self, X, y=None):
        """Exact PAV score of the fitted committee on ``X``."""
        check_is_fitted(self, "committee_")
        return pav_score(as_election(X), self.committee_)

    def audit(self, X=None):
        """Axiom audit of the fitted committee (on the training profile by default)."""
        check_is_fitted(self, "committee_")
        election = self.election_ if X is None else as_election(X)
        return audit(election, self.committee_)

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.input_tags.allow_nan = False
        tags.target_tags.required = False
        return tags


class LSPAV(_CommitteeSelector):
    """Local-search PAV with an ``n / k**2`` improvement threshold.

    Parameters
    ----------
    committee_size : int
        Number of candidates to select.
    init_strategy : {"approval-top-k", "first-k", "seeded-random"}
    pivot_rule : {"best-improvement", "first-improvement"}
    random_state : int, optional
        Seed, required with ``init_strategy="seeded-random"``.
    max_swaps : int, optional
        Override for the swap bound, for tests.

    Attributes
    ----------
    committee_ : Committee
    trace_ : LsPavTrace
    pav_score_ : Fraction
    n_swaps_ : int
    """

    def __init__(
        self,
        committee_size=1,
        init_strategy="approval-top-k",
        pivot_rule="best-improvement",
        random_state=None,
        max_swaps=None,
    ):
        self.committee_size = committee_size
        self.init_strategy = init_strategy
        self.pivot_rule = pivot_rule
        self.random_state = random_state
        self.max_swaps = max_swaps

    def _select(self, election, k):
        config = LsPavConfig(
            init_strategy=self.init_strategy,
            pivot_rule=self.pivot_rule,
            seed=self.random_state,
            max_swaps_override=self.max_swaps,
        )
        committee, self.trace_ = ls_pav(election, k, config)
        self.n_swaps_ = self.trace_.num_swaps
        return committee


class ExactPAV(_CommitteeSelector):
    """Exhaustive PAV; lexicographically smallest optimum on ties."""

    def __init__(self, committee_size=1, max_combinations=10_000_000):
        self.committee_size = committee_size
        self.max_combinations = max_combinations

    def _select(self, election, k):
        committee, _ = exact_pav(election, k, OracleBudget(self.max_combinations))
        return committee


class ApprovalTopK(_CommitteeSelector):
    """The ``k`` most approved candidates, ties by lower index."""

    def __init__(self, committee_size=1):
        self.committee_size = committee_size

    def _select(self, election, k):
        return election.committee(approval_top_k(election, k))
