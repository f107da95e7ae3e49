"""Local-search PAV committee selection with exact EJR and cohesive-group audits."""

from .audit import (
    AuditReport,
    CohesiveGroupReport,
    audit,
    check_ejr,
    cohesive_threshold,
    min_avg_satisfaction,
)
from .election import (
    Committee,
    Election,
    InvalidCommitteeError,
    ProfileFormatError,
    parse_committee,
    parse_election,
    satisfaction,
    serialize_committee,
    serialize_election,
)
from ._validation import approval_matrix, check_approval_matrix
from .estimators import LSPAV, ApprovalTopK, ExactPAV
from .generators import best_min_avg_satisfaction, cycle_tightness, gen_cycle, gen_random, replicate
from .localsearch import (
    LsPavConfig,
    LsPavTrace,
    SwapLimitExceeded,
    local_optimality_certificate,
    ls_pav,
    swap_bound,
    swap_threshold,
)
from .oracle import BudgetExceededError, OracleBudget, exact_pav
from .scores import harmonic, max_pav_score, pav_score, swap_delta

__version__ = "0.1.0"
