"""Approval elections, committees, and the line-oriented profile format.

Candidates are dense integer indices ``0..m-1``; names only matter at the
I/O boundary. Each ballot is kept both as a ``frozenset`` and as an integer
bitmask so that intersections with a committee are a single ``&``.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class ProfileFormatError(ValueError):
    """Raised when profile or committee text cannot be parsed."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class InvalidCommitteeError(ValueError):
    """Raised when a committee does not fit the election it is used with."""


def default_candidate_names(m):
    """Return ``a, b, c, ...`` for up to 26 candidates, ``c1..cm`` beyond."""
    if m <= 26:
        return tuple(string.ascii_lowercase[:m])
    return tuple(f"c{j + 1}" for j in range(m))


def _mask(candidates):
    mask = 0
    for c in candidates:
        mask |= 1 << c
    return mask


@dataclass(frozen=True)
class Election:
    """An approval election with expanded (individual) voters.

    Parameters
    ----------
    num_candidates : int
        Number of candidates ``m``.
    ballots : tuple of frozenset of int
        One approval set per voter.
    candidate_names : tuple of str, optional
        Distinct names, defaults to :func:`default_candidate_names`.
    default_k : int, optional
        Committee size declared by the profile file, if any.
    """

    num_candidates: int
    ballots: tuple
    candidate_names: tuple = None
    default_k: int | None = None
    masks: tuple = field(init=False, repr=False, compare=False)
    approvers: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        m = self.num_candidates
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"num_candidates must be a positive integer, got {m!r}")
        ballots = tuple(frozenset(b) for b in self.ballots)
        if not ballots:
            raise ValueError("an election needs at least one voter")
        for i, ballot in enumerate(ballots):
            for c in ballot:
                if not isinstance(c, int) or not 0 <= c < m:
                    raise ValueError(f"voter {i} approves unknown candidate {c!r}")
        object.__setattr__(self, "ballots", ballots)

        names = self.candidate_names
        if names is None:
            names = default_candidate_names(m)
        names = tuple(names)
        if len(names) != m:
            raise ValueError(f"expected {m} candidate names, got {len(names)}")
        if any(not isinstance(s, str) or not s or s.split() != [s] for s in names):
            raise ValueError("candidate names must be non-empty and contain no whitespace")
        if len(set(names)) != m:
            raise ValueError("candidate names must be distinct")
        object.__setattr__(self, "candidate_names", names)

        if self.default_k is not None and not 1 <= self.default_k <= m:
            raise ValueError(f"default committee size {self.default_k} not in 1..{m}")

        object.__setattr__(self, "masks", tuple(_mask(b) for b in ballots))
        approvers = [[] for _ in range(m)]
        for i, ballot in enumerate(ballots):
            for c in ballot:
                approvers[c].append(i)
        object.__setattr__(self, "approvers", tuple(tuple(a) for a in approvers))

    @classmethod
    def from_ballots(
        cls,
        ballots: Iterable[Iterable[int]],
        num_candidates: int | None = None,
        candidate_names: Sequence[str] | None = None,
        multiplicities: Sequence[int] | None = None,
        default_k: int | None = None,
    ):
        """Build an election, expanding ``multiplicities`` into identical voters.

        Duplicate candidates inside one ballot are rejected.
        """
        ballots = [list(b) for b in ballots]
        for i, b in enumerate(ballots):
            if len(set(b)) != len(b):
                raise ValueError(f"ballot {i} lists a candidate twice")
        if multiplicities is not None:
            if len(multiplicities) != len(ballots):
                raise ValueError("one multiplicity per ballot is required")
            expanded = []
            for b, mult in zip(ballots, multiplicities):
                if not isinstance(mult, int) or mult < 1:
                    raise ValueError(f"multiplicity must be a positive integer, got {mult!r}")
                expanded.extend([b] * mult)
            ballots = expanded
        if num_candidates is None:
            if candidate_names is not None:
                num_candidates = len(candidate_names)
            else:
                num_candidates = max((max(b) for b in ballots if b), default=-1) + 1
        return cls(num_candidates, tuple(ballots), candidate_names, default_k)

    @property
    def num_voters(self):
        return len(self.ballots)

    @property
    def n(self):
        return len(self.ballots)

    @property
    def m(self):
        return self.num_candidates

    def approval_count(self, c):
        return len(self.approvers[c])

    def index_of(self, name):
        try:
            return self.candidate_names.index(name)
        except ValueError:
            raise KeyError(name) from None

    def committee(self, members):
        """Return a validated :class:`Committee` over this election."""
        committee = members if isinstance(members, Committee) else Committee(members)
        committee.check(self)
        return committee


@dataclass(frozen=True)
class Committee:
    """A set of ``k`` candidate indices."""

    members: frozenset
    committee_size: int = None

    def __post_init__(self):
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        if self.committee_size is None:
            object.__setattr__(self, "committee_size", len(members))
        if len(members) != self.committee_size:
            raise InvalidCommitteeError(
                f"committee has {len(members)} members but size {self.committee_size}"
            )
        if self.committee_size < 1:
            raise InvalidCommitteeError("a committee needs at least one member")

    @property
    def k(self):
        return self.committee_size

    @property
    def mask(self):
        return _mask(self.members)

    def sorted(self):
        return tuple(sorted(self.members))

    def check(self, election):
        m = election.num_candidates
        if self.committee_size > m:
            raise InvalidCommitteeError(f"committee size {self.committee_size} exceeds m={m}")
        bad = [c for c in self.members if not isinstance(c, int) or not 0 <= c < m]
        if bad:
            raise InvalidCommitteeError(f"unknown candidates {sorted(bad)}")

    def names(self, election):
        return [election.candidate_names[c] for c in self.sorted()]

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self):
        return self.committee_size

    def __contains__(self, c):
        return c in self.members


def satisfaction(election, committee):
    """Per-voter satisfaction ``|A_i ∩ W|`` as a tuple of ints."""
    committee = election.committee(committee)
    wmask = committee.mask
    return tuple((mask & wmask).bit_count() for mask in election.masks)


def parse_election(text):
    """Parse a profile written in the line-oriented profile format.

    ::

        # comment
        candidates: a b c d
        k: 3
        1: a d
        2: a

    Each ballot line is ``<multiplicity>: <names...>``; no names means an
    empty ballot.
    """
    names = None
    default_k = None
    ballots = []
    multiplicities = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise ProfileFormatError(f"expected '<key>: ...', got {raw!r}", lineno)
        head = head.strip()
        tokens = rest.split()
        if names is None:
            if head != "candidates":
                raise ProfileFormatError("first entry must be 'candidates: ...'", lineno)
            if not tokens:
                raise ProfileFormatError("empty candidate list", lineno)
            if len(set(tokens)) != len(tokens):
                raise ProfileFormatError("duplicate candidate name", lineno)
            names = tokens
            index = {name: j for j, name in enumerate(names)}
            continue
        if head == "candidates":
            raise ProfileFormatError("candidates declared twice", lineno)
        if head == "k":
            if default_k is not None:
                raise ProfileFormatError("k declared twice", lineno)
            if len(tokens) != 1 or not tokens[0].isdigit() or int(tokens[0]) < 1:
                raise ProfileFormatError(f"invalid committee size {rest.strip()!r}", lineno)
            default_k = int(tokens[0])
            if default_k > len(names):
                raise ProfileFormatError(
                    f"committee size {default_k} exceeds {len(names)} candidates", lineno
                )
            continue
        try:
            mult = int(head)
        except ValueError:
            raise ProfileFormatError(f"invalid multiplicity {head!r}", lineno) from None
        if mult < 1:
            raise ProfileFormatError(f"multiplicity must be positive, got {mult}", lineno)
        ballot = []
        for token in tokens:
            if token not in index:
                raise ProfileFormatError(f"unknown candidate {token!r}", lineno)
            ballot.append(index[token])
        if len(set(ballot)) != len(ballot):
            raise ProfileFormatError("candidate listed twice in one ballot", lineno)
        ballots.append(ballot)
        multiplicities.append(mult)
    if names is None:
        raise ProfileFormatError("missing 'candidates:' line")
    if not ballots:
        raise ProfileFormatError("profile contains no ballots")
    return Election.from_ballots(
        ballots,
        num_candidates=len(names),
        candidate_names=names,
        multiplicities=multiplicities,
        default_k=default_k,
    )


def serialize_election(election, comments=()):
    """Emit ``election`` in the profile format.

    Runs of identical consecutive ballots collapse into one line with a
    multiplicity; candidate names within a line follow index order.
    """
    names = election.candidate_names
    lines = [f"# {c}" for c in comments]
    lines.append("candidates: " + " ".join(names))
    if election.default_k is not None:
        lines.append(f"k: {election.default_k}")
    run_ballot, run_len = None, 0
    for ballot in election.ballots:
        if ballot == run_ballot:
            run_len += 1
            continue
        if run_ballot is not None:
            lines.append(_ballot_line(run_len, run_ballot, names))
        run_ballot, run_len = ballot, 1
    lines.append(_ballot_line(run_len, run_ballot, names))
    return "\n".join(lines) + "\n"


def _ballot_line(mult, ballot, names):
    body = " ".join(names[c] for c in sorted(ballot))
    return f"{mult}: {body}" if body else f"{mult}:"


def parse_committee(text, election, k=None):
    """Parse a committee file (one line of whitespace-separated names)."""
    tokens = [t for line in text.splitlines() if not line.lstrip().startswith("#") for t in line.split()]
    members = []
    for token in tokens:
        try:
            members.append(election.index_of(token))
        except KeyError:
            raise InvalidCommitteeError(f"unknown candidate {token!r}") from None
    if len(set(members)) != len(members):
        raise InvalidCommitteeError("candidate listed twice in committee")
    if k is not None and len(members) != k:
        raise InvalidCommitteeError(f"committee has {len(members)} members, expected {k}")
    return election.committee(members)


def serialize_committee(committee, election):
    return " ".join(committee.names(election)) + "\n"
