"""Machine-readable JSON reports (schema version 1)."""

import hashlib
import json
from functools import lru_cache
from importlib import resources

import jsonschema

from .election import serialize_election
from .localsearch import local_optimality_certificate, swap_bound
from .scores import format_fraction

SCHEMA_VERSION = 1


def fingerprint(election):
    """SHA-256 of the canonical serialisation, so equal profiles hash equally
    regardless of comments or multiplicity grouping in the source file."""
    text = serialize_election(election)
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def run_report(election, k, rule, committee, score, trace=None, audit=None,
               timing_ms=0.0, config=None, approx=False):
    report = {
        "schema": SCHEMA_VERSION,
        "command": "run",
        "input_fingerprint": fingerprint(election),
        "rule": rule,
        "k": k,
        "committee": sorted(committee.names(election)),
        "pav_score": format_fraction(score),
        "config": config or {},
        "trace_summary": None,
        "audit": audit.to_dict(approx) if audit is not None else None,
        "timing_ms": round(timing_ms, 3),
    }
    if trace is not None:
        report["trace_summary"] = {
            "swaps": trace.num_swaps,
            "swap_bound": swap_bound(k),
            "initial_committee": sorted(trace.initial_committee.names(election)),
            "initial_score": format_fraction(trace.initial_score),
            "final_score": format_fraction(trace.final_score),
        }
    if approx:
        report["pav_score_approx"] = float(score)
    return report


def audit_report(election, committee, score, audit, approx=False):
    report = {
        "schema": SCHEMA_VERSION,
        "command": "audit",
        "input_fingerprint": fingerprint(election),
        "k": committee.k,
        "committee": sorted(committee.names(election)),
        "pav_score": format_fraction(score),
        "locally_optimal": local_optimality_certificate(election, committee),
        "audit": audit.to_dict(approx),
    }
    if approx:
        report["pav_score_approx"] = float(score)
    return report


@lru_cache(maxsize=None)
def load_schema():
    text = resources.files("lspav").joinpath("report_schema.json").read_text("utf-8")
    return json.loads(text)


def validate_report(report):
    """Raise :class:`jsonschema.ValidationError` if ``report`` is malformed."""
    jsonschema.validate(report, load_schema())
