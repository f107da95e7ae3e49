"""Command-line interface.

Reports go to stdout as JSON, diagnostics to stderr. Exit codes: 1 unreadable
or malformed profile, 2 invalid parameters (including ``k``), 3 exhaustive
budget exceeded, 4 bad committee file.
"""

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .audit import DEFAULT_AUDIT_CAP, audit
from .election import (
    InvalidCommitteeError,
    ProfileFormatError,
    parse_committee,
    parse_election,
    serialize_election,
)
from .generators import gen_cycle, gen_random, replicate
from .localsearch import INIT_STRATEGIES, PIVOT_RULES, LsPavConfig, approval_top_k, ls_pav
from .oracle import BudgetExceededError, OracleBudget, exact_pav
from .report import audit_report, run_report
from .scores import pav_score

EXIT_PARSE, EXIT_PARAMS, EXIT_BUDGET, EXIT_COMMITTEE = 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _load_profile(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read profile: {exc}", EXIT_PARSE) from None
    try:
        return parse_election(text)
    except (ProfileFormatError, ValueError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None


def _resolve_k(election, k):
    if k is None:
        k = election.default_k
    if k is None:
        raise CliError("no committee size: pass --k or declare 'k:' in the profile", EXIT_PARAMS)
    if not 1 <= k <= election.num_candidates:
        raise CliError(f"--k must be in 1..{election.num_candidates}, got {k}", EXIT_PARAMS)
    return k


def _emit(obj, out=None):
    out = out or sys.stdout
    json.dump(obj, out, indent=2)
    out.write("\n")


def cmd_run(args):
    election = _load_profile(args.profile)
    k = _resolve_k(election, args.k)
    trace = None
    config = {}
    start = time.perf_counter()
    try:
        if args.rule == "lspav":
            try:
                cfg = LsPavConfig(args.init, args.pivot, args.seed)
            except ValueError as exc:
                raise CliError(str(exc), EXIT_PARAMS) from None
            config = {"init_strategy": cfg.init_strategy, "pivot_rule": cfg.pivot_rule, "seed": cfg.seed}
            committee, trace = ls_pav(election, k, cfg)
        elif args.rule == "exact-pav":
            config = {"max_combinations": args.budget}
            committee, _ = exact_pav(election, k, OracleBudget(args.budget))
        else:
            committee = election.committee(approval_top_k(election, k))
        score = pav_score(election, committee)
        report_audit = audit(election, committee, args.audit_cap) if args.audit else None
    except BudgetExceededError as exc:
        raise CliError(str(exc), EXIT_BUDGET) from None
    elapsed = (time.perf_counter() - start) * 1000
    _emit(run_report(election, k, args.rule, committee, score, trace, report_audit,
                     elapsed, config, args.approx))


def cmd_audit(args):
    election = _load_profile(args.profile)
    if args.k is not None and not 1 <= args.k <= election.num_candidates:
        raise CliError(f"--k must be in 1..{election.num_candidates}, got {args.k}", EXIT_PARAMS)
    try:
        text = Path(args.committee).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read committee: {exc}", EXIT_COMMITTEE) from None
    k = args.k if args.k is not None else election.default_k
    try:
        committee = parse_committee(text, election, k)
    except InvalidCommitteeError as exc:
        raise CliError(f"{args.committee}: {exc}", EXIT_COMMITTEE) from None
    try:
        report_audit = audit(election, committee, args.audit_cap)
    except BudgetExceededError as exc:
        raise CliError(str(exc), EXIT_BUDGET) from None
    _emit(audit_report(election, committee, pav_score(election, committee), report_audit, args.approx))


def cmd_gen(args):
    comments = []
    try:
        if args.family == "cycle":
            election = gen_cycle(args.k)
            comments.append(f"cycle profile, k={args.k}")
        elif args.family == "replicate":
            base = _load_profile(args.input)
            election = replicate(base, args.ell, args.k)
            comments.append(f"{args.input} with every candidate replicated {args.ell} times")
            if args.gamma is not None:
                comments.append(f"gamma: {args.gamma}")
        else:
            election = gen_random(args.n, args.m, args.seed, p=args.p, size=args.size, k=args.k)
            model = f"p={args.p}" if args.p is not None else f"size={args.size}"
            comments.append(f"random profile, n={args.n} m={args.m} {model} seed={args.seed}")
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARAMS) from None
    text = serialize_election(election, comments)
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser():
    parser = argparse.ArgumentParser(prog="lspav", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="select a committee and report it")
    run.add_argument("profile")
    run.add_argument("--k", type=int)
    run.add_argument("--rule", choices=("lspav", "exact-pav", "approval-top-k"), default="lspav")
    run.add_argument("--init", choices=INIT_STRATEGIES, default="approval-top-k")
    run.add_argument("--pivot", choices=PIVOT_RULES, default="best-improvement")
    run.add_argument("--seed", type=int)
    run.add_argument("--budget", type=int, default=OracleBudget().max_combinations,
                     help="maximum committees the exact oracle may enumerate")
    run.add_argument("--audit", action="store_true", help="embed the axiom audit")
    run.add_argument("--audit-cap", type=int, default=DEFAULT_AUDIT_CAP)
    run.add_argument("--approx", action="store_true", help="add decimal renderings")
    run.set_defaults(func=cmd_run)

    aud = sub.add_parser("audit", help="audit an externally supplied committee")
    aud.add_argument("profile")
    aud.add_argument("committee")
    aud.add_argument("--k", type=int)
    aud.add_argument("--audit-cap", type=int, default=DEFAULT_AUDIT_CAP)
    aud.add_argument("--approx", action="store_true")
    aud.set_defaults(func=cmd_audit)

    gen = sub.add_parser("gen", help="write a generated profile")
    families = gen.add_subparsers(dest="family", required=True)
    cyc = families.add_parser("cycle")
    cyc.add_argument("--k", type=int, required=True)
    rep = families.add_parser("replicate")
    rep.add_argument("--input", required=True)
    rep.add_argument("--ell", type=int, required=True)
    rep.add_argument("--gamma", type=_fraction, help="recorded as a comment only")
    rep.add_argument("--k", type=int, help="default committee size of the output")
    rnd = families.add_parser("random")
    rnd.add_argument("--n", type=int, required=True)
    rnd.add_argument("--m", type=int, required=True)
    model = rnd.add_mutually_exclusive_group(required=True)
    model.add_argument("--p", type=_fraction)
    model.add_argument("--size", type=int)
    rnd.add_argument("--seed", type=int, required=True)
    rnd.add_argument("--k", type=int)
    for p in (cyc, rep, rnd):
        p.add_argument("-o", "--output")
        p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except CliError as exc:
        print(f"lspav: {exc}", file=sys.stderr)
        return exc.code
    return 0


if __name__ == "__main__":
    sys.exit(main())
