"""``sylprob`` command line: exact Sylow commuting probabilities and criterion checks.

Every report is JSON (one object per line); rationals are strings "num/den".
Exit codes: 0 pass, 1 counterexample or mismatch, 2 usage/parse error,
3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from typing import Sequence

from .builders import build_expression
from .config import RunConfig, use_config
from .corpus import builtin_corpus, load_corpus
from .errors import BudgetExceeded, ParseError
from .lab import (
    IMPLICATION_FAMILIES,
    fitting_table,
    inequality_suite,
    involution_family_report,
    run_suite,
    sharpness_witnesses,
)
from .probability import omega_set, pr, pr_star
from .structure import (
    PrimeSet,
    is_nilpotent,
    is_prime,
    is_soluble,
    prime_divisors,
    sylow_subgroup,
    upper_fitting_series,
)

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

SUITES = ("implications", "sharpness", "involution", "inequalities", "fitting", "all")

GROUP_HELP = ('group expression, e.g. "Sym(5)", "Alt(6)", "C(12)", "D(8)" (order 16), '
              '"PSL2(7)", "Sp62", "Sym(5) * Pow(Sym(3), 2)", "InvolutionExample(3)", '
              '\'Perm(deg=5; gens="(1 2 3)(4 5), (1 2)")\'')


def _emit(obj: dict, out) -> None:
    out.write(json.dumps(obj, sort_keys=False) + "\n")


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def _prime_set(text: str) -> PrimeSet:
    try:
        return PrimeSet.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=_positive, default=None,
                        help="enumeration budget in elements (default 2000000)")
    common.add_argument("--jobs", type=int, default=None,
                        help="worker processes for corpus runs (default: all cores)")
    common.add_argument("--include-stretch", action="store_true",
                        help="include the Sp(6,2) stretch case")

    ap = argparse.ArgumentParser(prog="sylprob", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pr", parents=[common], help="values of pr(P, Q) over Sylow pairs")
    p.add_argument("--group", required=True, help=GROUP_HELP)
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--q", type=_prime, required=True)
    p.add_argument("--fixed", action="store_true",
                   help="only pr of one fixed Sylow p- and q-subgroup, no conjugate sweep")

    s = sub.add_parser("prstar", parents=[common], help="pr*_G(pi1, pi2)")
    s.add_argument("--group", required=True, help=GROUP_HELP)
    s.add_argument("--pi1", type=_prime_set, default=PrimeSet.all(),
                   help="prime set: *, 2, 2', odd, {2,3} (default *)")
    s.add_argument("--pi2", type=_prime_set, default=PrimeSet.all())

    c = sub.add_parser("classify", parents=[common], help="orders of F, F_2, R and predicates")
    c.add_argument("--group", required=True, help=GROUP_HELP)

    v = sub.add_parser("verify", parents=[common], help="run a criterion suite over a corpus")
    src = v.add_mutually_exclusive_group()
    src.add_argument("--corpus", help='JSON array of {"label": ..., "expr": ...}')
    src.add_argument("--builtin", action="store_true", help="use the builtin corpus (default)")
    v.add_argument("--suite", choices=SUITES, default="implications")
    return ap


def _config(args) -> RunConfig:
    cfg = RunConfig(include_stretch=args.include_stretch)
    if args.budget is not None:
        cfg = replace(cfg, enumeration_budget=args.budget)
    if args.jobs is not None:
        cfg = replace(cfg, parallelism=max(0, args.jobs))
    return cfg


def cmd_pr(args, cfg: RunConfig, out) -> int:
    if args.p == args.q:
        raise ParseError("--p and --q must differ")
    g = build_expression(args.group)
    report = {"kind": "pr", "group": args.group, "p": args.p, "q": args.q}
    if args.fixed:
        value = pr(sylow_subgroup(g, args.p), sylow_subgroup(g, args.q))
        report.update({"mode": "fixed", "value": str(value)})
    else:
        om = omega_set(g, args.p, args.q)
        report.update({"mode": "sweep", **{k: v for k, v in om.as_dict().items()
                                           if k not in ("kind", "p", "q")}})
    report["config"] = cfg.as_dict()
    _emit(report, out)
    return EXIT_OK


def cmd_prstar(args, cfg: RunConfig, out) -> int:
    g = build_expression(args.group)
    report = {"group": args.group, **pr_star(g, args.pi1, args.pi2).as_dict(),
              "config": cfg.as_dict()}
    _emit(report, out)
    return EXIT_OK


def classify(g) -> dict:
    series = upper_fitting_series(g)
    orders = series.orders
    return {
        "order": g.order,
        "degree": g.degree,
        "prime_divisors": prime_divisors(g.order),
        "is_nilpotent": is_nilpotent(g),
        "is_soluble": is_soluble(g),
        "fitting_order": orders[0],
        "fitting_index": g.order // orders[0],
        "f2_order": orders[1] if len(orders) > 1 else orders[0],
        "radical_order": orders[-1],
        "fitting_series": orders,
    }


def cmd_classify(args, cfg: RunConfig, out) -> int:
    g = build_expression(args.group)
    _emit({"kind": "classify", "group": args.group, **classify(g), "config": cfg.as_dict()}, out)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig, out) -> int:
    entries = load_corpus(args.corpus) if args.corpus else builtin_corpus(cfg.include_stretch)
    suites = SUITES[:-1] if args.suite == "all" else (args.suite,)
    _emit({"kind": "run", "suites": list(suites),
           "corpus": args.corpus or "builtin", "entries": len(entries),
           "config": cfg.as_dict()}, out)
    if not entries and set(suites) & {"implications", "inequalities", "fitting"}:
        print("warning: empty corpus, nothing to verify", file=sys.stderr)
    failures = 0
    summary: dict = {}
    for suite in suites:
        if suite == "implications":
            res = run_suite(entries)
            for v in res.verdicts:
                _emit(v.as_dict(), out)
            for s in res.skipped:
                _emit(s.as_dict(), out)
            missing = sorted(set(IMPLICATION_FAMILIES) - res.confirmed_families()) if entries else []
            failures += len(res.counterexamples)
            summary[suite] = {"verdicts": len(res.verdicts),
                              "counterexamples": len(res.counterexamples),
                              "skipped": len(res.skipped),
                              "families_without_confirmation": missing}
        elif suite == "sharpness":
            checks = sharpness_witnesses(cfg.include_stretch)
            for c in checks:
                _emit(c.as_dict(), out)
            bad = sum(not c.ok for c in checks)
            failures += bad
            summary[suite] = {"checks": len(checks), "mismatches": bad}
        elif suite == "involution":
            bad = 0
            for s in range(1, 6):
                rep = involution_family_report(s)
                _emit(rep.as_dict(), out)
                bad += not rep.example_claims_hold
            failures += bad
            summary[suite] = {"reports": 5, "mismatches": bad}
        elif suite == "inequalities":
            samples = inequality_suite(entries)
            for smp in samples:
                _emit(smp.as_dict(), out)
            bad = sum(not smp.holds for smp in samples)
            failures += bad
            summary[suite] = {"samples": len(samples), "violations": bad}
        elif suite == "fitting":
            rows = fitting_table(entries)
            for r in rows:
                _emit(r.as_dict(), out)
            summary[suite] = {"rows": len(rows)}
    _emit({"kind": "summary", "passed": failures == 0, "suites": summary}, out)
    return EXIT_OK if failures == 0 else EXIT_COUNTEREXAMPLE


COMMANDS = {"pr": cmd_pr, "prstar": cmd_prstar, "classify": cmd_classify, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = _config(args)
    try:
        with use_config(cfg):
            return COMMANDS[args.command](args, cfg, out)
    except BudgetExceeded as exc:
        print(f"sylprob: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, OSError) as exc:
        print(f"sylprob: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
