"""Command-line interface.

Subcommands:

    compute      print one walk-sum polynomial (text or JSON)
    specialize   apply a named table rule to a polynomial file
    verify       sweep the type B/C/D walk-sum identities over weights
    delta-check  verify specialization-table rows on weight-function factors
    selftest     a quick end-to-end sanity sweep

Exit status: 0 when every requested check passes, 1 on a verification
failure, 2 on a domain error (bad flags, malformed weights, unknown rules).
Reports are JSON lines ordered by job key; with a worker pool
(--workers or the KOORNWALK_WORKERS environment variable) the output is
byte-identical to the serial run.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

from .laurent import XPoly
from .ramyip import nonsymmetric_poly
from .specialize import TABLE1, TABLE2, spec_rule, verify_ry_proposition
from .weights import check_delta_specialization

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_DOMAIN = 2


class DomainError(ValueError):
    pass


def _parse_mu(text: str, n: int) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise DomainError(f"weight {text!r} is not a comma list of integers")
    if len(parts) != n:
        raise DomainError(f"weight {text!r} has {len(parts)} entries, expected {n}")
    return parts


def _mu_box(n: int, box: int):
    return itertools.product(range(-box, box + 1), repeat=n)


def _workers(args) -> int:
    if getattr(args, "workers", None):
        return max(1, args.workers)
    env = os.environ.get("KOORNWALK_WORKERS", "")
    return max(1, int(env)) if env.isdigit() and int(env) > 0 else 1


def _run_jobs(jobs, fn, workers: int):
    """Map fn over jobs; results ordered by job key regardless of pool size."""
    if workers <= 1:
        results = [fn(j) for j in jobs]
    else:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            results = pool.map(fn, jobs)
    return [r for _, r in sorted(zip(jobs, results), key=lambda t: t[0])]


def cmd_compute(args) -> int:
    mu = _parse_mu(args.mu, args.n)
    rule = None
    if args.rule:
        try:
            rule = spec_rule(args.rule)
        except KeyError as exc:
            raise DomainError(str(exc))
        if args.system != "cc":
            raise DomainError("--rule applies to the cc system only")
    poly = nonsymmetric_poly(args.system, args.n, mu, rule=rule, budget=args.budget)
    if args.format == "json":
        doc = poly.poly.to_json()
        doc["system"] = poly.system
        doc["mu"] = list(poly.mu)
        doc["word"] = [poly.auto, list(poly.word)]
        print(json.dumps(doc, sort_keys=True))
    else:
        print(poly.poly.text())
    return EXIT_OK


def cmd_specialize(args) -> int:
    try:
        rule = spec_rule(args.rule)
    except KeyError as exc:
        raise DomainError(str(exc))
    with open(args.infile) as fh:
        poly = XPoly.from_json(json.load(fh))
    out = poly.substitute_params(rule.target_ring, rule.images)
    with open(args.out, "w") as fh:
        json.dump(out.to_json(), fh, sort_keys=True)
        fh.write("\n")
    return EXIT_OK


def _verify_one(job):
    which, n, mu, mode, points, seed, budget = job
    return verify_ry_proposition(which, n, mu, mode=mode, points=points, seed=seed, budget=budget)


def cmd_verify(args) -> int:
    which = {"ry-b": "b", "ry-c": "c", "ry-d": "d"}.get(args.prop)
    if which is None:
        raise DomainError(f"unknown proposition {args.prop!r}")
    if args.mode == "eval" and args.seed is None:
        raise DomainError("eval mode requires --seed")
    if args.mu:
        mus = [_parse_mu(args.mu, args.n)]
    else:
        mus = list(_mu_box(args.n, args.mu_box))
    jobs = [
        (which, args.n, mu, args.mode, args.points, args.seed or 0, args.budget)
        for mu in mus
    ]
    reports = _run_jobs(jobs, _verify_one, _workers(args))
    status = EXIT_OK
    for rpt in reports:
        print(json.dumps(rpt, sort_keys=True))
        if rpt["status"] != "ok":
            status = EXIT_VERIFY_FAIL
    return status


def _delta_one(job):
    tag, n, cutoff = job
    return check_delta_specialization(tag, n, cutoff)


def cmd_delta_check(args) -> int:
    tags = list(TABLE1) if args.subsystem == "all" else [args.subsystem]
    for t in tags:
        if t not in TABLE1:
            raise DomainError(f"unknown subsystem {t!r}")
    jobs = [(t, args.n, c) for t in tags for c in (args.cutoff if args.cutoff else [1])]
    reports = _run_jobs(jobs, _delta_one, _workers(args))
    status = EXIT_OK
    for rpt in reports:
        print(json.dumps(rpt, sort_keys=True))
        if rpt["status"] != "ok":
            status = EXIT_VERIFY_FAIL
    return status


def cmd_selftest(args) -> int:
    status = EXIT_OK
    for which in ("b", "c", "d"):
        for mu in ((0, 0), (1, 0), (0, -1), (1, 1)):
            rpt = verify_ry_proposition(which, 2, mu, mode="exact")
            print(json.dumps(rpt, sort_keys=True))
            if rpt["status"] != "ok":
                status = EXIT_VERIFY_FAIL
    for tag in TABLE1:
        rpt = check_delta_specialization(tag, 2, 1)
        print(json.dumps(rpt, sort_keys=True))
        if rpt["status"] != "ok":
            status = EXIT_VERIFY_FAIL
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="koornwalk", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="print one walk-sum polynomial")
    c.add_argument("--system", choices=("cc", "b", "c", "d"), default="cc")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--mu", required=True, help="comma list of integers")
    c.add_argument("--rule", default=None, help="specialization rule name")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--budget", type=int, default=20)
    c.set_defaults(fn=cmd_compute)

    s = sub.add_parser("specialize", help="apply a table rule to a polynomial file")
    s.add_argument("--rule", required=True)
    s.add_argument("--in", dest="infile", required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(fn=cmd_specialize)

    v = sub.add_parser("verify", help="sweep a walk-sum identity")
    v.add_argument("--prop", choices=("ry-b", "ry-c", "ry-d"), required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--mu", default=None)
    v.add_argument("--mu-box", type=int, default=1)
    v.add_argument("--mode", choices=("exact", "eval"), default="exact")
    v.add_argument("--points", type=int, default=3)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--budget", type=int, default=20)
    v.add_argument("--workers", type=int, default=None)
    v.set_defaults(fn=cmd_verify)

    d = sub.add_parser("delta-check", help="verify specialization-table rows")
    d.add_argument("--subsystem", default="all")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--cutoff", type=int, nargs="*", default=[1])
    d.add_argument("--workers", type=int, default=None)
    d.set_defaults(fn=cmd_delta_check)

    t = sub.add_parser("selftest", help="quick end-to-end sweep")
    t.set_defaults(fn=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DomainError as exc:
        print(json.dumps({"status": "domain-error", "error": str(exc)}), file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
