"""Command-line driver.

Exit codes: 0 all checks passed, 1 at least one non-informational
violation, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import mpmath

from . import analytic, audit
from .arith import DEFAULT_TABLE_LIMIT, is_prime
from .characters import character, order, quadratic_character
from .errors import AuditError
from .nonresidues import hudson_check, least_nonresidues, max_constant_run, restricted_nonresidue
from .records import AuditRecord, Report, read_jsonl, render

SWEEP_DEFAULTS = {
    "lemma1c": {"p_max": 300, "r_set": (1, 2, 3)},
    "hudson": {"p_max": 5000},
    "proposition": {"p_max": 2000, "r_set": (1, 2)},
    "analytic": {"p_max": 300},
}


def int_list(text: str) -> tuple[int, ...]:
    """Parse "1-12" or "1,2,5" or a mix such as "1-3,8"."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            a, b = part.split("-", 1)
            out.extend(range(int(a), int(b) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError(f"empty integer list {text!r}")
    return tuple(out)


def big_int(text: str) -> int:
    """Accept 1e7 / 10**7 / 10000000."""
    text = text.strip()
    if "**" in text:
        a, b = text.split("**")
        return int(a) ** int(b)
    if "e" in text.lower():
        m, e = text.lower().split("e")
        return int(m) * 10 ** int(e)
    return int(text)


def _common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--tolerance", type=float, default=None)
    sp.add_argument("--format", dest="fmt", choices=("jsonl", "csv"), default="jsonl")
    sp.add_argument("--out", default=None, help="report path; '-' for stdout (summary then goes to stderr)")
    sp.add_argument("--timing", action="store_true", help="fill per-record elapsed (breaks byte-identical output)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="q2audit", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    t1 = sub.add_parser("table1", help="recompute the C(p0) table")
    _common(t1)

    sw = sub.add_parser("sweep", help="run a verification sweep")
    sw.add_argument("which", choices=tuple(SWEEP_DEFAULTS))
    sw.add_argument("--p-min", type=big_int, default=5)
    sw.add_argument("--p-max", type=big_int, default=None)
    sw.add_argument("--scope", choices=("all", "quadratic"), default="all")
    sw.add_argument("--h", type=int_list, default=tuple(range(1, 13)))
    sw.add_argument("--r", type=int_list, default=None)
    sw.add_argument("--jobs", type=int, default=1)
    sw.add_argument("--seed", type=int, default=0)
    sw.add_argument("--granularity", choices=("worst", "full"), default="worst",
                    help="lemma1c: one record per character (worst case) or per (h, r)")
    _common(sw)

    sc = sub.add_parser("spotcheck", help="large-p checks with the quadratic character")
    sc.add_argument("which", choices=("quadratic",))
    sc.add_argument("--samples", type=int, default=100)
    sc.add_argument("--p0", type=big_int, default=10**7)
    sc.add_argument("--p-min", type=big_int, default=10**7)
    sc.add_argument("--p-max", type=big_int, default=10**9)
    sc.add_argument("--seed", type=int, default=0)
    _common(sc)

    bd = sub.add_parser("bounds", help="every bound formula at one modulus")
    bd.add_argument("--p", type=big_int, required=True)
    bd.add_argument("--p0", type=big_int, default=None, help="table row for C (default: largest 10^k <= p)")

    ch = sub.add_parser("char", help="q1, q2, S and n0 for one character")
    ch.add_argument("--p", type=big_int, required=True)
    ch.add_argument("--index", default="quadratic", help="exponent index c, or 'quadratic'")
    ch.add_argument("--k", type=int, default=2)
    ch.add_argument("--u", type=int_list, default=None)
    ch.add_argument("--table-limit", type=big_int, default=DEFAULT_TABLE_LIMIT)

    cs = sub.add_parser("case", help="re-run one audit record")
    src = cs.add_mutually_exclusive_group(required=True)
    src.add_argument("--record", help="one JSONL line")
    src.add_argument("--from", dest="from_file", help="JSONL report file")
    cs.add_argument("--line", type=int, default=1, help="1-based line in --from")
    return ap


def _emit(report: Report, args) -> int:
    summary = json.dumps(report.summary(), indent=2)
    text = render(report.records, args.fmt)
    if args.out == "-":
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    else:
        if args.out:
            Path(args.out).write_text(text)
        print(summary)
    for rec in report.violations[:20]:
        print(f"VIOLATION {json.dumps(rec.to_dict())}", file=sys.stderr)
    return report.exit_code


def cmd_table1(args) -> int:
    report = audit.run_table1(args.tolerance if args.tolerance is not None else audit.TABLE1_TOL)
    if args.out is None:
        for rec in report.records:
            if rec.check == "table1":
                mark = "ok " if rec.passed else "BAD"
                print(f"{mark} p0=1e{round(math.log10(rec.p)):<3d} C={rec.value:.4f} printed={rec.bound:.4f}")
    return _emit(report, args)


def cmd_sweep(args) -> int:
    d = SWEEP_DEFAULTS[args.which]
    p_max = args.p_max if args.p_max is not None else d["p_max"]
    if args.which == "proposition" and args.p_max is None and args.scope == "quadratic":
        p_max = 10**5
    cfg = audit.SweepConfig(
        p_min=args.p_min, p_max=p_max, scope=args.scope, h_set=args.h,
        r_set=args.r or d.get("r_set", (1, 2, 3)), tolerance=args.tolerance, fmt=args.fmt,
        jobs=args.jobs, seed=args.seed, timing=args.timing, granularity=args.granularity,
    )
    runner = {
        "lemma1c": audit.run_sweep_lemma1c,
        "hudson": audit.run_sweep_hudson,
        "proposition": audit.run_sweep_proposition,
        "analytic": audit.run_sweep_analytic,
    }[args.which]
    return _emit(runner(cfg), args)


def cmd_spotcheck(args) -> int:
    cfg = audit.SweepConfig(samples=args.samples, p0=args.p0, sample_lo=args.p_min, sample_hi=args.p_max,
                            seed=args.seed, fmt=args.fmt, timing=args.timing)
    return _emit(audit.run_spotcheck_quadratic(cfg), args)


def _s(x) -> str:
    return mpmath.nstr(x, 12)


def bounds_table(p: int, p0: int | None = None) -> dict[str, str]:
    out = {
        "p": str(p),
        "e2_log_p": _s(analytic.hypothesis_threshold(p)),
        "norton_q1": _s(analytic.norton_bound(p)),
        "norton_q1_improved": _s(analytic.norton_bound(p, improved=True)),
        "consecutive_H": _s(analytic.consecutive_bound(p)) + ("" if p >= 10**19 else "  [stated for p >= 1e19]"),
        "cor2_q2": _s(analytic.cor2_bound(p)) + ("" if p >= 10**19 else "  [stated for p >= 1e19]"),
        "cor3_q1q2": _s(analytic.cor3_bound(p)) + ("" if p >= 10**18 else "  [stated for p >= 1e18]"),
        "polya_vinogradov": _s(analytic.polya_vinogradov(p)),
    }
    raw, simple = analytic.pv_q2_bound(p)
    out["pv_q2_raw"] = _s(raw)
    out["pv_q2"] = _s(simple) + ("" if p >= 10**15 else "  [stated for m >= 1e15]")
    if p >= analytic.P_MIN_THEOREM:
        if p0 is None:
            p0 = 10 ** min(20, int(mpmath.floor(mpmath.log10(p))))
        out["K"] = _s(analytic.constant_K())
        out["g"] = _s(analytic.g(p))
        out["theorem2_H"] = _s(analytic.theorem2_bound(p))
        out["p0"] = str(p0)
        out["C_p0"] = f"{analytic.constant_C(p0):.4f}"
        out["theorem1_n"] = _s(analytic.theorem1_bound(p, p0))
    else:
        out["theorem2_H"] = "n/a (needs p >= 1e7)"
    return out


def cmd_bounds(args) -> int:
    for k, v in bounds_table(args.p, args.p0).items():
        print(f"{k:20s} {v}")
    return 0


def cmd_char(args) -> int:
    p = args.p
    if not is_prime(p):
        raise AuditError(f"p={p} is not prime")
    if args.index == "quadratic":
        chi = quadratic_character(p, limit=args.table_limit)
    else:
        chi = character(p, int(args.index), args.table_limit)
        if chi.is_principal:
            raise AuditError("index 0 is the principal character")
    q = least_nonresidues(chi, args.k, search_limit=max(p, 10**6) if chi.mode == "quadratic" else None)
    us = args.u or (q[0],)
    out = {
        "p": p, "character": chi.ident, "mode": chi.mode, "order": order(chi), "q": q,
        "n0": {str(u): restricted_nonresidue(chi, u, search_limit=max(p, 10**6)) for u in us},
    }
    if p <= args.table_limit:
        out["S"] = max_constant_run(chi)
        if p >= 5:
            res = hudson_check(chi)
            out["hudson"] = {"bound": res.bound, "margin": res.margin, "passed": res.passed, "vacuous": res.vacuous}
    print(json.dumps(out, indent=2))
    return 0


def cmd_case(args) -> int:
    if args.record:
        rec = AuditRecord.from_dict(json.loads(args.record))
    else:
        recs = read_jsonl(Path(args.from_file).read_text())
        rec = recs[args.line - 1]
    new = audit.run_case(rec)
    same = rec.margin == new.margin or (
        rec.margin is not None and new.margin is not None
        and abs(rec.margin - new.margin) <= 1e-12 * max(1.0, abs(rec.margin))
    )
    print(json.dumps({"original": rec.to_dict(), "rerun": new.to_dict(), "margin_reproduced": same}, indent=2))
    return 0 if same and (new.passed or new.informational) else 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "table1": cmd_table1,
        "sweep": cmd_sweep,
        "spotcheck": cmd_spotcheck,
        "bounds": cmd_bounds,
        "char": cmd_char,
        "case": cmd_case,
    }[args.cmd]
    try:
        return handler(args)
    except (AuditError, ValueError, KeyError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
