"""Command-line front end: ``polyseq compute|verify|identities|export``.

Exit codes: 0 success, 1 something refuted, 2 usage error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import coeffs, conjectures, identities
from .export import BASES, ORDERS, json_record, render_text, write_bfile, write_jsonl
from .pseq import p_sequence
from .report import exit_code, summarize

DEFAULT_N_MAX = 161
DEFAULT_IDENTITY_N_MAX = 60

# (identity ids, runner(n_max, k_max)); --identity selects ids from these groups
SUITES: list[tuple[tuple[str, ...], Callable]] = [
    (("route:explicit", "route:bisection", "route:shift", "route:homogeneous"),
     lambda n, k: identities.check_routes(n)),
    (("5.1", "6.1", "6.2", "7.1", "8.2", "8.4", "8.9", "4.6"),
     identities.check_t_identities),
    (("1.6=1.7", "5.3", "oracle", "2.1", "4.4", "2.7", "3.3"),
     identities.check_explicit_formulas),
    (("6.3", "6.4", "7.3", "7.4", "8.1", "8.3", "8.7", "8.8", "8.11", "8.12"),
     lambda n, k: identities.check_p_relations(n)),
    (("8.13", "8.14", "9.10"), lambda n, k: identities.check_congruences(n)),
    (("10.6", "10.8"), lambda n, k: identities.check_modp(n)),
    (("9.2", "9.3", "9.11", "9.12"), lambda n, k: coeffs.check_a_formulas(n)),
    (("12.5", "12.6", "12.13", "12.14", "12.12", "12.4", "12.2", "n|b_j", "roundtrip"),
     lambda n, k: coeffs.check_b_formulas(n)),
    (("12.9", "12.11", "A053657"), lambda n, k: coeffs.check_q()),
    (("fit:U", "fit:V", "fit:Y", "fit:Z"), lambda n, k: coeffs.check_fits(max(n, 28))),
]
IDENTITY_IDS = [i for ids, _ in SUITES for i in ids]


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polyseq", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="print P_n (or P_1..P_n)")
    c.add_argument("--n", type=_positive, required=True)
    c.add_argument("--all", action="store_true", help="print every P_k for k <= n")
    c.add_argument("--basis", choices=BASES, default="power")
    c.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="check conjectures and identities")
    v.add_argument("--all", action="store_true", help="all conjectures and all identity suites")
    v.add_argument("--conjecture", type=int, action="append", choices=range(1, 8), default=[])
    v.add_argument("--identity", action="append", choices=IDENTITY_IDS, default=[], metavar="ID")
    v.add_argument("--n-max", type=_positive, default=DEFAULT_N_MAX)
    v.add_argument("--k-max", type=_positive, default=30)
    v.add_argument("--divisor-cap", type=_positive, default=conjectures.DEFAULT_DIVISOR_CAP)
    v.add_argument("--format", choices=("text", "json"), default="text")

    i = sub.add_parser("identities", help="run (or --list) the identity suites")
    i.add_argument("--list", action="store_true")
    i.add_argument("--n-max", type=_positive, default=DEFAULT_IDENTITY_N_MAX)
    i.add_argument("--k-max", type=_positive, default=30)
    i.add_argument("--format", choices=("text", "json"), default="text")

    e = sub.add_parser("export", help="write the coefficient rows as a b-file or JSON lines")
    e.add_argument("--n-max", type=int, required=True)
    e.add_argument("--format", choices=("bfile", "json"), default="json")
    e.add_argument("--basis", choices=BASES, default="power")
    e.add_argument("--order", choices=ORDERS, help="coefficient order; required for bfile")
    e.add_argument("--output", default="-", help="file path, or - for stdout")
    return ap


# ---------------------------------------------------------------------------

def _emit(records, fmt: str, out) -> None:
    for r in records:
        if fmt == "json":
            out.write(json.dumps(r.record(), sort_keys=True) + "\n")
        else:
            rec = r.record()
            rng = "..".join(map(str, rec["n_range"]))
            line = f"{rec['status'].upper():12s} {rec['kind']:10s} {rec['id']:<16s} n={rng}"
            if rec.get("k_range"):
                line += " k=" + "..".join(map(str, rec["k_range"]))
            if rec.get("cases"):
                line += f" cases={rec['cases']}"
            ce = rec.get("counterexample") or (rec.get("details") or {}).get("counterexample")
            if ce and rec["status"] in ("fail", "refuted"):
                line += f" counterexample={json.dumps(ce, sort_keys=True)}"
            out.write(line + "\n")


def _emit_summary(reports, fmt: str, out) -> None:
    s = summarize(reports)
    if fmt == "json":
        out.write(json.dumps({"kind": "summary", "checks": len(reports), **s}, sort_keys=True) + "\n")
    else:
        out.write(f"summary: {len(reports)} checks, {s['refuted_total']} refuted, "
                  f"{s['inconclusive']} inconclusive\n")


def _run_identities(ids: list[str] | None, n_max: int, k_max: int) -> list:
    out = []
    for suite_ids, runner in SUITES:
        wanted = suite_ids if ids is None else [i for i in suite_ids if i in ids]
        if wanted:
            out += [r for r in runner(n_max, k_max) if r.id in wanted]
    return out


def cmd_compute(args, out) -> int:
    seq = p_sequence(args.n)
    ns = range(1, args.n + 1) if args.all else [args.n]
    for n in ns:
        if args.format == "json":
            out.write(json.dumps(json_record(seq[n], n, args.basis), sort_keys=True) + "\n")
        elif args.all:
            out.write(f"P_{n} = {render_text(seq[n], n, args.basis)}\n")
        else:
            out.write(render_text(seq[n], n, args.basis) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    reports = []
    cids = list(conjectures.CHECKS) if args.all else sorted(set(args.conjecture))
    for cid in cids:
        kw = {"divisor_cap": args.divisor_cap} if cid == 4 else {}
        per_n = conjectures.run_conjecture(cid, args.n_max, **kw)
        batch = [conjectures.fold(cid, args.n_max, per_n)] if args.all else per_n
        _emit(batch, args.format, out)
        reports += batch
    if args.all or args.identity:
        batch = _run_identities(None if args.all else args.identity, args.n_max, args.k_max)
        _emit(batch, args.format, out)
        reports += batch
    _emit_summary(reports, args.format, out)
    return exit_code(reports)


def cmd_identities(args, out) -> int:
    if args.list:
        for i in IDENTITY_IDS:
            out.write(i + "\n")
        return 0
    reports = _run_identities(None, args.n_max, args.k_max)
    _emit(reports, args.format, out)
    _emit_summary(reports, args.format, out)
    return exit_code(reports)


def cmd_export(args, out) -> int:
    seq = p_sequence(args.n_max)
    if args.output == "-":
        _write_export(seq, args, out)
        return 0
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            _write_export(seq, args, fh)
    except OSError as exc:
        sys.stderr.write(f"polyseq: cannot write {args.output}: {exc.strerror or exc}\n")
        return 3
    return 0


def _write_export(seq, args, fh) -> None:
    if args.format == "bfile":
        write_bfile(seq, args.basis, args.order, fh)
    else:
        write_jsonl(seq, args.basis, fh)


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not (args.all or args.conjecture or args.identity):
        parser.error("verify needs --all, --conjecture or --identity")
    if args.command == "export":
        if args.n_max < 1:
            parser.error("--n-max must be >= 1")
        if args.format == "bfile" and args.order is None:
            parser.error("bfile output needs an explicit --order")
        if args.format == "json" and args.order == "ascending":
            parser.error("JSON rows are always highest order first")
    handler = {"compute": cmd_compute, "verify": cmd_verify,
               "identities": cmd_identities, "export": cmd_export}[args.command]
    return handler(args, out)


if __name__ == "__main__":
    sys.exit(main())
