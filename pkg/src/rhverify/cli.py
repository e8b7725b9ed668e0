"""``verifier`` command line.

    verifier run --config cfg.json [--zeros FILE] [--out FILE] [--format csv|json]
    verifier table1 [--zeros FILE]
    verifier dump-integrand --case ID --from T0 --to T1 --samples N
    verifier validate-zeros --zeros FILE

Exit status is 0 when every case completed, 1 when any case produced an
error row, 2 for usage or configuration errors and 3 when ``--assert-tol``
was given and some |delta| exceeded it.
"""
from __future__ import annotations

import argparse
import dataclasses
import sys

from . import report
from .errors import VerifierError
from .zeros import load_odlyzko, reference_table_path, riemann_von_mangoldt, zeros_up_to

EXIT_OK = 0
EXIT_CASE_FAILED = 1
EXIT_USAGE = 2
EXIT_TOLERANCE = 3


def _write(text, path):
    if path in (None, "", "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _finish(rows, args):
    for r in rows:
        if not r.ok:
            print(f"error: {r.error}", file=sys.stderr)
    if any(not r.ok for r in rows):
        return EXIT_CASE_FAILED
    if args.assert_tol is not None:
        bad = [r for r in rows if abs(r.delta) > args.assert_tol]
        for r in bad:
            print(f"tolerance: {r.case_id} |delta|={abs(r.delta):.3g} > {args.assert_tol:g}",
                  file=sys.stderr)
        if bad:
            return EXIT_TOLERANCE
    return EXIT_OK


def _config_from_args(args):
    cfg = report.load_config(args.config) if args.config else report.RunConfig()
    # Flags override the config one field at a time.
    over = {}
    if args.zeros is not None:
        over["zeros_path"] = args.zeros
    if args.out is not None:
        over["output_path"] = args.out
    if args.format is not None:
        over["output_format"] = args.format
    if args.workers is not None:
        over["workers"] = args.workers
    if args.timing:
        over["timing"] = True
    return dataclasses.replace(cfg, **over)


def cmd_run(args):
    cfg = _config_from_args(args)
    rows = report.run(cfg)
    _write(report.format_rows(rows, cfg.output_format), cfg.output_path)
    return _finish(rows, args)


def cmd_table1(args):
    rows = report.reproduce_table1(args.zeros or "", workers=args.workers or 1,
                                   timing=args.timing)
    _write(report.format_rows(rows, args.format or "csv"), args.out)
    return _finish(rows, args)


def cmd_dump(args):
    cases = report.named_cases()
    if args.config:
        cfg = report.load_config(args.config)
        cases.update({c.label(): c for c in cfg.cases})
        d = cfg.dump_integrand
        if d is not None:
            args.case = args.case or d.case_id
            args.t_from = d.t_lo if args.t_from is None else args.t_from
            args.t_to = d.t_hi if args.t_to is None else args.t_to
            args.samples = d.n_samples if args.samples is None else args.samples
    missing = [n for n, v in (("--case", args.case), ("--from", args.t_from),
                              ("--to", args.t_to), ("--samples", args.samples)) if v is None]
    if missing:
        raise ValueError(f"dump-integrand needs {', '.join(missing)}")
    if args.case not in cases:
        raise ValueError(f"unknown case {args.case!r}; known: {', '.join(sorted(cases))}")
    t, y = report.dump_integrand(cases[args.case], args.t_from, args.t_to, args.samples)
    _write(report.samples_to_text(t, y, args.format or "csv"), args.out)
    return EXIT_OK


def cmd_validate(args):
    path = args.zeros or str(reference_table_path())
    try:
        cat = load_odlyzko(path)
    except (OSError, VerifierError) as exc:
        print(f"invalid: {path}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CASE_FAILED
    print(f"file: {path}")
    print(f"count: {cat.count}")
    if cat.count:
        print(f"first: {cat.values[0]:.9f}")
        print(f"t_max: {cat.t_max:.9f}")
    ok = True
    for T in (100.0, 300.0, 1000.0):
        if T > cat.t_max:
            continue
        n = len(zeros_up_to(cat, T))
        rvm = riemann_von_mangoldt(T)
        flag = "ok" if abs(n - rvm) <= 2 else "MISMATCH"
        ok &= flag == "ok"
        print(f"N({T:g}) = {n}  (Riemann-von Mangoldt {rvm:.2f}) {flag}")
    return EXIT_OK if ok else EXIT_CASE_FAILED


def _common(p, out=True):
    p.add_argument("--zeros", help="Odlyzko-format ordinate file (default: bundled table)")
    if out:
        p.add_argument("--out", help="output file ('-' or omitted: stdout)")
        p.add_argument("--format", choices=report.FORMATS)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="verifier",
        description="Evaluate integral identities for the Riemann zeta function "
                    "and report residuals.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="evaluate the cases of a JSON config")
    p.add_argument("--config", help="JSON run description")
    _common(p)
    p.add_argument("--workers", type=int, help="worker processes (default 1)")
    p.add_argument("--timing", action="store_true", help="fill the wall_time_ms column")
    p.add_argument("--assert-tol", type=float, help="fail when any |delta| exceeds this")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("table1", help="the four reference cells (a=1, b=3/4 and b=1/4 at T = 300, 1000)")
    _common(p)
    p.add_argument("--workers", type=int)
    p.add_argument("--timing", action="store_true")
    p.add_argument("--assert-tol", type=float)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("dump-integrand", help="sample a case's line integrand")
    p.add_argument("--config", help="JSON config providing cases and/or dump_integrand")
    p.add_argument("--case", help="case id (built in: %s)" % ", ".join(sorted(report.named_cases())))
    p.add_argument("--from", dest="t_from", type=float)
    p.add_argument("--to", dest="t_to", type=float)
    p.add_argument("--samples", type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=report.FORMATS)
    p.set_defaults(func=cmd_dump)

    p = sub.add_parser("validate-zeros", help="check an ordinate file and its counts")
    _common(p, out=False)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"verifier: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
