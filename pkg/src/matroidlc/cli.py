"""Command line entry point: ``matroidlc {check,sweep,lorentzian,show}``.

Exit codes: 0 when every expectation is met, 1 when an inequality check
fails, 2 for configuration or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .collapse import collapse_H, collapse_S, f_k, g_polynomial
from .harness import CHECKS, DEFAULT_CHECKS, ConfigError, RunConfig, exit_code, render_csv, render_json, run, run_family
from .lorentzian import is_lorentzian, is_m_convex
from .matroid import AxiomViolationError, InvalidParameterError
from .poly import to_lines
from .specio import SpecError, read_matroid_spec

REPORT_DIR_ENV = "MATROIDLC_REPORT_DIR"


def _checks(value: str) -> tuple:
    if value.strip() in ("", "none"):
        return ()
    if value.strip() == "all":
        return CHECKS
    items = tuple(v.strip() for v in value.split(",") if v.strip())
    bad = [c for c in items if c not in CHECKS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown checks {bad}; choose from {', '.join(CHECKS)}")
    return items


def _ints(value: str) -> tuple:
    try:
        return tuple(int(v) for v in value.split(",") if v.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matroidlc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument(
            "--checks",
            type=_checks,
            default=DEFAULT_CHECKS,
            help=f"comma-separated subset of {', '.join(CHECKS)}, or 'all' (default: all but zhao-ultra-counterexample)",
        )
        p.add_argument("--p", dest="p_values", type=_ints, default=(3,), help="block counts for gaojie/highd (default: 3)")
        p.add_argument("--seed", type=int, default=0, help="seed for sampled checks and random families (default: 0)")
        p.add_argument("--jobs", type=int, default=1, help="worker processes (default: 1)")
        p.add_argument("--report", help=f"JSON report path (default: ${REPORT_DIR_ENV}/<command>-report.json, else stdout)")
        p.add_argument("--csv", help="optional CSV summary path")
        p.add_argument("--time-budget", type=float, default=60.0, help="seconds per (matroid, check) task, 0 disables (default: 60)")
        p.add_argument("--timings", action="store_true", help="record wall time per record (reports stop being byte-identical)")

    c = sub.add_parser("check", help="run checks on one matroid spec file")
    c.add_argument("spec")
    common(c)

    s = sub.add_parser("sweep", help="run checks over generated matroid families")
    s.add_argument("--n-max", type=int, default=6, help="largest ground set for uniform/graphic/linear families (default: 6)")
    s.add_argument("--graph-vertices", type=int, default=4, help="vertex count for the graph family (default: 4)")
    s.add_argument("--graph-edges", type=int, default=None, help="edge cap for simple graphs (default: n-max)")
    s.add_argument("--multi-edges", type=int, default=3, help="edge cap for graphs with loops/parallel edges (default: 3)")
    s.add_argument("--linear-count", type=int, default=10, help="number of random GF(2) matroids (default: 10)")
    s.add_argument("--linear-n-max", type=int, default=None, help="ground set cap for GF(2) matroids (default: min(n-max, 7))")
    s.add_argument("--spec", action="append", default=[], help="extra matroid spec file (repeatable)")
    common(s)

    lz = sub.add_parser("lorentzian", help="decide whether G_M of a spec is Lorentzian")
    lz.add_argument("spec")

    sh = sub.add_parser("show", help="print a polynomial attached to a spec")
    sh.add_argument("spec")
    sh.add_argument("--poly", choices=("fk", "G", "collapse"), default="G")
    sh.add_argument("--k", type=int, default=1, help="k for --poly fk (default: 1)")
    sh.add_argument("--p", type=int, default=2, help="block count for --poly collapse (default: 2)")
    return parser


def _config(args, **extra) -> RunConfig:
    return RunConfig(
        checks=args.checks,
        p_values=args.p_values,
        seed=args.seed,
        jobs=args.jobs,
        report=args.report,
        csv=args.csv,
        time_budget=args.time_budget,
        timings=args.timings,
        **extra,
    ).validate()


def _emit(report: dict, cfg: RunConfig, command: str):
    target = cfg.report
    if target is None and os.environ.get(REPORT_DIR_ENV):
        target = str(Path(os.environ[REPORT_DIR_ENV]) / f"{command}-report.json")
    text = render_json(report)
    if target is None:
        sys.stdout.write(text)
    else:
        Path(target).parent.mkdir(parents=True, exist_ok=True)
        Path(target).write_text(text)
    if cfg.csv:
        Path(cfg.csv).write_text(render_csv(report))
    s = report["summary"]
    print(f"{s['matroids']} matroids, {s['records']} records: {s['verdicts']}", file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check":
            cfg = _config(args)
            report = run_family([read_matroid_spec(args.spec)], cfg)
            _emit(report, cfg, "check")
            return exit_code(report)
        if args.command == "sweep":
            cfg = _config(
                args,
                n_max=args.n_max,
                graph_vertices=args.graph_vertices,
                graph_edges=args.graph_edges,
                multi_edges=args.multi_edges,
                linear_count=args.linear_count,
                linear_n_max=args.linear_n_max,
                spec_files=tuple(args.spec),
            )
            report = run(cfg)
            _emit(report, cfg, "sweep")
            return exit_code(report)
        M = read_matroid_spec(args.spec)
        if args.command == "lorentzian":
            G = g_polynomial(M)
            v = is_lorentzian(G)
            mc = is_m_convex(G.support())
            out = {
                "matroid": M.name,
                "lorentzian": v.is_lorentzian,
                "mconvex": mc.holds,
                "hessians_checked": v.hessians_checked,
                "failure": None if v.failure is None else [v.failure[0], repr(v.failure[1])],
            }
            print(json.dumps(out, indent=1))
            return 0 if v.is_lorentzian else 1
        if args.poly == "fk":
            poly = f_k(M, args.k)
        elif args.poly == "G":
            poly = g_polynomial(M)
        else:
            poly = collapse_S(M) if args.p == 2 else collapse_H(M, args.p)
        for line in to_lines(poly):
            print(line)
        return 0
    except (SpecError, ConfigError, AxiomViolationError, InvalidParameterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
