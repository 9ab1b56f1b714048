"""Verification sweeps over matroid families and their JSON reports.

A report is a single JSON document::

    {
      "tool": "matroidlc", "version": "...",
      "config": {...},                       # echo of RunConfig
      "matroids": [
        {"index": 0, "name": "U(2,4)", "kind": "uniform", "n": 4, "rank": 2,
         "records": [
           {"check": "zhao", "params": {"k": 1}, "verdict": "pass",
            "scale": "2", "witness": null, "tight": {...}, "note": ""},
           ...]}],
      "summary": {"matroids": 1, "records": 3, "verdicts": {"pass": 3}}
    }

Verdicts: ``pass``, ``fail``, ``vacuous``, ``not-applicable``,
``skipped`` (resource guard), ``expected-fail`` and ``holds`` (for the
ultra form, which is not a theorem).  Only ``fail`` is a violation.
Per-record wall times are added under ``"seconds"`` only when
``timings`` is on, so default reports are byte-identical across runs.
"""

from __future__ import annotations

import csv
import io
import json
import multiprocessing
import signal
import threading
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import permutations

from . import __version__
from .collapse import ResourceGuardError, collapse_H, collapse_S, collapse_coefficient, g_polynomial, pi_tuple
from .families import graphic_family, random_linear_family, uniform_family
from .lorentzian import is_lorentzian, is_m_convex, sample_hyp
from .matroid import MAX_GROUND_SET, Matroid
from .poly import coefficient
from .specio import read_matroid_spec
from .verify import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    InequalityCheck,
    hessian_closed_form_check,
    partition_sequence,
    ultra_log_concave_failure,
    verify_dowling,
    verify_gaojie,
    verify_highd,
    verify_prop1_minors,
    verify_strong_partition,
    verify_ultra,
    verify_zhao,
)

CHECKS = (
    "dowling",
    "zhao",
    "strong",
    "gaojie",
    "highd",
    "lorentzian",
    "prop1",
    "oracle-equiv",
    "hessian",
    "zhao-ultra-counterexample",
)
DEFAULT_CHECKS = CHECKS[:-1]

SKIPPED = "skipped"
VACUOUS = "vacuous"


class ConfigError(ValueError):
    pass


class BudgetExceeded(Exception):
    pass


@dataclass
class RunConfig:
    checks: tuple = DEFAULT_CHECKS
    n_max: int = 6
    p_values: tuple = (3,)
    seed: int = 0
    jobs: int = 1
    report: str | None = None
    csv: str | None = None
    graph_vertices: int = 4
    graph_edges: int | None = None
    multi_edges: int = 3
    linear_count: int = 10
    linear_n_max: int | None = None
    spec_files: tuple = ()
    include_uniform: bool = True
    # resource guards: larger instances are recorded as skipped
    lorentzian_n_max: int = 6
    oracle_n_max: int = 7
    expand_n_max: int = 5
    collapse_h_n_max: int = 6
    prop1_n_max: int = 7
    prop1_bound: int = 5000
    highd_n_max: int = 9
    hyp_points: int = 32
    time_budget: float = 60.0
    timings: bool = False

    def validate(self):
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise ConfigError(f"unknown checks {unknown}; choose from {', '.join(CHECKS)}")
        if not 0 <= self.n_max <= MAX_GROUND_SET:
            raise ConfigError(f"n_max must be in 0..{MAX_GROUND_SET}")
        if any(p < 2 for p in self.p_values):
            raise ConfigError("p values must be >= 2")
        if self.jobs < 1:
            raise ConfigError("jobs must be >= 1")
        return self

    def echo(self) -> dict:
        d = asdict(self)
        for key in ("report", "csv", "jobs", "timings"):
            d.pop(key)
        d["checks"] = list(self.checks)
        d["p_values"] = list(self.p_values)
        d["spec_files"] = list(self.spec_files)
        return d


def sweep_families(config: RunConfig) -> list[Matroid]:
    """Uniform, graphic, seeded GF(2) and user-supplied matroids, in that order."""
    family: list[Matroid] = []
    if config.include_uniform:
        family += uniform_family(config.n_max)
    edges = config.graph_edges if config.graph_edges is not None else config.n_max
    if config.graph_vertices > 0:
        family += [M for M in graphic_family(config.graph_vertices, edges, config.multi_edges) if M.n <= config.n_max]
    if config.linear_count:
        lin_n = config.linear_n_max if config.linear_n_max is not None else min(config.n_max, 7)
        if lin_n >= 1:
            family += random_linear_family(config.linear_count, lin_n, config.seed)
    for path in config.spec_files:
        family.append(read_matroid_spec(path))
    return family


# -- per-check record builders --------------------------------------------------


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _record(check: InequalityCheck, label: str | None = None) -> dict:
    return {
        "check": label or check.name,
        "params": _jsonable(check.params),
        "verdict": check.verdict,
        "scale": str(check.scale),
        "witness": _jsonable(check.witness),
        "tight": _jsonable(check.tight),
        "note": check.note,
    }


def _plain(check: str, verdict: str, params=None, witness=None, note: str = "") -> dict:
    return {
        "check": check,
        "params": _jsonable(params or {}),
        "verdict": verdict,
        "scale": "1",
        "witness": _jsonable(witness),
        "tight": None,
        "note": note,
    }


def _skip(check: str, note: str, params=None) -> dict:
    return _plain(check, SKIPPED, params, note=note)


def _lorentz_records(M: Matroid, cfg: RunConfig) -> list[dict]:
    if M.n > cfg.lorentzian_n_max:
        return [_skip("lorentzian", f"n > {cfg.lorentzian_n_max}")]
    G = g_polynomial(M)
    out = []
    mc = is_m_convex(G.support())
    out.append(_plain("mconvex-G", PASS if mc.holds else FAIL, witness=None if mc.holds else list(mc.witness)))
    v = is_lorentzian(G)
    out.append(
        _plain(
            "lorentzian-G",
            PASS if v.is_lorentzian else FAIL,
            {"hessians": v.hessians_checked},
            witness=None if v.is_lorentzian else [v.failure[0], repr(v.failure[1])],
        )
    )
    ok, failures, checked = sample_hyp(G, seed=cfg.seed, count=cfg.hyp_points)
    verdict = PASS if ok and checked else (VACUOUS if ok else FAIL)
    out.append(_plain("hyp-sample-G", verdict, {"points": cfg.hyp_points, "checked": checked}, witness=_jsonable(failures[:1]) or None))
    S = collapse_S(M)
    vs = is_lorentzian(S)
    out.append(_plain("lorentzian-collapse", PASS if vs.is_lorentzian else FAIL, witness=None if vs.is_lorentzian else [vs.failure[0], repr(vs.failure[1])]))
    return out


def _oracle_records(M: Matroid, cfg: RunConfig) -> list[dict]:
    n = M.n
    out = []
    if n > cfg.oracle_n_max:
        return [_skip("oracle-equiv", f"n > {cfg.oracle_n_max}")]
    method = "expand" if n <= cfg.expand_n_max else "pairs"
    S = collapse_S(M, method=method)
    seq = partition_sequence(M)
    bad = [i for i in range(n + 1) if coefficient(S, (n - i, i)) != pi_tuple(M, (n - i, i))]
    out.append(_plain("collapse-s-pi", FAIL if bad else PASS, {"method": method}, witness={"i": bad[0]} if bad else None))
    idx = ultra_log_concave_failure(seq)
    out.append(_plain("ultra-sequence", PASS if idx is None else FAIL, witness=None if idx is None else {"i": idx, "sequence": seq}))
    if n > cfg.collapse_h_n_max:
        out.append(_skip("collapse-h-pi", f"n > {cfg.collapse_h_n_max}"))
        return out
    P = collapse_H(M, 3)
    mismatch = None
    perm_bad = None
    for i1 in range(n + 1):
        for i2 in range(n + 1 - i1):
            sizes = (i1, i2, n - i1 - i2)
            count = pi_tuple(M, sizes)
            if mismatch is None and collapse_coefficient(P, n, sizes) != count:
                mismatch = list(sizes)
            if perm_bad is None and any(pi_tuple(M, q) != count for q in set(permutations(sizes))):
                perm_bad = list(sizes)
    out.append(_plain("collapse-h-pi", FAIL if mismatch else PASS, {"p": 3}, witness={"sizes": mismatch} if mismatch else None))
    out.append(_plain("pi-permutation", FAIL if perm_bad else PASS, {"p": 3}, witness={"sizes": perm_bad} if perm_bad else None))
    return out


def _prop1_records(M: Matroid, cfg: RunConfig) -> list[dict]:
    r = M.rank()
    if r < 2:
        return [_plain("prop1", NOT_APPLICABLE, note="rank < 2")]
    if M.n > cfg.prop1_n_max:
        return [_skip("prop1", f"n > {cfg.prop1_n_max}")]
    out = []
    for l in range(1, r):
        checks = verify_prop1_minors(M, l, bound=cfg.prop1_bound)
        truncated = any(c.name == "prop1-truncated" for c in checks)
        for form in ("dowling-minor", "zhao-minor"):
            group = [c for c in checks if c.name == form]
            failed = next((c for c in group if c.failed), None)
            rec = _plain(
                form,
                FAIL if failed else PASS,
                {"l": l, "minors": len(group)},
                witness=None if failed is None else {"params": failed.params, **failed.witness},
                note="truncated" if truncated else "",
            )
            out.append(rec)
    return out


def records_for(M: Matroid, check: str, cfg: RunConfig) -> list[dict]:
    if check == "dowling":
        return [_record(c) for c in verify_dowling(M)]
    if check == "zhao":
        return [_record(c) for c in verify_zhao(M)]
    if check == "zhao-ultra-counterexample":
        return [_record(c, "zhao-ultra-counterexample") for c in verify_ultra(M)]
    if check == "strong":
        return [_record(verify_strong_partition(M))]
    if check == "gaojie":
        return [_record(verify_gaojie(M, p)) for p in cfg.p_values]
    if check == "highd":
        if M.n > cfg.highd_n_max:
            return [_skip("highd", f"n > {cfg.highd_n_max}")]
        out = []
        for p in cfg.p_values:
            for l in range(p, M.rank()):
                out.append(_record(verify_highd(M, p, l)))
        return out
    if check == "lorentzian":
        return _lorentz_records(M, cfg)
    if check == "prop1":
        return _prop1_records(M, cfg)
    if check == "oracle-equiv":
        return _oracle_records(M, cfg)
    if check == "hessian":
        return [_record(hessian_closed_form_check(M))]
    raise ConfigError(f"unknown check {check!r}")


# -- execution ------------------------------------------------------------------

_STATE: dict = {}


def _alarm(signum, frame):
    raise BudgetExceeded()


def _run_task(task) -> list[dict]:
    index, check = task
    M = _STATE["family"][index]
    cfg: RunConfig = _STATE["config"]
    use_alarm = cfg.time_budget > 0 and threading.current_thread() is threading.main_thread()
    start = time.perf_counter()
    if use_alarm:
        old = signal.signal(signal.SIGALRM, _alarm)
        signal.setitimer(signal.ITIMER_REAL, cfg.time_budget)
    try:
        recs = records_for(M, check, cfg)
    except BudgetExceeded:
        recs = [_skip(check, f"time budget {cfg.time_budget}s exceeded")]
    except ResourceGuardError as exc:
        recs = [_skip(check, str(exc))]
    finally:
        if use_alarm:
            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, old)
    if cfg.timings:
        elapsed = round(time.perf_counter() - start, 6)
        for r in recs:
            r["seconds"] = elapsed
    return recs


def run_family(family: list[Matroid], config: RunConfig) -> dict:
    """Run every configured check on every matroid and assemble the report."""
    config.validate()
    tasks = [(i, c) for i in range(len(family)) for c in config.checks]
    _STATE["family"] = family
    _STATE["config"] = config
    try:
        if config.jobs > 1 and len(tasks) > 1:
            ctx = multiprocessing.get_context("fork")
            with ProcessPoolExecutor(max_workers=config.jobs, mp_context=ctx) as pool:
                results = list(pool.map(_run_task, tasks, chunksize=1))
        else:
            results = [_run_task(t) for t in tasks]
    finally:
        _STATE.clear()
    entries = []
    for i, M in enumerate(family):
        entries.append({"index": i, "name": M.name, "kind": M.kind, "n": M.n, "rank": M.rank(), "records": []})
    for (i, _), recs in zip(tasks, results):
        entries[i]["records"].extend(recs)
    verdicts: dict[str, int] = {}
    total = 0
    for e in entries:
        for r in e["records"]:
            verdicts[r["verdict"]] = verdicts.get(r["verdict"], 0) + 1
            total += 1
    return {
        "tool": "matroidlc",
        "version": __version__,
        "config": config.echo(),
        "matroids": entries,
        "summary": {"matroids": len(entries), "records": total, "verdicts": dict(sorted(verdicts.items()))},
    }


def run(config: RunConfig) -> dict:
    config.validate()
    return run_family(sweep_families(config), config)


def exit_code(report: dict) -> int:
    return 1 if report["summary"]["verdicts"].get(FAIL, 0) else 0


def render_json(report: dict) -> str:
    return json.dumps(report, indent=1) + "\n"


def render_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "matroid", "kind", "n", "rank", "check", "params", "verdict"])
    for e in report["matroids"]:
        for r in e["records"]:
            w.writerow([e["index"], e["name"], e["kind"], e["n"], e["rank"], r["check"], json.dumps(r["params"], sort_keys=True), r["verdict"]])
    return buf.getvalue()


def iter_records(report: dict):
    for e in report["matroids"]:
        for r in e["records"]:
            yield e, r


__all__ = [
    "CHECKS",
    "DEFAULT_CHECKS",
    "ConfigError",
    "RunConfig",
    "exit_code",
    "iter_records",
    "records_for",
    "render_csv",
    "render_json",
    "run",
    "run_family",
    "sweep_families",
]
