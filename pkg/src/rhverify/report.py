"""Experiment orchestration and machine-readable output.

CSV layout (header row, then one row per case, numbers as %.17g, empty
field for a missing value)::

    case_id,theorem,a,b_or_alpha,T,lhs,rhs,delta,err_estimate,zeros_used,wall_time_ms,error

JSON layout: a list of objects with exactly those keys, in that order;
missing numbers are null.  ``wall_time_ms`` is left empty unless timing is
requested, so that repeated runs produce identical bytes.
"""
from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path

import numpy as np

from .errors import VerifierError
from .identities import CaseSpec, Theorem, evaluate
from .identities.evaluators import line_integrand
from .zeros import ZeroCatalog, load_odlyzko, reference_table_path
from .zeta import ZetaParams

FORMATS = ("csv", "json")


@dataclass(frozen=True)
class OutputRow:
    case_id: str
    theorem: str
    a: float | None
    b_or_alpha: float | None
    T: float | None
    lhs: float | None = None
    rhs: float | None = None
    delta: float | None = None
    err_estimate: float | None = None
    zeros_used: int | None = None
    wall_time_ms: float | None = None
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error


COLUMNS = tuple(f.name for f in fields(OutputRow))


@dataclass(frozen=True)
class DumpRequest:
    case_id: str
    t_lo: float
    t_hi: float
    n_samples: int

    def __post_init__(self):
        if not self.t_lo < self.t_hi:
            raise ValueError("dump needs t_lo < t_hi")
        if int(self.n_samples) < 2:
            raise ValueError("dump needs at least 2 samples")


@dataclass(frozen=True)
class RunConfig:
    cases: tuple[CaseSpec, ...] = ()
    zeros_path: str = ""
    output_path: str = "-"
    output_format: str = "csv"
    dump_integrand: DumpRequest | None = None
    workers: int = 1
    timing: bool = False

    def __post_init__(self):
        if self.output_format not in FORMATS:
            raise ValueError(f"output format must be one of {FORMATS}")
        if not self.output_path:
            raise ValueError("output path must be nonempty ('-' for stdout)")
        if int(self.workers) < 1:
            raise ValueError("workers must be >= 1")
        ids = [c.label() for c in self.cases]
        if len(set(ids)) != len(ids):
            raise ValueError("case ids must be unique")


# ---------------------------------------------------------------------------
# Built-in cases
# ---------------------------------------------------------------------------

def _table1():
    return [
        CaseSpec(Theorem.EQ2, 300.0, a=1.0, b=0.75, case_id="case1_t300"),
        CaseSpec(Theorem.EQ2, 1000.0, a=1.0, b=0.75, case_id="case1_t1000"),
        CaseSpec(Theorem.EQ2, 300.0, a=1.0, b=0.25, case_id="case2_t300"),
        CaseSpec(Theorem.EQ2, 1000.0, a=1.0, b=0.25, case_id="case2_t1000"),
    ]


def named_cases() -> dict[str, CaseSpec]:
    """Cases addressable by id without a config file."""
    out = {c.case_id: c for c in _table1()}
    out["case1"] = CaseSpec(Theorem.EQ2, 300.0, a=1.0, b=0.75, case_id="case1")
    out["case2"] = CaseSpec(Theorem.EQ2, 300.0, a=1.0, b=0.25, case_id="case2")
    out["bsy"] = CaseSpec(Theorem.THM4, 1000.0, alpha=0.0, case_id="bsy")
    return out


# ---------------------------------------------------------------------------
# Config parsing
# ---------------------------------------------------------------------------

_CASE_KEYS = {"id", "theorem", "T", "a", "b", "alpha", "R", "tol", "zeta"}


def case_from_dict(d: dict) -> CaseSpec:
    unknown = set(d) - _CASE_KEYS
    if unknown:
        raise ValueError(f"unknown case keys: {sorted(unknown)}")
    if "theorem" not in d or "T" not in d:
        raise ValueError("each case needs 'theorem' and 'T'")
    zp = ZetaParams(**d["zeta"]) if "zeta" in d else ZetaParams()
    kw = {k: float(d[k]) for k in ("a", "b", "alpha", "R") if d.get(k) is not None}
    return CaseSpec(Theorem(d["theorem"]), float(d["T"]), tol=float(d.get("tol", 1e-10)),
                    zeta_params=zp, case_id=str(d.get("id", "")), **kw)


def case_to_dict(spec: CaseSpec) -> dict:
    out = {"id": spec.label(), "theorem": spec.theorem.value, "T": spec.T}
    for k in ("a", "b", "alpha", "R"):
        v = getattr(spec, k)
        if v is not None:
            out[k] = v
    out["tol"] = spec.tol
    out["zeta"] = asdict(spec.zeta_params)
    return out


def load_config(path) -> RunConfig:
    """Read a JSON run description.

    Keys: ``cases`` (list of case objects with ``id``, ``theorem``, ``T``
    and the parameters it needs), ``zeros``, ``out``, ``format``,
    ``workers``, ``timing`` and ``dump_integrand``
    (``{"case", "from", "to", "samples"}``).
    """
    raw = json.loads(Path(path).read_text())
    if not isinstance(raw, dict):
        raise ValueError("config must be a JSON object")
    cases = []
    for i, c in enumerate(raw.get("cases", [])):
        try:
            cases.append(case_from_dict(c))
        except (ValueError, TypeError) as exc:
            raise ValueError(f"case #{i + 1} ({c.get('id', '?')}): {exc}") from None
    dump = None
    if raw.get("dump_integrand"):
        d = raw["dump_integrand"]
        dump = DumpRequest(str(d["case"]), float(d["from"]), float(d["to"]), int(d["samples"]))
    return RunConfig(tuple(cases), str(raw.get("zeros", "")), str(raw.get("out", "-")),
                     str(raw.get("format", "csv")), dump, int(raw.get("workers", 1)),
                     bool(raw.get("timing", False)))


# ---------------------------------------------------------------------------
# Running
# ---------------------------------------------------------------------------

def needs_zeros(spec: CaseSpec) -> bool:
    """Whether the zero sum of this case draws on the catalog."""
    if spec.theorem in (Theorem.EQ7, Theorem.EQ8):
        return True
    return spec.theorem in (Theorem.EQ2, Theorem.WANG) and spec.b < 0.5


def _printable(text):
    # Error text ends up in a CSV field; escape anything the writer cannot hold.
    return "".join(c if c.isprintable() else repr(c)[1:-1] for c in text)


def _row(spec, report=None, error="", timing=False):
    base = dict(case_id=spec.label(), theorem=spec.theorem.value,
                a=None if spec.a is None else float(spec.a), b_or_alpha=spec.b_or_alpha,
                T=float(spec.T))
    if report is None:
        return OutputRow(**base, error=_printable(error))
    bd = report.breakdown
    return OutputRow(**base, lhs=bd.lhs, rhs=bd.rhs, delta=bd.lhs - bd.rhs,
                     err_estimate=report.err_estimate, zeros_used=bd.zeros_used,
                     wall_time_ms=report.wall_time * 1e3 if timing else None)


def _run_one(job):
    spec, catalog, catalog_error, timing = job
    if catalog is None and catalog_error and needs_zeros(spec):
        return _row(spec, error=f"{spec.label()}: zeros unavailable: {catalog_error}")
    try:
        report = evaluate(spec, catalog)
    except (VerifierError, ValueError, ArithmeticError) as exc:
        return _row(spec, error=f"{spec.label()}: {type(exc).__name__}: {exc}")
    return _row(spec, report, timing=timing)


def _load_catalog(zeros_path):
    path = zeros_path or str(reference_table_path())
    try:
        return load_odlyzko(path), ""
    except (OSError, VerifierError, ValueError) as exc:
        return None, f"{type(exc).__name__}: {exc}"


def run(config: RunConfig, catalog: ZeroCatalog | None = None) -> list[OutputRow]:
    """One OutputRow per case, in input order; failures become error rows."""
    if not config.cases:
        return []
    error = ""
    if catalog is None:
        catalog, error = _load_catalog(config.zeros_path)
    jobs = [(spec, catalog, error, config.timing) for spec in config.cases]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            return list(pool.map(_run_one, jobs))
    return [_run_one(j) for j in jobs]


def reproduce_table1(zeros_path="", workers=1, timing=False) -> list[OutputRow]:
    return run(RunConfig(tuple(_table1()), zeros_path=zeros_path, workers=workers,
                         timing=timing))


def dump_integrand(spec: CaseSpec, t_lo, t_hi, n):
    """(t, integrand(t)) on a uniform grid of n points, endpoints included."""
    req = DumpRequest(spec.label(), float(t_lo), float(t_hi), int(n))
    t = np.linspace(req.t_lo, req.t_hi, req.n_samples)
    return t, line_integrand(spec)(t)


# ---------------------------------------------------------------------------
# Formatting
# ---------------------------------------------------------------------------

def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return "%.17g" % v
    return str(v)


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        w.writerow([_fmt(getattr(r, c)) for c in COLUMNS])
    return buf.getvalue()


def _json_float(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def rows_to_json(rows) -> str:
    out = [{c: _json_float(getattr(r, c)) for c in COLUMNS} for r in rows]
    return json.dumps(out, indent=2) + "\n"


def format_rows(rows, fmt="csv") -> str:
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}")
    return rows_to_csv(rows) if fmt == "csv" else rows_to_json(rows)


def parse_csv(text) -> list[OutputRow]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != COLUMNS:
        raise ValueError("unexpected CSV header")
    rows = []
    for rec in reader:
        vals = {}
        for c in COLUMNS:
            s = rec[c]
            if c in ("case_id", "theorem", "error"):
                vals[c] = s
            elif c == "zeros_used":
                vals[c] = int(s) if s else None
            else:
                vals[c] = float(s) if s else None
        rows.append(OutputRow(**vals))
    return rows


def parse_json(text) -> list[OutputRow]:
    data = json.loads(text)
    rows = []
    for rec in data:
        if tuple(rec) != COLUMNS:
            raise ValueError("unexpected JSON keys")
        rows.append(OutputRow(**rec))
    return rows


def samples_to_text(t, y, fmt="csv") -> str:
    if fmt == "json":
        return json.dumps({"t": [float(x) for x in t], "integrand": [float(v) for v in y]}) + "\n"
    lines = ["t,integrand"]
    lines.extend("%.17g,%.17g" % (a, b) for a, b in zip(t, y))
    return "\n".join(lines) + "\n"
