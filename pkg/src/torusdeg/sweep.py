"""Parameter sweeps over the delta construction.

Rows are computed in a process pool; the collector alone writes files.
Every row's verified error is recomputed from the polynomial file it
wrote, never taken from the construction step.

CSV columns (frozen; the JSON report has the same keys per row)::

    construction, n, w, eps, eps_decimal, primes, nominal_degree, degree,
    verified_error, verified_error_decimal, accepted, oracle_degree,
    artifact, wall_time_s

``oracle_degree`` is empty when the oracle was not requested or the
instance is outside its caps.  ``wall_time_s`` is the only column that
varies between identical runs.
"""

from __future__ import annotations

import csv
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from . import serialization as ser
from .approx import approx_error
from .boolean import delta
from .constructions import delta_construction, delta_parameters
from .errors import NotFoundWithin, SizeLimitExceeded
from .oracle import OracleLimits, exact_degree
from .torus import format_decimal, format_rational

CSV_COLUMNS = (
    "construction",
    "n",
    "w",
    "eps",
    "eps_decimal",
    "primes",
    "nominal_degree",
    "degree",
    "verified_error",
    "verified_error_decimal",
    "accepted",
    "oracle_degree",
    "artifact",
    "wall_time_s",
)


@dataclass(frozen=True)
class SweepConfig:
    construction: str
    n_values: tuple[int, ...]
    eps_values: tuple[Fraction, ...]
    out_dir: Path
    w_values: tuple[int, ...] | None = None
    oracle: bool = False
    oracle_limits: OracleLimits = field(default_factory=OracleLimits)

    def points(self) -> list[tuple[int, int, Fraction]]:
        """Every ``(n, w, eps)`` of the grid, sorted."""
        pts = set()
        for n in self.n_values:
            ws = range(n + 1) if self.w_values is None else (w for w in self.w_values if 0 <= w <= n)
            for w in ws:
                for eps in self.eps_values:
                    pts.add((n, w, eps))
        return sorted(pts)


@dataclass(frozen=True)
class SweepRow:
    construction: str
    n: int
    w: int
    eps: Fraction
    primes: int
    nominal_degree: int
    degree: int
    verified_error: Fraction
    oracle_degree: int | None
    artifact: str
    wall_time_s: float

    @property
    def accepted(self) -> bool:
        return self.verified_error <= self.eps

    def record(self) -> dict:
        return {
            "construction": self.construction,
            "n": self.n,
            "w": self.w,
            "eps": format_rational(self.eps),
            "eps_decimal": format_decimal(self.eps),
            "primes": self.primes,
            "nominal_degree": self.nominal_degree,
            "degree": self.degree,
            "verified_error": format_rational(self.verified_error),
            "verified_error_decimal": format_decimal(self.verified_error),
            "accepted": self.accepted,
            "oracle_degree": self.oracle_degree,
            "artifact": self.artifact,
            "wall_time_s": round(self.wall_time_s, 4),
        }


@dataclass(frozen=True)
class SweepReport:
    rows: tuple[SweepRow, ...]
    csv_path: Path
    json_path: Path


def default_workers() -> int:
    """``TORUSDEG_MAX_THREADS`` if set, otherwise the CPU count."""
    env = os.environ.get("TORUSDEG_MAX_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def artifact_name(n: int, w: int, eps: Fraction) -> str:
    return f"delta_n{n}_w{w}_eps{eps.numerator}-{eps.denominator}.json"


def _compute(job):
    n, w, eps, oracle, limits = job
    start = time.perf_counter()
    Q = delta_construction(n, w, eps)
    oracle_degree = None
    if oracle:
        try:
            oracle_degree = exact_degree(delta(n, w), eps, limits=limits, workers=1).d_min
        except (SizeLimitExceeded, NotFoundWithin):
            oracle_degree = None
    return (n, w, eps), ser.to_json(Q), oracle_degree, time.perf_counter() - start


def run_sweep(config: SweepConfig, workers: int | None = None) -> SweepReport:
    if config.construction != "delta":
        raise ValueError(f"unknown construction {config.construction!r}")
    out = Path(config.out_dir)
    (out / "artifacts").mkdir(parents=True, exist_ok=True)
    jobs = [(n, w, eps, config.oracle, config.oracle_limits) for n, w, eps in config.points()]
    workers = default_workers() if workers is None else max(1, workers)
    if workers == 1 or len(jobs) <= 1:
        results = [_compute(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_compute, jobs))

    rows = []
    for (n, w, eps), poly_json, oracle_degree, elapsed in sorted(results, key=lambda r: r[0]):
        rel = f"artifacts/{artifact_name(n, w, eps)}"
        ser.write_json(out / rel, poly_json)
        Q = ser.load(out / rel)
        params = delta_parameters(n, eps)
        rows.append(
            SweepRow(
                "delta", n, w, eps, params.t, params.nominal_degree, Q.degree,
                approx_error(Q, delta(n, w)), oracle_degree, rel, elapsed,
            )
        )

    csv_path, json_path = out / "sweep.csv", out / "sweep.json"
    with open(csv_path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for r in rows:
            rec = r.record()
            rec["oracle_degree"] = "" if rec["oracle_degree"] is None else rec["oracle_degree"]
            writer.writerow(rec)
    json_path.write_text(
        json.dumps({"columns": list(CSV_COLUMNS), "config": _config_record(config), "rows": [r.record() for r in rows]},
                   sort_keys=True, indent=2) + "\n"
    )
    return SweepReport(tuple(rows), csv_path, json_path)


def _config_record(config: SweepConfig) -> dict:
    limits = asdict(config.oracle_limits)
    return {
        "construction": config.construction,
        "n": list(config.n_values),
        "w": None if config.w_values is None else list(config.w_values),
        "eps": [format_rational(e) for e in config.eps_values],
        "oracle": config.oracle,
        "oracle_limits": limits,
    }
