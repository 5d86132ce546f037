"""Timing of full TCPO runs per coefficient and mode."""

from __future__ import annotations

import csv
import io
import statistics
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import FuzzyNumber, make_piecewise_linear
from .errors import InfeasibleError
from .portfolio import MODES, PortfolioProblem, SkewConfig, optimize

CSV_COLUMNS = (
    "coefficient",
    "mode",
    "n_assets",
    "mesh",
    "evaluated_points",
    "elapsed_ms_median",
    "ns_per_eval",
    "feasible",
)


@dataclass(frozen=True)
class BenchRow:
    coefficient: str
    mode: str
    n_assets: int
    mesh: int
    evaluated_points: int
    elapsed_ms_median: float
    ns_per_eval: float
    feasible: bool


def synthetic_assets(n: int, seed: int = 0) -> list[FuzzyNumber]:
    """Deterministic random piecewise-linear assets with 5-point profiles."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        base = rng.uniform(1.0, 200.0)
        left = np.sort(rng.uniform(0.0, 1.0, 3)) * rng.uniform(1.0, 20.0)
        right = np.sort(rng.uniform(0.0, 1.0, 3))[::-1] * rng.uniform(1.0, 60.0)
        core = base
        out.append(
            make_piecewise_linear(
                [(core - left[2], 0.0), (core - left[1], 0.25), (core - left[0], 0.6), (core, 1.0)],
                [(core + right[0], 0.0), (core + right[1], 0.4), (core + right[2], 0.75), (core, 1.0)],
            )
        )
    return out


def time_runs(problem: PortfolioProblem, repeats: int, workers: int = 1) -> tuple[list[float], int, bool]:
    times = []
    points, feasible = 0, True
    for _ in range(repeats):
        try:
            sol = optimize(problem, workers=workers)
            times.append(sol.elapsed)
            points = sol.evaluated_points
        except InfeasibleError as exc:
            times.append(exc.elapsed)
            points = exc.evaluated_points
            feasible = False
    return times, points, feasible


def run_bench(
    assets: Sequence[FuzzyNumber],
    coefficients: Iterable[SkewConfig],
    mesh: int = 100,
    repeats: int = 3,
    modes: Iterable[str] = MODES,
    rho: float = 6.0,
    beta: float = 3.6,
    gamma: float = 0.0,
    workers: int = 1,
) -> list[BenchRow]:
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    coefficients = list(coefficients)
    if not coefficients:
        raise ValueError("need at least one coefficient")
    rows = []
    for cfg in coefficients:
        for mode in modes:
            problem = PortfolioProblem(tuple(assets), mode, rho, beta, gamma, mesh, cfg)
            times, points, feasible = time_runs(problem, repeats, workers)
            med = statistics.median(times)
            rows.append(
                BenchRow(
                    coefficient=cfg.label,
                    mode=problem.mode,
                    n_assets=len(assets),
                    mesh=mesh,
                    evaluated_points=points,
                    elapsed_ms_median=1e3 * med,
                    ns_per_eval=1e9 * med / points,
                    feasible=feasible,
                )
            )
    return rows


def rows_to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        d = asdict(row)
        d["elapsed_ms_median"] = f"{row.elapsed_ms_median:.6g}"
        d["ns_per_eval"] = f"{row.ns_per_eval:.6g}"
        writer.writerow(d)
    return buf.getvalue()
