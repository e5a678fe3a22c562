"""Four-variant benchmark harness.

Runs search/indexed x sequential/parallel on identical parameters and a
shared prebuilt grid, times each full solve on the monotonic clock,
measures process CPU utilization (including worker children) over the
same window, and refuses to report unless all variants agree.
"""
from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field

import numpy as np

from .errors import ConsistencyError
from .grid import build_grid
from .kernels import ModelParams
from .solver import VARIANTS, AlgorithmVariant, PropagatorSolution, resolve_threads, solve

__all__ = ["BenchRow", "BenchReport", "run_bench", "format_table"]

VARIANT_ORDER = ("search-seq", "indexed-seq", "search-par", "indexed-par")

AGREEMENT_TOL = 1e-10


@dataclass
class BenchRow:
    variant: str
    wall_s: float
    cpu_percent: float
    iterations: int
    converged: bool


@dataclass
class BenchReport:
    rows: list[BenchRow]
    speedups: dict[str, float]
    environment: dict = field(default_factory=dict)

    def to_json(self) -> str:
        payload = {
            "rows": [vars(r) for r in self.rows],
            "speedups": self.speedups,
            "environment": self.environment,
        }
        return json.dumps(payload, indent=2)


def _cpu_seconds() -> float:
    # user + system of this process and of reaped children (the worker pool
    # is shut down inside solve(), so child time lands in the window).
    t = os.times()
    return t.user + t.system + t.children_user + t.children_system


def _timed_solve(params, variant, grid):
    wall0 = time.perf_counter()
    cpu0 = _cpu_seconds()
    solution = solve(params, variant, grid=grid)
    wall = time.perf_counter() - wall0
    cpu = _cpu_seconds() - cpu0
    return solution, wall, (100.0 * cpu / wall if wall > 0 else 0.0)


def _check_agreement(solutions: dict[str, PropagatorSolution]) -> None:
    ref_name = VARIANT_ORDER[0]
    ref = solutions[ref_name]
    for name in VARIANT_ORDER[1:]:
        sol = solutions[name]
        if sol.iterations != ref.iterations:
            raise ConsistencyError(
                f"iteration counts differ: {ref_name}={ref.iterations}, {name}={sol.iterations}")
        err = max(float(np.max(np.abs(sol.A - ref.A))), float(np.max(np.abs(sol.B - ref.B))))
        if err > AGREEMENT_TOL:
            raise ConsistencyError(f"solutions differ beyond {AGREEMENT_TOL}: {ref_name} vs {name}: {err}")


def run_bench(params: ModelParams, threads: int | None = None, repeat: int = 1,
              grid=None) -> BenchReport:
    """Time all four variants on identical inputs and report.

    The grid is built once and shared (its construction is excluded from
    the timings).  With repeat > 1 the minimum wall time is reported.
    Raises ConsistencyError before reporting if any variant disagrees.
    """
    params.validate()
    if grid is None:
        grid = build_grid(params.N, params.m_rad, params.m_ang, params.p2_min, params.p2_max)

    rows: list[BenchRow] = []
    solutions: dict[str, PropagatorSolution] = {}
    times: dict[str, float] = {}
    for name in VARIANT_ORDER:
        variant: AlgorithmVariant = VARIANTS[name].with_threads(threads)
        best_wall, best_cpu = np.inf, 0.0
        solution = None
        for _ in range(max(1, repeat)):
            solution, wall, cpu_pct = _timed_solve(params, variant, grid)
            if wall < best_wall:
                best_wall, best_cpu = wall, cpu_pct
        solutions[name] = solution
        times[name] = best_wall
        rows.append(BenchRow(variant=name, wall_s=best_wall, cpu_percent=best_cpu,
                             iterations=solution.iterations, converged=solution.converged))

    _check_agreement(solutions)
    base = times["search-seq"]
    speedups = {f"search-seq/{name}": base / times[name] for name in VARIANT_ORDER[1:]}
    env = {
        "cores": os.cpu_count(),
        "threads": resolve_threads(VARIANTS["search-par"].with_threads(threads)),
        "repeat": max(1, repeat),
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
    }
    return BenchReport(rows=rows, speedups=speedups, environment=env)


def format_table(report: BenchReport) -> str:
    """Human-readable aligned table of the benchmark rows and speedups."""
    header = f"{'variant':<14}{'wall (s)':>10}{'% CPU':>9}{'iterations':>12}{'converged':>11}"
    lines = [header, "-" * len(header)]
    for r in report.rows:
        lines.append(f"{r.variant:<14}{r.wall_s:>10.3f}{r.cpu_percent:>9.1f}"
                     f"{r.iterations:>12d}{str(r.converged):>11}")
    lines.append("")
    for key, val in report.speedups.items():
        lines.append(f"speedup {key}: {val:.2f}x")
    return "\n".join(lines)
