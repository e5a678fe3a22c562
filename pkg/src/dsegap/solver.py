"""Gap-equation solver: Jacobi sweeps with pluggable interpolation and execution.

One iteration maps the dressing arrays (A, B) on the external grid to
(A', B') by evaluating, for every external node independently, the
quadrature sums of the discrete system.  Each row interpolates the
dressing functions at the internal nodes itself (that per-row cost is what
the two interpolation strategies differentiate) and reads only the input
arrays, never partial outputs, so rows can be computed in any order or in
parallel with bitwise-identical results.

Parallel execution distributes row chunks over worker processes; the
worker count is taken from the variant, else the SOLVER_THREADS
environment variable, else the CPU count.
"""
from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import ExecutionEnvironmentError, ParameterError
from .grid import MomentumGrid, build_grid
from .interpolation import InterpStrategy, interp_indexed_many, interp_search, interp_search_many
from .iteration import successive_approximation
from .kernels import ModelParams, row_rhs

__all__ = [
    "ExecutionMode",
    "AlgorithmVariant",
    "VARIANTS",
    "IterationRecord",
    "PropagatorSolution",
    "resolve_threads",
    "iterate_once",
    "solve",
    "DEFAULT_PROBES_LOG10P",
]

THREADS_ENV_VAR = "SOLVER_THREADS"

# History probes, as log10 of the momentum in GeV (p2 = 10**(2*log10p)).
DEFAULT_PROBES_LOG10P = (-2.5, 0.0)


class ExecutionMode(enum.Enum):
    SEQUENTIAL = "seq"
    PARALLEL = "par"


@dataclass(frozen=True)
class AlgorithmVariant:
    """One cell of the 2x2 (interpolation x execution) benchmark matrix."""

    interp: InterpStrategy
    execution: ExecutionMode
    threads: int | None = None

    @property
    def name(self) -> str:
        return f"{self.interp.value}-{self.execution.value}"

    def with_threads(self, threads: int | None) -> "AlgorithmVariant":
        return AlgorithmVariant(self.interp, self.execution, threads)


VARIANTS = {
    "search-seq": AlgorithmVariant(InterpStrategy.SEARCH_BASED, ExecutionMode.SEQUENTIAL),
    "indexed-seq": AlgorithmVariant(InterpStrategy.PRECOMPUTED_INDEX, ExecutionMode.SEQUENTIAL),
    "search-par": AlgorithmVariant(InterpStrategy.SEARCH_BASED, ExecutionMode.PARALLEL),
    "indexed-par": AlgorithmVariant(InterpStrategy.PRECOMPUTED_INDEX, ExecutionMode.PARALLEL),
}


@dataclass(frozen=True)
class IterationRecord:
    """History row: update norms and probe samples after one iteration."""

    iteration: int
    max_delta_a: float
    max_delta_b: float
    probe_a: tuple[float, ...]
    probe_b: tuple[float, ...]


@dataclass
class PropagatorSolution:
    A: np.ndarray
    B: np.ndarray
    iterations: int
    converged: bool
    history: list[IterationRecord]
    grid: MomentumGrid
    params: ModelParams
    probes_log10p: tuple[float, ...] = field(default=DEFAULT_PROBES_LOG10P)


def resolve_threads(variant: AlgorithmVariant) -> int:
    if variant.threads is not None:
        n = variant.threads
    else:
        env = os.environ.get(THREADS_ENV_VAR)
        n = int(env) if env else (os.cpu_count() or 1)
    if n < 1:
        raise ParameterError(f"thread count must be >= 1, got {n}")
    return n


def _interp_at_internal(grid: MomentumGrid, values: np.ndarray, strategy: InterpStrategy) -> np.ndarray:
    if strategy is InterpStrategy.PRECOMPUTED_INDEX:
        return interp_indexed_many(grid, values)
    return interp_search_many(grid.p2_ext, values, grid.q2_int)


def _eval_rows(grid: MomentumGrid, params: ModelParams, strategy: InterpStrategy,
               a: np.ndarray, b: np.ndarray, start: int, stop: int):
    """Evaluate rows [start, stop) of the sweep; reads only (a, b)."""
    a_out = np.empty(stop - start)
    b_out = np.empty(stop - start)
    p2_ext = grid.p2_ext
    for i in range(start, stop):
        a_q = _interp_at_internal(grid, a, strategy)
        b_q = _interp_at_internal(grid, b, strategy)
        a_out[i - start], b_out[i - start] = row_rhs(
            p2_ext[i], a[i], b[i], a_q, b_q, grid, params, row=i)
    return a_out, b_out


# Worker-side state for parallel sweeps, installed once per worker process.
_WORKER_STATE: dict = {}


def _init_worker(grid, params, strategy):
    _WORKER_STATE["grid"] = grid
    _WORKER_STATE["params"] = params
    _WORKER_STATE["strategy"] = strategy


def _worker_chunk(args):
    start, stop, a, b = args
    st = _WORKER_STATE
    a_out, b_out = _eval_rows(st["grid"], st["params"], st["strategy"], a, b, start, stop)
    return start, a_out, b_out


class _SequentialSweeper:
    def __init__(self, grid, params, strategy):
        self.grid, self.params, self.strategy = grid, params, strategy

    def sweep(self, a, b):
        return _eval_rows(self.grid, self.params, self.strategy, a, b, 0, self.grid.n_ext)

    def close(self):
        pass


class _ParallelSweeper:
    """Chunked process-pool sweep; outputs are bitwise-equal to sequential.

    Every row is computed by exactly one worker running the same code as
    the sequential path, and each worker writes only its own output slots,
    so the result is independent of worker count and scheduling.
    """

    def __init__(self, grid, params, strategy, threads):
        self.grid = grid
        self.n = grid.n_ext
        self.threads = threads
        # rows cost the same, so a static split with two chunks per worker
        # balances well while keeping dispatch overhead low
        chunk = max(1, -(-self.n // (2 * threads)))
        self.bounds = [(s, min(s + chunk, self.n)) for s in range(0, self.n, chunk)]
        try:
            self.pool = ProcessPoolExecutor(
                max_workers=threads, initializer=_init_worker,
                initargs=(grid, params, strategy))
        except OSError as exc:
            raise ExecutionEnvironmentError(f"could not create worker pool: {exc}") from exc

    def sweep(self, a, b):
        a_new = np.empty(self.n)
        b_new = np.empty(self.n)
        tasks = [(s, e, a, b) for s, e in self.bounds]
        for start, a_out, b_out in self.pool.map(_worker_chunk, tasks):
            a_new[start:start + a_out.size] = a_out
            b_new[start:start + b_out.size] = b_out
        return a_new, b_new

    def close(self):
        self.pool.shutdown(wait=True)


def _make_sweeper(grid, params, variant):
    if variant.execution is ExecutionMode.PARALLEL:
        return _ParallelSweeper(grid, params, variant.interp, resolve_threads(variant))
    return _SequentialSweeper(grid, params, variant.interp)


def iterate_once(grid: MomentumGrid, a: np.ndarray, b: np.ndarray,
                 params: ModelParams, variant: AlgorithmVariant):
    """One Jacobi sweep: (A', B') from (A, B), under the variant's strategy."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != (grid.n_ext,) or b.shape != (grid.n_ext,):
        raise ParameterError("A and B must match the external grid size")
    sweeper = _make_sweeper(grid, params, variant)
    try:
        return sweeper.sweep(a, b)
    finally:
        sweeper.close()


def _probe_values(grid, a, b, probes_p2):
    pa = tuple(interp_search(grid.p2_ext, a, p2) for p2 in probes_p2)
    pb = tuple(interp_search(grid.p2_ext, b, p2) for p2 in probes_p2)
    return pa, pb


def solve(params: ModelParams, variant: AlgorithmVariant,
          grid: MomentumGrid | None = None,
          probes_log10p: tuple[float, ...] = DEFAULT_PROBES_LOG10P,
          a0: np.ndarray | None = None,
          b0: np.ndarray | None = None) -> PropagatorSolution:
    """Iterate the system from A = B = 1 until both update norms drop below xi.

    Stops with converged=False (not an error) when `params.max_iterations`
    sweeps did not reach the accuracy.  History records the initial state
    and, per iteration, both max-norm updates and the dressing functions
    sampled (by the search interpolator) at the probe momenta.
    """
    params.validate()
    if grid is None:
        grid = build_grid(params.N, params.m_rad, params.m_ang, params.p2_min, params.p2_max)
    probes_p2 = tuple(10.0 ** (2.0 * lp) for lp in probes_log10p)
    a = np.ones(grid.n_ext) if a0 is None else np.asarray(a0, dtype=float).copy()
    b = np.ones(grid.n_ext) if b0 is None else np.asarray(b0, dtype=float).copy()

    history: list[IterationRecord] = []
    pa, pb = _probe_values(grid, a, b, probes_p2)
    history.append(IterationRecord(0, float("nan"), float("nan"), pa, pb))

    sweeper = _make_sweeper(grid, params, variant)
    relax = params.relaxation

    def step(state):
        a_new, b_new = sweeper.sweep(*state)
        if relax != 1.0:
            a_new = relax * a_new + (1.0 - relax) * state[0]
            b_new = relax * b_new + (1.0 - relax) * state[1]
        return a_new, b_new

    def record(n, state, deltas):
        pa, pb = _probe_values(grid, state[0], state[1], probes_p2)
        history.append(IterationRecord(n, deltas[0], deltas[1], pa, pb))

    try:
        (a, b), iterations, converged = successive_approximation(
            step, (a, b), params.xi, params.max_iterations, on_iteration=record)
    finally:
        sweeper.close()

    return PropagatorSolution(A=a, B=b, iterations=iterations, converged=converged,
                              history=history, grid=grid, params=params,
                              probes_log10p=tuple(probes_log10p))
