"""Command-line front end: `solve` and `bench` subcommands.

Configuration precedence is defaults < JSON config file < flags.  `solve`
writes the solution and iteration history as CSV; `bench` prints an
aligned table of the four algorithm variants and writes a JSON report.
Exit status: 0 on success, 2 for usage/parameter errors, 1 for runtime
failures.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field, replace

import numpy as np

from .bench import format_table, run_bench
from .errors import ConsistencyError, ExecutionEnvironmentError, NumericalFailureError, ParameterError
from .grid import build_grid
from .kernels import ModelParams
from .solver import DEFAULT_PROBES_LOG10P, VARIANTS, PropagatorSolution, solve

__all__ = ["RunConfig", "parse_config", "cmd_solve", "cmd_bench", "main", "console_main"]

_PARAM_FLAGS = {
    # flag/config key -> (ModelParams field, type)
    "D": ("D", float),
    "omega": ("omega", float),
    "m0": ("m0", float),
    "z1": ("z1", float),
    "xi": ("xi", float),
    "N": ("N", int),
    "M_rad": ("m_rad", int),
    "M_ang": ("m_ang", int),
    "p2_min": ("p2_min", float),
    "p2_max": ("p2_max", float),
    "max_iterations": ("max_iterations", int),
    "relaxation": ("relaxation", float),
}


@dataclass
class RunConfig:
    params: ModelParams = field(default_factory=ModelParams)
    variant: str = "indexed-par"
    threads: int | None = None
    out: str = "solution.csv"
    history: str = "history.csv"
    bench_out: str = "bench.json"
    probes_log10p: tuple[float, ...] = DEFAULT_PROBES_LOG10P
    repeat: int = 1
    seed: int | None = None  # reserved; the solver is deterministic


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    for key in _PARAM_FLAGS:
        sub.add_argument(f"--{key.replace('_', '-')}", dest=key, default=None,
                         help=f"model/numerics parameter {key}")
    sub.add_argument("--variant", default=None, choices=sorted(VARIANTS),
                     help="interpolation x execution strategy")
    sub.add_argument("--threads", default=None,
                     help="worker count for parallel variants (env SOLVER_THREADS is a weaker override)")
    sub.add_argument("--config", default=None, help="JSON config file (flags win over file values)")
    sub.add_argument("--probes", default=None,
                     help="comma-separated log10(p) probe momenta for the history file")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dsegap",
                                     description="Gap-equation solver and algorithm benchmark")
    commands = parser.add_subparsers(dest="command", required=True)
    p_solve = commands.add_parser("solve", help="solve once and write solution + history CSV")
    _add_common_flags(p_solve)
    p_solve.add_argument("--out", default=None, help="solution CSV path")
    p_solve.add_argument("--history", default=None, help="history CSV path")
    p_bench = commands.add_parser("bench", help="benchmark the four algorithm variants")
    _add_common_flags(p_bench)
    p_bench.add_argument("--out", default=None, help="JSON report path")
    p_bench.add_argument("--repeat", default=None, help="repetitions per variant (min wall time wins)")
    return parser


def _coerce(key: str, value, kind):
    try:
        return kind(value)
    except (TypeError, ValueError) as exc:
        raise ParameterError(f"malformed value for {key}: {value!r}") from exc


def _parse_probes(value) -> tuple[float, ...]:
    if isinstance(value, (list, tuple)):
        return tuple(float(v) for v in value)
    try:
        return tuple(float(tok) for tok in str(value).split(",") if tok.strip())
    except ValueError as exc:
        raise ParameterError(f"malformed value for probes: {value!r}") from exc


def parse_config(argv) -> tuple[str, RunConfig]:
    """Parse argv (defaults < config file < flags) into a validated RunConfig."""
    ns = _build_parser().parse_args(argv)
    merged: dict = {}
    if ns.config:
        try:
            with open(ns.config, encoding="utf-8") as fh:
                file_cfg = json.load(fh)
        except OSError as exc:
            raise ParameterError(f"cannot read config file: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ParameterError(f"malformed config file: {exc}") from exc
        if not isinstance(file_cfg, dict):
            raise ParameterError("config file must hold a JSON object")
        merged.update(file_cfg)
    for key, value in vars(ns).items():
        if key not in ("command", "config") and value is not None:
            merged[key] = value

    cfg = RunConfig()
    param_kwargs = {}
    for key, value in merged.items():
        if key in _PARAM_FLAGS:
            attr, kind = _PARAM_FLAGS[key]
            param_kwargs[attr] = _coerce(key, value, kind)
        elif key == "variant":
            if value not in VARIANTS:
                raise ParameterError(f"unknown variant: {value!r} (choose from {sorted(VARIANTS)})")
            cfg.variant = value
        elif key == "threads":
            cfg.threads = _coerce(key, value, int)
        elif key == "probes":
            cfg.probes_log10p = _parse_probes(value)
        elif key == "out":
            cfg.out = str(value)
        elif key == "history":
            cfg.history = str(value)
        elif key == "repeat":
            cfg.repeat = _coerce(key, value, int)
        elif key == "seed":
            cfg.seed = _coerce(key, value, int)
        else:
            raise ParameterError(f"unknown configuration key: {key!r}")
    cfg.params = replace(cfg.params, **param_kwargs)
    cfg.params.validate()
    if cfg.threads is not None and cfg.threads < 1:
        raise ParameterError(f"parameter out of range: threads ({cfg.threads})")
    if cfg.repeat < 1:
        raise ParameterError(f"parameter out of range: repeat ({cfg.repeat})")
    if ns.command == "bench":
        cfg.bench_out = cfg.out if "out" in merged else "bench.json"
    return ns.command, cfg


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def write_solution_csv(path: str, solution: PropagatorSolution) -> None:
    """One row per external node: log10(p2), A, B."""
    lines = ["log10_p2,A,B"]
    log10_p2 = np.log10(solution.grid.p2_ext)
    for lp, a, b in zip(log10_p2, solution.A, solution.B):
        lines.append(f"{_fmt(lp)},{_fmt(a)},{_fmt(b)}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def write_history_csv(path: str, solution: PropagatorSolution) -> None:
    """One row per iteration (including the initial state as iteration 0)."""
    probe_cols = []
    for lp in solution.probes_log10p:
        probe_cols.append(f"A(logp={lp:g})")
        probe_cols.append(f"B(logp={lp:g})")
    lines = [",".join(["iteration", "max_dA", "max_dB"] + probe_cols)]
    for rec in solution.history:
        cells = [str(rec.iteration), _fmt(rec.max_delta_a), _fmt(rec.max_delta_b)]
        for pa, pb in zip(rec.probe_a, rec.probe_b):
            cells.append(_fmt(pa))
            cells.append(_fmt(pb))
        lines.append(",".join(cells))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def cmd_solve(cfg: RunConfig) -> int:
    variant = VARIANTS[cfg.variant].with_threads(cfg.threads)
    solution = solve(cfg.params, variant, probes_log10p=cfg.probes_log10p)
    write_solution_csv(cfg.out, solution)
    write_history_csv(cfg.history, solution)
    status = "converged" if solution.converged else "NOT converged"
    print(f"{status} in {solution.iterations} iterations "
          f"(variant {cfg.variant}, N={cfg.params.N}, M_rad={cfg.params.m_rad}, "
          f"M_ang={cfg.params.m_ang}, xi={cfg.params.xi})")
    print(f"solution -> {cfg.out}")
    print(f"history  -> {cfg.history}")
    return 0


def cmd_bench(cfg: RunConfig) -> int:
    grid = build_grid(cfg.params.N, cfg.params.m_rad, cfg.params.m_ang,
                      cfg.params.p2_min, cfg.params.p2_max)
    report = run_bench(cfg.params, threads=cfg.threads, repeat=cfg.repeat, grid=grid)
    print(format_table(report))
    with open(cfg.bench_out, "w", encoding="utf-8") as fh:
        fh.write(report.to_json() + "\n")
    print(f"report -> {cfg.bench_out}")
    return 0


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        command, cfg = parse_config(argv)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if command == "solve":
            return cmd_solve(cfg)
        return cmd_bench(cfg)
    except (OSError, ConsistencyError, ExecutionEnvironmentError, NumericalFailureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    raise SystemExit(main())
