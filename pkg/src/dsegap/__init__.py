"""Gap-equation solver for propagator dressing functions.

Solves the coupled nonlinear integral equations for the dressing functions
A(p2), B(p2) by successive approximation on interleaved Gauss-Legendre
momentum grids, and benchmarks two accelerations of the sweep against
their baselines: precomputed-index interpolation (vs. per-query search)
and data-parallel row evaluation (vs. sequential).
"""
from .bench import BenchReport, BenchRow, format_table, run_bench
from .errors import (
    ConsistencyError,
    DegenerateMomentumError,
    ExecutionEnvironmentError,
    GridConstructionError,
    KinematicSingularityError,
    NumericalFailureError,
    ParameterError,
)
from .fredholm import FredholmSolution, FredholmSystem, solve_generic
from .grid import MomentumGrid, build_grid
from .interpolation import (
    ComparisonCounter,
    InterpStrategy,
    interp_indexed,
    interp_indexed_many,
    interp_search,
    interp_search_many,
)
from .iteration import successive_approximation
from .kernels import (
    IntegrandTerms,
    Kinematics,
    ModelParams,
    effective_interaction,
    finite_quotients,
    integrand_terms,
    kinematics,
    row_rhs,
)
from .quadrature import QuadratureRule, gauss_chebyshev2, gauss_legendre
from .solver import (
    DEFAULT_PROBES_LOG10P,
    VARIANTS,
    AlgorithmVariant,
    ExecutionMode,
    IterationRecord,
    PropagatorSolution,
    iterate_once,
    resolve_threads,
    solve,
)

__version__ = "0.1.0"
