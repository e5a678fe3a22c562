"""Generic two-function nonlinear Fredholm solver (second kind).

    u(x) = f1(x) + int [ K1(x,t) F11(u,v) + Kbar1(x,t) F12(u,v) ] dt
    v(x) = f2(x) + int [ K2(x,t) F21(u,v) + Kbar2(x,t) F22(u,v) ] dt

solved by the same successive-approximation driver as the gap equation,
with the integrals replaced by a quadrature rule.  Smooth systems are
solved directly on the quadrature nodes.  When singular kernels
(integrable endpoint-type singularities on the diagonal, e.g.
|x-t|^(-alpha) with alpha in (0,1)) are present, the unknowns live on an
offset external grid so that no evaluation ever hits x == t, and the
unknowns are linearly interpolated at the quadrature nodes -- the same
interleaving device the momentum-grid solver uses.

This module exists as a manufactured-solution oracle for the iteration,
quadrature and interpolation machinery, independent of any physics input.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import GridConstructionError, ParameterError
from .interpolation import interp_search_many
from .iteration import successive_approximation
from .quadrature import QuadratureRule

__all__ = ["FredholmSystem", "FredholmSolution", "solve_generic"]

Fn1 = Callable[[np.ndarray], np.ndarray]
Fn2 = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class FredholmSystem:
    """Driving functions, kernels and nonlinear couplings of the system.

    Any kernel/coupling pair may be None (absent).  K1/K2 are smooth;
    kbar1/kbar2 are the singular kernels and trigger the offset-grid
    treatment.  All callables must accept numpy arrays elementwise.
    """

    f1: Fn1
    f2: Fn1
    domain: tuple[float, float]
    K1: Fn2 | None = None
    F11: Fn2 | None = None
    kbar1: Fn2 | None = None
    F12: Fn2 | None = None
    K2: Fn2 | None = None
    F21: Fn2 | None = None
    kbar2: Fn2 | None = None
    F22: Fn2 | None = None

    @property
    def has_singular(self) -> bool:
        return self.kbar1 is not None or self.kbar2 is not None


@dataclass
class FredholmSolution:
    x: np.ndarray
    u: np.ndarray
    v: np.ndarray
    iterations: int
    converged: bool


def _offset_grid(rule: QuadratureRule, n: int) -> np.ndarray:
    """Uniform grid over the domain avoiding every quadrature node."""
    a, b = rule.interval
    x = np.linspace(a, b, n)
    gap = np.min(np.abs(x[:, None] - rule.nodes[None, :]))
    if gap == 0.0:  # nudge interior points by a tenth of a spacing
        x[1:-1] += 0.1 * (x[1] - x[0])
        gap = np.min(np.abs(x[:, None] - rule.nodes[None, :]))
        if gap == 0.0:
            raise GridConstructionError("could not offset external grid from quadrature nodes")
    return x


def solve_generic(system: FredholmSystem, rule: QuadratureRule,
                  u0: np.ndarray, v0: np.ndarray,
                  tol: float, cap: int = 200) -> FredholmSolution:
    """Successive approximation of the system over the given quadrature rule.

    u0/v0 are initial values on the solution grid (the quadrature nodes, or
    the offset grid when singular kernels are present).  Stops when both
    max-norm updates drop below tol; exceeding `cap` returns converged=False.
    """
    if tol <= 0.0:
        raise ParameterError(f"tolerance must be positive, got {tol}")
    a, b = system.domain
    if not (rule.nodes[0] >= a and rule.nodes[-1] <= b):
        raise ParameterError("quadrature nodes must lie inside the system domain")

    t = rule.nodes
    w = rule.weights
    if system.has_singular:
        x = _offset_grid(rule, rule.order)
    else:
        x = t
    u0 = np.asarray(u0, dtype=float)
    v0 = np.asarray(v0, dtype=float)
    if u0.shape != x.shape or v0.shape != x.shape:
        raise ParameterError(f"initial values must have shape {x.shape}")

    f1x = np.asarray(system.f1(x), dtype=float)
    f2x = np.asarray(system.f2(x), dtype=float)
    on_nodes = x is t

    def kernel_matrix(kern):
        return None if kern is None else np.asarray(kern(x[:, None], t[None, :]), dtype=float)

    K1 = kernel_matrix(system.K1)
    Kb1 = kernel_matrix(system.kbar1)
    K2 = kernel_matrix(system.K2)
    Kb2 = kernel_matrix(system.kbar2)

    def step(state):
        u, v = state
        if on_nodes:
            ut, vt = u, v
        else:
            ut = interp_search_many(x, u, t)
            vt = interp_search_many(x, v, t)
        u_new = f1x.copy()
        v_new = f2x.copy()
        if K1 is not None and system.F11 is not None:
            u_new = u_new + K1 @ (w * system.F11(ut, vt))
        if Kb1 is not None and system.F12 is not None:
            u_new = u_new + Kb1 @ (w * system.F12(ut, vt))
        if K2 is not None and system.F21 is not None:
            v_new = v_new + K2 @ (w * system.F21(ut, vt))
        if Kb2 is not None and system.F22 is not None:
            v_new = v_new + Kb2 @ (w * system.F22(ut, vt))
        return u_new, v_new

    (u, v), iterations, converged = successive_approximation(step, (u0, v0), tol, cap)
    return FredholmSolution(x=x, u=u, v=v, iterations=iterations, converged=converged)
