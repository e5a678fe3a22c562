"""Gaussian quadrature rules.

Two rules are provided: Gauss-Legendre on an arbitrary interval [a, b]
(weight 1), computed by Newton iteration on the Legendre polynomials, and
Gauss-Chebyshev of the second kind on (-1, 1), whose closed-form nodes and
weights integrate f(z)*sqrt(1 - z^2).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError

__all__ = ["QuadratureRule", "gauss_legendre", "gauss_chebyshev2"]


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights of an n-point rule on `interval`.

    Nodes are strictly increasing and lie in the open interval; weights are
    positive.  An n-point Gauss rule integrates polynomials up to degree
    2n - 1 exactly (against the rule's weight function).
    """

    nodes: np.ndarray
    weights: np.ndarray
    order: int
    interval: tuple[float, float]

    def integrate(self, values: np.ndarray) -> float:
        """Weighted sum of integrand values sampled at the nodes."""
        return float(np.dot(self.weights, values))


def _legendre_and_derivative(n: int, x: np.ndarray):
    """Evaluate P_n(x) and P_n'(x) by the three-term recurrence."""
    p_prev = np.ones_like(x)
    p = x.copy()
    if n == 1:
        return p, np.ones_like(x)
    for k in range(2, n + 1):
        p_prev, p = p, ((2 * k - 1) * x * p - (k - 1) * p_prev) / k
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


def gauss_legendre(order: int, a: float, b: float) -> QuadratureRule:
    """Gauss-Legendre rule of the given order on [a, b].

    Roots of P_n are found by Newton iteration from the standard cosine
    initial guess; the iteration is run to machine stationarity (node
    residual well below 1e-14).  Weights follow from the derivative values,
    then nodes and weights are mapped affinely onto [a, b].
    """
    if order < 1:
        raise ParameterError(f"quadrature order must be >= 1, got {order}")
    if not (np.isfinite(a) and np.isfinite(b)) or not a < b:
        raise ParameterError(f"degenerate interval [{a}, {b}]")

    n = int(order)
    k = np.arange(1, n + 1)
    x = np.cos(np.pi * (k - 0.25) / (n + 0.5))
    for _ in range(100):
        p, dp = _legendre_and_derivative(n, x)
        dx = p / dp
        x -= dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    p, dp = _legendre_and_derivative(n, x)
    x -= p / dp  # one polishing step after stationarity

    w = 2.0 / ((1.0 - x * x) * dp * dp)
    idx = np.argsort(x)
    x, w = x[idx], w[idx]

    half = 0.5 * (b - a)
    nodes = 0.5 * (a + b) + half * x
    weights = half * w
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return QuadratureRule(nodes=nodes, weights=weights, order=n, interval=(float(a), float(b)))


def gauss_chebyshev2(order: int) -> QuadratureRule:
    """Gauss-Chebyshev rule of the second kind on (-1, 1).

    Nodes z_k = cos(k*pi/(n+1)) with weights (pi/(n+1))*sin^2(k*pi/(n+1));
    together they integrate f(z)*sqrt(1 - z^2) over (-1, 1), so the
    sqrt(1 - z^2) factor must not appear in the sampled integrand.
    """
    if order < 1:
        raise ParameterError(f"quadrature order must be >= 1, got {order}")
    n = int(order)
    k = np.arange(n, 0, -1)  # descending k gives ascending nodes
    theta = k * np.pi / (n + 1)
    nodes = np.cos(theta)
    weights = (np.pi / (n + 1)) * np.sin(theta) ** 2
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return QuadratureRule(nodes=nodes, weights=weights, order=n, interval=(-1.0, 1.0))
