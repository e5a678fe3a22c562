"""Interleaved momentum grids.

The solution is sampled on an external grid of momenta-squared p2 while the
radial integration runs over internal Gauss-Legendre nodes q2 placed in
s = ln(q2).  Because the integrand contains 1/(q2 - p2) difference
quotients, no internal node may coincide with an external node; the grid
constructor enforces that strictly and precomputes, in a single merge pass,
the external bracket index of every internal node so that interpolation
never has to search at evaluation time.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import GridConstructionError, ParameterError
from .quadrature import gauss_chebyshev2, gauss_legendre

__all__ = ["MomentumGrid", "build_grid", "merge_bracket_indices"]

# Radial measure constant: d4q/(2pi)^4 for integrands of (q2, z) reduces to
# (1/(4 pi^3)) * (1/2) * (q2)^2 ds * sqrt(1-z^2) dz  with s = ln q2.
FOUR_VOLUME_COEFF = 1.0 / (4.0 * np.pi**3)

_COINCIDENCE_RTOL = 1e-12


@dataclass(frozen=True)
class MomentumGrid:
    """Immutable external/internal momentum grid pair.

    All arrays are read-only; a constructed grid can be shared freely across
    workers.  `bracket_idx[j]` is the index i with p2_ext[i] <= q2_int[j] <
    p2_ext[i+1] (clamped to N-1 for internal nodes at or beyond the last
    external node).  `radial_measure` folds the quadrature weight, the
    four-volume coefficient and the (q2)^2/2 Jacobian of s = ln q2;
    `weight_jk` is its outer product with the angular weights, and `sz` the
    outer product sqrt(q2_int) x z_nodes used to build p.q per row.
    """

    p2_ext: np.ndarray
    s_nodes: np.ndarray
    s_weights: np.ndarray
    q2_int: np.ndarray
    bracket_idx: np.ndarray  # -1 encodes "below the first external node"
    z_nodes: np.ndarray
    z_weights: np.ndarray
    sqrt_q2_int: np.ndarray = field(repr=False)
    radial_measure: np.ndarray = field(repr=False)
    weight_jk: np.ndarray = field(repr=False)
    sz: np.ndarray = field(repr=False)

    @property
    def n_ext(self) -> int:
        return self.p2_ext.size

    @property
    def m_rad(self) -> int:
        return self.q2_int.size

    @property
    def m_ang(self) -> int:
        return self.z_nodes.size


def merge_bracket_indices(p2_ext: np.ndarray, q2_int: np.ndarray) -> np.ndarray:
    """Bracket index of every internal node via one pass over both sorted arrays.

    Equivalent to a per-node binary search but O(N + M) total and done once
    at construction, never per evaluation.
    """
    n = p2_ext.size
    idx = np.empty(q2_int.size, dtype=np.int64)
    i = 0
    for j, q in enumerate(q2_int):
        if q < p2_ext[0]:
            idx[j] = -1  # below range: interpolation clamps to the first value
            continue
        while i + 1 < n and p2_ext[i + 1] <= q:
            i += 1
        idx[j] = i
    return idx


def _min_relative_gap(p2_ext: np.ndarray, q2_int: np.ndarray) -> float:
    i = np.searchsorted(p2_ext, q2_int)
    gaps = []
    lo = np.clip(i - 1, 0, p2_ext.size - 1)
    hi = np.clip(i, 0, p2_ext.size - 1)
    for nb in (lo, hi):
        gaps.append(np.abs(q2_int - p2_ext[nb]) / np.maximum(q2_int, p2_ext[nb]))
    return float(np.min(gaps))


def build_grid(n_ext: int, m_rad: int, m_ang: int, p2_min: float, p2_max: float) -> MomentumGrid:
    """Build the interleaved grid pair with precomputed bracket indices.

    The external grid is log-uniform on [p2_min, p2_max]; the internal nodes
    are exp of a Gauss-Legendre rule in s = ln q2 over the same range, with
    the angular rule a Gauss-Chebyshev (second kind) rule matching the 4D
    hyperspherical sqrt(1-z^2) weight.  If an internal node falls within
    1e-12 relative of an external node, the external grid is shifted by half
    a log step (quadrature nodes and weights stay untouched, so the radial
    rule remains exact).
    """
    if n_ext < 2:
        raise ParameterError(f"N must be >= 2, got {n_ext}")
    if m_rad < 2:
        raise ParameterError(f"M_rad must be >= 2, got {m_rad}")
    if m_ang < 1:
        raise ParameterError(f"M_ang must be >= 1, got {m_ang}")
    if not (0.0 < p2_min < p2_max):
        raise ParameterError(f"need 0 < p2_min < p2_max, got [{p2_min}, {p2_max}]")

    log_lo, log_hi = np.log10(p2_min), np.log10(p2_max)
    p2_ext = np.logspace(log_lo, log_hi, n_ext)
    radial = gauss_legendre(m_rad, np.log(p2_min), np.log(p2_max))
    q2_int = np.exp(radial.nodes)
    angular = gauss_chebyshev2(m_ang)

    if _min_relative_gap(p2_ext, q2_int) <= _COINCIDENCE_RTOL:
        # shift downward: internal nodes can then only spill past the upper
        # end, where interpolation already clamps to the last value
        half_step = 0.5 * (log_hi - log_lo) / (n_ext - 1)
        p2_ext = p2_ext * 10.0**-half_step
        if _min_relative_gap(p2_ext, q2_int) <= _COINCIDENCE_RTOL:
            raise GridConstructionError(
                f"could not separate internal and external nodes for N={n_ext}, M_rad={m_rad}"
            )

    sqrt_q2 = np.sqrt(q2_int)
    measure = FOUR_VOLUME_COEFF * 0.5 * q2_int**2 * radial.weights
    weight_jk = np.outer(measure, angular.weights)
    sz = np.outer(sqrt_q2, angular.nodes)
    bracket = merge_bracket_indices(p2_ext, q2_int)

    arrays = (p2_ext, radial.nodes, radial.weights, q2_int, bracket,
              angular.nodes, angular.weights, sqrt_q2, measure, weight_jk, sz)
    for arr in arrays:
        arr.flags.writeable = False
    return MomentumGrid(
        p2_ext=p2_ext,
        s_nodes=radial.nodes,
        s_weights=radial.weights,
        q2_int=q2_int,
        bracket_idx=bracket,
        z_nodes=angular.nodes,
        z_weights=angular.weights,
        sqrt_q2_int=sqrt_q2,
        radial_measure=measure,
        weight_jk=weight_jk,
        sz=sz,
    )
