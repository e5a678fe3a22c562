"""Piecewise-linear interpolation, two ways.

The search-based strategy locates the bracket of each query by explicit
binary search at evaluation time (the "finding step" of traditional
codes); the precomputed-index strategy reads the bracket from the grid's
`bracket_idx` array and performs zero comparisons against the grid.  Both
apply the identical linear formula, so for queries at the internal nodes
their results are bitwise equal; the strategies differ only in cost.

The finding step is deliberately an explicit comparison loop (not
bisect/searchsorted): it is the instrumentable baseline cost that the
precomputed-index strategy eliminates, and the `counter` hook exposes the
comparison count to benchmarks and tests.
"""
from __future__ import annotations

import enum

import numpy as np

from .errors import ParameterError

__all__ = [
    "InterpStrategy",
    "ComparisonCounter",
    "interp_search",
    "interp_search_many",
    "interp_indexed",
    "interp_indexed_many",
]


class InterpStrategy(enum.Enum):
    SEARCH_BASED = "search"
    PRECOMPUTED_INDEX = "indexed"


class ComparisonCounter:
    """Counts comparisons made against grid entries during bracket location."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0


def _bracket_search(x, q, counter=None):
    """Binary search for i with x[i] <= q < x[i+1].

    Returns -1 for q below x[0] and n-1 for q at or beyond x[n-1].
    """
    n = len(x)
    if counter is not None:
        counter.count += 2
    if q < x[0]:
        return -1
    if q >= x[n - 1]:
        return n - 1
    lo, hi = 0, n - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if counter is not None:
            counter.count += 1
        if x[mid] <= q:
            lo = mid
        else:
            hi = mid
    return lo


def _linear_eval(x, v, i, q):
    return v[i] + (q - x[i]) * (v[i + 1] - v[i]) / (x[i + 1] - x[i])


def _validate_grid(x, v):
    if len(x) < 2:
        raise ParameterError("interpolation grid needs at least 2 knots")
    if len(x) != len(v):
        raise ParameterError(f"grid/value length mismatch: {len(x)} vs {len(v)}")
    if not np.all(np.diff(x) > 0):
        raise ParameterError("interpolation grid must be strictly increasing")


def interp_search(x, v, q, counter: ComparisonCounter | None = None) -> float:
    """Linear interpolation with a per-query binary search for the bracket.

    Queries at or beyond the last knot return the last value; queries below
    the first knot clamp to the first value (defensive only: internal nodes
    never fall below the external grid by construction).
    """
    _validate_grid(x, v)
    i = _bracket_search(x, q, counter)
    if i < 0:
        return float(v[0])
    if i >= len(x) - 1:
        return float(v[-1])
    return float(_linear_eval(x, v, i, q))


def interp_search_many(x, v, queries, counter: ComparisonCounter | None = None) -> np.ndarray:
    """Search-based interpolation of every query, one finding step per query."""
    _validate_grid(x, v)
    n = len(x)
    out = np.empty(len(queries))
    for j, q in enumerate(queries):
        i = _bracket_search(x, q, counter)
        if i < 0:
            out[j] = v[0]
        elif i >= n - 1:
            out[j] = v[-1]
        else:
            out[j] = _linear_eval(x, v, i, q)
    return out


def interp_indexed(grid, values, j: int) -> float:
    """Linear interpolation at internal node j using the precomputed bracket.

    No search happens: the bracket index was fixed once at grid
    construction.  Bitwise-identical to `interp_search` at the same query.
    """
    n = grid.n_ext
    if len(values) != n:
        raise ParameterError(f"values length {len(values)} != external grid size {n}")
    if not 0 <= j < grid.m_rad:
        raise ParameterError(f"internal node index {j} out of range [0, {grid.m_rad})")
    i = int(grid.bracket_idx[j])
    if i < 0:
        return float(values[0])
    if i >= n - 1:
        return float(values[-1])
    return float(_linear_eval(grid.p2_ext, values, i, grid.q2_int[j]))


def interp_indexed_many(grid, values) -> np.ndarray:
    """Vectorized precomputed-index interpolation at all internal nodes.

    Pure gather plus the linear formula; output is bitwise-identical to the
    scalar `interp_indexed` at every node.
    """
    if len(values) != grid.n_ext:
        raise ParameterError(f"values length {len(values)} != external grid size {grid.n_ext}")
    values = np.asarray(values)
    x = grid.p2_ext
    idx = grid.bracket_idx
    clamp_hi = idx >= grid.n_ext - 1
    clamp_lo = idx < 0
    lo = np.clip(idx, 0, grid.n_ext - 2)
    out = values[lo] + (grid.q2_int - x[lo]) * (values[lo + 1] - values[lo]) / (x[lo + 1] - x[lo])
    if clamp_hi.any():
        out[clamp_hi] = values[-1]
    if clamp_lo.any():
        out[clamp_lo] = values[0]
    return out
