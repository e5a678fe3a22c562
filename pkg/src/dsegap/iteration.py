"""Shared successive-approximation driver.

Both the gap-equation solver and the generic two-function Fredholm solver
run their fixed-point loops through `successive_approximation`, so the
stopping rule and iteration accounting live in exactly one place.
"""
from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

__all__ = ["successive_approximation"]

State = tuple[np.ndarray, ...]


def successive_approximation(
    step: Callable[[State], State],
    state0: Sequence[np.ndarray],
    tol: float,
    cap: int,
    on_iteration: Callable[[int, State, tuple[float, ...]], None] | None = None,
):
    """Iterate state <- step(state) until the max-norm update of every
    component falls below `tol`, or `cap` iterations have run.

    Returns (state, iterations, converged).  `on_iteration(n, state, deltas)`
    is invoked after every step with the per-component max |update|.
    """
    state = tuple(np.asarray(s, dtype=float) for s in state0)
    for n in range(1, cap + 1):
        new = step(state)
        deltas = tuple(float(np.max(np.abs(a - b))) for a, b in zip(new, state))
        state = new
        if on_iteration is not None:
            on_iteration(n, state, deltas)
        if all(d < tol for d in deltas):
            return state, n, True
    return state, cap, False
