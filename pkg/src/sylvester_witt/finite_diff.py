"""Central finite differences for matrix-valued functions of one variable.

Used as the independent oracle for analytic derivatives and for the
pole/dipole classification.  Stencil weights come from a Vandermonde solve,
which is exact enough for the small symmetric stencils used here.
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Callable

import numpy as np
from numpy.typing import NDArray


@lru_cache(maxsize=None)
def central_weights(deriv: int, half: int) -> tuple[float, ...]:
    """Weights for offsets -half..half approximating the deriv-th derivative."""
    if half < (deriv + 1) // 2:
        raise ValueError("stencil too small for requested derivative")
    offsets = np.arange(-half, half + 1, dtype=float)
    vander = np.vander(offsets, increasing=True).T
    rhs = np.zeros(len(offsets))
    rhs[deriv] = factorial(deriv)
    return tuple(np.linalg.solve(vander, rhs))


def derivative(
    f: Callable[[float], NDArray], x: float, deriv: int = 1, h: float = 1e-3, half: int = 4
) -> NDArray:
    w = central_weights(deriv, half)
    acc = sum(wi * np.asarray(f(x + (i - half) * h)) for i, wi in enumerate(w))
    return acc / h**deriv


def default_step(t: float) -> float:
    """h = 1e-4 (1 + |t|) for plain second-order central differences."""
    return 1e-4 * (1.0 + abs(t))


def oscillator_residual(
    f: Callable[[float], NDArray], x: float, omega: float, squared: bool = False,
    h: float | None = None, half: int = 5,
) -> NDArray:
    """(d^2/dx^2 + omega^2) f, or its square, evaluated by finite differences.

    The default step is a fixed phase increment, h = 0.05 / |omega|, which
    keeps round-off in the fourth derivative bounded for slow oscillations;
    it is capped at 0.5 as omega -> 0.
    """
    if h is None:
        h = 0.05 / max(abs(omega), 0.1)
    f0 = np.asarray(f(x))
    d2 = derivative(f, x, 2, h, half)
    if not squared:
        return d2 + omega**2 * f0
    d4 = derivative(f, x, 4, h, half)
    return d4 + 2 * omega**2 * d2 + omega**4 * f0
