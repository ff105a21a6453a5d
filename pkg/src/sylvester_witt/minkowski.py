"""Four-vectors, metric forms and the spinor-to-vector map.

Conventions: hbar = c = 1, masses in units of the reference (Fermi) mass,
metric eta = diag(1, -1, -1, -1) so timelike momenta have q.q = m**2 > 0.
Index placement is plain matrix algebra: a tensor with two upper indices
transforms by the congruence M g M^T.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike, NDArray

__all__ = [
    "ETA",
    "IOTA",
    "PAULI",
    "RHO",
    "RHO_BAR",
    "MetricForm",
    "MetricVariant",
    "Tolerance",
    "as_four_vector",
    "epsilon_antisymmetrize",
    "inner",
    "is_proper_orthochronous",
    "on_shell",
    "slash",
    "vector_rep",
]


def _frozen(a: ArrayLike, dtype=float) -> NDArray:
    arr = np.array(a, dtype=dtype)
    arr.setflags(write=False)
    return arr


SIGMA_1 = _frozen([[0, 1], [1, 0]], complex)
SIGMA_2 = _frozen([[0, -1j], [1j, 0]], complex)
SIGMA_3 = _frozen([[1, 0], [0, -1]], complex)
ID2 = _frozen(np.eye(2), complex)

PAULI = (SIGMA_1, SIGMA_2, SIGMA_3)
RHO = (ID2, SIGMA_1, SIGMA_2, SIGMA_3)
RHO_BAR = (ID2, -SIGMA_1, -SIGMA_2, -SIGMA_3)

_RHO_STACK = np.stack(RHO)


class MetricVariant(str, Enum):
    SYLVESTER = "sylvester"
    WITT = "witt"


@dataclass(frozen=True, eq=False)
class MetricForm:
    """Symmetric 4x4 Lorentz bilinear form in a Sylvester or Witt basis."""

    matrix: NDArray
    variant: MetricVariant

    def __post_init__(self):
        m = _frozen(self.matrix)
        if m.shape != (4, 4) or not np.array_equal(m, m.T):
            raise ValueError("metric form must be a symmetric 4x4 matrix")
        object.__setattr__(self, "matrix", m)


# Sylvester basis (time, space): eta.  Witt basis (e+, e1, e2, e-): iota.
ETA = MetricForm(np.diag([1.0, -1.0, -1.0, -1.0]), MetricVariant.SYLVESTER)
IOTA = MetricForm(
    [[0, 0, 0, -1], [0, -1, 0, 0], [0, 0, -1, 0], [-1, 0, 0, 0]],
    MetricVariant.WITT,
)


@dataclass(frozen=True)
class Tolerance:
    absolute: float = 0.0
    relative: float = 0.0

    def __post_init__(self):
        if self.absolute < 0 or self.relative < 0:
            raise ValueError("tolerances must be non-negative")

    def bound(self, scale: float = 1.0) -> float:
        return self.absolute + self.relative * abs(scale)


def as_four_vector(q: ArrayLike) -> NDArray:
    v = np.asarray(q, dtype=float)
    if v.shape != (4,):
        raise ValueError(f"expected a 4-vector, got shape {v.shape}")
    return v


def on_shell(m: float, qvec: ArrayLike) -> NDArray:
    """Energy-momentum (q0, qvec) with q0 = sqrt(m**2 + |qvec|**2)."""
    qv = np.asarray(qvec, dtype=float)
    if qv.shape != (3,):
        raise ValueError("spatial momentum must have 3 components")
    q0 = np.sqrt(m * m + qv @ qv)
    return np.concatenate(([q0], qv))


def inner(q: ArrayLike, p: ArrayLike, g: MetricForm = ETA) -> float:
    return float(as_four_vector(q) @ g.matrix @ as_four_vector(p))


def slash(q: ArrayLike, bar: bool = False) -> NDArray:
    """Pauli contraction rho_k q^k (or rho_bar_k q^k); det equals q.q."""
    q = as_four_vector(q)
    out = q[0] * ID2
    sign = -1.0 if bar else 1.0
    for qa, sa in zip(q[1:], PAULI):
        out = out + sign * qa * sa
    return out


def epsilon_antisymmetrize(a: ArrayLike) -> NDArray:
    """Contract with eps^{jk}_{lr} = d^j_l d^k_r - d^k_l d^j_r, i.e. A - A^T."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square two-index array")
    return a - a.T


def vector_rep(s: ArrayLike, *, atol: float = 1e-12) -> NDArray:
    """Image of a 2x2 complex matrix in the (1/2|1/2) vector representation.

    Lambda^k_j = 1/2 tr(rho_k s rho_j s^dagger), so that
    s slash(q) s^dagger = slash(Lambda q).  For det s = 1 the result lies in
    SO+(1,3); s and -s give the same matrix.
    """
    s = np.asarray(s, dtype=complex)
    if s.shape != (2, 2):
        raise ValueError("expected a 2x2 matrix")
    if abs(np.linalg.det(s)) < atol:
        raise ValueError("singular spinor matrix has no vector representation")
    sd = s.conj().T
    images = np.einsum("ab,jbc,cd->jad", s, _RHO_STACK, sd)
    # s rho_j s^dagger is hermitian, so every trace is real up to rounding
    lam = 0.5 * np.einsum("kda,jad->kj", _RHO_STACK, images)
    return lam.real


def is_proper_orthochronous(lam: ArrayLike, atol: float = 1e-10) -> bool:
    lam = np.asarray(lam, dtype=float)
    eta = ETA.matrix
    return bool(
        np.allclose(lam.T @ eta @ lam, eta, atol=atol, rtol=0)
        and abs(np.linalg.det(lam) - 1.0) <= atol * max(1.0, np.abs(lam).max() ** 4)
        and lam[0, 0] > 0
    )
