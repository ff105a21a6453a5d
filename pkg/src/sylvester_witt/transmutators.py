"""Coset representatives and projectors for the Sylvester and Witt regimes.

Massive momenta use the Lorentz-Sylvester transmutators s(q, m) in
SL(2,C)/SU(2) and Lambda(q, m) in SO+(1,3)/SO(3).  Lightlike momenta use the
helicity projectors p_+-(q), the Sylvester-Witt rotations u(q) in SU(2)/U(1)
and O(q) in SO(3)/SO(2), the constant basis change w and H(q) = O(q) w.

Every explicit matrix has a ``*_reference`` twin built by a different route
(trace formula or composition); the test suite compares the two.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .minkowski import ETA, ID2, PAULI, vector_rep

__all__ = [
    "CHART_TOL",
    "GaugeTriple",
    "LightlikeMomentum",
    "MassiveMomentum",
    "SingularChart",
    "helicity_projectors",
    "lorentz_boost",
    "spin1_projector",
    "spin1_projector_mixed",
    "sylvester_witt",
    "sylvester_witt_reference",
    "weyl_boost",
    "weyl_boost_inverse",
    "witt_basis_change",
    "witt_rotation_so3",
    "witt_rotation_so3_reference",
    "witt_rotation_su2",
]

CHART_TOL = 1e-10


class SingularChart(ValueError):
    """The Witt chart u(q) is undefined for q along -z (q0 + q3 = 0)."""


def _vec3(q: ArrayLike) -> NDArray:
    v = np.array(q, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"spatial momentum must have 3 components, got shape {v.shape}")
    v.setflags(write=False)
    return v


@dataclass(frozen=True, eq=False)
class MassiveMomentum:
    m: float
    q: NDArray

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError(f"mass must be positive, got {self.m}")
        object.__setattr__(self, "q", _vec3(self.q))

    @property
    def q0(self) -> float:
        return float(np.sqrt(self.m * self.m + self.q @ self.q))

    @property
    def four(self) -> NDArray:
        return np.concatenate(([self.q0], self.q))


@dataclass(frozen=True, eq=False)
class LightlikeMomentum:
    q: NDArray

    def __post_init__(self):
        q = _vec3(self.q)
        if not np.any(q):
            raise ValueError("lightlike momentum must be nonzero")
        object.__setattr__(self, "q", q)

    @property
    def q0(self) -> float:
        return float(np.linalg.norm(self.q))

    @property
    def four(self) -> NDArray:
        return np.concatenate(([self.q0], self.q))

    @property
    def direction(self) -> NDArray:
        return self.q / self.q0


@dataclass(frozen=True)
class GaugeTriple:
    """Coupling mu**2 and signed gauge fixing parameter eps*sigma**2."""

    mu2: float
    eps_sigma2: float

    def __post_init__(self):
        if not self.mu2 > 0:
            raise ValueError("mu**2 must be positive")
        if self.eps_sigma2 == 0:
            raise ValueError("gauge fixing parameter eps*sigma**2 must be nonzero")

    @property
    def inv_M0(self) -> float:
        return -(self.mu2 + self.eps_sigma2) / self.mu2

    @property
    def N0(self) -> float:
        return (3 * self.mu2 + self.eps_sigma2) / self.mu2

    @property
    def dipole_weight(self) -> float:
        return self.mu2 + self.eps_sigma2

    @classmethod
    def feynman(cls, mu2: float = 1.0) -> "GaugeTriple":
        return cls(mu2, -mu2)


def _sigma_dot(q: NDArray) -> NDArray:
    return q[0] * PAULI[0] + q[1] * PAULI[1] + q[2] * PAULI[2]


def weyl_boost(p: MassiveMomentum) -> NDArray:
    """s(q, m) = sqrt((q0+m)/2m) [1 + sigma.q/(q0+m)]: hermitian, det 1."""
    m, q0 = p.m, p.q0
    return np.sqrt((q0 + m) / (2 * m)) * (ID2 + _sigma_dot(p.q) / (q0 + m))


def weyl_boost_inverse(p: MassiveMomentum) -> NDArray:
    m, q0 = p.m, p.q0
    return np.sqrt((q0 + m) / (2 * m)) * (ID2 - _sigma_dot(p.q) / (q0 + m))


def lorentz_boost(p: MassiveMomentum) -> NDArray:
    """Lambda(q, m) with Lambda e0 m = q; the vector image of weyl_boost(p)."""
    m, q0, q = p.m, p.q0, p.q
    lam = np.empty((4, 4))
    lam[0, 0] = q0
    lam[0, 1:] = q
    lam[1:, 0] = q
    lam[1:, 1:] = m * np.eye(3) + np.outer(q, q) / (q0 + m)
    return lam / m


def spin1_projector(p: MassiveMomentum) -> NDArray:
    """P^{kj} = -eta^{kj} + q^k q^j / m**2 (two upper indices)."""
    q = p.four
    return -ETA.matrix + np.outer(q, q) / p.m**2


def spin1_projector_mixed(p: MassiveMomentum) -> NDArray:
    """Idempotent rank-3 projector -P^{kj} eta_{jl} = delta^k_l - q^k q_l / m**2.

    With eta = diag(1,-1,-1,-1) the plain contraction P eta squares to
    minus itself; the overall sign makes it a projector.
    """
    return -spin1_projector(p) @ ETA.matrix


def helicity_projectors(q: LightlikeMomentum) -> tuple[NDArray, NDArray]:
    n = _sigma_dot(q.direction)
    return 0.5 * (ID2 + n), 0.5 * (ID2 - n)


def _chart(q: LightlikeMomentum, chart_tol: float) -> tuple[float, NDArray, float]:
    """Return (q0, qvec, q0 + q3), raising SingularChart near the -z axis."""
    q0 = q.q0
    q1, q2, q3 = q.q
    # for q3 < 0 use (q1^2 + q2^2)/(q0 - q3) to avoid cancellation in q0 + q3
    a = q0 + q3 if q3 >= 0 else (q1 * q1 + q2 * q2) / (q0 - q3)
    if a <= chart_tol * q0:
        raise SingularChart(
            f"q = {q.q.tolist()} lies on the -z chart singularity (q0 + q3 <= {chart_tol:g} q0)"
        )
    return q0, q.q, a


def witt_rotation_su2(q: LightlikeMomentum, chart_tol: float = CHART_TOL) -> NDArray:
    """u(q) in SU(2)/U(1), rotating sigma3 eigenprojectors onto p_+-(q)."""
    q0, (q1, q2, q3), a = _chart(q, chart_tol)
    return np.array([[a, -q1 + 1j * q2], [q1 + 1j * q2, a]]) / np.sqrt(2 * q0 * a)


def witt_rotation_so3(q: LightlikeMomentum, chart_tol: float = CHART_TOL) -> NDArray:
    """O(q): rotation fixing time and carrying the z axis onto q/q0."""
    q0, (q1, q2, q3), a = _chart(q, chart_tol)
    d = q0 * a
    return np.array(
        [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1 - q1 * q1 / d, -q1 * q2 / d, q1 / q0],
            [0.0, -q1 * q2 / d, 1 - q2 * q2 / d, q2 / q0],
            [0.0, -q1 / q0, -q2 / q0, q3 / q0],
        ]
    )


def witt_rotation_so3_reference(q: LightlikeMomentum, chart_tol: float = CHART_TOL) -> NDArray:
    return vector_rep(witt_rotation_su2(q, chart_tol))


_R = 1 / np.sqrt(2)
_W = np.array(
    [[_R, 0.0, 0.0, -_R], [0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0], [_R, 0.0, 0.0, _R]]
)
_W.setflags(write=False)


def witt_basis_change() -> NDArray:
    """w: Witt basis (e+, e1, e2, e-) -> Sylvester basis, w^T eta w = iota."""
    return _W.copy()


def sylvester_witt(q: LightlikeMomentum, chart_tol: float = CHART_TOL) -> NDArray:
    """H(q) = O(q) w written out entrywise; column 0 is q / (sqrt2 q0)."""
    q0, (q1, q2, q3), a = _chart(q, chart_tol)
    # entry (1, 2) is -q1 q2/(q0+q3): the orthogonality of columns 1 and 2 fixes the sign
    h = np.array(
        [
            [q0 * _R, 0.0, 0.0, -q0 * _R],
            [q1 * _R, q0 - q1 * q1 / a, -q1 * q2 / a, q1 * _R],
            [q2 * _R, -q1 * q2 / a, q0 - q2 * q2 / a, q2 * _R],
            [q3 * _R, -q1, -q2, q3 * _R],
        ]
    )
    return h / q0


def sylvester_witt_reference(q: LightlikeMomentum, chart_tol: float = CHART_TOL) -> NDArray:
    return witt_rotation_so3(q, chart_tol) @ _W

