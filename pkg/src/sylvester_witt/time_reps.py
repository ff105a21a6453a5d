"""Time representations: compact U(1) blocks and the indefinite U(1,1) model.

The harmonic oscillator carries a positive unitary U(1) time development.
The two-position mechanical model (positions x, x', momenta p, p') carries
the reducible but nondecomposable representation

    R(t) = exp(i omega t) [[1, i t / M0], [0, 1]]  in U(1,1),

which preserves the indefinite form J = [[0, 1], [1, 0]] on the (bad, good)
basis.  The regularized delta functions connect the two pictures: a simple
pole in energy gives exp(itE), a double pole gives -it exp(itE).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import NDArray
from scipy import integrate

__all__ = [
    "INDEFINITE_METRIC",
    "IndefiniteRepParams",
    "OscillatorParams",
    "QuadratureError",
    "TwoPositionParams",
    "DeltaQuadrature",
    "expansion_matrix",
    "indefinite_hamiltonian_form",
    "oscillator_kernel",
    "regularized_delta",
    "two_position_equations_of_motion",
    "two_position_hamiltonian_form",
    "two_position_kernel",
    "two_position_kernel_tensor",
    "u11_generator",
    "u11_matrix",
    "u1_phase",
]

INDEFINITE_METRIC = np.array([[0.0, 1.0], [1.0, 0.0]])
INDEFINITE_METRIC.setflags(write=False)


@dataclass(frozen=True)
class OscillatorParams:
    M: float
    k: float

    def __post_init__(self):
        if not (self.M > 0 and self.k > 0):
            raise ValueError("oscillator needs M > 0 and k > 0")

    @property
    def omega(self) -> float:
        return float(np.sqrt(self.k / self.M))

    @property
    def ell4(self) -> float:
        return 1.0 / (self.k * self.M)


@dataclass(frozen=True)
class TwoPositionParams:
    M: float
    M_prime: float
    k: float

    def __post_init__(self):
        if not self.M * self.M_prime > 0:
            raise ValueError("two-position model needs M M' > 0")

    @property
    def omega(self) -> float:
        """k / M0: k / sqrt(MM') for positive masses, sign-flipped for negative ones.

        Negative masses reverse the flow of the equations of motion, so the
        frequency in the kernel's sin terms changes sign with M0.
        """
        return self.k / self.M0

    @property
    def M0(self) -> float:
        return float(np.sign(self.M) * np.sqrt(self.M * self.M_prime))

    def indefinite(self) -> "IndefiniteRepParams":
        return IndefiniteRepParams(self.omega, self.M0)


@dataclass(frozen=True)
class IndefiniteRepParams:
    omega: float
    M0: float

    def __post_init__(self):
        if self.M0 == 0:
            raise ValueError("M0 must be nonzero")


def u1_phase(t: float, omega: float) -> complex:
    return complex(np.exp(1j * omega * t))


def u11_matrix(t: float, p: IndefiniteRepParams) -> NDArray:
    return np.exp(1j * p.omega * t) * np.array([[1.0, 1j * t / p.M0], [0.0, 1.0]])


def u11_generator(p: IndefiniteRepParams) -> NDArray:
    """i [[omega, 1/M0], [0, omega]]: semisimple part i omega plus a nilpotent."""
    return 1j * np.array([[p.omega, 1.0 / p.M0], [0.0, p.omega]])


def oscillator_kernel(
    t: float, p: OscillatorParams, variant: Literal["commutator", "fock"] = "commutator"
) -> NDArray:
    """Time-dependent 2x2 oscillator block.

    Rows/columns follow ([ip, x], [x, x]; [p, p], [x, -ip]).  The commutator
    variant is the canonical quantization, the fock variant holds the
    anticommutator expectation values in the ground state.
    """
    w, k = p.omega, p.k
    c, s = np.cos(w * t), np.sin(w * t)
    if variant == "commutator":
        return np.array([[c, (w / k) * 1j * s], [(k / w) * 1j * s, c]])
    if variant == "fock":
        return np.array([[1j * s, (w / k) * c], [(k / w) * c, 1j * s]])
    raise ValueError(f"unknown variant {variant!r}")


def two_position_kernel(t: float, p: TwoPositionParams) -> NDArray:
    w = p.omega
    M, Mp = p.M, p.M_prime
    c, s = np.cos(w * t), np.sin(w * t)
    r = np.sqrt(Mp / M)
    rm = p.M0  # sign(M) sqrt(MM'), consistent with the t/M entries for negative masses
    return np.array(
        [
            [c, 1j * r * s, -t / rm * s, 1j * t / M * c],
            [1j / r * s, c, 1j * t / Mp * c, -t / rm * s],
            [0, 0, c, 1j * r * s],
            [0, 0, 1j / r * s, c],
        ],
        dtype=complex,
    )


def two_position_kernel_tensor(t: float, p: TwoPositionParams) -> NDArray:
    """[[1, d/domega / M0], [0, 1]] (x) B(omega, t), derivative analytic.

    M0 carries the sign of the masses; for M, M' > 0 it is sqrt(MM').
    """
    w = p.omega
    c, s = np.cos(w * t), np.sin(w * t)
    r = np.sqrt(p.M_prime / p.M)
    block = np.array([[c, 1j * r * s], [1j / r * s, c]])
    d_block = np.array([[-t * s, 1j * r * t * c], [1j / r * t * c, -t * s]])
    out = np.zeros((4, 4), dtype=complex)
    out[:2, :2] = block
    out[2:, 2:] = block
    out[:2, 2:] = d_block / p.M0
    return out


def two_position_equations_of_motion(p: TwoPositionParams) -> NDArray:
    """Linear generator A with d/dt (x, p, x', p') = A (x, p, x', p')."""
    M, Mp, k = p.M, p.M_prime, p.k
    return np.array(
        [
            [0, 1 / M, -k / M, 0],
            [0, 0, 0, -k / Mp],
            [k / Mp, 0, 0, 1 / Mp],
            [0, k / M, 0, 0],
        ],
        dtype=float,
    )


def two_position_hamiltonian_form(p: TwoPositionParams) -> NDArray:
    """Symmetric coefficient matrix of H in the variables (x, p, x', p').

    H = omega (sqrt(M/M') x p' - sqrt(M'/M) x' p)
        + (sqrt(M'/M) p**2 / 2 + sqrt(M/M') p'**2 / 2) / M0,
    which equals p**2/2M + p'**2/2M' + k (x p'/M' - x' p/M).
    """
    w, M, Mp, M0 = p.omega, p.M, p.M_prime, p.M0
    a = np.zeros((4, 4))
    a[0, 3] = a[3, 0] = 0.5 * w * np.sqrt(M / Mp)
    a[2, 1] = a[1, 2] = -0.5 * w * np.sqrt(Mp / M)
    a[1, 1] = 0.5 * np.sqrt(Mp / M) / M0
    a[3, 3] = 0.5 * np.sqrt(M / Mp) / M0
    return a


def expansion_matrix(p: TwoPositionParams) -> NDArray:
    """T with (x, p, x', p') = T (b, bx, g, gx) for the indefinite expansion."""
    M, Mp, M0 = p.M, p.M_prime, p.M0
    r2 = np.sqrt(2.0)
    t = np.zeros((4, 4), dtype=complex)
    t[0, :2] = np.sqrt(M0 / M) / r2
    # -i p = sqrt(M/M0) (g - gx)/sqrt2
    t[1, 2], t[1, 3] = 1j * np.sqrt(M / M0) / r2, -1j * np.sqrt(M / M0) / r2
    # i x' = sqrt(M0/M') (b - bx)/sqrt2
    t[2, 0], t[2, 1] = -1j * np.sqrt(M0 / Mp) / r2, 1j * np.sqrt(M0 / Mp) / r2
    t[3, 2:] = np.sqrt(Mp / M0) / r2
    return t


def indefinite_hamiltonian_form(p: IndefiniteRepParams) -> NDArray:
    """H = omega (b gx + g bx) + g gx / M0 in the variables (b, bx, g, gx)."""
    h = np.zeros((4, 4), dtype=complex)
    h[0, 3] = h[3, 0] = 0.5 * p.omega
    h[1, 2] = h[2, 1] = 0.5 * p.omega
    h[2, 3] = h[3, 2] = 0.5 / p.M0
    return h


class QuadratureError(RuntimeError):
    """Adaptive quadrature did not converge; ``diagnostics`` holds details."""

    def __init__(self, message: str, diagnostics: dict):
        super().__init__(f"{message}: {diagnostics}")
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class DeltaQuadrature:
    value: complex
    abserr: float
    tail_bound: float
    half_width: float
    evaluations: int


HALF_WIDTH = 200.0


def _delta_density(q, E: float, eps: float, order: int):
    return np.real((1j / np.pi) / (E + 1j * eps - q) ** (order + 1))


def _quad(f, a, b, **kw):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        out = integrate.quad(f, a, b, full_output=1, limit=400, **kw)
    value, abserr, info = out[:3]
    ier = 0 if len(out) == 3 else 1
    return value, abserr, info, ier, (out[3] if ier else "")


def regularized_delta(
    t: float,
    E: float,
    eps: float,
    order: Literal[0, 1] = 0,
    half_width: float = HALF_WIDTH,
    full_output: bool = False,
):
    """Integrate exp(i t q0) Re[(i/pi) (E + i eps - q0)**-(order+1)] over q0.

    The density is the Lorentzian regularization of delta(q0 - E) for
    order 0 and of delta'(q0 - E) for order 1; as eps -> 0 the result tends
    to exp(itE) and -it exp(itE).  The window is [E - half_width,
    E + half_width], split at E +- c with c ~ 100 eps around the peak; the
    outer pieces use the oscillatory (QAWO) rule.
    """
    if not eps > 0:
        raise ValueError("eps must be positive")
    if t < 0:
        raise ValueError("t must be non-negative")
    if order not in (0, 1):
        raise ValueError("order must be 0 or 1")

    c = min(half_width, max(100.0 * eps, 0.5))
    lo, hi = E - half_width, E + half_width
    f = lambda q: _delta_density(q, E, eps, order)  # noqa: E731

    pieces = []
    for part, trig in (("re", np.cos), ("im", np.sin)):
        g = lambda q, trig=trig: f(q) * trig(t * q)  # noqa: E731
        pieces.append((part, "core") + _quad(g, E - c, E + c, points=[E - eps, E, E + eps]))
        for a, b in ((lo, E - c), (E + c, hi)):
            if t == 0:
                res = _quad(g, a, b)
            else:
                res = _quad(f, a, b, weight="cos" if part == "re" else "sin", wvar=t)
            pieces.append((part, f"[{a:g},{b:g}]") + res)

    failed = [(part, where, msg) for part, where, _, _, _, ier, msg in pieces if ier]
    total_err = sum(p[3] for p in pieces)
    value = complex(
        sum(p[2] for p in pieces if p[0] == "re"), sum(p[2] for p in pieces if p[0] == "im")
    )
    if failed or total_err > 1e-7:
        raise QuadratureError(
            "regularized delta quadrature did not converge",
            {"t": t, "E": E, "eps": eps, "order": order, "abserr": total_err, "failed": failed},
        )
    # neglected tails of |density| beyond the window
    tail = 2 * eps / (np.pi * half_width) if order == 0 else 2 * eps / (np.pi * half_width**2)
    if not full_output:
        return value
    return DeltaQuadrature(
        value=value,
        abserr=total_err,
        tail_bound=float(tail),
        half_width=half_width,
        evaluations=sum(p[4]["neval"] for p in pieces),
    )
