"""Mode kernels: field (anti)commutators at fixed spatial momentum.

Each kernel is the x0-dependent matrix left after the energy integral has
been done analytically, with the d^3q superposition stripped off.

* massive vector (Sylvester): spin block m lam delta^{ab} i sin(q0 x0),
  embedded in 4x4 by the Lambda(q, m) congruence;
* massless Weyl spinor: p_+ exp(i q0 x0) + p_- exp(-i q0 x0);
* massless vector (Witt): a rest-frame 4x4 kernel with pole and dipole
  parts, and its Witt-basis form made of a transverse U(1) block and a
  lightlike U(1,1) block, related by H(q).

Spinor kernel signs.  Doing the q0 integral of
rho^j q_j eps(q0) delta(q^2) with rho^j q_j = q0 + sigma.q picks the roots
q0 = +-|q| with weights +-1/(2|q|):

    [e^{i x0 w}(w + sigma.q) + e^{-i x0 w}(w - sigma.q)] / (2w)
        = p_+ e^{i x0 w} + p_- e^{-i x0 w},

which is 1 at x0 = 0.  Without eps(q0) (the Fock commutator) the second
root enters with + and the result is p_+ e^{i x0 w} - p_- e^{-i x0 w}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Literal

import numpy as np
from numpy.typing import ArrayLike, NDArray

from . import finite_diff
from .minkowski import ETA
from .transmutators import (
    GaugeTriple,
    LightlikeMomentum,
    MassiveMomentum,
    helicity_projectors,
    lorentz_boost,
    sylvester_witt,
)

__all__ = [
    "MassiveVectorParams",
    "ModeKernel",
    "kernel_csv",
    "lightlike_kernel",
    "massive_vector_derived_blocks",
    "massive_vector_kernel",
    "massive_vector_mode",
    "massless_spinor_kernel",
    "massless_spinor_mode",
    "massless_vector_rest_kernel",
    "massless_vector_rest_mode",
    "massless_vector_witt_blocks",
    "ode_order_check",
    "transverse_fock_block",
    "transverse_kernel",
    "witt_basis_kernel",
    "witt_kernel",
    "witt_sylvester_residual",
]

Variant = Literal["commutator", "fock"]


@dataclass(frozen=True)
class MassiveVectorParams:
    """Particle mass m and dilatation parameter lam; g_Z**2 = m lam."""

    m: float
    lam: float | None = None

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError("mass must be positive")
        if self.lam is None:
            object.__setattr__(self, "lam", self.m)
        if not self.m * self.lam > 0:
            raise ValueError("need m * lam > 0")

    @property
    def coupling2(self) -> float:
        return self.m * self.lam


@dataclass(frozen=True)
class ModeKernel:
    evaluate: Callable[[float], NDArray] = field(repr=False)
    dim: int
    species: str
    variant: str
    q0: float

    def __call__(self, x0: float) -> NDArray:
        return np.asarray(self.evaluate(x0))


# -- massive vector ---------------------------------------------------------

def _time_factor(x0: float, q0: float, variant: str, deriv: int = 0) -> complex:
    """d^n/dx0^n of i sin(q0 x0) (commutator) or cos(q0 x0) (fock)."""
    ph = q0 * x0
    if variant == "commutator":
        base = [1j * np.sin(ph), 1j * q0 * np.cos(ph), -1j * q0**2 * np.sin(ph)]
    elif variant == "fock":
        base = [np.cos(ph), -q0 * np.sin(ph), -(q0**2) * np.cos(ph)]
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return base[deriv]


@dataclass(frozen=True)
class MassiveMode:
    spin: NDArray  # 3x3 block [ZZ]^{ab}(x0)
    embedded: NDArray  # 4x4 Lambda diag(0, block) Lambda^T


def massive_vector_mode(
    x0: float, p: MassiveVectorParams, q: ArrayLike, variant: Variant = "commutator"
) -> MassiveMode:
    mom = MassiveMomentum(p.m, q)
    f = _time_factor(x0, mom.q0, variant)
    spin = p.coupling2 * f * np.eye(3, dtype=complex)
    padded = np.zeros((4, 4), dtype=complex)
    padded[1:, 1:] = spin
    lam = lorentz_boost(mom)
    return MassiveMode(spin, lam @ padded @ lam.T)


def massive_vector_derived_blocks(
    x0: float, p: MassiveVectorParams, q: ArrayLike, variant: Variant = "commutator"
) -> dict[str, NDArray]:
    """Field-strength blocks obtained from C = [Z^t Z^s](x0) by derivatives.

    Covariant derivatives act on a mode as d_0 -> d/dx0, d_a -> -i q^a;
    indices are raised with eta, so d^a -> +i q^a.  With
    eps^{lk}_{ut} X^{ut} = X^{lk} - X^{kl} the blocks are

        iG_Z[k,l,j]   = [iG^{kl}, Z^j]     = -i (d^l C^{kj} - d^k C^{lj}) / (m lam)
        Z_Z[k,j]      = [Z^k, Z^j]         = C^{kj}
        G_G[k,l,j,n]  = [G^{kl}, G^{jn}]   = -eps eps d d C / (lam m m lam)
        Z_mG[k,j,n]   = [Z^k, -iG^{jn}]    = -i (d^n C^{kj} - d^j C^{kn}) / (m lam)
    """
    mom = MassiveMomentum(p.m, q)
    q0, qv = mom.q0, mom.q
    g2 = p.coupling2
    lam = lorentz_boost(mom)
    proj = lam[:, 1:] @ lam[:, 1:].T  # Lambda diag(0,1,1,1) Lambda^T

    f = [_time_factor(x0, q0, variant, n) for n in range(3)]
    up = np.concatenate(([0.0], 1j * qv))  # spatial factor of d^u
    d1 = np.array([f[1]] + [1j * qa * f[0] for qa in qv])
    d2 = np.empty((4, 4), dtype=complex)
    d2[0, 0] = f[2]
    d2[0, 1:] = d2[1:, 0] = up[1:] * f[1]
    d2[1:, 1:] = np.outer(up[1:], up[1:]) * f[0]

    C = g2 * f[0] * proj
    iG_Z = -1j * (np.einsum("l,kj->klj", d1, proj) - np.einsum("k,lj->klj", d1, proj))
    Z_mG = -1j * (np.einsum("n,kj->kjn", d1, proj) - np.einsum("j,kn->kjn", d1, proj))
    G_G = -(
        np.einsum("nl,kj->kljn", d2, proj)
        - np.einsum("jl,kn->kljn", d2, proj)
        - np.einsum("nk,lj->kljn", d2, proj)
        + np.einsum("jk,ln->kljn", d2, proj)
    ) / (p.lam * p.m)
    return {"iG_Z": iG_Z, "Z_Z": C, "G_G": G_G, "Z_mG": Z_mG}


def massive_vector_kernel(
    p: MassiveVectorParams, q: ArrayLike, variant: Variant = "commutator", embedded: bool = False
) -> ModeKernel:
    mom = MassiveMomentum(p.m, q)
    if embedded:
        ev = lambda x0: massive_vector_mode(x0, p, mom.q, variant).embedded  # noqa: E731
    else:
        ev = lambda x0: massive_vector_mode(x0, p, mom.q, variant).spin  # noqa: E731
    return ModeKernel(ev, 4 if embedded else 3, "massive_vector", variant, mom.q0)


# -- massless spinor -------------------------------------------------------

def massless_spinor_mode(
    x0: float, q: ArrayLike, variant: Literal["anticommutator", "commutator"] = "anticommutator"
) -> NDArray:
    mom = LightlikeMomentum(q)
    pp, pm = helicity_projectors(mom)
    ph = np.exp(1j * x0 * mom.q0)
    if variant == "anticommutator":
        return pp * ph + pm / ph
    if variant == "commutator":
        return pp * ph - pm / ph
    raise ValueError(f"unknown variant {variant!r}")


def massless_spinor_kernel(
    q: ArrayLike, variant: Literal["anticommutator", "commutator"] = "anticommutator"
) -> ModeKernel:
    mom = LightlikeMomentum(q)
    return ModeKernel(
        lambda x0: massless_spinor_mode(x0, mom.q, variant), 2, "massless_spinor", variant, mom.q0
    )


# -- massless vector -------------------------------------------------------

def massless_vector_rest_mode(x0: float, q: ArrayLike, g: GaugeTriple) -> NDArray:
    """Rest-frame commutator [AA]^{kj}(x0, q): pole part plus dipole part.

    -mu2 eta i sin(X) - (mu2 + eps sigma2)/2 [[i(X cos + sin), x0 q^a sin],
                                              [x0 q^b sin, q^a q^b/q0^2 i(X cos - sin)]]
    with X = x0 q0, q0 = |q|.
    """
    mom = LightlikeMomentum(q)
    q0, qv = mom.q0, mom.q
    X = x0 * q0
    c, s = np.cos(X), np.sin(X)
    dip = np.empty((4, 4), dtype=complex)
    dip[0, 0] = 1j * (X * c + s)
    dip[0, 1:] = dip[1:, 0] = x0 * qv * s
    dip[1:, 1:] = np.outer(qv, qv) / q0**2 * 1j * (X * c - s)
    return -g.mu2 * ETA.matrix * 1j * s - 0.5 * g.dipole_weight * dip


def massless_vector_witt_blocks(x0: float, q0: float, g: GaugeTriple) -> tuple[NDArray, NDArray]:
    """(transverse, lightlike) 2x2 blocks of the Witt-basis kernel.

    Transverse (components 1, 2): mu2 i sin(X) 1_2, photon-like U(1).
    Lightlike (components 0, 3):
        mu2/2 [[i X/M0 e^{-iX}, N0 i sin X], [N0 i sin X, i X/M0 e^{iX}]].
    """
    if not q0 > 0:
        raise ValueError("q0 must be positive")
    X = x0 * q0
    s = np.sin(X)
    trans = g.mu2 * 1j * s * np.eye(2, dtype=complex)
    light = 0.5 * g.mu2 * np.array(
        [
            [1j * X * g.inv_M0 * np.exp(-1j * X), g.N0 * 1j * s],
            [g.N0 * 1j * s, 1j * X * g.inv_M0 * np.exp(1j * X)],
        ]
    )
    return trans, light


def witt_basis_kernel(x0: float, q0: float, g: GaugeTriple) -> NDArray:
    """Assemble the 4x4 Witt-basis kernel: lightlike block in slots 0/3."""
    trans, light = massless_vector_witt_blocks(x0, q0, g)
    k = np.zeros((4, 4), dtype=complex)
    k[1:3, 1:3] = trans
    k[np.ix_([0, 3], [0, 3])] = light
    return k


def witt_sylvester_residual(x0: float, q: ArrayLike, g: GaugeTriple) -> float:
    """max |H [AA]_Witt H^T - [AA]_rest|; zero if both displays agree."""
    mom = LightlikeMomentum(q)
    h = sylvester_witt(mom)
    lhs = h @ witt_basis_kernel(x0, mom.q0, g) @ h.T
    return float(np.abs(lhs - massless_vector_rest_mode(x0, mom.q, g)).max())


def massless_vector_rest_kernel(q: ArrayLike, g: GaugeTriple) -> ModeKernel:
    mom = LightlikeMomentum(q)
    return ModeKernel(
        lambda x0: massless_vector_rest_mode(x0, mom.q, g), 4, "massless_vector_rest",
        "commutator", mom.q0,
    )


def transverse_fock_block(x0: float, q0: float, g: GaugeTriple) -> NDArray:
    """Fock anticommutator of the transverse pair: mu2 cos(x0 q0) 1_2."""
    if not q0 > 0:
        raise ValueError("q0 must be positive")
    return g.mu2 * np.cos(x0 * q0) * np.eye(2, dtype=complex)


def transverse_kernel(q0: float, g: GaugeTriple, variant: Variant = "commutator") -> ModeKernel:
    if variant == "commutator":
        ev = lambda x0: massless_vector_witt_blocks(x0, q0, g)[0]  # noqa: E731
    elif variant == "fock":
        ev = lambda x0: transverse_fock_block(x0, q0, g)  # noqa: E731
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return ModeKernel(ev, 2, "massless_vector_transverse", variant, q0)


def lightlike_kernel(q0: float, g: GaugeTriple) -> ModeKernel:
    return ModeKernel(
        lambda x0: massless_vector_witt_blocks(x0, q0, g)[1], 2, "massless_vector_lightlike",
        "commutator", q0,
    )


def witt_kernel(q0: float, g: GaugeTriple) -> ModeKernel:
    return ModeKernel(
        lambda x0: witt_basis_kernel(x0, q0, g), 4, "massless_vector_witt", "commutator", q0
    )


# -- classification and output ---------------------------------------------

POLE, DIPOLE, ZERO, UNCLASSIFIED = "pole", "dipole", "zero", "unclassified"


def ode_order_check(
    k: ModeKernel | Callable[[float], NDArray],
    q0: float,
    grid: ArrayLike | None = None,
    tol: float = 1e-5,
) -> NDArray:
    """Label each entry 'pole', 'dipole' or 'zero' by finite differences.

    An entry is a pole if (d^2/dx0^2 + q0^2) annihilates it, a dipole if
    only the squared operator does.  Residuals are normalized by
    q0^2 (resp. q0^4) times the entry's largest magnitude on the grid.
    """
    if grid is None:
        period = 2 * np.pi / q0
        grid = np.linspace(-1.5 * period, 1.5 * period, 13)
    grid = np.asarray(grid, dtype=float)
    vals = np.array([np.asarray(k(x)) for x in grid])
    r2 = np.array([finite_diff.oscillator_residual(k, x, q0) for x in grid])
    r4 = np.array([finite_diff.oscillator_residual(k, x, q0, squared=True) for x in grid])

    size = np.abs(vals).max(axis=0)
    floor = 1e-12 * max(float(size.max()), 1e-300)
    labels = np.full(size.shape, UNCLASSIFIED, dtype=object)
    with np.errstate(divide="ignore", invalid="ignore"):
        pole_res = np.abs(r2).max(axis=0) / (q0**2 * size)
        dip_res = np.abs(r4).max(axis=0) / (q0**4 * size)
    labels[dip_res < tol] = DIPOLE
    labels[pole_res < tol] = POLE
    labels[size <= floor] = ZERO
    return labels


def kernel_csv(k: ModeKernel | Callable[[float], NDArray], x0_values: ArrayLike) -> str:
    """CSV dump: x0, then re/im of every entry in row-major order, %.17g."""
    rows = [np.asarray(k(float(x)), dtype=complex) for x in x0_values]
    n, m = rows[0].shape
    header = ["x0"]
    for i in range(n):
        for j in range(m):
            header += [f"re_{i}{j}", f"im_{i}{j}"]
    lines = [",".join(header)]
    for x, mat in zip(x0_values, rows):
        cells = [f"{float(x):.17g}"]
        for z in mat.ravel():
            cells += [f"{z.real:.17g}", f"{z.imag:.17g}"]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
