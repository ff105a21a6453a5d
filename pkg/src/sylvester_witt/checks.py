"""Randomized property checks aggregated by ``sylwitt verify``.

Every check draws from its own generator, seeded by (seed, crc32(name)), so
adding or removing a check never changes another check's samples.  A check
returns its worst residual; it passes when that residual is within the
tolerance.  Checks marked ``exact`` compare counts or bit patterns and
ignore tolerance overrides.
"""
from __future__ import annotations

import math
import time
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np
from scipy.linalg import expm

from . import electroweak as ew
from . import finite_diff
from . import kernels as kn
from . import time_reps as tr
from .minkowski import ETA, IOTA, Tolerance, inner, slash, vector_rep
from .transmutators import (
    GaugeTriple,
    LightlikeMomentum,
    MassiveMomentum,
    helicity_projectors,
    lorentz_boost,
    spin1_projector,
    spin1_projector_mixed,
    sylvester_witt,
    sylvester_witt_reference,
    weyl_boost,
    witt_basis_change,
    witt_rotation_so3,
    witt_rotation_su2,
)

ID2 = np.eye(2)
SIGMA3 = np.diag([1.0, -1.0])
PARITY = np.diag([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 0
    cases: int = 1000
    tolerance: Tolerance | None = None  # None: each check's own tolerance
    output_format: str = "json"
    jobs: int = 1

    def __post_init__(self):
        if self.cases < 1:
            raise ValueError("cases must be >= 1")


@dataclass
class CheckReport:
    check_name: str
    parameters: dict
    max_residual: float
    tolerance: float
    passed: bool
    elapsed: float = field(default=0.0, compare=False)

    def as_dict(self, timings: bool = False) -> dict:
        d = asdict(self)
        if not timings:
            d.pop("elapsed")
        return d


@dataclass(frozen=True)
class Check:
    name: str
    func: Callable[[np.random.Generator, int], tuple[float, dict]]
    tolerance: float
    exact: bool = False


REGISTRY: dict[str, Check] = {}


def check(name: str, tolerance: float, exact: bool = False):
    def deco(func):
        REGISTRY[name] = Check(name, func, tolerance, exact)
        return func

    return deco


def rng_for(seed: int, name: str) -> np.random.Generator:
    return np.random.default_rng([seed, zlib.crc32(name.encode())])


# -- samplers ---------------------------------------------------------------

def random_massive(rng: np.random.Generator) -> MassiveMomentum:
    """m in [0.1, 10], |q| <= 10 m, direction uniform."""
    m = rng.uniform(0.1, 10.0)
    return MassiveMomentum(m, random_direction(rng) * rng.uniform(0, 10 * m))


def random_direction(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_lightlike(rng: np.random.Generator, chart_margin: float = 1e-6) -> LightlikeMomentum:
    """Uniform direction with q0 + q3 > chart_margin q0, |q| in [0.1, 10]."""
    while True:
        n = random_direction(rng)
        if 1 + n[2] > chart_margin:
            return LightlikeMomentum(n * rng.uniform(0.1, 10.0))


def random_sl2c(rng: np.random.Generator) -> np.ndarray:
    a = rng.uniform(-1, 1, (2, 2)) + 1j * rng.uniform(-1, 1, (2, 2))
    a -= np.trace(a) / 2 * np.eye(2)
    return expm(a)


def random_gauge(rng: np.random.Generator) -> GaugeTriple:
    mu2 = rng.uniform(0.1, 10.0)
    es = 0.0
    while es == 0.0:
        es = rng.uniform(-10.0, 10.0)
    return GaugeTriple(mu2, es)


def _rel(a, b) -> float:
    a, b = np.asarray(a), np.asarray(b)
    return float(np.abs(a - b).max() / max(1.0, np.abs(b).max()))


# -- minkowski ---------------------------------------------------------------

@check("minkowski.witt_metric", 1e-14)
def _witt_metric(rng, cases):
    w = witt_basis_change()
    return float(np.abs(w.T @ ETA.matrix @ w - IOTA.matrix).max()), {}


@check("minkowski.slash_determinant", 1e-10)
def _slash_det(rng, cases):
    worst = 0.0
    for _ in range(cases):
        q = rng.uniform(-10, 10, 4)
        d = np.linalg.det(slash(q))
        worst = max(worst, abs(d - inner(q, q)) / max(1.0, q @ q))
    return worst, {"q": "uniform [-10,10]^4", "residual": "relative"}


@check("minkowski.vector_rep_homomorphism", 1e-10)
def _homomorphism(rng, cases):
    worst = 0.0
    for _ in range(cases):
        a, b = random_sl2c(rng), random_sl2c(rng)
        worst = max(worst, _rel(vector_rep(a @ b), vector_rep(a) @ vector_rep(b)))
    return worst, {"sampler": "expm(traceless, entries in [-1,1])", "residual": "relative"}


@check("minkowski.vector_rep_double_cover", 1e-12)
def _double_cover(rng, cases):
    worst = 0.0
    for _ in range(cases):
        s = random_sl2c(rng)
        worst = max(worst, _rel(vector_rep(-s), vector_rep(s)))
    return worst, {"residual": "relative"}


# -- transmutators ----------------------------------------------------------

@check("transmutators.boost_group", 1e-9)
def _boost_group(rng, cases):
    eta = ETA.matrix
    worst = 0.0
    for _ in range(cases):
        p = random_massive(rng)
        lam = lorentz_boost(p)
        worst = max(
            worst,
            float(np.abs(lam.T @ eta @ lam - eta).max()),
            abs(np.linalg.det(lam) - 1.0),
            float(np.abs(lam @ np.array([p.m, 0, 0, 0]) - p.four).max()),
            float(np.abs(lam - vector_rep(weyl_boost(p))).max()),
            0.0 if lam[0, 0] > 0 else math.inf,
        )
    return worst, {"m": "[0.1,10]", "|q|": "<= 10 m"}


@check("transmutators.weyl_boost", 1e-10)
def _weyl_boost(rng, cases):
    worst = 0.0
    for _ in range(cases):
        p = random_massive(rng)
        s = weyl_boost(p)
        worst = max(
            worst,
            _rel(s, s.conj().T),
            abs(np.linalg.det(s) - 1.0),
            _rel(s @ s.conj().T, slash(p.four) / p.m),
            0.0 if np.linalg.eigvalsh(s).min() > 0 else math.inf,
        )
    return worst, {"residual": "relative"}


@check("transmutators.spin1_projector", 1e-10)
def _spin1(rng, cases):
    eta = ETA.matrix
    worst = 0.0
    for _ in range(cases):
        p = random_massive(rng)
        P, Pm, lam = spin1_projector(p), spin1_projector_mixed(p), lorentz_boost(p)
        scale = max(1.0, float(np.abs(Pm).max()) ** 2)
        sandwich = lam @ np.diag([0.0, 1, 1, 1]) * p.m**2 @ lam.T
        worst = max(
            worst,
            float(np.abs(Pm @ Pm - Pm).max()) / scale,
            float(np.abs(P @ eta @ p.four).max()) / scale,
            abs(np.trace(Pm) - 3.0) / scale,
            _rel(sandwich, p.m**2 * P),
        )
    return worst, {"residual": "relative"}


@check("transmutators.helicity_projectors", 1e-12)
def _helicity(rng, cases):
    worst = 0.0
    for _ in range(cases):
        pp, pm = helicity_projectors(LightlikeMomentum(rng.normal(size=3)))
        worst = max(
            worst,
            float(np.abs(pp @ pp - pp).max()),
            float(np.abs(pm @ pm - pm).max()),
            float(np.abs(pp @ pm).max()),
            float(np.abs(pp + pm - ID2).max()),
            abs(np.trace(pp) - 1),
            abs(np.trace(pm) - 1),
            float(np.abs(pp - pp.conj().T).max()),
        )
    return worst, {}


@check("transmutators.witt_rotation", 1e-10)
def _witt_rotation(rng, cases):
    worst = 0.0
    for _ in range(cases):
        q = random_lightlike(rng)
        u = witt_rotation_su2(q)
        pp, pm = helicity_projectors(q)
        ud = u.conj().T
        worst = max(
            worst,
            float(np.abs(u @ ud - ID2).max()),
            abs(np.linalg.det(u) - 1),
            float(np.abs(u @ (ID2 + SIGMA3) / 2 @ ud - pp).max()),
            float(np.abs(u @ (ID2 - SIGMA3) / 2 @ ud - pm).max()),
        )
    return worst, {"directions": "uniform, chart-regular"}


@check("transmutators.witt_vector_rep", 1e-10)
def _witt_vrep(rng, cases):
    worst = 0.0
    for _ in range(cases):
        q = random_lightlike(rng)
        worst = max(worst, float(np.abs(witt_rotation_so3(q) - vector_rep(witt_rotation_su2(q))).max()))
    return worst, {}


@check("transmutators.sylvester_witt_congruence", 1e-10)
def _sw_congruence(rng, cases):
    eta, iota = ETA.matrix, IOTA.matrix
    worst = 0.0
    for _ in range(cases):
        q = random_lightlike(rng)
        h = sylvester_witt(q)
        worst = max(
            worst,
            float(np.abs(h @ iota @ h.T - eta).max()),
            float(np.abs(h.T @ eta @ h - iota).max()),
            float(np.abs(h - sylvester_witt_reference(q)).max()),
            float(np.abs(h[:, 0] - q.four / (np.sqrt(2) * q.q0)).max()),
        )
    return worst, {}


MASS_SEQUENCE = tuple(10.0**-k for k in range(1, 7))


def massless_limit_sequence(q: np.ndarray) -> list[float]:
    """||sqrt(m/2q0(m)) s(q,m) - p_+(q)|| (spectral norm) along MASS_SEQUENCE."""
    pp, _ = helicity_projectors(LightlikeMomentum(q))
    out = []
    for m in MASS_SEQUENCE:
        p = MassiveMomentum(m, q)
        out.append(float(np.linalg.norm(np.sqrt(m / (2 * p.q0)) * weyl_boost(p) - pp, 2)))
    return out


@check("transmutators.massless_limit", 1e-5)
def _massless_limit(rng, cases):
    worst = 0.0
    n = min(cases, 20)
    for _ in range(n):
        q = random_direction(rng) * rng.uniform(0.5, 5.0)
        seq = massless_limit_sequence(q)
        monotone = all(b < a for a, b in zip(seq, seq[1:]))
        worst = max(worst, seq[-1] if monotone else math.inf)
    return worst, {"directions": n, "masses": list(MASS_SEQUENCE), "|q|": "[0.5,5]"}


@check("transmutators.chart_equivariance", 1e-10)
def _chart_equivariance(rng, cases):
    worst = 0.0
    for _ in range(cases):
        q = LightlikeMomentum(rng.normal(size=3))
        phi = rng.uniform(0, 2 * np.pi)
        d = np.diag([np.exp(-0.5j * phi), np.exp(0.5j * phi)])
        c, s = np.cos(phi), np.sin(phi)
        rq = np.array([c * q.q[0] - s * q.q[1], s * q.q[0] + c * q.q[1], q.q[2]])
        for a, b in zip(helicity_projectors(LightlikeMomentum(rq)), helicity_projectors(q)):
            worst = max(worst, float(np.abs(a - d @ b @ d.conj().T).max()))
    return worst, {"rotation": "about z"}


# -- time representations ------------------------------------------------------

def random_indefinite(rng) -> tr.IndefiniteRepParams:
    return tr.IndefiniteRepParams(rng.uniform(-5, 5), rng.choice([-1, 1]) * rng.uniform(0.2, 5))


@check("time_reps.u11_group_law", 1e-12)
def _u11_group(rng, cases):
    worst = 0.0
    for _ in range(cases):
        p = random_indefinite(rng)
        t, s = rng.uniform(-5, 5, 2)
        lhs = tr.u11_matrix(t, p) @ tr.u11_matrix(s, p)
        worst = max(worst, _rel(lhs, tr.u11_matrix(t + s, p)))
    return worst, {"t,s": "[-5,5]", "omega": "[-5,5]", "|M0|": "[0.2,5]", "residual": "relative"}


@check("time_reps.u11_indefinite_unitarity", 1e-12)
def _u11_unitary(rng, cases):
    J = tr.INDEFINITE_METRIC
    worst = 0.0
    for _ in range(cases):
        p = random_indefinite(rng)
        r = tr.u11_matrix(rng.uniform(-5, 5), p)
        worst = max(worst, _rel(r.conj().T @ J @ r, J))
    return worst, {"residual": "relative"}


@check("time_reps.u11_generator", 1e-10)
def _u11_generator(rng, cases):
    worst = 0.0
    for _ in range(cases):
        p = random_indefinite(rng)
        G = tr.u11_generator(p)
        t = rng.uniform(-5, 5)
        trace_gap = abs(0.5 * np.trace(-1j * G) - p.omega)
        nil = G - 1j * p.omega * ID2
        worst = max(
            worst,
            0.0 if trace_gap == 0 else math.inf,
            float(np.abs(nil @ nil).max()),
            _rel(expm(t * G), tr.u11_matrix(t, p)),
        )
    return worst, {"trace": "exact", "residual": "relative"}


@check("time_reps.oscillator_determinant", 1e-12)
def _osc_det(rng, cases):
    worst = 0.0
    for _ in range(cases):
        p = tr.OscillatorParams(rng.uniform(0.1, 10), rng.uniform(0.1, 10))
        worst = max(worst, abs(np.linalg.det(tr.oscillator_kernel(rng.uniform(-10, 10), p)) - 1))
    return worst, {}


def random_two_position(rng) -> tr.TwoPositionParams:
    sign = rng.choice([-1.0, 1.0])
    return tr.TwoPositionParams(
        sign * rng.uniform(0.2, 5), sign * rng.uniform(0.2, 5), rng.uniform(-3, 3)
    )


@check("time_reps.two_position_tensor", 1e-12)
def _two_pos_tensor(rng, cases):
    worst = 0.0
    n = min(cases, 100)
    for _ in range(n):
        p = random_two_position(rng)
        t = rng.uniform(-5, 5)
        a, b = tr.two_position_kernel(t, p), tr.two_position_kernel_tensor(t, p)
        worst = max(worst, _rel(a, b), float(np.abs(a[2:, :2]).max()))
    return worst, {"draws": n, "residual": "relative"}


@check("time_reps.two_position_ode", 1e-5)
def _two_pos_ode(rng, cases):
    worst = 0.0
    n = min(cases, 100)
    for _ in range(n):
        p = random_two_position(rng)
        w = p.omega
        t = rng.uniform(-5, 5)
        f = lambda x: tr.two_position_kernel(x, p)  # noqa: E731
        res = finite_diff.oscillator_residual(f, t, w, squared=True)
        scale = max(1.0, float(np.abs(f(t)).max())) * max(1.0, w**4)
        worst = max(worst, float(np.abs(res).max()) / scale)
    return worst, {"draws": n, "operator": "(d2/dt2 + omega^2)^2", "residual": "relative"}


@check("time_reps.hamiltonian_forms", 1e-12)
def _hamiltonian_forms(rng, cases):
    worst = 0.0
    for _ in range(cases):
        p = random_two_position(rng)
        A = tr.two_position_hamiltonian_form(p)
        T = tr.expansion_matrix(p)
        B = tr.indefinite_hamiltonian_form(p.indefinite())
        worst = max(worst, _rel(T.T @ A @ T, B))
    return worst, {"residual": "relative"}


DELTA_EPS = (1e-1, 1e-2, 1e-3)
DELTA_TIMES = (0.0, 0.5, 1.0, 2.0, 3.0)
DELTA_ENERGIES = (-5.0, -2.5, -1.0, 0.5, 1.0, 1.7, 2.5, 5.0)
MONOTONE_FLOOR = 1e-10


def delta_grid() -> list[tuple[float, float]]:
    return [(t, E) for t in DELTA_TIMES for E in DELTA_ENERGIES if abs(t * E) <= 5.0]


def delta_errors(t: float, E: float, order: int) -> list[float]:
    target = np.exp(1j * t * E) * (1.0 if order == 0 else -1j * t)
    return [abs(tr.regularized_delta(t, E, eps, order) - target) for eps in DELTA_EPS]


def is_monotone(errs, floor: float = MONOTONE_FLOOR) -> bool:
    """Strictly decreasing, except that errors already below floor may stall."""
    return all(b < a or max(a, b) <= floor for a, b in zip(errs, errs[1:]))


@check("time_reps.delta_regularization", 1e-2)
def _delta(rng, cases):
    worst = 0.0
    for order in (0, 1):
        for t, E in delta_grid():
            errs = delta_errors(t, E, order)
            worst = max(worst, errs[-1] if is_monotone(errs) else math.inf)
    return worst, {"eps": list(DELTA_EPS), "t": list(DELTA_TIMES), "E": list(DELTA_ENERGIES),
                   "constraint": "|tE| <= 5"}


# -- kernels ----------------------------------------------------------------------

@check("kernels.witt_sylvester_residual", 1e-9)
def _ws_residual(rng, cases):
    worst = 0.0
    for _ in range(cases):
        q = random_lightlike(rng)
        worst = max(worst, kn.witt_sylvester_residual(rng.uniform(-10, 10), q.q, random_gauge(rng)))
    return worst, {"x0": "[-10,10]", "mu2": "[0.1,10]", "eps_sigma2": "[-10,10]"}


@check("kernels.witt_sylvester_feynman", 1e-12)
def _ws_feynman(rng, cases):
    worst = 0.0
    for _ in range(cases):
        q = random_lightlike(rng)
        g = GaugeTriple.feynman(rng.uniform(0.1, 10.0))
        worst = max(worst, kn.witt_sylvester_residual(rng.uniform(-10, 10), q.q, g))
    return worst, {"eps_sigma2": "-mu2"}


def classification_mismatches(g: GaugeTriple, q0: float, qm: np.ndarray, m: float) -> int:
    bad = 0
    light = kn.ode_order_check(kn.lightlike_kernel(q0, g), q0)
    feynman = g.dipole_weight == 0
    expected_diag = kn.ZERO if feynman else kn.DIPOLE
    bad += sum(light[i, i] != expected_diag for i in range(2))
    bad += sum(light[i, 1 - i] != kn.POLE for i in range(2))
    trans = kn.ode_order_check(kn.transverse_kernel(q0, g), q0)
    bad += sum(trans[i, i] != kn.POLE for i in range(2))
    bad += sum(trans[i, 1 - i] != kn.ZERO for i in range(2))
    massive = kn.massive_vector_kernel(kn.MassiveVectorParams(m), qm)
    mlab = kn.ode_order_check(massive, massive.q0)
    bad += sum(mlab[i, j] != (kn.POLE if i == j else kn.ZERO) for i in range(3) for j in range(3))
    return int(bad)


@check("kernels.dipole_classification", 0.0, exact=True)
def _dipole_classification(rng, cases):
    bad = 0
    n = min(cases, 20)
    for _ in range(n):
        g = random_gauge(rng)
        q0 = rng.uniform(0.2, 5.0)
        qm = rng.normal(size=3)
        m = rng.uniform(0.2, 5.0)
        bad += classification_mismatches(g, q0, qm, m)
        bad += classification_mismatches(GaugeTriple.feynman(g.mu2), q0, qm, m)
    return float(bad), {"draws": n, "residual": "count of mislabeled entries"}


@check("kernels.spinor_weyl_equation", 1e-8)
def _spinor(rng, cases):
    worst = 0.0
    for _ in range(min(cases, 100)):
        q = rng.normal(size=3)
        sq = sum(qa * sa for qa, sa in zip(q, (np.array([[0, 1], [1, 0]]), np.array([[0, -1j], [1j, 0]]), SIGMA3)))
        x0 = rng.uniform(-5, 5)
        for variant in ("anticommutator", "commutator"):
            f = lambda x: kn.massless_spinor_mode(x, q, variant)  # noqa: E731
            d = finite_diff.derivative(f, x0, 1, h=1e-3, half=4)
            worst = max(worst, float(np.abs(d - 1j * sq @ f(x0)).max()) / max(1.0, np.linalg.norm(q)))
        worst = max(worst, float(np.abs(kn.massless_spinor_mode(0.0, q) - ID2).max()))
    return worst, {"residual": "relative, finite differences"}


@check("kernels.massive_canonical", 1e-6)
def _massive_canonical(rng, cases):
    worst = 0.0
    for _ in range(min(cases, 100)):
        p = kn.MassiveVectorParams(rng.uniform(0.2, 5), rng.uniform(0.2, 5))
        q = rng.normal(size=3)
        q0 = MassiveMomentum(p.m, q).q0
        f = lambda x: kn.massive_vector_mode(x, p, q).spin  # noqa: E731
        d = finite_diff.derivative(f, 0.0, 1, h=1e-3, half=4)
        worst = max(worst, _rel(d, 1j * q0 * p.coupling2 * np.eye(3)))
    return worst, {"residual": "relative, finite differences"}


@check("kernels.antisymmetry", 1e-12)
def _antisymmetry(rng, cases):
    worst = 0.0
    swap = np.array([[0, 1], [1, 0]])
    for _ in range(min(cases, 200)):
        x0 = rng.uniform(-10, 10)
        g = random_gauge(rng)
        q = random_lightlike(rng).q
        p = kn.MassiveVectorParams(rng.uniform(0.2, 5))
        qm = rng.normal(size=3)
        mm = lambda x, v, qq: kn.massive_vector_mode(x, p, qq, v)  # noqa: E731
        worst = max(
            worst,
            _rel(mm(-x0, "commutator", qm).spin, -mm(x0, "commutator", qm).spin),
            _rel(mm(-x0, "commutator", qm).embedded, -mm(x0, "commutator", qm).embedded),
            _rel(mm(x0, "commutator", -qm).embedded, PARITY @ mm(x0, "commutator", qm).embedded @ PARITY),
            _rel(mm(-x0, "fock", qm).spin, mm(x0, "fock", qm).spin.T),
            _rel(kn.massless_vector_rest_mode(-x0, -q, g), -kn.massless_vector_rest_mode(x0, q, g).T),
            _rel(kn.massless_vector_witt_blocks(-x0, 1.3, g)[1],
                 -swap @ kn.massless_vector_witt_blocks(x0, 1.3, g)[1] @ swap),
            _rel(kn.massless_vector_witt_blocks(-x0, 1.3, g)[0], -kn.massless_vector_witt_blocks(x0, 1.3, g)[0]),
        )
    return worst, {"pairing": "rest: K(-x0,-q) = -K(x0,q)^T; lightlike: 0<->3 swap; massive: parity under q -> -q",
                   "residual": "relative"}


@check("kernels.gauge_independence_transverse", 0.0, exact=True)
def _gauge_indep(rng, cases):
    bad = 0
    for _ in range(min(cases, 200)):
        mu2 = rng.uniform(0.1, 10)
        x0, q0 = rng.uniform(-10, 10), rng.uniform(0.1, 10)
        ref = kn.massless_vector_witt_blocks(x0, q0, GaugeTriple(mu2, 0.5 * mu2))[0]
        for f in (-0.5, 2.0, -2.0):
            blk = kn.massless_vector_witt_blocks(x0, q0, GaugeTriple(mu2, f * mu2))[0]
            bad += int(not np.array_equal(blk, ref))
    return float(bad), {"eps_sigma2": "{+-0.5, +-2} mu2", "residual": "count of differing blocks"}


# -- electroweak ----------------------------------------------------------------

@check("electroweak.round_trip", 1e-12)
def _ew_round_trip(rng, cases):
    keys = ("g_Y", "g_W", "g_Z", "g_e", "theta_w")
    pairs = [(a, b) for i, a in enumerate(keys) for b in keys[i + 1:]]
    worst = 0.0
    for _ in range(cases):
        # away from pi/4, where (g_Z, g_e) fixes theta only to ~sqrt(eps)
        theta = rng.uniform(0.05, np.pi / 4 - 0.05)
        base = ew.solve_triangle(g_Z=rng.uniform(0.1, 3), theta_w=theta)
        for a, b in pairs:
            tri = ew.solve_triangle(**{a: getattr(base, a), b: getattr(base, b)})
            worst = max(worst, *(abs(getattr(tri, k) / getattr(base, k) - 1) for k in keys))
            worst = max(worst, *tri.residuals().values())
    return worst, {"theta_w": "[0.05, pi/4 - 0.05]", "pairs": len(pairs), "residual": "relative"}


@check("electroweak.identity_chain", 1e-12)
def _ew_chain(rng, cases):
    worst = 0.0
    for _ in range(cases):
        tri = ew.solve_triangle(g_Z=rng.uniform(0.1, 3), theta_w=rng.uniform(0.05, np.pi / 4))
        M = rng.uniform(1, 500)
        spectrum = ew.mass_spectrum(tri, M)
        sin2 = ew.weinberg_relations(spectrum)["sin2theta"]
        worst = max(worst, abs(sin2 / tri.sin2theta - 1), abs(sin2 / np.sin(2 * tri.theta_w) - 1))
    return worst, {"residual": "relative"}


@check("electroweak.reference_table", 0.1)
def _ew_table(rng, cases):
    tri = ew.triangle_from_masses(123.0, m_Z=91.2, m_e=38.2)
    spectrum = ew.mass_spectrum(tri, 123.0)
    sin2 = ew.weinberg_relations(spectrum)["sin2theta"]
    resid = max(abs(spectrum.m_W - 80.2), abs(spectrum.m_Y - 43.4))
    # sin 2theta_w must be 0.838 +- 0.001; scaled onto the 0.1 GeV budget
    resid = max(resid, 100 * abs(sin2 - 0.838))
    return resid, {"m_Z": 91.2, "m_e": 38.2, "fermi_mass": 123.0, "m_W": spectrum.m_W,
                   "m_Y": spectrum.m_Y, "sin2theta": sin2}


# -- runner ----------------------------------------------------------------------

def run_check(chk: Check, cfg: VerifyConfig) -> CheckReport:
    rng = rng_for(cfg.seed, chk.name)
    start = time.perf_counter()
    try:
        residual, params = chk.func(rng, cfg.cases)
    except Exception as exc:  # a crashing check is a failing check
        residual, params = math.inf, {"error": f"{type(exc).__name__}: {exc}"}
    elapsed = time.perf_counter() - start
    tol = chk.tolerance if (chk.exact or cfg.tolerance is None) else cfg.tolerance.bound()
    residual = float(residual)
    return CheckReport(chk.name, params, residual, tol, residual <= tol, elapsed)


def run_verify(cfg: VerifyConfig, names: list[str] | None = None) -> list[CheckReport]:
    selected = [REGISTRY[n] for n in sorted(names or REGISTRY)]
    if cfg.jobs > 1:
        with ThreadPoolExecutor(cfg.jobs) as pool:
            reports = list(pool.map(lambda c: run_check(c, cfg), selected))
    else:
        reports = [run_check(c, cfg) for c in selected]
    return sorted(reports, key=lambda r: r.check_name)
