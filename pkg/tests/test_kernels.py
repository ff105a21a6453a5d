import numpy as np
import pytest
import sympy as sp
from hypothesis import given

from sylvester_witt import finite_diff
from sylvester_witt import kernels as kn
from sylvester_witt.minkowski import ETA, PAULI
from sylvester_witt.transmutators import GaugeTriple, MassiveMomentum, SingularChart

from .strategies import gauge, lightlike, reals, vec3

ID2 = np.eye(2)
SWAP = np.array([[0, 1], [1, 0]])


# -- massive vector ------------------------------------------------------------

def test_massive_mode_examples():
    p = kn.MassiveVectorParams(1.0)
    q = [0, 0, 0.75]
    assert np.array_equal(kn.massive_vector_mode(0.0, p, q).spin, np.zeros((3, 3)))
    assert np.allclose(kn.massive_vector_mode(0.0, p, q, "fock").spin, np.eye(3))
    x0 = 0.9
    spin = kn.massive_vector_mode(x0, p, q).spin
    assert spin[1, 1] == pytest.approx(1j * np.sin(1.25 * x0))
    p2 = kn.MassiveVectorParams(2.0, 3.0)
    assert np.allclose(kn.massive_vector_mode(0.0, p2, q, "fock").spin, 6 * np.eye(3))


def test_massive_embedding_at_rest_and_orbit():
    p = kn.MassiveVectorParams(1.5)
    x0 = 0.4
    rest = kn.massive_vector_mode(x0, p, [0, 0, 0])
    assert np.allclose(rest.embedded[1:, 1:], rest.spin) and np.allclose(rest.embedded[0], 0)
    # fock at x0 = 0: m lam (-eta + q q / m^2), the spin-1 orbit
    q = np.array([0.3, -0.8, 1.1])
    mom = MassiveMomentum(1.5, q)
    emb = kn.massive_vector_mode(0.0, p, q, "fock").embedded
    assert np.allclose(emb, 1.5**2 * (-ETA.matrix + np.outer(mom.four, mom.four) / 1.5**2))


def test_massive_params():
    assert kn.MassiveVectorParams(2.0).lam == 2.0
    with pytest.raises(ValueError):
        kn.MassiveVectorParams(1.0, -1.0)
    with pytest.raises(ValueError):
        kn.MassiveVectorParams(0.0)


@given(reals(0.2, 5), vec3(3.0))
def test_massive_canonical_derivative(m, q):
    p = kn.MassiveVectorParams(m)
    q0 = MassiveMomentum(m, q).q0
    d = finite_diff.derivative(lambda x: kn.massive_vector_mode(x, p, q).spin, 0.0, 1)
    assert np.allclose(d, 1j * q0 * m * m * np.eye(3), rtol=1e-7, atol=1e-7)


def _fd_field_strengths(x0, p, q, variant="commutator"):
    """Independent construction of the derived blocks from C by finite differences."""
    C = lambda x: kn.massive_vector_mode(x, p, q, variant).embedded  # noqa: E731
    h = 1e-3
    c0, c1, c2 = C(x0), finite_diff.derivative(C, x0, 1, h), finite_diff.derivative(C, x0, 2, h)
    up = np.concatenate(([0.0], 1j * np.asarray(q)))
    dC = np.array([c1] + [up[a] * c0 for a in (1, 2, 3)])  # dC[u] = d^u C
    ddC = np.empty((4, 4, 4, 4), dtype=complex)
    for u in range(4):
        for v in range(4):
            if u == 0 and v == 0:
                ddC[u, v] = c2
            elif u == 0 or v == 0:
                ddC[u, v] = up[u + v] * c1
            else:
                ddC[u, v] = up[u] * up[v] * c0
    g2 = p.coupling2
    iG_Z = -1j * (np.einsum("lkj->klj", dC) - np.einsum("klj->klj", dC)) / g2
    Z_mG = -1j * (np.einsum("nkj->kjn", dC) - np.einsum("jkn->kjn", dC)) / g2
    G_G = -(
        np.einsum("nlkj->kljn", ddC) - np.einsum("jlkn->kljn", ddC)
        - np.einsum("nklj->kljn", ddC) + np.einsum("jkln->kljn", ddC)
    ) / g2**2
    return {"iG_Z": iG_Z, "Z_Z": c0, "G_G": G_G, "Z_mG": Z_mG}


@pytest.mark.parametrize("seed", range(5))
def test_derived_blocks_match_finite_differences(seed):
    rng = np.random.default_rng(seed)
    p = kn.MassiveVectorParams(rng.uniform(0.5, 2), rng.uniform(0.5, 2))
    q = rng.normal(size=3)
    x0 = rng.uniform(-3, 3)
    got = kn.massive_vector_derived_blocks(x0, p, q)
    ref = _fd_field_strengths(x0, p, q)
    for key in ref:
        scale = max(1.0, np.abs(ref[key]).max())
        assert np.abs(got[key] - ref[key]).max() < 1e-7 * scale, key


def test_derived_blocks_equal_time_at_rest():
    m = 1.7
    p = kn.MassiveVectorParams(m)
    b = kn.massive_vector_derived_blocks(0.0, p, [0, 0, 0])
    assert np.allclose(b["Z_Z"], 0) and np.allclose(b["G_G"], 0)
    canon = np.zeros((4, 4, 4), dtype=complex)
    for a in (1, 2, 3):
        canon[a, 0, a] = m  # [iG^{a0}, Z^a] = q0 = m
        canon[0, a, a] = -m
    assert np.allclose(b["iG_Z"], canon)
    mirrored = np.zeros((4, 4, 4), dtype=complex)
    for a in (1, 2, 3):
        mirrored[a, a, 0] = m  # [Z^a, -iG^{a0}]
        mirrored[a, 0, a] = -m
    assert np.allclose(b["Z_mG"], mirrored)


def test_derived_blocks_equal_time_moving_frame_has_mixed_terms():
    # the spatial gradient d^a -> i q^a acts on d/dx0 C at x0 = 0, so G_G need not vanish
    b = kn.massive_vector_derived_blocks(0.0, kn.MassiveVectorParams(1.0), [0.5, 0, 0])
    assert np.allclose(b["Z_Z"], 0)
    assert np.abs(b["G_G"]).max() > 0.1


# -- massless spinor ------------------------------------------------------------

def test_spinor_examples():
    assert np.allclose(kn.massless_spinor_mode(0.0, [0.3, 0.4, -1.0]), ID2)
    t = 0.7
    assert np.allclose(kn.massless_spinor_mode(t, [0, 0, 1]), np.diag([np.exp(1j * t), np.exp(-1j * t)]))
    assert np.allclose(
        kn.massless_spinor_mode(t, [0, 0, 1], "commutator"), np.diag([np.exp(1j * t), -np.exp(-1j * t)])
    )
    with pytest.raises(ValueError):
        kn.massless_spinor_mode(0.0, [0, 0, 0])
    with pytest.raises(ValueError):
        kn.massless_spinor_mode(0.0, [0, 0, 1], "bogus")


@given(vec3(5.0), reals(-5, 5))
def test_spinor_weyl_equation(q, x0):
    n = np.linalg.norm(q)
    if n < 1e-2:
        return
    sq = sum(a * s for a, s in zip(q, PAULI))
    for variant in ("anticommutator", "commutator"):
        f = lambda x: kn.massless_spinor_mode(x, q, variant)  # noqa: E731
        d = finite_diff.derivative(f, x0, 1)
        assert np.abs(d - 1j * sq @ f(x0)).max() < 1e-8 * max(1.0, n**2)


def test_spinor_anticommutator_is_matrix_exponential():
    from scipy.linalg import expm

    q = np.array([0.3, -1.1, 0.4])
    sq = sum(a * s for a, s in zip(q, PAULI))
    for x0 in (-2.0, 0.5, 3.3):
        assert np.allclose(kn.massless_spinor_mode(x0, q), expm(1j * x0 * sq))


# -- massless vector ---------------------------------------------------------------

def test_rest_mode_vanishes_at_zero_and_feynman_reduction():
    g = GaugeTriple(2.0, 0.7)
    q = np.array([0.3, 0.5, -0.4])
    assert np.array_equal(kn.massless_vector_rest_mode(0.0, q, g), np.zeros((4, 4)))
    f = GaugeTriple.feynman(2.0)
    x0 = 1.3
    X = x0 * np.linalg.norm(q)
    assert np.allclose(kn.massless_vector_rest_mode(x0, q, f), -2.0 * ETA.matrix * 1j * np.sin(X))


def _rest_display_symbolic(x0, q, mu2, es):
    q0 = sp.sqrt(sum(c**2 for c in q))
    X = x0 * q0
    w = mu2 + es
    eta = sp.diag(1, -1, -1, -1)
    dip = sp.zeros(4, 4)
    dip[0, 0] = sp.I * (X * sp.cos(X) + sp.sin(X))
    for a in range(3):
        dip[0, a + 1] = dip[a + 1, 0] = x0 * q[a] * sp.sin(X)
        for b in range(3):
            dip[a + 1, b + 1] = q[a] * q[b] / q0**2 * sp.I * (X * sp.cos(X) - sp.sin(X))
    return -mu2 * eta * sp.I * sp.sin(X) - w / 2 * dip


def test_rest_mode_derivative_sympy_oracle():
    x0, mu2, es = sp.symbols("x0 mu2 es", real=True)
    q = (sp.Rational(2), sp.Rational(3), sp.Rational(6))  # |q| = 7
    K = _rest_display_symbolic(x0, q, mu2, es)
    d00 = sp.diff(K[0, 0], x0).subs(x0, 0)
    assert sp.simplify(d00 - (-sp.I * 7 * (2 * mu2 + es))) == 0
    # the numeric kernel agrees with the symbolic display
    g = GaugeTriple(1.3, -0.4)
    vals = {x0: 0.8, mu2: 1.3, es: -0.4}
    ref = np.array(K.subs(vals).evalf(), dtype=complex)
    assert np.allclose(kn.massless_vector_rest_mode(0.8, [2, 3, 6], g), ref)
    h = 1e-3
    f = lambda x: kn.massless_vector_rest_mode(x, [2, 3, 6], g)[0, 0]  # noqa: E731
    fd = finite_diff.derivative(f, 0.0, 1, h)
    assert fd == pytest.approx(complex(d00.subs(vals)), rel=1e-8)


def test_witt_sylvester_identity_is_exact_symbolically():
    # H K_witt H^T - K_rest == 0 identically in (x0, mu2, es) for q = (2, 3, 6)
    x0, mu2, es = sp.symbols("x0 mu2 es", real=True)
    q1, q2, q3 = sp.Integer(2), sp.Integer(3), sp.Integer(6)
    q0 = sp.Integer(7)
    a, r = q0 + q3, 1 / sp.sqrt(2)
    H = sp.Matrix(
        [
            [q0 * r, 0, 0, -q0 * r],
            [q1 * r, q0 - q1**2 / a, -q1 * q2 / a, q1 * r],
            [q2 * r, -q1 * q2 / a, q0 - q2**2 / a, q2 * r],
            [q3 * r, -q1, -q2, q3 * r],
        ]
    ) / q0
    X = x0 * q0
    inv_M0 = -(mu2 + es) / mu2
    N0 = (3 * mu2 + es) / mu2
    K = sp.zeros(4, 4)
    K[1, 1] = K[2, 2] = mu2 * sp.I * sp.sin(X)
    K[0, 0] = mu2 / 2 * sp.I * X * inv_M0 * sp.exp(-sp.I * X)
    K[3, 3] = mu2 / 2 * sp.I * X * inv_M0 * sp.exp(sp.I * X)
    K[0, 3] = K[3, 0] = mu2 / 2 * N0 * sp.I * sp.sin(X)
    diff = (H * K * H.T - _rest_display_symbolic(x0, (q1, q2, q3), mu2, es)).applyfunc(
        lambda e: sp.simplify(sp.expand(e.rewrite(sp.exp)))
    )
    assert diff == sp.zeros(4, 4)


@given(reals(-10, 10), lightlike(), gauge())
def test_witt_sylvester_residual_random(x0, q, g):
    assert kn.witt_sylvester_residual(x0, q.q, g) < 1e-9


@given(reals(-10, 10), lightlike(), reals(0.1, 10))
def test_witt_sylvester_residual_feynman(x0, q, mu2):
    assert kn.witt_sylvester_residual(x0, q.q, GaugeTriple.feynman(mu2)) < 1e-12


def test_witt_sylvester_residual_edge_cases():
    g = GaugeTriple(1.0, 2.0)
    assert kn.witt_sylvester_residual(0.0, [0.3, 0.1, 0.2], g) == 0.0
    with pytest.raises(SingularChart):
        kn.witt_sylvester_residual(1.0, [0, 0, -1], g)


def test_witt_blocks_examples():
    g = GaugeTriple(2.0, 0.5)
    t, l = kn.massless_vector_witt_blocks(0.0, 1.0, g)
    assert np.array_equal(t, 0 * t) and np.array_equal(l, 0 * l)
    x0, q0 = 0.9, 1.4
    t, l = kn.massless_vector_witt_blocks(x0, q0, GaugeTriple.feynman(2.0))
    assert np.allclose(l, 2.0 * 1j * np.sin(x0 * q0) * SWAP)
    assert np.allclose(t, 2.0 * 1j * np.sin(x0 * q0) * ID2)
    assert np.allclose(kn.transverse_kernel(q0, g, "fock")(0.0), 2.0 * ID2)
    with pytest.raises(ValueError):
        kn.massless_vector_witt_blocks(1.0, 0.0, g)
    with pytest.raises(ValueError):
        kn.transverse_kernel(q0, g, "bogus")


@pytest.mark.parametrize("factor", [0.5, -0.5, 2.0, -2.0])
def test_transverse_block_is_gauge_independent(factor):
    mu2 = 1.7
    ref = kn.massless_vector_witt_blocks(1.1, 0.8, GaugeTriple(mu2, 0.3 * mu2))[0]
    blk = kn.massless_vector_witt_blocks(1.1, 0.8, GaugeTriple(mu2, factor * mu2))[0]
    assert np.array_equal(blk, ref)


@given(reals(-10, 10), lightlike(), gauge())
def test_antisymmetry(x0, q, g):
    rest = kn.massless_vector_rest_mode
    assert np.allclose(rest(-x0, -q.q, g), -rest(x0, q.q, g).T, atol=1e-12 * (1 + abs(x0 * q.q0)) * 20)
    light = lambda x: kn.massless_vector_witt_blocks(x, q.q0, g)[1]  # noqa: E731
    assert np.allclose(light(-x0), -SWAP @ light(x0) @ SWAP, atol=1e-12 * (1 + abs(x0 * q.q0)) * 20)
    p = kn.MassiveVectorParams(1.3)
    mm = kn.massive_vector_mode
    assert np.allclose(mm(-x0, p, q.q).embedded, -mm(x0, p, q.q).embedded)
    assert np.allclose(mm(-x0, p, q.q, "fock").spin, mm(x0, p, q.q, "fock").spin.T)
    assert np.allclose(kn.transverse_kernel(q.q0, g, "fock")(-x0), kn.transverse_kernel(q.q0, g, "fock")(x0))


def test_massive_parity():
    p = kn.MassiveVectorParams(1.3)
    q = np.array([0.4, -0.2, 0.9])
    P = np.diag([1.0, -1, -1, -1])
    a = kn.massive_vector_mode(0.7, p, -q).embedded
    assert np.allclose(a, P @ kn.massive_vector_mode(0.7, p, q).embedded @ P)


# -- classification -----------------------------------------------------------------

@pytest.mark.parametrize("mu2,es,q0", [(1.0, 0.5, 1.0), (5.2, 9.0, 0.9), (1.19, -9.19, 0.31), (0.4, 5.1, 2.8)])
def test_classification_generic(mu2, es, q0):
    g = GaugeTriple(mu2, es)
    light = kn.ode_order_check(kn.lightlike_kernel(q0, g), q0)
    assert light.tolist() == [["dipole", "pole"], ["pole", "dipole"]]
    trans = kn.ode_order_check(kn.transverse_kernel(q0, g), q0)
    assert trans.tolist() == [["pole", "zero"], ["zero", "pole"]]
    rest = kn.ode_order_check(kn.massless_vector_rest_kernel([0.6 * q0, 0, 0.8 * q0], g), q0)
    assert (rest == "dipole").any()


@pytest.mark.parametrize("mu2,q0", [(1.0, 1.0), (3.0, 0.3), (0.2, 4.0)])
def test_classification_feynman_point(mu2, q0):
    g = GaugeTriple.feynman(mu2)
    for k in (kn.lightlike_kernel(q0, g), kn.transverse_kernel(q0, g), kn.witt_kernel(q0, g)):
        assert not (kn.ode_order_check(k, q0) == "dipole").any()
    assert kn.ode_order_check(kn.lightlike_kernel(q0, g), q0).tolist() == [["zero", "pole"], ["pole", "zero"]]


def test_classification_massive_and_spinor():
    k = kn.massive_vector_kernel(kn.MassiveVectorParams(1.2), [0.3, 0.4, 0.5])
    labels = kn.ode_order_check(k, k.q0)
    assert (np.diag(labels) == "pole").all()
    assert (labels[~np.eye(3, dtype=bool)] == "zero").all()
    emb = kn.massive_vector_kernel(kn.MassiveVectorParams(1.2), [0.3, 0.4, 0.5], embedded=True)
    assert set(kn.ode_order_check(emb, emb.q0).ravel()) <= {"pole", "zero"}


def test_classification_rejects_other_frequencies():
    f = lambda x: np.array([[np.sin(2.0 * x)]])  # noqa: E731
    assert kn.ode_order_check(f, 1.0)[0, 0] == "unclassified"


def test_kernel_csv_contract():
    k = kn.massless_spinor_kernel([0, 0, 1])
    text = kn.kernel_csv(k, [0.0, 0.5])
    lines = text.splitlines()
    assert lines[0] == "x0,re_00,im_00,re_01,im_01,re_10,im_10,re_11,im_11"
    assert len(lines) == 3
    row = [float(v) for v in lines[2].split(",")]
    assert row[0] == 0.5 and row[1] == np.cos(0.5) and row[2] == np.sin(0.5)
    assert lines[1].split(",")[1] == "1"
