import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sylvester_witt import electroweak as ew

from .strategies import reals

KEYS = ("g_Y", "g_W", "g_Z", "g_e", "theta_w")
PAIRS = [(a, b) for i, a in enumerate(KEYS) for b in KEYS[i + 1:]]


def reference_triangle():
    return ew.triangle_from_masses(123.0, m_Z=91.2, m_e=38.2)


def test_reference_table():
    s = ew.mass_spectrum(reference_triangle(), 123.0)
    assert s.m_W == pytest.approx(80.2, abs=0.1)
    assert s.m_Y == pytest.approx(43.4, abs=0.1)
    assert s.m_Z == pytest.approx(91.2) and s.m_e == pytest.approx(38.2)
    rel = ew.weinberg_relations(s)
    assert rel["sin2theta"] == pytest.approx(0.838, abs=1e-3)
    assert rel["sin2theta"] == pytest.approx(2 * 38.2 / 91.2)
    assert 1 / rel["alpha_e"] == pytest.approx(130.3, abs=0.05)


def test_reference_couplings():
    t = ew.solve_triangle(g_Z=91.2 / 123, g_e=38.2 / 123)
    # independent closed form: g_Y, g_W = g_Z (sqrt(1 + s) -+ sqrt(1 - s)) / 2 with s = sin 2theta
    s = 2 * t.g_e / t.g_Z
    g_Y = t.g_Z * (math.sqrt(1 + s) - math.sqrt(1 - s)) / 2
    g_W = t.g_Z * (math.sqrt(1 + s) + math.sqrt(1 - s)) / 2
    assert t.g_Y == pytest.approx(g_Y, rel=1e-12)
    assert t.g_W == pytest.approx(g_W, rel=1e-12)
    assert t.g_Y == pytest.approx(0.3533, abs=5e-4)
    assert t.g_W == pytest.approx(0.6519, abs=5e-4)
    assert t.g_Y <= t.g_W


def test_coupling_tension_is_reported():
    s = ew.mass_spectrum(reference_triangle(), 123.0)
    t = ew.coupling_tension(s)
    assert t["m_e_from_alpha_nominal"] == pytest.approx(37.3, abs=0.05)
    assert 0.02 < t["mass_tension"] < 0.03
    assert 0.04 < t["alpha_tension"] < 0.06


def test_isoceles_case():
    t = ew.solve_triangle(theta_w=math.pi / 4, g_Z=1.0)
    assert t.g_Y == pytest.approx(1 / math.sqrt(2)) and t.g_W == pytest.approx(1 / math.sqrt(2))
    assert t.g_e == pytest.approx(0.5)
    s = ew.mass_spectrum(t, 1.0)
    assert ew.weinberg_relations(s)["sin2theta"] == pytest.approx(1.0)


def test_errors():
    with pytest.raises(ew.TriangleError):
        ew.solve_triangle(g_Z=1.0, g_e=0.6)
    with pytest.raises(ew.TriangleError):
        ew.solve_triangle(g_Z=1.0)
    with pytest.raises(ew.TriangleError):
        ew.solve_triangle(g_Z=-1.0, g_e=0.1)
    with pytest.raises(ew.TriangleError):
        ew.solve_triangle(g_Y=2.0, g_Z=1.0)
    with pytest.raises(ew.TriangleError):
        ew.solve_triangle(g_Y=0.1, g_e=0.2)
    with pytest.raises(ew.TriangleError):
        ew.solve_triangle(g_Z=1.0, g_e=0.3, g_Y=0.9)  # inconsistent third value
    with pytest.raises(ew.TriangleError):
        ew.solve_triangle(g_Q=1.0, g_Z=1.0)
    with pytest.raises(ew.TriangleError):
        ew.mass_spectrum(ew.solve_triangle(g_Z=1.0, theta_w=0.3), 0.0)
    with pytest.raises(ew.TriangleError):
        ew.triangle_from_masses(123.0, m_Q=1.0, m_Z=91.2)
    with pytest.raises(ew.TriangleError):
        ew.weinberg_relations(ew.MassSpectrum(1.0, 1.0, 1.0, 1.0, 0.6))


def test_complementary_branch():
    a = ew.solve_triangle(g_Z=1.0, g_e=0.3)
    b = ew.solve_triangle(g_Z=1.0, g_e=0.3, complementary=True)
    assert a.theta_w + b.theta_w == pytest.approx(math.pi / 2)
    assert (a.g_Y, a.g_W) == pytest.approx((b.g_W, b.g_Y))


# sin 2theta is stationary at pi/4, so (g_Z, g_e) only fixes theta to ~sqrt(eps) there
THETA_MAX = math.pi / 4 - 0.05


@st.composite
def triangles(draw):
    return ew.solve_triangle(g_Z=draw(reals(0.1, 3.0)), theta_w=draw(reals(0.05, THETA_MAX)))


@given(triangles(), st.sampled_from(PAIRS))
def test_round_trip(t, pair):
    a, b = pair
    r = ew.solve_triangle(**{a: getattr(t, a), b: getattr(t, b)})
    for k in KEYS:
        assert getattr(r, k) == pytest.approx(getattr(t, k), rel=1e-12)
    assert max(r.residuals().values()) < 1e-12


@given(triangles(), reals(0.1, 500), reals(0.1, 10))
def test_scale_covariance_and_identity_chain(t, M, a):
    s, sa = ew.mass_spectrum(t, M), ew.mass_spectrum(t, a * M)
    for k in ("m_Y", "m_W", "m_Z", "m_e"):
        assert getattr(sa, k) == pytest.approx(a * getattr(s, k), rel=1e-15)
    assert ew.weinberg_relations(s)["sin2theta"] == pytest.approx(t.sin2theta, rel=1e-12)
    assert t.sin2theta == pytest.approx(math.sin(2 * t.theta_w), rel=1e-12)


def test_unit_fermi_mass_gives_couplings():
    t = reference_triangle()
    s = ew.mass_spectrum(t, 1.0)
    assert (s.m_Y, s.m_W, s.m_Z, s.m_e) == (t.g_Y, t.g_W, t.g_Z, t.g_e)


def test_round_trip_conditioning_at_isoceles_point():
    t = ew.solve_triangle(g_Z=0.875, theta_w=math.pi / 4)
    r = ew.solve_triangle(g_Z=t.g_Z, g_e=t.g_e)
    assert r.g_Y == pytest.approx(t.g_Y, rel=1e-7)
    assert r.theta_w == pytest.approx(t.theta_w, rel=1e-7)
