"""Rectangular electroweak triangle.

Legs g_Y, g_W, hypotenuse g_Z, height g_e, angle theta_w:

    g_Y**2 + g_W**2 = g_Z**2,   g_Y g_W = g_Z g_e,   tan theta_w = g_Y / g_W.

Masses are couplings times the Fermi mass M (GeV/c**2); only m_Z and m_W
are particle masses.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "ALPHA_E_NOMINAL",
    "MassSpectrum",
    "TriangleCouplings",
    "TriangleError",
    "coupling_tension",
    "mass_spectrum",
    "solve_triangle",
    "triangle_from_masses",
    "weinberg_relations",
]

ALPHA_E_NOMINAL = 1.0 / 137.0
_KEYS = ("g_Y", "g_W", "g_Z", "g_e", "theta_w")


class TriangleError(ValueError):
    pass


@dataclass(frozen=True)
class TriangleCouplings:
    g_Y: float
    g_W: float
    g_Z: float
    g_e: float
    theta_w: float

    def __post_init__(self):
        for name in _KEYS[:4]:
            if not getattr(self, name) > 0:
                raise TriangleError(f"{name} must be positive")
        if not 0 < self.theta_w < math.pi / 2:
            raise TriangleError("theta_w must lie in (0, pi/2)")

    def residuals(self) -> dict[str, float]:
        """Relative violations of the three triangle relations."""
        z2 = self.g_Z**2
        return {
            "pythagoras": abs(self.g_Y**2 + self.g_W**2 - z2) / z2,
            "height": abs(self.g_Y * self.g_W - self.g_Z * self.g_e) / (self.g_Z * self.g_e),
            "angle": abs(math.tan(self.theta_w) - self.g_Y / self.g_W) / (self.g_Y / self.g_W),
        }

    @property
    def sin2theta(self) -> float:
        return 2 * self.g_e / self.g_Z

    def as_dict(self) -> dict[str, float]:
        return {k: getattr(self, k) for k in _KEYS}


@dataclass(frozen=True)
class MassSpectrum:
    fermi_mass: float
    m_Y: float
    m_W: float
    m_Z: float
    m_e: float

    def as_dict(self) -> dict[str, float]:
        return {"m_Y": self.m_Y, "m_W": self.m_W, "m_Z": self.m_Z, "m_e": self.m_e}


def _from_angle(g_Z: float, theta: float) -> TriangleCouplings:
    return TriangleCouplings(
        g_Y=g_Z * math.sin(theta),
        g_W=g_Z * math.cos(theta),
        g_Z=g_Z,
        g_e=g_Z * math.sin(theta) * math.cos(theta),
        theta_w=theta,
    )


def _from_legs(g_Y: float, g_W: float) -> TriangleCouplings:
    g_Z = math.hypot(g_Y, g_W)
    return TriangleCouplings(g_Y, g_W, g_Z, g_Y * g_W / g_Z, math.atan2(g_Y, g_W))


def _leg_from_height(leg: float, g_e: float) -> float:
    # leg * other = g_e * sqrt(leg**2 + other**2)
    if not leg > g_e:
        raise TriangleError("a leg must exceed the height g_e")
    return g_e * leg / math.sqrt(leg * leg - g_e * g_e)


def solve_triangle(complementary: bool = False, **known: float) -> TriangleCouplings:
    """Complete the triangle from any two independent quantities.

    Keys: g_Y, g_W, g_Z, g_e, theta_w.  When the knowns leave the angle
    ambiguous (g_Z with g_e) the branch theta_w <= pi/4 is taken unless
    ``complementary`` is set.  Extra knowns are checked for consistency.
    """
    unknown = set(known) - set(_KEYS)
    if unknown:
        raise TriangleError(f"unknown quantities {sorted(unknown)}")
    given = {k: float(v) for k, v in known.items() if v is not None}
    for k, v in given.items():
        if not v > 0:
            raise TriangleError(f"{k} must be positive, got {v}")
    if len(given) < 2:
        raise TriangleError(f"underdetermined: need two of {_KEYS}, got {sorted(given)}")

    pair = [k for k in _KEYS if k in given][:2]
    a, b = (given[k] for k in pair)
    match tuple(pair):
        case ("g_Y", "g_W"):
            tri = _from_legs(a, b)
        case ("g_Y", "g_Z") | ("g_W", "g_Z"):
            if not a < b:
                raise TriangleError("a leg must be shorter than the hypotenuse g_Z")
            other = math.sqrt(b * b - a * a)
            tri = _from_legs(a, other) if pair[0] == "g_Y" else _from_legs(other, a)
        case ("g_Y", "g_e"):
            tri = _from_legs(a, _leg_from_height(a, b))
        case ("g_W", "g_e"):
            tri = _from_legs(_leg_from_height(a, b), a)
        case ("g_Z", "g_e"):
            sin2 = 2 * b / a
            if sin2 > 1:
                raise TriangleError(f"inconsistent: 2 g_e / g_Z = {sin2:.6g} > 1")
            theta = 0.5 * math.asin(sin2)
            tri = _from_angle(a, math.pi / 2 - theta if complementary else theta)
        case (leg_or_hyp, "theta_w"):
            if not b < math.pi / 2:
                raise TriangleError("theta_w must lie in (0, pi/2)")
            scale = {
                "g_Y": 1 / math.sin(b),
                "g_W": 1 / math.cos(b),
                "g_Z": 1.0,
                "g_e": 1 / (math.sin(b) * math.cos(b)),
            }[leg_or_hyp]
            tri = _from_angle(a * scale, b)
        case _:  # pragma: no cover - pairs are ordered by _KEYS
            raise TriangleError(f"unsupported pair {pair}")

    for k, v in given.items():
        if not math.isclose(getattr(tri, k), v, rel_tol=1e-9):
            raise TriangleError(
                f"inconsistent: {k} = {v} but the pair {pair} implies {getattr(tri, k)}"
            )
    return tri


def mass_spectrum(c: TriangleCouplings, fermi_mass: float) -> MassSpectrum:
    if not fermi_mass > 0:
        raise TriangleError("Fermi mass must be positive")
    M = fermi_mass
    return MassSpectrum(M, c.g_Y * M, c.g_W * M, c.g_Z * M, c.g_e * M)


def triangle_from_masses(fermi_mass: float, complementary: bool = False, **masses: float):
    """solve_triangle with masses m_Y, m_W, m_Z, m_e (and/or theta_w)."""
    known = {}
    for k, v in masses.items():
        if v is None:
            continue
        if k == "theta_w":
            known[k] = v
        elif k.startswith("m_") and "g_" + k[2:] in _KEYS:
            known["g_" + k[2:]] = v / fermi_mass
        else:
            raise TriangleError(f"unknown mass {k}")
    return solve_triangle(complementary=complementary, **known)


def weinberg_relations(s: MassSpectrum) -> dict[str, float]:
    """sin 2theta_w = 2 m_e / m_Z and alpha_e = m_e**2 / (4 pi M**2)."""
    if 2 * s.m_e > s.m_Z * (1 + 1e-12):
        raise TriangleError("need 2 m_e <= m_Z")
    return {
        "sin2theta": 2 * s.m_e / s.m_Z,
        "alpha_e": s.m_e**2 / (4 * math.pi * s.fermi_mass**2),
    }


def coupling_tension(s: MassSpectrum, alpha_nominal: float = ALPHA_E_NOMINAL) -> dict[str, float]:
    """Compare m_e with the value implied by g_e**2 = 4 pi alpha_nominal.

    The quoted inputs (m_e = 38.2, M = 123) and alpha = 1/137 disagree at the
    few-percent level; both views are reported rather than reconciled.
    """
    alpha = weinberg_relations(s)["alpha_e"]
    m_e_nominal = math.sqrt(4 * math.pi * alpha_nominal) * s.fermi_mass
    return {
        "alpha_e": alpha,
        "inverse_alpha_e": 1 / alpha,
        "alpha_nominal": alpha_nominal,
        "m_e_from_alpha_nominal": m_e_nominal,
        "mass_tension": s.m_e / m_e_nominal - 1,
        "alpha_tension": alpha / alpha_nominal - 1,
    }
