"""Harmonic analysis for relativistic fields in the Sylvester and Witt bases.

Submodules:
    minkowski      metric forms, Pauli algebra, the SL(2,C) -> SO+(1,3) map
    transmutators  boosts, helicity projectors, Witt rotations, H(q)
    time_reps      U(1) and U(1,1) time representations, regularized deltas
    kernels        mode kernels of massive and massless field (anti)commutators
    electroweak    the coupling-constant triangle and its mass spectrum
    checks, cli    randomized verification and the ``sylwitt`` command
"""
from . import electroweak, kernels, minkowski, time_reps, transmutators
from .electroweak import TriangleError, mass_spectrum, solve_triangle, triangle_from_masses
from .minkowski import ETA, IOTA, Tolerance, vector_rep
from .time_reps import QuadratureError, regularized_delta
from .transmutators import (
    GaugeTriple,
    LightlikeMomentum,
    MassiveMomentum,
    SingularChart,
    lorentz_boost,
    sylvester_witt,
    weyl_boost,
)

__version__ = "0.1.0"
