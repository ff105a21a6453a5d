"""Scan the Witt <-> rest-frame kernel residual over x0 and the gauge parameter.

Rows: eps*sigma**2 / mu**2; columns: x0 q0.  Each cell is the worst residual
over random chart-regular directions.  The Feynman row (-1) is exact up to
rounding; elsewhere the residual grows only with the size of the dipole terms.
"""
import argparse

import numpy as np

from sylvester_witt import kernels as kn
from sylvester_witt.checks import random_lightlike
from sylvester_witt.transmutators import GaugeTriple


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--directions", type=int, default=50)
    ap.add_argument("--mu2", type=float, default=1.0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    qs = [random_lightlike(rng) for _ in range(args.directions)]
    phases = [0.1, 1.0, 10.0, 100.0]
    ratios = [-10.0, -2.0, -1.0, -0.5, 0.5, 2.0, 10.0]
    print("es/mu2  " + " ".join(f"X={X:<9g}" for X in phases))
    for r in ratios:
        g = GaugeTriple(args.mu2, r * args.mu2)
        cells = []
        for X in phases:
            cells.append(max(kn.witt_sylvester_residual(X / q.q0, q.q, g) for q in qs))
        print(f"{r:6.1f}  " + " ".join(f"{c:<11.2e}" for c in cells))


if __name__ == "__main__":
    main()
