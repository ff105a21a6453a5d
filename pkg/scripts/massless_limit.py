"""Rate of the m -> 0 limit sqrt(m / 2q0) s(q, m) -> p_+(q).

Prints the spectral-norm error per mass and the fitted constant C in
error ~ C m / |q|, for a handful of random momenta.
"""
import argparse

import numpy as np

from sylvester_witt.checks import MASS_SEQUENCE, massless_limit_sequence


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--directions", type=int, default=5)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    masses = np.array(MASS_SEQUENCE)
    print("|q|      " + " ".join(f"m={m:<8.0e}" for m in masses) + "  C=err*|q|/m")
    for _ in range(args.directions):
        v = rng.normal(size=3)
        q = v / np.linalg.norm(v) * rng.uniform(0.5, 5.0)
        errs = np.array(massless_limit_sequence(q))
        C = errs * np.linalg.norm(q) / masses
        print(f"{np.linalg.norm(q):<8.3f} " + " ".join(f"{e:<10.2e}" for e in errs) + f"  {C[-1]:.4f}")


if __name__ == "__main__":
    main()
