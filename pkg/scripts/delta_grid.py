"""Error of the regularized delta / delta' integrals against their eps -> 0 limits.

For each (t, E) the three columns are the errors at eps = 1e-1, 1e-2, 1e-3;
the last column is the closed-form regularization error for order 1,
t (1 - exp(-eps t)) at eps = 1e-3, which the quadrature should match.
"""
import argparse
import time

import numpy as np

from sylvester_witt import time_reps as tr
from sylvester_witt.checks import DELTA_EPS


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--times", type=float, nargs="+", default=[0.0, 0.5, 1.0, 2.0, 3.0, 5.0])
    ap.add_argument("--energies", type=float, nargs="+", default=[-2.5, -1.0, 0.5, 1.0, 2.5])
    args = ap.parse_args()
    start = time.perf_counter()
    for order in (0, 1):
        print(f"order {order}")
        print(f"{'t':>5} {'E':>6}  " + "  ".join(f"eps={e:<7.0e}" for e in DELTA_EPS) + "   closed form")
        for t in args.times:
            for E in args.energies:
                if abs(t * E) > 5:
                    continue
                target = np.exp(1j * t * E) * (1 if order == 0 else -1j * t)
                errs = [abs(tr.regularized_delta(t, E, e, order) - target) for e in DELTA_EPS]
                eps = DELTA_EPS[-1]
                closed = (1 - np.exp(-eps * t)) * (1 if order == 0 else t)
                print(f"{t:5.1f} {E:6.2f}  " + "  ".join(f"{x:<11.3e}" for x in errs) + f"   {closed:.3e}")
    print(f"elapsed {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
