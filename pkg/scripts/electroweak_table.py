"""Couplings and masses of the electroweak triangle from (m_Z, m_e, M).

Also prints the fine-structure value implied by m_e and the m_e implied by
alpha = 1/137, so the mismatch between the two inputs is visible.
"""
import argparse

from sylvester_witt import electroweak as ew


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mz", type=float, default=91.2)
    ap.add_argument("--me", type=float, default=38.2)
    ap.add_argument("--fermi-mass", type=float, default=123.0)
    args = ap.parse_args()
    for complementary in (False, True):
        tri = ew.triangle_from_masses(args.fermi_mass, complementary, m_Z=args.mz, m_e=args.me)
        s = ew.mass_spectrum(tri, args.fermi_mass)
        label = "theta_w > pi/4" if complementary else "theta_w <= pi/4"
        print(f"[{label}]")
        for k, v in tri.as_dict().items():
            print(f"  {k:8} {v:.6f}")
        for k, v in s.as_dict().items():
            print(f"  {k:8} {v:.3f} GeV")
    t = ew.coupling_tension(s)
    print(f"sin 2theta_w  {ew.weinberg_relations(s)['sin2theta']:.5f}")
    print(f"alpha_e       1/{t['inverse_alpha_e']:.2f}")
    print(f"m_e(1/137)    {t['m_e_from_alpha_nominal']:.3f} GeV  ({100 * t['mass_tension']:+.2f}% in m_e, "
          f"{100 * t['alpha_tension']:+.2f}% in alpha)")


if __name__ == "__main__":
    main()
