"""Rebuild the N = 3..6 extremizers by every route and show how far apart the routes land.

    python3 scripts/reproduce_examples.py
"""

import numpy as np

from a3extremal import extremizer
from a3extremal.cases import classify
from a3extremal.extremizer import ROUTES
from a3extremal.sine import certify_nonnegative

np.set_printoptions(precision=15, suppress=True, linewidth=120)


def main() -> None:
    for n in (3, 4, 5, 6):
        for want in ("max", "min"):
            case = classify(n, want)
            routes = [r for r in ROUTES if not (r == "closed" and case.uses_derivative_root)]
            for tau in ((0.0,) if n % 2 else (-1.0, 0.0, 1.0)):
                polys = {r: extremizer(n, want, tau, r) for r in routes}
                ref = polys["eigvec"]
                spread = max(np.abs(p.coeffs - ref.coeffs).max() for p in polys.values())
                cert = certify_nonnegative(ref)
                print(f"N={n} {want} {case.value} tau={tau:+.1f} a3={ref.a3:.15f} spread={spread:.1e} "
                      f"min Im={cert.min_value:.1e}")
                print("   ", ref.coeffs)


if __name__ == "__main__":
    main()
