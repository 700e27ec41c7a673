"""Table of sharp a3 bounds per degree, with the trigonometric form alongside.

    python3 scripts/bounds_table.py --n-max 40
"""

import argparse

from a3extremal.pencil import bounds, classical_bounds


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=30)
    args = ap.parse_args()
    print(f"{'N':>3} {'min case':>9} {'a3_min':>20} {'max case':>9} {'a3_max':>20} {'trig gap':>9}")
    for n in range(args.n_min, args.n_max + 1):
        b = bounds(n)
        lo, hi = classical_bounds(n)
        gap = max(abs(lo - b.a3_min), abs(hi - b.a3_max))
        print(f"{n:>3} {b.min_case.value:>9} {b.a3_min:>20.16f} {b.max_case.value:>9} {b.a3_max:>20.16f} {gap:>9.1e}")


if __name__ == "__main__":
    main()
