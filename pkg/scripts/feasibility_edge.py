#!/usr/bin/env python3
"""How tight is the recovery feasibility bound d <= n/m - 1/2?

For each (n, m) the largest feasible degree is d* = floor((2n - m) / (2m)).
Recovery is guaranteed up to d*; this script measures the vanishing
dimension at d* and just above it. A positive value at d* + 1 means maps of
that degree can vanish on all of W(m) without being zero, so no recovery
formula of any kind can exist there. Output is measured data.
"""

from skewcube.interpolation import vanishing_dimension


def main():
    print(f"{'n':>3} {'m':>3} {'d*':>4} {'vdim(d*)':>9} {'vdim(d*+1)':>11}")
    for m in (2, 4):
        for n in range(m, 13):
            d_star = (2 * n - m) // (2 * m)
            if d_star < 0:
                continue
            at = vanishing_dimension(n, m, d_star)
            above = vanishing_dimension(n, m, d_star + 1) if d_star + 1 <= n else None
            above_txt = "-" if above is None else str(above)
            print(f"{n:>3} {m:>3} {d_star:>4} {at:>9} {above_txt:>11}")


if __name__ == "__main__":
    main()
