"""Walk through the extremal function and its boundary value.

The class of generators with parameter beta has a single worst-case member
f(z) = z + sum 2/((1-beta)n + beta) z^n. Everything else in the library
(radii, area majorant, sharpness checks) is phrased against this function,
so this demo prints its basic profile for a few parameter values.
"""

import numpy as np

from abeta import (
    area_majorant,
    eval_extremal,
    extremal_at_minus_one,
    extremal_coeff,
    growth_envelope,
)


def main() -> None:
    print("extremal coefficients a_n = 2/(n - beta (n-1))")
    for beta in (0.0, 0.5, 0.9):
        row = ", ".join(f"{extremal_coeff(n, beta):.6f}" for n in range(2, 7))
        print(f"  beta={beta:.1f}:  n=2..6 -> {row}")

    print("\nvalues along the positive axis (certified truncation)")
    for beta in (0.0, 0.5):
        for r in (0.25, 0.5, 0.75):
            print(f"  f({r}) at beta={beta}: {eval_extremal(r, beta):.12f}")

    # beta = 0 has the closed form -r - 2 log(1 - r); eyeball agreement.
    r = 0.5
    print(f"  closed form at beta=0, r=0.5: {-r - 2 * np.log1p(-r):.12f}")

    print("\nboundary value f(-1), the distance constant in the radius work")
    for beta in (0.0, 0.25, 0.5, 0.75, 0.99):
        print(f"  beta={beta}: {extremal_at_minus_one(beta): .12f}")

    print("\ngrowth envelope and normalized area majorant at r = 0.6")
    for beta in (0.0, 0.5, 1.0):
        lo, hi = growth_envelope(0.6, beta)
        print(
            f"  beta={beta}: |f| range [{lo:.6f}, {hi:.6f}],"
            f" area <= {area_majorant(0.6, beta):.6f}"
        )


if __name__ == "__main__":
    main()
