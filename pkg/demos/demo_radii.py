"""Solve the generalized Bohr and Bohr-Rogosinski radius equations.

Each radius is the unique root of a strictly increasing equation in r built
from the extremal function: a Schwarz power r^{pm}, the coefficient tail
f(r) - r, an optional polynomial of the normalized area, and the boundary
constant f(-1). This demo sweeps the knobs one at a time so the direction
of each effect is visible.
"""

from abeta import (
    AreaPolynomial,
    BetaParam,
    RadiusProblem,
    Variant,
    baseline_bohr_radius,
    solve_radius,
)


def main() -> None:
    print("baseline Bohr radius (m = 1, p = 1, no area term)")
    for beta in (0.0, 0.25, 0.5, 0.75):
        res = baseline_bohr_radius(beta, m=1)
        print(f"  beta={beta}: r = {res.root:.12f}  (residual {res.residual:.1e})")

    print("\nhigher Schwarz powers push the radius outward")
    for m in (1, 2, 3):
        root = solve_radius(
            RadiusProblem(Variant.BOHR_SCHWARZ, BetaParam(0.0), m=m, p=1.0)
        ).root
        print(f"  m={m}: r = {root:.12f}")
    for p in (1.0, 2.0, 4.0):
        root = solve_radius(
            RadiusProblem(Variant.BOHR_SCHWARZ, BetaParam(0.0), m=1, p=p)
        ).root
        print(f"  p={p}: r = {root:.12f}")

    print("\nadding an area penalty F(w) = 0.5 w shrinks it")
    for F in (AreaPolynomial(()), AreaPolynomial((0.5,)), AreaPolynomial((1.0,))):
        root = solve_radius(
            RadiusProblem(Variant.BOHR_SCHWARZ, BetaParam(0.0), m=1, p=1.0, F=F)
        ).root
        print(f"  lambdas={F.lambdas}: r = {root:.12f}")

    print("\nBohr-Rogosinski variant: radius grows with the section length N")
    for N in (1, 2, 3, 4):
        res = solve_radius(
            RadiusProblem(Variant.BOHR_ROGOSINSKI, BetaParam(0.0), m=1, p=1.0, N=N)
        )
        print(f"  N={N}: r = {res.root:.12f}  ({res.iterations} iterations)")


if __name__ == "__main__":
    main()
