"""Radius equations for the Bohr-type inequalities and their certified roots.

Both radius equations are strictly increasing on (0, 1), negative at 0+
and positive near 1, so each has a unique root.  The solver keeps a
sign-change bracket at all times (bisection with secant acceleration
inside the bracket) and reports the final bracket and residual.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

from .extremal import (
    DEFAULT_CONFIG,
    BetaParam,
    ExtremalEvalConfig,
    area_majorant,
    eval_extremal,
    extremal_at_minus_one,
    extremal_coeff,
)

# Never evaluate the equations at or beyond this point; the extremal
# series diverges as r -> 1 and the certified evaluation becomes
# prohibitively long first.
_UPPER_CAP = 1.0 - 1e-8

DEFAULT_TOL = 1e-10


class BracketError(RuntimeError):
    """No sign change found below the upper cap; signals an evaluation bug."""


class Variant(enum.Enum):
    BOHR_SCHWARZ = "bohr"
    BOHR_ROGOSINSKI = "rogosinski"


@dataclass(frozen=True)
class AreaPolynomial:
    """Monotone polynomial lambda_1 w + ... + lambda_k w^k with lambda_j >= 0.

    Nonnegative coefficients guarantee monotonicity and F(0) = 0, the
    contract the radius equations need.  An empty tuple is F == 0.
    """

    lambdas: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        lams = tuple(float(l) for l in self.lambdas)
        if any(l < 0 for l in lams):
            raise ValueError(f"all polynomial coefficients must be >= 0: {lams}")
        object.__setattr__(self, "lambdas", lams)

    @property
    def is_zero(self) -> bool:
        return all(l == 0.0 for l in self.lambdas)

    def __call__(self, w: float) -> float:
        acc = 0.0
        for lam in reversed(self.lambdas):
            acc = (acc + lam) * w
        return acc


ZERO_POLYNOMIAL = AreaPolynomial()

# Any monotone increasing map with F(0) = 0 is accepted in place of an
# AreaPolynomial; monotonicity of a caller-supplied function is the
# caller's obligation (spot-checked by monotone_spot_check).
AreaFunctional = Callable[[float], float]


def monotone_spot_check(F: AreaFunctional, grid_points: int = 32) -> bool:
    """Cheap sanity check that F(0) = 0 and F is nondecreasing on a grid."""
    if abs(F(0.0)) > 1e-14:
        return False
    ws = [4.0 * k / (grid_points - 1) for k in range(grid_points)]
    vals = [F(w) for w in ws]
    return all(v2 >= v1 for v1, v2 in zip(vals, vals[1:]))


@dataclass(frozen=True)
class RadiusProblem:
    """Specification of one radius equation.

    N is only meaningful for the Rogosinski variant (start index of the
    coefficient tail); it is carried but ignored for the plain Bohr
    equation.
    """

    variant: Variant
    beta: BetaParam
    m: int = 1
    p: float = 1.0
    N: int = 1
    F: AreaFunctional = ZERO_POLYNOMIAL
    config: ExtremalEvalConfig = field(default=DEFAULT_CONFIG)

    def __post_init__(self) -> None:
        beta = self.beta if isinstance(self.beta, BetaParam) else BetaParam(self.beta)
        beta.require_strict()
        object.__setattr__(self, "beta", beta)
        if self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m}")
        if not self.p > 0:
            raise ValueError(f"p must be positive, got {self.p}")
        if self.N < 1:
            raise ValueError(f"N must be a positive integer, got {self.N}")

    def equation(self, r: float) -> float:
        if self.variant is Variant.BOHR_SCHWARZ:
            return equation_bohr(self, r)
        return equation_rogosinski(self, r)


@dataclass(frozen=True)
class RootResult:
    """A certified root: bracket straddles the sign change, width <= tol."""

    root: float
    bracket: tuple[float, float]
    residual: float
    iterations: int


def hat_f(N: int, beta: "BetaParam | float", r: float) -> float:
    """Initial partial sum removed from the majorant in the Rogosinski sum.

    0 for N = 1, r for N = 2, and r + sum_{n=2}^{N-1} a_n r^n (extremal
    coefficients) for N >= 3.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if not 0.0 <= r < 1.0:
        raise ValueError(f"r must lie in [0, 1), got {r}")
    if N == 1:
        return 0.0
    total = r
    for n in range(2, N):
        total += extremal_coeff(n, beta) * r ** n
    return total


def equation_bohr(problem: RadiusProblem, r: float) -> float:
    """H(r) = r^{pm} + f(r) - r + F(area bound at r) + f(-1)."""
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r}")
    beta, cfg = problem.beta, problem.config
    return (
        r ** (problem.p * problem.m)
        + eval_extremal(r, beta, cfg)
        - r
        + problem.F(area_majorant(r, beta, cfg))
        + extremal_at_minus_one(beta, cfg)
    )


def equation_rogosinski(problem: RadiusProblem, r: float) -> float:
    """G(r) = f(r^m)^p + f(r) - hat_f(r) + F(area bound at r) + f(-1)."""
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r}")
    beta, cfg = problem.beta, problem.config
    return (
        eval_extremal(r ** problem.m, beta, cfg) ** problem.p
        + eval_extremal(r, beta, cfg)
        - hat_f(problem.N, beta, r)
        + problem.F(area_majorant(r, beta, cfg))
        + extremal_at_minus_one(beta, cfg)
    )


def solve_radius(problem: RadiusProblem, tol: float = DEFAULT_TOL) -> RootResult:
    """Unique root of the problem's equation in (0, 1), bracketed to tol.

    The initial bracket starts at lo = tol and expands hi toward 1 until
    a sign change appears; the equation diverges to +inf as r -> 1, so
    failure to bracket below the cap indicates an evaluation bug.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    eq = problem.equation

    lo = min(tol, 1e-6)
    flo = eq(lo)
    iterations = 1
    while flo >= 0.0:
        # Root below lo (possible only for extreme inputs); shrink.
        lo /= 16.0
        if lo < 1e-300:
            raise BracketError("equation is nonnegative arbitrarily close to 0")
        flo = eq(lo)
        iterations += 1

    hi = 0.5
    fhi = eq(hi)
    iterations += 1
    while fhi <= 0.0:
        if hi >= _UPPER_CAP:
            raise BracketError(
                f"no sign change found below {_UPPER_CAP}; equation stuck at {fhi}"
            )
        hi = min(1.0 - 0.5 * (1.0 - hi), _UPPER_CAP)
        fhi = eq(hi)
        iterations += 1

    # Bisection with secant acceleration, bracket maintained throughout.
    while hi - lo > tol:
        width = hi - lo
        mid = 0.5 * (lo + hi)
        x = mid
        if fhi != flo:
            secant = lo - flo * width / (fhi - flo)
            if lo + 0.01 * width < secant < hi - 0.01 * width:
                x = secant
        fx = eq(x)
        iterations += 1
        if fx == 0.0:
            lo, flo = x - 0.25 * tol, fx - 1e-300
            hi, fhi = x + 0.25 * tol, fx + 1e-300
            break
        if fx < 0.0:
            lo, flo = x, fx
        else:
            hi, fhi = x, fx
        # Guarantee geometric shrink even when secant steps cluster.
        if hi - lo > 0.75 * width:
            mid = 0.5 * (lo + hi)
            fmid = eq(mid)
            iterations += 1
            if fmid < 0.0:
                lo, flo = mid, fmid
            elif fmid > 0.0:
                hi, fhi = mid, fmid
            else:
                lo, hi = mid - 0.25 * tol, mid + 0.25 * tol
                break

    root = 0.5 * (lo + hi)
    return RootResult(
        root=root,
        bracket=(lo, hi),
        residual=eq(root),
        iterations=iterations,
    )


def baseline_bohr_radius(
    beta: "BetaParam | float", m: int, tol: float = DEFAULT_TOL
) -> RootResult:
    """Named baseline: root of r^m + f(r) - r + f(-1) = 0 (p = 1, F = 0)."""
    problem = RadiusProblem(
        variant=Variant.BOHR_SCHWARZ,
        beta=beta if isinstance(beta, BetaParam) else BetaParam(float(beta)),
        m=m,
        p=1.0,
        F=ZERO_POLYNOMIAL,
    )
    return solve_radius(problem, tol)
