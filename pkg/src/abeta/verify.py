"""Monte-Carlo verification of every implemented inequality.

Class members are built from finite atomic probability measures on the
unit circle: each measure generates a Caratheodory function through the
Herglotz representation, whose coefficients are transported to member
coefficients.  Positivity of the real part is exact by construction, so
any inequality violation beyond numerical slack falsifies the
implementation (or the inequality).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from . import bounds as _bounds
from .extremal import (
    DEFAULT_CONFIG,
    BetaParam,
    ExtremalEvalConfig,
    beta_value,
    eval_extremal,
    extremal_at_minus_one,
    extremal_coeff,
)
from .radii import (
    AreaFunctional,
    RadiusProblem,
    Variant,
    ZERO_POLYNOMIAL,
    hat_f,
    solve_radius,
)
from .series import DEFAULT_ORDER, TruncatedSeries, caratheodory_to_member

TWO_PI = 2.0 * math.pi

DEFAULT_SLACK = 1e-9


@dataclass(frozen=True)
class HerglotzMeasure:
    """Finite atomic probability measure on the unit circle."""

    weights: np.ndarray
    angles: np.ndarray

    def __post_init__(self) -> None:
        w = np.asarray(self.weights, dtype=float)
        t = np.asarray(self.angles, dtype=float) % TWO_PI
        if w.size == 0 or w.size != t.size:
            raise ValueError("need at least one atom and matching weight/angle counts")
        if np.any(w < 0) or abs(w.sum() - 1.0) > 1e-12:
            raise ValueError("weights must be nonnegative and sum to 1")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "angles", t)

    @classmethod
    def point_mass(cls, angle: float = 0.0) -> "HerglotzMeasure":
        """Single atom; at angle 0 it generates c_n = 2 for all n."""
        return cls(np.array([1.0]), np.array([float(angle)]))

    @classmethod
    def two_atom_pm(cls) -> "HerglotzMeasure":
        """Equal atoms at +-1, generating c_n = 1 + (-1)^n (c1=0, c2=2)."""
        return cls(np.array([0.5, 0.5]), np.array([0.0, math.pi]))


def sample_measure(num_atoms: int, seed: int) -> HerglotzMeasure:
    """Deterministic random measure: simplex-uniform weights, uniform angles."""
    if num_atoms < 1:
        raise ValueError(f"num_atoms must be >= 1, got {num_atoms}")
    rng = np.random.default_rng(seed)
    weights = rng.dirichlet(np.ones(num_atoms))
    angles = rng.uniform(0.0, TWO_PI, size=num_atoms)
    return HerglotzMeasure(weights, angles)


def measure_to_caratheodory(mu: HerglotzMeasure, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Caratheodory coefficients c_0 = 1, c_n = 2 sum_j w_j e^{i n theta_j}."""
    n = np.arange(1, order + 1)
    phases = np.exp(1j * np.outer(n, mu.angles))
    c = np.empty(order + 1, dtype=complex)
    c[0] = 1.0
    c[1:] = 2.0 * phases @ mu.weights
    return TruncatedSeries(c)


@dataclass(frozen=True)
class ClassMember:
    """A concrete class member, represented through its Caratheodory source.

    `a` stores the Taylor coefficients with a[k] = a_{k+1} (so a[0] = 1).
    """

    beta: BetaParam
    c: TruncatedSeries
    a: np.ndarray

    @classmethod
    def from_caratheodory(cls, c: TruncatedSeries, beta: "BetaParam | float") -> "ClassMember":
        bp = beta if isinstance(beta, BetaParam) else BetaParam(float(beta))
        return cls(beta=bp, c=c, a=caratheodory_to_member(c, bp))

    @classmethod
    def from_measure(
        cls, mu: HerglotzMeasure, beta: "BetaParam | float", order: int = DEFAULT_ORDER
    ) -> "ClassMember":
        return cls.from_caratheodory(measure_to_caratheodory(mu, order), beta)

    @classmethod
    def extremal(cls, beta: "BetaParam | float", order: int = DEFAULT_ORDER) -> "ClassMember":
        """The sharpness member: point mass at angle 0 (c_n = 2 for all n)."""
        return cls.from_measure(HerglotzMeasure.point_mass(), beta, order)

    @classmethod
    def identity(cls, beta: "BetaParam | float", order: int = DEFAULT_ORDER) -> "ClassMember":
        """f(z) = z, generated by p == 1."""
        c = np.zeros(order + 1, dtype=complex)
        c[0] = 1.0
        return cls.from_caratheodory(TruncatedSeries(c), beta)

    @property
    def order(self) -> int:
        return self.c.order

    @property
    def a2(self) -> complex:
        return complex(self.a[1])

    @property
    def a3(self) -> complex:
        return complex(self.a[2])

    def generator_real_part(self, z: complex) -> float:
        """Re(beta*f(z)/z + (1-beta)*f'(z)) = Re p(z), by truncated series."""
        return float(np.real(self.c.eval(z)))


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one inequality check: pass iff rhs - lhs >= -slack."""

    inequality_id: str
    lhs: float
    rhs: float
    witness: str
    slack: float = DEFAULT_SLACK

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    @property
    def passed(self) -> bool:
        return self.margin >= -self.slack


def _damping(r: float) -> float:
    # Fixed unit-bounded analytic factor (a real Blaschke-type factor),
    # used to exercise non-monomial Schwarz functions.
    return (r + 0.5) / (1.0 + 0.5 * r)


def _schwarz_factor(r: float, mode: str) -> float:
    if mode == "monomial":
        return 1.0
    if mode == "damped":
        return _damping(r)
    raise ValueError(f"unknown schwarz_mode {mode!r}")


def normalized_area(member: ClassMember, r: float) -> float:
    """S_r/pi = sum n |a_n|^2 r^{2n} from the member's own coefficients."""
    n = np.arange(1, member.a.size + 1, dtype=float)
    return float(np.sum(n * np.abs(member.a) ** 2 * (r * r) ** n))


def _coefficient_tail_bound(member: ClassMember, r: float, cfg: ExtremalEvalConfig) -> float:
    """Certified bound on sum_{n > order} |a_n| r^n via the sharp coefficients."""
    n0 = member.a.size + 1
    tail = extremal_coeff(n0, member.beta) * r ** n0 / (1.0 - r)
    if tail > max(cfg.tolerance, 1e-9):
        raise ValueError(
            f"truncation order {member.order} cannot certify the majorant at r = {r}"
        )
    return tail


def bohr_sum(
    member: ClassMember,
    r: float,
    m: int = 1,
    p: float = 1.0,
    F: AreaFunctional = ZERO_POLYNOMIAL,
    schwarz_mode: str = "monomial",
    cfg: ExtremalEvalConfig = DEFAULT_CONFIG,
) -> float:
    """Majorant |w_m(z)|^p + sum_{n>=2} |a_n| |w_n(z)| + F(S_r/pi) at |z| = r.

    Monomial mode uses w_n(z) = z^n (the sharpness configuration); damped
    mode multiplies each w_n by a fixed unit-bounded analytic factor.
    """
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r}")
    _coefficient_tail_bound(member, r, cfg)
    psi = _schwarz_factor(r, schwarz_mode)
    n = np.arange(2, member.a.size + 1, dtype=float)
    coeff_sum = float(np.sum(np.abs(member.a[1:]) * r ** n)) * psi
    lead = (r ** m * psi) ** p
    return lead + coeff_sum + F(normalized_area(member, r))


def rogosinski_sum(
    member: ClassMember,
    r: float,
    N: int,
    m: int = 1,
    p: float = 1.0,
    F: AreaFunctional = ZERO_POLYNOMIAL,
    schwarz_mode: str = "monomial",
    cfg: ExtremalEvalConfig = DEFAULT_CONFIG,
) -> float:
    """Majorant |f(w_m(z))|^p + sum_{n>=N} |a_n| |w_n(z)| + F(S_r/pi).

    |f(w_m(z))| is upper-bounded by the sharp growth estimate at r^m,
    which is the estimate the radius equations themselves rely on.
    """
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r}")
    _coefficient_tail_bound(member, r, cfg)
    psi = _schwarz_factor(r, schwarz_mode)
    n = np.arange(N, member.a.size + 1, dtype=float)
    coeff_sum = float(np.sum(np.abs(member.a[N - 1 :]) * r ** n)) * psi
    lead = eval_extremal(r ** m * psi, member.beta, cfg) ** p
    return lead + coeff_sum + F(normalized_area(member, r))


def check_bohr(
    member: ClassMember,
    problem: RadiusProblem,
    at: float,
    schwarz_mode: str = "monomial",
    slack: float = DEFAULT_SLACK,
) -> BoundReport:
    """Compare the problem's majorant at radius `at` against -f(-1).

    -f(-1) is the proven lower bound for the distance from the origin to
    the image boundary, which is exactly the level the majorant is
    guaranteed to stay below inside the radius.
    """
    if not 0.0 < at < 1.0:
        raise ValueError(f"at must lie in (0, 1), got {at}")
    cfg = problem.config
    if problem.variant is Variant.BOHR_SCHWARZ:
        lhs = bohr_sum(member, at, problem.m, problem.p, problem.F, schwarz_mode, cfg)
        tag = "bohr"
    else:
        lhs = rogosinski_sum(
            member, at, problem.N, problem.m, problem.p, problem.F, schwarz_mode, cfg
        )
        tag = "rogosinski"
    rhs = -extremal_at_minus_one(member.beta, cfg)
    return BoundReport(
        inequality_id=f"{tag}[beta={member.beta.value:g},m={problem.m},p={problem.p:g},N={problem.N}]",
        lhs=lhs,
        rhs=rhs,
        witness=f"r={at!r}, mode={schwarz_mode}",
        slack=slack,
    )


def check_coefficient_bounds(
    member: ClassMember, n_max: int, slack: float = DEFAULT_SLACK
) -> list[BoundReport]:
    """|a_n| against the sharp coefficient bound, one report per n in [2, n_max]."""
    if n_max > member.a.size:
        raise ValueError(f"n_max = {n_max} exceeds truncation order {member.order}")
    return [
        BoundReport(
            inequality_id=f"coeff[n={n}]",
            lhs=float(abs(member.a[n - 1])),
            rhs=extremal_coeff(n, member.beta),
            witness=f"beta={member.beta.value:g}",
            slack=slack,
        )
        for n in range(2, n_max + 1)
    ]


def check_fs_and_log_bounds(
    member: ClassMember,
    mu_grid: tuple[float, ...] = (-2.0, -1.0, 0.0, 0.5, 1.0, 2.0),
    slack: float = DEFAULT_SLACK,
) -> list[BoundReport]:
    """Fekete-Szego over the mu grid plus both logarithmic-difference ranges."""
    b = member.beta.value
    a2, a3 = member.a2, member.a3
    reports = [
        BoundReport(
            inequality_id=f"fekete_szego[mu={mu:g}]",
            lhs=abs(a3 - mu * a2 * a2),
            rhs=_bounds.fekete_szego_bound(mu, b),
            witness=f"beta={b:g}",
            slack=slack,
        )
        for mu in mu_grid
    ]
    gamma = _bounds.log_coeffs(a2, a3).moduli_difference
    lo, hi = _bounds.log_diff_bounds(b)
    reports.append(
        BoundReport("log_diff_upper", gamma, hi, f"beta={b:g}", slack)
    )
    reports.append(
        BoundReport("log_diff_lower", lo, gamma, f"beta={b:g}", slack)
    )
    inv = _bounds.inverse_log_coeffs(a2, a3).moduli_difference
    lo_i, hi_i = _bounds.inverse_log_diff_bounds(b)
    reports.append(
        BoundReport("inverse_log_diff_upper", inv, hi_i, f"beta={b:g}", slack)
    )
    reports.append(
        BoundReport("inverse_log_diff_lower", lo_i, inv, f"beta={b:g}", slack)
    )
    return reports


@dataclass(frozen=True)
class VerifyConfig:
    """Controls for a Monte-Carlo verification sweep."""

    samples: int = 1000
    atoms: int = 4
    seed: int = 0
    order: int = DEFAULT_ORDER
    slack: float = DEFAULT_SLACK
    n_max: int = 20
    mu_grid: tuple[float, ...] = (-2.0, -1.0, 0.0, 0.5, 1.0, 2.0)
    radius_offset: float = 1e-3
    rogosinski_N: int = 2

    def __post_init__(self) -> None:
        if self.samples < 0 or self.atoms < 1 or self.order < self.n_max:
            raise ValueError("invalid verification configuration")


@dataclass(frozen=True)
class InequalityRecord:
    """Worst observed margin for one inequality across a sweep."""

    inequality_id: str
    max_violation: float  # max over samples of lhs - rhs
    witness: str
    checks: int


@dataclass(frozen=True)
class SweepSummary:
    slack: float
    records: tuple[InequalityRecord, ...] = field(default=())

    @property
    def all_pass(self) -> bool:
        return all(rec.max_violation <= self.slack for rec in self.records)


def _merge(
    worst: dict[str, tuple[float, str, int]], reports: list[BoundReport]
) -> None:
    for rep in reports:
        violation = -rep.margin
        prev = worst.get(rep.inequality_id)
        if prev is None:
            worst[rep.inequality_id] = (violation, rep.witness, 1)
        else:
            best_v, best_w, count = prev
            if violation > best_v:
                best_v, best_w = violation, rep.witness
            worst[rep.inequality_id] = (best_v, best_w, count + 1)


def falsification_sweep(
    beta_grid: "tuple[float, ...] | list[float]",
    config: VerifyConfig = VerifyConfig(),
) -> SweepSummary:
    """Maximize lhs - rhs of every inequality over sampled members.

    Seeds are derived deterministically from (config.seed, grid index,
    sample index); records are merged in grid order, so identical inputs
    produce identical summaries.
    """
    worst: dict[str, tuple[float, str, int]] = {}
    for gi, beta in enumerate(beta_grid):
        bp = BetaParam(float(beta))
        bohr_root = solve_radius(
            RadiusProblem(Variant.BOHR_SCHWARZ, bp, m=1, p=1.0)
        ).root
        rog_root = solve_radius(
            RadiusProblem(Variant.BOHR_ROGOSINSKI, bp, m=1, p=1.0, N=config.rogosinski_N)
        ).root
        bohr_problem = RadiusProblem(Variant.BOHR_SCHWARZ, bp, m=1, p=1.0)
        rog_problem = RadiusProblem(
            Variant.BOHR_ROGOSINSKI, bp, m=1, p=1.0, N=config.rogosinski_N
        )
        at_bohr = bohr_root - config.radius_offset
        at_rog = rog_root - config.radius_offset
        for si in range(config.samples):
            seed = config.seed * 1_000_003 + gi * 100_003 + si
            mu = sample_measure(config.atoms, seed)
            member = ClassMember.from_measure(mu, bp, config.order)
            witness = f"beta={beta:g}, seed={seed}"
            reports = check_coefficient_bounds(member, config.n_max, config.slack)
            reports += check_fs_and_log_bounds(member, config.mu_grid, config.slack)
            if at_bohr > 0:
                reports.append(
                    check_bohr(member, bohr_problem, at_bohr, slack=config.slack)
                )
            if at_rog > 0:
                reports.append(
                    check_bohr(member, rog_problem, at_rog, slack=config.slack)
                )
            reports = [replace(r, witness=f"{r.witness}; {witness}") for r in reports]
            _merge(worst, reports)
    records = tuple(
        InequalityRecord(tag, v, w, n) for tag, (v, w, n) in worst.items()
    )
    return SweepSummary(slack=config.slack, records=records)
