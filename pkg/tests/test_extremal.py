import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abeta.extremal import (
    BetaDomainError,
    BetaParam,
    ExtremalEvalConfig,
    area_majorant,
    boundary_series_euler,
    eval_extremal,
    extremal_at_minus_one,
    extremal_coeff,
    growth_envelope,
)


def f_tilde_beta0(r: float) -> float:
    # Closed form at beta = 0: r + sum 2/n r^n = -r - 2 log(1 - r).
    return -r - 2.0 * math.log1p(-r)


class TestExtremalCoeff:
    def test_examples(self):
        assert extremal_coeff(2, 0.5) == pytest.approx(4.0 / 3.0, abs=1e-15)
        assert extremal_coeff(1, 0.7) == 1.0
        assert extremal_coeff(3, 1.0) == pytest.approx(2.0, abs=1e-15)

    def test_defining_identity_exact(self):
        for beta in (0.0, 0.3, 0.77, 1.0):
            for n in range(2, 50):
                assert extremal_coeff(n, beta) * (n - beta * (n - 1)) == pytest.approx(
                    2.0, abs=1e-13
                )

    def test_strictly_decreasing_for_beta_below_one(self):
        for beta in (0.0, 0.5, 0.99):
            vals = [extremal_coeff(n, beta) for n in range(2, 40)]
            assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_rejects_bad_index(self):
        with pytest.raises(ValueError):
            extremal_coeff(0, 0.5)


class TestEvalExtremal:
    def test_beta0_closed_form(self):
        assert eval_extremal(0.5, 0.0) == pytest.approx(f_tilde_beta0(0.5), abs=1e-9)
        assert eval_extremal(-0.5, 0.0) == pytest.approx(
            0.5 - 2.0 * math.log(1.5), abs=1e-9
        )

    def test_at_zero(self):
        for beta in (0.0, 0.4, 1.0):
            assert eval_extremal(0.0, beta) == 0.0

    @pytest.mark.parametrize("beta", [0.0, 0.25, 0.5])
    @pytest.mark.parametrize("r", [0.3, -0.3, 0.6, -0.6])
    def test_hypergeometric_representation(self, beta, r):
        # r * (-1 + 2 * 2F1(1, 1/(1-b); (2-b)/(1-b); r)) is the same function.
        with mpmath.workdps(30):
            hyp = mpmath.hyp2f1(1, 1 / (1 - beta), (2 - beta) / (1 - beta), r)
            expected = float(r * (-1 + 2 * hyp))
        assert eval_extremal(r, beta) == pytest.approx(expected, abs=1e-9)

    def test_truncation_certificate(self):
        # Tightening the tolerance (hence lengthening the series) moves
        # the value by less than the looser tolerance.
        loose = ExtremalEvalConfig(tolerance=1e-6)
        tight = ExtremalEvalConfig(tolerance=1e-13)
        for beta, r in [(0.0, 0.9), (0.6, -0.8), (1.0, 0.5)]:
            assert abs(
                eval_extremal(r, beta, loose) - eval_extremal(r, beta, tight)
            ) < 1e-6

    def test_monotone_and_dominates_r(self):
        for beta in (0.0, 0.5, 0.9):
            rs = np.linspace(0.0, 0.95, 40)
            vals = [eval_extremal(r, beta) for r in rs]
            assert all(b > a for a, b in zip(vals, vals[1:]))
            assert all(v >= r for v, r in zip(vals, rs))
            assert all(-eval_extremal(-r, beta) <= r + 1e-12 for r in rs)

    def test_rejects_out_of_disk(self):
        with pytest.raises(ValueError):
            eval_extremal(1.0, 0.0)


class TestBoundaryValue:
    def test_beta0(self):
        assert extremal_at_minus_one(0.0) == pytest.approx(1 - 2 * math.log(2), abs=1e-9)

    def test_beta_half_analytic(self):
        # Substituting t = u^2 integrates to 2(3/2 - 2 log 2).
        assert extremal_at_minus_one(0.5) == pytest.approx(
            -(3.0 - 4.0 * math.log(2)), abs=1e-12
        )

    @pytest.mark.parametrize("beta", [0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.95])
    def test_euler_series_cross_check(self, beta):
        assert extremal_at_minus_one(beta) == pytest.approx(
            boundary_series_euler(beta), abs=1e-10
        )

    def test_negative_and_rejects_beta_one(self):
        for beta in (0.0, 0.5, 0.999):
            assert extremal_at_minus_one(beta) < 0
        with pytest.raises(BetaDomainError):
            extremal_at_minus_one(1.0)
        with pytest.raises(BetaDomainError):
            extremal_at_minus_one(BetaParam(1.0))

    def test_abel_boundary_consistency(self):
        # eval_extremal(-r) approaches f(-1) as r -> 1 (slow convergence,
        # loose tolerance).
        r = 1.0 - 1e-4
        for beta in (0.0, 0.5):
            assert eval_extremal(-r, beta) == pytest.approx(
                extremal_at_minus_one(beta), abs=1e-3
            )


class TestAreaMajorant:
    def test_beta0_closed_form(self):
        expected = -0.75 - 4.0 * math.log(0.75)
        assert area_majorant(0.5, 0.0) == pytest.approx(expected, abs=1e-9)

    def test_at_zero(self):
        for beta in (0.0, 0.5, 1.0):
            assert area_majorant(0.0, beta) == 0.0

    def test_beta1_geometric_closed_form(self):
        # beta = 1 terms are 4 n x^n: sum = 4 x/(1-x)^2, minus the n=1
        # correction 3x.
        x = 0.09
        expected = 4.0 * x / (1.0 - x) ** 2 - 3.0 * x
        assert area_majorant(0.3, 1.0) == pytest.approx(expected, abs=1e-12)

    def test_partial_sum_oracle(self):
        for beta, r in [(0.2, 0.4), (0.8, 0.6), (1.0, 0.5)]:
            n = np.arange(2, 4000, dtype=float)
            brute = r * r + float(
                np.sum(4 * n / ((1 - beta) * n + beta) ** 2 * (r * r) ** n)
            )
            assert area_majorant(r, beta) == pytest.approx(brute, abs=1e-10)

    def test_rejects_negative_radius(self):
        with pytest.raises(ValueError):
            area_majorant(-0.1, 0.0)


class TestGrowthEnvelope:
    def test_beta0_values(self):
        lower, upper = growth_envelope(0.5, 0.0)
        assert lower == pytest.approx(-(0.5 - 2.0 * math.log(1.5)), abs=1e-9)
        assert upper == pytest.approx(f_tilde_beta0(0.5), abs=1e-9)

    def test_degenerate_at_zero(self):
        assert growth_envelope(0.0, 0.3) == (0.0, 0.0)

    @given(
        r=st.floats(min_value=0.01, max_value=0.9),
        beta=st.floats(min_value=0.0, max_value=1.0),
    )
    @settings(max_examples=40, deadline=None)
    def test_ordered_and_nonnegative(self, r, beta):
        lower, upper = growth_envelope(r, beta)
        assert 0.0 < lower <= upper


class TestConfigValidation:
    def test_rejects_bad_tolerance(self):
        with pytest.raises(ValueError):
            ExtremalEvalConfig(tolerance=0.0)

    def test_rejects_small_max_terms(self):
        with pytest.raises(ValueError):
            ExtremalEvalConfig(max_terms=4)

    def test_beta_param_range(self):
        with pytest.raises(BetaDomainError):
            BetaParam(-0.1)
        with pytest.raises(BetaDomainError):
            BetaParam(1.1)
