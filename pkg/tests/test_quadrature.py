import math

import numpy as np
import pytest

import zetacorr as z
from zetacorr.quadrature import sinc_product

CFG = z.SeriesConfig(tolerance=1e-3)


class TestAdaptiveIntegrate:
    def test_constant(self):
        res = z.adaptive_integrate(lambda x: np.ones_like(x), 0.0, 1.0, 1e-12)
        assert res.value == pytest.approx(1.0, abs=1e-14)

    def test_sine_half_period(self):
        res = z.adaptive_integrate(np.sin, 0.0, math.pi, 1e-10)
        assert res.value == pytest.approx(2.0, abs=1e-10)
        assert res.error_estimate <= 1e-10

    def test_polynomial_exact_to_machine(self):
        coeffs = np.array([3.0, -2.0, 0.5, 1.25, -0.75])

        def poly(x):
            return sum(c * x**k for k, c in enumerate(coeffs))

        res = z.adaptive_integrate(poly, -1.0, 2.0, 1e-9)
        exact = sum(
            c * (2.0 ** (k + 1) - (-1.0) ** (k + 1)) / (k + 1)
            for k, c in enumerate(coeffs)
        )
        assert res.value == pytest.approx(exact, abs=1e-13)

    def test_error_estimate_honest_on_oscillation(self):
        res = z.adaptive_integrate(lambda x: np.sin(40.0 * x), 0.0, 5.0, 1e-10)
        exact = (1.0 - math.cos(200.0)) / 40.0
        assert abs(res.value - exact) <= max(res.error_estimate, 1e-12)

    def test_budget_error_carries_best(self):
        with pytest.raises(z.BudgetError) as err:
            z.adaptive_integrate(
                lambda x: np.sin(1000.0 * x), 0.0, 50.0, 1e-14, max_evals=500
            )
        assert err.value.best is not None

    def test_rejects_bad_interval(self):
        with pytest.raises(ValueError):
            z.adaptive_integrate(np.sin, 1.0, 1.0, 1e-8)


class TestSincProduct:
    def test_value_at_origin_is_one(self):
        assert sinc_product((1, 1, 2), np.array([0.0]))[0] == 1.0

    def test_taylor_guard_continuous(self):
        eps = 1e-4
        near = sinc_product((1, 1, 2), np.array([eps * 0.999, eps * 1.001]))
        assert near[0] == pytest.approx(near[1], rel=1e-9)

    def test_plain_region(self):
        w = np.array([0.7])
        expect = (math.sin(0.7) / 0.7) ** 2 * (math.sin(1.4) / 1.4)
        assert sinc_product((1, 1, 2), w)[0] == pytest.approx(expect, rel=1e-15)


class TestSincProductConstant:
    def test_balanced_matches_exact(self):
        tup = z.coefficient_tuple([1, 1, -1, -1])
        res = z.sinc_product_constant(tup, tol=1e-9)
        assert abs(res.value - 2.0 / 3.0) <= res.total_error
        assert res.total_error <= 1e-9

    def test_asymmetric_tuple_vs_trapezoid_oracle(self):
        tup = z.coefficient_tuple([1, 1, -2])
        res = z.sinc_product_constant(tup, tol=1e-8)
        # independent high-resolution trapezoid on [0, W] plus tail bound
        width = 4000.0
        w = np.linspace(0.0, width, 4_000_001)
        vals = sinc_product((1, 1, 2), w)
        step = w[1] - w[0]
        oracle = (2.0 / math.pi) * float(
            (vals[0] / 2 + vals[-1] / 2 + vals[1:-1].sum()) * step
        )
        tail = (2.0 / math.pi) / (2.0 * 2.0 * width**2)
        assert abs(res.value - oracle) <= 1e-6 + tail + res.total_error

    def test_permutation_and_negation_invariance_bitwise(self):
        base = z.sinc_product_constant(z.coefficient_tuple([1, 1, -2]), tol=1e-8)
        perm = z.sinc_product_constant(z.coefficient_tuple([-2, 1, 1]), tol=1e-8)
        flip = z.sinc_product_constant(z.coefficient_tuple([2, -1, -1]), tol=1e-8)
        assert base.value == perm.value == flip.value

    def test_rejects_short_tuples(self):
        with pytest.raises(z.DomainError):
            z.sinc_product_constant(
                z.tuples.CoefficientTuple(entries=(1, -1)), tol=1e-6
            )

    def test_wider_window_moves_less_than_tail(self):
        tup = z.coefficient_tuple([1, 2, -3])
        loose = z.sinc_product_constant(tup, tol=1e-6)
        tight = z.sinc_product_constant(tup, tol=1e-10)
        assert abs(loose.value - tight.value) <= loose.total_error


class TestWeightedProfileIntegral:
    def test_matches_fine_grid_oracle(self, mangoldt_medium, weight_default):
        # same series truncation on both sides; the quadrature differs
        tup = z.coefficient_tuple([1, 1, -2])
        shared = z.SeriesConfig(tolerance=1e-2)
        res = z.weighted_profile_integral(
            weight_default, tup, mangoldt_medium, shared, tol=1e-7
        )
        from zetacorr.series import kernel_profile_evaluator

        profile = kernel_profile_evaluator(tup, mangoldt_medium, shared)
        span = 34.0
        ts = np.linspace(0.0, span, 68_001)
        vals = weight_default.value(ts) * profile(ts)
        weights = np.full(ts.size, 2.0)
        weights[1::2] = 4.0
        weights[0] = weights[-1] = 1.0
        oracle = 2.0 * float((vals * weights).sum() * (ts[1] - ts[0]) / 3.0)
        assert res.value == pytest.approx(oracle, abs=1e-5)

    def test_matches_spectral_side_formula(self, mangoldt_medium, weight_default):
        # the weighted integral equals 2 sum_n w_n hhat(log n / 2 pi)
        tup = z.coefficient_tuple([1, 1, -1, -1])
        cfg = z.SeriesConfig(tolerance=1e-3)
        res = z.weighted_profile_integral(
            weight_default, tup, mangoldt_medium, cfg, tol=1e-7
        )
        from zetacorr.series import _truncated_view, choose_truncation

        n_cut = choose_truncation(float(tup.positive_sum), tup.m, mangoldt_medium, cfg)
        base_log, k = _truncated_view(mangoldt_medium, n_cut)
        log_n = k * base_log
        w = base_log**tup.m * np.exp(-float(tup.positive_sum) * log_n)
        other = 2.0 * math.fsum(
            (w * weight_default.hat(log_n / (2.0 * math.pi))).tolist()
        )
        assert res.value == pytest.approx(other, abs=5 * res.total_error + 1e-7)

    def test_window_tail_accounted(self, mangoldt_medium, weight_default):
        tup = z.coefficient_tuple([1, 1, -2])
        res = z.weighted_profile_integral(
            weight_default, tup, mangoldt_medium, CFG, tol=1e-6
        )
        assert res.tail_bound <= 1e-6 / 2
        assert res.value < 0.0  # the transform of this weight family is <= 0
