"""Forward transform, closed-form catalog, and the identity/diagnostic suite."""

import numpy as np
import pytest

from qlaplace import (
    Cosine,
    DomainError,
    Exponential,
    Gaussian,
    Monomial,
    PowerSeriesTransform,
    QExponential,
    QParam,
    Sine,
    catalog_transform,
    convolution_check_classical,
    derivative_rule_check,
    forward_numeric,
    integral_rule_diagnostic,
    kernel_pair_integral,
    limit_identity_check,
    linearity_check,
    q_poly,
    qderivative_of_transform_check,
    qintegral_of_transform_check,
    scaling_check,
    shift_kernel_factor,
    translation_check,
)

Q5 = QParam(0.5)
Q1 = QParam(1.0)


class TestForwardNumeric:
    def test_power(self):
        # closed form Gamma(2)/(Q_2(1.5) * 1) = 1/3
        assert forward_numeric(Q5, Monomial(2), 1.0) == pytest.approx(1.0 / 3.0, rel=1e-10)

    def test_constant(self):
        # elementary antiderivative: 1/((2-q)s)
        assert forward_numeric(Q5, Monomial(1), 2.0) == pytest.approx(1.0 / 3.0, rel=1e-10)

    def test_classical_exponential(self):
        assert forward_numeric(Q1, Exponential(1.0, -1), 1.0) == pytest.approx(0.5, rel=1e-9)

    def test_requires_positive_s(self):
        with pytest.raises(DomainError):
            forward_numeric(Q5, Monomial(2), 0.0)

    def test_support_monotonicity(self):
        # anything past the kernel cutoff cannot contribute
        t_star = 1.0 / (Q5.eps * 1.0)

        def spiked(t):
            arr = np.asarray(t, dtype=float)
            return arr + np.where(arr > t_star, 1e6, 0.0)

        plain = forward_numeric(Q5, Monomial(2), 1.0)
        assert forward_numeric(Q5, spiked, 1.0) == pytest.approx(plain, rel=1e-12)

    def test_linearity(self):
        rep = linearity_check(QParam(0.7), Monomial(2), 2.0, Exponential(1.0, -1), -0.5, 1.5)
        assert rep.rel_err < 1e-9


class TestCatalogTransform:
    def test_monomial_coefficients(self):
        F = catalog_transform(Q5, Monomial(2))
        assert F.coeffs == pytest.approx([0.0, 1.0 / 3.0], rel=1e-15)
        assert F.s_min == 0.0

    def test_exponential_coefficients_two_routes(self):
        # printed form (1/Q_1) (alpha/(1-q))^n / ((3-2q)/(1-q))_n equals the
        # compact alpha^n / Q_{n+1}(2-q)
        F = catalog_transform(Q5, Exponential(1.0, 1), 6)
        expected = [1.0 / q_poly(1.5, n + 1) for n in range(6)]
        assert F.coeffs == pytest.approx(expected, rel=1e-13)

    def test_requires_deformed(self):
        with pytest.raises(DomainError):
            catalog_transform(Q1, Monomial(2))

    def test_truncation_bound_at_s_min(self):
        # |c_N s^-(N+1)| < 1e-12 |F(s)| at s >= s_min for a long expansion
        for f in (Exponential(0.8, 1), Gaussian(0.9), QExponential(QParam(0.7), 0.8, -1)):
            F = catalog_transform(QParam(0.6), f, 80)
            s = max(F.s_min, 0.5)
            n_last = max(n for n, c in enumerate(F.coeffs) if c != 0.0)
            tail = abs(F.coeffs[n_last]) * s ** -(n_last + 1)
            assert tail < 1e-12 * abs(F.value(s))

    def test_classical_limit_of_cosine(self):
        # quadrature at q -> 1 approaches the classical pair s/(s^2+a^2)
        s, alpha = 2.0, 1.0
        errs = []
        for qv in (0.99, 0.999, 0.9999):
            val = forward_numeric(QParam(qv), Cosine(alpha), s)
            errs.append(abs(val - s / (s**2 + alpha**2)) / (s / (s**2 + alpha**2)))
        assert errs[0] > errs[1] > errs[2]
        assert errs[2] < 1e-3

    def test_derivative_series_matches_log_domain(self):
        F = catalog_transform(QParam(0.6), Exponential(1.0, -1), 30)
        s = max(F.s_min, 1.0) * 1.5
        for k in (1, 2, 5):
            via_series = F.derivative_series(k).value(s)
            assert F.derivative_value(k, s) == pytest.approx(via_series, rel=1e-12)

    def test_empty_series_rejected(self):
        with pytest.raises(DomainError):
            PowerSeriesTransform((), 0.0, Q5)


class TestKernelPair:
    def test_known_values(self):
        assert kernel_pair_integral(Q5, 2.0, 1.0) == pytest.approx(2.0 / 3.0, rel=1e-8)
        assert kernel_pair_integral(Q1, 3.0, 1.0) == pytest.approx(0.5, rel=1e-8)
        assert kernel_pair_integral(QParam(0.9), 1.0, 0.5) == pytest.approx(
            1.0 / (1.1 * 0.5), rel=1e-8
        )

    def test_precondition(self):
        with pytest.raises(DomainError):
            kernel_pair_integral(Q5, 1.0, 2.0)
        with pytest.raises(DomainError):
            kernel_pair_integral(Q5, 1.0, 1.0)
        with pytest.raises(DomainError):
            kernel_pair_integral(Q5, 1.0, 0.0)


class TestLimitIdentities:
    def test_monomial_limit_to_zero(self):
        rep = limit_identity_check(Q5, Monomial(2), "I")
        assert rep.rhs == 0.0
        assert rep.errors[-1] < rep.errors[0]
        assert rep.errors[-1] < 1e-6

    def test_cosine_initial_value(self):
        for qv in (0.6, 1.0):
            rep = limit_identity_check(QParam(qv), Cosine(1.0), "I")
            assert rep.rhs == pytest.approx(1.0 / (2.0 - qv), rel=1e-15)
            assert rep.rel_err < 1e-6

    def test_classical_exponential(self):
        rep = limit_identity_check(Q1, Exponential(1.0, -1), "I")
        assert rep.rhs == 1.0
        assert rep.rel_err < 1e-4  # O(1/s) approach to the initial value

    def test_final_value(self):
        rep = limit_identity_check(QParam(0.6), Exponential(1.0, -1), "II")
        assert rep.rhs == 0.0
        assert rep.errors[0] > rep.errors[-1]
        assert rep.errors[-1] < 1e-5

    def test_final_value_rejects_divergent(self):
        with pytest.raises(DomainError):
            limit_identity_check(Q5, Monomial(3), "II")
        with pytest.raises(DomainError):
            limit_identity_check(Q5, Cosine(1.0), "II")

    def test_bad_which(self):
        with pytest.raises(DomainError):
            limit_identity_check(Q5, Monomial(2), "III")


class TestScaling:
    def test_identity_at_unit_scale(self):
        rep = scaling_check(QParam(0.7), Gaussian(1.0), 1.0, 1.5)
        assert rep.rel_err < 1e-12

    def test_power(self):
        rep = scaling_check(Q5, Monomial(2), 2.0, 1.0)
        assert rep.lhs == pytest.approx(2.0 / 3.0, rel=1e-9)
        assert rep.rel_err < 1e-9

    def test_classical(self):
        rep = scaling_check(Q1, Exponential(1.0, -1), 3.0, 1.0)
        assert rep.lhs == pytest.approx(0.25, rel=1e-9)
        assert rep.rel_err < 1e-9


class TestShiftKernel:
    def test_zero_shift(self):
        rep = shift_kernel_factor(Q5, 2.0, 0.0, 0.3)
        assert rep.rel_err < 1e-15

    def test_known_point(self):
        rep = shift_kernel_factor(Q5, 2.0, 1.0, 0.2)
        assert rep.lhs == pytest.approx(0.81, rel=1e-14)
        assert rep.rel_err < 1e-14

    def test_classical_additivity(self):
        rep = shift_kernel_factor(Q1, 2.0, 0.7, 1.3)
        assert rep.rel_err < 1e-14

    def test_cutoff_rejected(self):
        with pytest.raises(DomainError):
            shift_kernel_factor(Q5, 2.0, 1.0, 5.0)


class TestTranslation:
    def test_small_delay_ratio_near_one(self):
        rep = translation_check(Q5, Monomial(2), 1e-4, 1.0)
        assert rep.ratio_proof == pytest.approx(1.0, abs=1e-3)

    def test_classical_delay(self):
        rep = translation_check(Q1, Exponential(1.0, -1), 1.0, 1.0)
        assert rep.ratio_proof == pytest.approx(1.0, rel=1e-8)

    def test_deformed_diagnostic(self):
        rep = translation_check(Q5, Monomial(2), 0.1, 1.0)
        # the proof-form factor reproduces the integral; the stated form
        # (opposite kernel argument sign) visibly does not
        assert rep.ratio_proof == pytest.approx(1.0, rel=1e-8)
        assert abs(rep.ratio_stated - 1.0) > 0.1

    def test_delay_past_cutoff(self):
        with pytest.raises(DomainError):
            translation_check(Q5, Monomial(2), 3.0, 1.0)


class TestDerivativeRule:
    def test_first_derivative_of_power(self):
        rep = derivative_rule_check(QParam(0.8), Monomial(2), 1, 1.0)
        assert rep.lhs == pytest.approx(1.0 / 1.2, rel=1e-9)
        assert rep.rel_err < 1e-9

    def test_boundary_only(self):
        rep = derivative_rule_check(QParam(0.8), Monomial(1), 1, 1.0)
        assert rep.rel_err < 1e-9

    def test_classical_second_derivative(self):
        rep = derivative_rule_check(Q1, Sine(1.0), 2, 1.0)
        assert rep.lhs == pytest.approx(-0.5, rel=1e-8)
        assert rep.rel_err < 1e-8

    def test_degeneracy_rejected(self):
        with pytest.raises(DomainError):
            derivative_rule_check(QParam(0.4), Monomial(2), 1, 1.0)
        with pytest.raises(DomainError):
            derivative_rule_check(QParam(0.6), Monomial(2), 2, 1.0)


class TestQDerivativeOfTransform:
    def test_classical(self):
        rep = qderivative_of_transform_check(Q1, Exponential(1.0, -1), 1, 1.0)
        assert rep.rel_err < 1e-6

    def test_deformed_power(self):
        rep = qderivative_of_transform_check(Q5, Monomial(2), 1, 1.5)
        assert rep.rel_err < 1e-6

    def test_higher_order(self):
        rep = qderivative_of_transform_check(QParam(0.8), Monomial(1), 2, 1.2)
        assert rep.rel_err < 1e-6


class TestQIntegralOfTransform:
    def test_power_identity(self):
        rep = qintegral_of_transform_check(Q5, Monomial(3), 1.0)
        assert rep.lhs == pytest.approx(1.0 / 3.0, rel=1e-7)
        assert rep.rel_err < 1e-7

    def test_classical(self):
        rep = qintegral_of_transform_check(Q1, Monomial(2), 1.0)
        assert rep.lhs == pytest.approx(1.0, rel=1e-7)
        assert rep.rel_err < 1e-7

    def test_higher_power(self):
        # both sides Gamma(3)/(Q_3(1.1) * 8)
        rep = qintegral_of_transform_check(QParam(0.9), Monomial(4), 2.0)
        expected = 2.0 / (q_poly(1.1, 3) * 8.0)
        assert rep.lhs == pytest.approx(expected, rel=1e-7)
        assert rep.rel_err < 1e-7

    def test_strict_equality_for_powers(self):
        for m in (2, 3, 4, 5):
            for qv in (0.3, 0.6, 0.9):
                rep = qintegral_of_transform_check(QParam(qv), Monomial(m), 1.3)
                assert rep.rel_err < 1e-7, (m, qv)

    def test_divergent_rejected(self):
        with pytest.raises(DomainError):
            qintegral_of_transform_check(Q5, Monomial(1), 1.0)
        with pytest.raises(DomainError):
            qintegral_of_transform_check(Q5, Cosine(1.0), 1.0)


class TestIntegralRuleDiagnostic:
    def test_classical_ratio_one(self):
        rep = integral_rule_diagnostic(Q1, Monomial(2), [0.5, 1.0, 2.0])
        assert rep.ratio_mean == pytest.approx(1.0, rel=1e-8)
        assert rep.spread_rel < 1e-8

    def test_deformed_ratio_constant(self):
        # desk algebra on powers gives the s-independent ratio (2-q)^2
        for qv, m in ((0.5, 2), (0.9, 3)):
            rep = integral_rule_diagnostic(QParam(qv), Monomial(m), [0.5, 1.0, 2.0, 4.0])
            assert rep.spread_rel < 1e-6
            assert rep.ratio_mean == pytest.approx((2.0 - qv) ** 2, rel=1e-8)

    def test_non_power_rejected(self):
        with pytest.raises(DomainError):
            integral_rule_diagnostic(Q5, Gaussian(1.0), [1.0])


class TestConvolution:
    def test_constants(self):
        rep = convolution_check_classical(Monomial(1), Monomial(1), 1.0)
        assert rep.lhs == pytest.approx(1.0, rel=1e-8)
        assert rep.rel_err < 1e-8

    def test_exponential_with_constant(self):
        rep = convolution_check_classical(Exponential(1.0, -1), Monomial(1), 1.0)
        assert rep.lhs == pytest.approx(0.5, rel=1e-8)
        assert rep.rel_err < 1e-8

    def test_exponential_pair(self):
        rep = convolution_check_classical(Exponential(1.0, -1), Exponential(1.0, -1), 1.0)
        assert rep.lhs == pytest.approx(0.25, rel=1e-8)
        assert rep.rel_err < 1e-8
