import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import log_cos_oracle, majorant_oracle, pair_integral_oracle, radial_power_oracle
from poissonlab.bounds import (
    BoundInputs,
    boundary_schwarz_lower,
    disk_inverse_distance_integral,
    disk_inverse_distance_upper,
    extension_deriv_deviation_bound,
    gradient_bound,
    green_deriv_deviation_bound,
    green_deriv_majorant,
    greens_magnitude_bound,
    log_sine_integral,
    radial_power_integral,
    schwarz_bound,
)
from poissonlab.errors import DomainError, HypothesisViolationError


class TestBoundInputs:
    def test_rejects_bad_values(self):
        with pytest.raises(DomainError):
            BoundInputs(-1.0, 0.0, 0.5)
        with pytest.raises(DomainError):
            BoundInputs(1.0, 0.0, 1.5)
        with pytest.raises(DomainError):
            BoundInputs(1.0, math.inf, 0.5)


class TestSchwarzBound:
    def test_center_is_source_term(self):
        assert schwarz_bound(BoundInputs(3.0, 2.0, 0.0)) == pytest.approx(0.5)

    def test_boundary_harmonic_case(self):
        # arctan 1 = pi/4
        assert schwarz_bound(BoundInputs(1.0, 0.0, 1.0)) == pytest.approx(1.0, abs=1e-14)

    def test_direct_arithmetic(self):
        val = schwarz_bound(BoundInputs(1.0, 4.0, 0.5))
        assert val == pytest.approx((4 / math.pi) * math.atan(0.5) + 0.75, abs=1e-14)
        assert val == pytest.approx(1.340334, abs=1e-6)

    @settings(max_examples=100, deadline=None)
    @given(st.floats(0.01, 10), st.floats(0, 10), st.floats(0, 10), st.floats(0, 1))
    def test_scaling_property(self, alpha, p, g, x):
        lhs = schwarz_bound(BoundInputs(alpha * p, alpha * g, x))
        rhs = alpha * schwarz_bound(BoundInputs(p, g, x))
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)


class TestDerivMajorant:
    def test_limit_at_zero(self):
        assert 3 * green_deriv_majorant(1e-4, 1.0) == pytest.approx(1.0, abs=1e-6)

    def test_limit_at_one(self):
        assert 4 * green_deriv_majorant(0.999, 1.0) == pytest.approx(1.0, abs=1e-3)

    def test_half_value_against_series_oracle(self):
        got = green_deriv_majorant(0.5, 1.0)
        assert got == pytest.approx(majorant_oracle(0.5), abs=1e-8)
        assert got == pytest.approx(0.31601529381209414, abs=1e-12)

    @pytest.mark.parametrize("x", [0.01, 0.1, 0.33, 0.7, 0.95])
    def test_matches_series_oracle(self, x):
        assert green_deriv_majorant(x, 2.0) == pytest.approx(majorant_oracle(x, 2.0), abs=1e-8)

    def test_taylor_branch_continuous(self):
        # the direct branch loses ~6 digits to cancellation at the seam
        below = green_deriv_majorant(1e-3 - 1e-12, 1.0)
        above = green_deriv_majorant(1e-3 + 1e-12, 1.0)
        assert below == pytest.approx(above, abs=1e-8)

    def test_monotone_decreasing_and_bounded(self):
        xs = np.linspace(1e-3, 1 - 1e-3, 1000)
        vals = np.array([green_deriv_majorant(x, 1.0) for x in xs])
        assert np.all(np.diff(vals) < 0)
        assert np.all(vals >= 0.25) and np.all(vals <= 1 / 3)

    def test_domain(self):
        with pytest.raises(DomainError):
            green_deriv_majorant(0.0, 1.0)
        with pytest.raises(DomainError):
            green_deriv_majorant(1.0, 1.0)


class TestGradientBound:
    def test_center_limit_form(self):
        assert gradient_bound(BoundInputs(1.0, 1.0, 0.0)) == pytest.approx(
            4 / math.pi + 2 / 3, abs=1e-14)

    def test_harmonic_part(self):
        assert gradient_bound(BoundInputs(1.0, 0.0, 0.5)) == pytest.approx(
            (4 / math.pi) / 0.75, abs=1e-14)

    def test_source_part(self):
        assert gradient_bound(BoundInputs(0.0, 1.0, 0.5)) == pytest.approx(
            2 * 0.31601529381209414, abs=1e-12)

    @settings(max_examples=100, deadline=None)
    @given(st.floats(0.01, 10), st.floats(0, 10), st.floats(0, 10), st.floats(0.001, 0.999))
    def test_scaling_property(self, alpha, p, g, x):
        lhs = gradient_bound(BoundInputs(alpha * p, alpha * g, x))
        rhs = alpha * gradient_bound(BoundInputs(p, g, x))
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)


class TestBoundaryLower:
    def test_harmonic_value(self):
        assert boundary_schwarz_lower(0.0) == pytest.approx(2 / math.pi, abs=1e-15)

    def test_threshold_raises(self):
        with pytest.raises(HypothesisViolationError):
            boundary_schwarz_lower(8 / (3 * math.pi))

    def test_direct_arithmetic(self):
        assert boundary_schwarz_lower(0.1) == pytest.approx(0.561620, abs=1e-6)
        assert boundary_schwarz_lower(0.1) > 0


class TestRadialPowerIntegral:
    def test_power_one_half(self):
        assert radial_power_integral(0.5, 1) == pytest.approx(math.log(3.0), abs=1e-14)

    def test_power_two_half(self):
        expected = math.log(3.0) / 2 + 1 / 1.5
        assert radial_power_integral(0.5, 2) == pytest.approx(expected, abs=1e-14)
        assert radial_power_integral(0.5, 2) == pytest.approx(1.215973, abs=1e-6)

    @pytest.mark.parametrize("x", [0.1, 0.5, 0.9])
    @pytest.mark.parametrize("power", [1, 2, 3])
    def test_against_adaptive_oracle(self, x, power):
        assert radial_power_integral(x, power) == pytest.approx(
            radial_power_oracle(x, power), abs=1e-8)

    def test_combination_matches_majorant_bracket(self):
        # the weighted combination collapses to the majorant's bracket / (4 x^2)
        x = 0.5
        x2 = x * x
        i1 = radial_power_integral(x, 1)
        i2 = radial_power_integral(x, 2)
        i3 = radial_power_integral(x, 3)
        combo = -i1 / x2 + (3 / x2 - 1) * i2 + 2 * (1 - 1 / x2) * i3
        bracket = ((1 + x2) / (1 - x2)
                   - ((1 - x2) / (2 * x)) * math.log((1 + x) / (1 - x))) / (4 * x2)
        assert combo == pytest.approx(bracket, abs=1e-12)
        assert combo == pytest.approx(0.842708, abs=1e-6)
        # times g (1-x^2)/2 this is the majorant itself
        assert 0.5 * (1 - x2) * combo == pytest.approx(green_deriv_majorant(x, 1.0), abs=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            radial_power_integral(0.0, 1)
        with pytest.raises(DomainError):
            radial_power_integral(0.5, 4)


class TestPairIntegral:
    @pytest.mark.parametrize("r", [0.2, 0.5, 0.8])
    def test_against_brute_oracle(self, r):
        assert disk_inverse_distance_integral(r) == pytest.approx(
            pair_integral_oracle(r), abs=1e-4)

    def test_upper_bound_value(self):
        assert disk_inverse_distance_upper(0.5) == pytest.approx(
            2 * math.pi * math.log(12.0), abs=1e-12)

    def test_never_exceeds_upper(self):
        for r in np.linspace(0.01, 0.99, 100):
            assert disk_inverse_distance_integral(r) <= disk_inverse_distance_upper(r)

    def test_domain(self):
        with pytest.raises(DomainError):
            disk_inverse_distance_integral(0.0)
        with pytest.raises(DomainError):
            disk_inverse_distance_upper(1.0)


class TestLogSineIntegral:
    def test_closed_form_value(self):
        assert log_sine_integral() == pytest.approx(-(math.pi / 2) * math.log(2), abs=1e-6)
        assert log_sine_integral() == pytest.approx(-1.088793, abs=1e-6)

    def test_cosine_variant_equal(self):
        assert log_sine_integral() == pytest.approx(log_cos_oracle(), abs=1e-6)

    def test_symmetric_split(self):
        # int_0^pi log sin = 2 * int_0^{pi/2} = -pi log 2
        assert 2 * log_sine_integral() == pytest.approx(-math.pi * math.log(2), abs=1e-6)


class TestMagnitudeAndDeviationBounds:
    def test_magnitude_examples(self):
        assert greens_magnitude_bound(0.0, 4.0) == pytest.approx(1.0)
        assert greens_magnitude_bound(1.0, 7.0) == 0.0
        assert greens_magnitude_bound(0.5, 1.0) == pytest.approx(0.1875)

    def test_green_deviation_examples(self):
        assert green_deriv_deviation_bound(0.0, 1.0) == 0.0
        assert green_deriv_deviation_bound(1e-9, 1.0) < 1e-7
        expected = (math.log(6.0) - math.log(0.5)) * 0.5 * 2.5
        assert green_deriv_deviation_bound(0.5, 1.0) == pytest.approx(expected, abs=1e-12)
        assert green_deriv_deviation_bound(0.5, 1.0) == pytest.approx(3.106134, abs=1e-6)

    def test_extension_deviation_examples(self):
        assert extension_deriv_deviation_bound(0.0, 1.0) == 0.0
        assert extension_deriv_deviation_bound(0.5, 1.0) == pytest.approx(
            12 / math.pi, abs=1e-12)

    def test_domains(self):
        with pytest.raises(DomainError):
            green_deriv_deviation_bound(1.0, 1.0)
        with pytest.raises(DomainError):
            extension_deriv_deviation_bound(-0.1, 1.0)
