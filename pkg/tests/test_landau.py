import math

import numpy as np
import pytest

from poissonlab.errors import DomainError
from poissonlab.landau import (
    LandauParameters,
    deviation_profile_monotone,
    lambda_lower_bound,
    landau_radius,
    univalence_margin,
)

HARMONIC_UNIT = LandauParameters(0.0, 1.0)


def closed_form_r0(m2: float) -> float:
    # with m1 = 0 the margin equation is quadratic in x:
    # x(2-x)/(1-x)^2 = pi^2/(16 m2^2), root 1 - 1/sqrt(1 + c)
    c = math.pi ** 2 / (16.0 * m2 ** 2)
    return 1.0 - 1.0 / math.sqrt(1.0 + c)


class TestLandauParameters:
    def test_invalid_rejected(self):
        with pytest.raises(DomainError):
            LandauParameters(-0.1, 1.0)
        with pytest.raises(DomainError):
            LandauParameters(0.0, 0.0)


class TestUnivalenceMargin:
    def test_limit_at_zero(self):
        assert univalence_margin(1e-12, HARMONIC_UNIT) == pytest.approx(
            math.pi / 4, abs=1e-9)

    def test_diverges_at_one(self):
        assert univalence_margin(1 - 1e-9, LandauParameters(1.0, 1.0)) < -1e5

    def test_closed_form_root_is_zero(self):
        assert abs(univalence_margin(0.2135599, HARMONIC_UNIT)) < 1e-5
        assert abs(univalence_margin(closed_form_r0(1.0), HARMONIC_UNIT)) < 1e-14

    def test_strictly_decreasing_many_parameter_pairs(self):
        rng = np.random.default_rng(17)
        xs = np.linspace(1e-4, 1 - 1e-4, 1000)
        for _ in range(20):
            p = LandauParameters(float(2 * rng.random()), float(0.3 + 2 * rng.random()))
            vals = np.array([univalence_margin(x, p) for x in xs])
            assert np.all(np.diff(vals) < 0)

    def test_domain(self):
        with pytest.raises(DomainError):
            univalence_margin(0.0, HARMONIC_UNIT)
        with pytest.raises(DomainError):
            univalence_margin(1.0, HARMONIC_UNIT)


class TestLandauRadius:
    def test_harmonic_case_closed_form(self):
        out = landau_radius(HARMONIC_UNIT)
        assert out.r0 == pytest.approx(closed_form_r0(1.0), abs=1e-10)
        assert out.r0 == pytest.approx(0.213560899904617, abs=1e-9)
        assert out.R0 == pytest.approx(0.0838651692792961, abs=1e-9)
        assert out.phi_residual < 1e-10

    @pytest.mark.parametrize("m2", [0.5, 1.0, 2.0])
    def test_quadratic_formula_oracle(self, m2):
        out = landau_radius(LandauParameters(0.0, m2))
        assert out.r0 == pytest.approx(closed_form_r0(m2), abs=1e-10)

    def test_mixed_case(self):
        out = landau_radius(LandauParameters(1.0, 1.0))
        assert out.r0 == pytest.approx(0.0216, abs=1e-4)
        assert out.phi_residual < 1e-10

    def test_radius_shrinks_with_growing_m2(self):
        radii = [landau_radius(LandauParameters(0.0, m2)).r0 for m2 in (1.0, 2.0, 5.0, 20.0)]
        assert all(a > b for a, b in zip(radii, radii[1:]))

    def test_result_field_identities(self):
        p = LandauParameters(0.7, 1.3)
        out = landau_radius(p, rho_fraction=0.8)
        assert out.R0 == pytest.approx(
            (2 * p.m2 / math.pi) * out.r0 ** 2 * (2 - out.r0) / (1 - out.r0) ** 2, rel=1e-12)
        assert out.L2 == pytest.approx(
            (4 * p.m2 / math.pi) / (1 - out.r0 ** 2) + (2 / 3) * p.m1, rel=1e-12)
        assert out.rho == pytest.approx(0.8 * out.r0, rel=1e-12)
        assert out.L1 == pytest.approx(univalence_margin(out.rho, p), rel=1e-12)
        assert out.L1 > 0
        assert 0 < out.r0 < 1

    def test_residuals_for_random_parameters(self):
        rng = np.random.default_rng(23)
        for _ in range(20):
            p = LandauParameters(float(3 * rng.random()), float(0.2 + 2.8 * rng.random()))
            out = landau_radius(p)
            assert out.phi_residual < 1e-10
            assert deviation_profile_monotone(out.r0)

    def test_covered_radius_below_first_order_estimate(self):
        for p in (HARMONIC_UNIT, LandauParameters(1.0, 1.0), LandauParameters(0.5, 2.0)):
            out = landau_radius(p)
            assert out.R0 < out.r0 * lambda_lower_bound(p)


class TestDeviationProfiles:
    @pytest.mark.parametrize("r0", [0.2135599, 0.9, 0.05])
    def test_monotone(self, r0):
        assert deviation_profile_monotone(r0)

    def test_endpoint_is_maximum(self):
        # the x = 1 value of the first profile is the constant pulled out
        # of the covered-radius estimate
        r0 = 0.2135599
        xs = np.linspace(1e-3, 1.0, 1000)
        tau1 = (2 - r0 * xs) / (1 - r0 * xs) ** 2
        assert tau1[-1] == pytest.approx((2 - r0) / (1 - r0) ** 2, rel=1e-12)
        assert tau1.max() == tau1[-1]


class TestLambdaLowerBound:
    def test_harmonic_value(self):
        assert lambda_lower_bound(HARMONIC_UNIT) == pytest.approx(math.pi / 4, abs=1e-15)

    def test_mixed_value(self):
        assert lambda_lower_bound(LandauParameters(1.0, 1.0)) == pytest.approx(
            1 / (4 / math.pi + 2 / 3), abs=1e-14)
        assert lambda_lower_bound(LandauParameters(1.0, 1.0)) == pytest.approx(
            0.515488, abs=1e-5)

    def test_homogeneity(self):
        assert lambda_lower_bound(LandauParameters(2.0, 2.0)) == pytest.approx(
            lambda_lower_bound(LandauParameters(1.0, 1.0)) / 2, rel=1e-12)
