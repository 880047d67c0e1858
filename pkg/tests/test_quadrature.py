import math

import numpy as np
import pytest

from poissonlab.errors import CenterOutsideDiskError, DomainError, QuadratureValidationError
from poissonlab.quadrature import (
    CircleRule,
    DiskRule,
    _validation_report,
    build_rules,
    gauss_log_rule,
    integrate_circle,
    integrate_disk,
    integrate_disk_singular,
)

TWO_PI = 2 * math.pi


class TestCircleRule:
    def test_weights_sum_to_two_pi(self):
        rule = CircleRule(37)
        assert rule.weight * rule.n_nodes == pytest.approx(TWO_PI, abs=1e-14)

    @pytest.mark.parametrize("k", [1, 3, 31, 63])
    def test_oscillation_annihilated(self, k):
        # e^{ikt} integrates to 0 exactly for 0 < |k| < n
        rule = CircleRule(64)
        val = integrate_circle(rule, lambda t: np.exp(1j * k * t))
        assert abs(val) < 1e-12

    def test_constant(self):
        rule = CircleRule(16)
        assert integrate_circle(rule, lambda t: np.ones_like(t)) == pytest.approx(TWO_PI)

    def test_harmonic_mean_value(self):
        # mean of log|1 - 0.5 e^{-it}| is the harmonic log|1 - 0.5 z| at 0
        rule = CircleRule(256)
        val = integrate_circle(rule, lambda t: np.log(np.abs(1 - 0.5 * np.exp(-1j * t))))
        assert abs(val) < 1e-12


class TestGaussLogRule:
    def test_moments(self):
        # int_0^1 r^k r log(1/r) dr = 1/(k+2)^2
        r, w = gauss_log_rule(16)
        for k in range(10):
            assert np.sum(w * r**k) == pytest.approx(1.0 / (k + 2) ** 2, abs=1e-15)

    def test_nodes_interior(self):
        r, w = gauss_log_rule(96)
        assert np.all((r > 0) & (r < 1))
        assert np.all(w > 0)


class TestDiskRule:
    def test_area(self, disk_rule):
        val = integrate_disk(disk_rule, lambda w: np.ones_like(w, dtype=float))
        assert val.real == pytest.approx(math.pi, abs=1e-12)

    def test_second_moment(self, disk_rule):
        # polar integral 2 pi int r^3 dr = pi/2
        val = integrate_disk(disk_rule, lambda w: np.abs(w) ** 2)
        assert val.real == pytest.approx(math.pi / 2, abs=1e-12)

    def test_log_weight_probe(self, disk_rule):
        # int log(1/|w|) dA = 2 pi int r log(1/r) dr = pi/2
        val = integrate_disk(disk_rule, lambda w: np.log(1 / np.abs(w)))
        assert val.real == pytest.approx(math.pi / 2, abs=2e-8)

    def test_nodes_strictly_inside(self, disk_rule):
        pts, wts = disk_rule.disk_nodes()
        assert np.all(np.abs(pts) < 1)
        assert np.all(wts > 0)


class TestSingularRules:
    def test_inverse_distance_probe(self, disk_rule):
        # int dA/|w| = 2 pi
        val = integrate_disk_singular(disk_rule, lambda w: np.ones_like(w, dtype=float),
                                      0j, "inverse-distance")
        assert val.real == pytest.approx(TWO_PI, abs=1e-12)

    def test_green_log_probe(self, disk_rule):
        # int log(1/|w|) dA = pi/2, radial integral of r log(1/r) is 1/4
        val = integrate_disk_singular(disk_rule, lambda w: np.ones_like(w, dtype=float),
                                      0j, "green-log")
        assert val.real == pytest.approx(math.pi / 2, abs=1e-13)

    def test_green_log_off_center(self, disk_rule):
        # int |w|^2 log(1/|w - c|) dA solves a radial Poisson problem in c:
        # closed form (pi/8)(1 - |c|^4)
        c = 0.3 + 0.2j
        adapted = integrate_disk_singular(disk_rule, lambda w: np.abs(w) ** 2, c, "green-log")
        assert adapted.real == pytest.approx(math.pi / 8 * (1 - abs(c) ** 4), abs=1e-13)

    def test_folded_weights_match_plain_inverse_distance(self, disk_rule):
        # fold |w - c| into h: both routes then integrate the same smooth map
        c = 0.3
        smooth = lambda w: w**2 + 1.0
        folded = integrate_disk_singular(disk_rule, lambda w: smooth(w) * np.abs(w - c),
                                         c, "inverse-distance")
        plain = integrate_disk(disk_rule, smooth)
        assert abs(folded - plain) < 1e-10

    def test_folded_weights_match_plain_green_log(self, disk_rule):
        singular = integrate_disk_singular(disk_rule, lambda w: np.abs(w) ** 4, 0j, "green-log")
        plain = integrate_disk(disk_rule, lambda w: np.abs(w) ** 4 * np.log(1 / np.abs(w)))
        assert abs(singular - plain) < 1e-10
        assert singular.real == pytest.approx(math.pi / 18, abs=1e-13)

    def test_pair_integrand_by_two_center_partition(self, disk_rule):
        # 1/(|w| |z - w|) has two singular points; a smooth partition of
        # unity assigns each to its own adapted rule, and the sum matches
        # the closed form of the pair integral
        from poissonlab.bounds import disk_inverse_distance_integral

        z = 0.5

        def smoothstep(t):
            t = np.clip(t, 0.0, 1.0)
            with np.errstate(divide="ignore", over="ignore"):
                a = np.where(t > 0, np.exp(-1.0 / np.maximum(t, 1e-300)), 0.0)
                b = np.where(t < 1, np.exp(-1.0 / np.maximum(1.0 - t, 1e-300)), 0.0)
            return b / (a + b)

        lo, hi = 0.25 * z, 0.75 * z
        sigma = lambda w: smoothstep((np.abs(w) - lo) / (hi - lo))
        near_origin = integrate_disk_singular(
            disk_rule, lambda w: sigma(w) / np.abs(z - w), 0j, "inverse-distance")
        near_z = integrate_disk_singular(
            disk_rule, lambda w: (1 - sigma(w)) / np.abs(w), z, "inverse-distance")
        total = (near_origin + near_z).real
        assert total == pytest.approx(disk_inverse_distance_integral(z), abs=1e-4)

    def test_center_outside_disk(self, disk_rule):
        with pytest.raises(CenterOutsideDiskError):
            integrate_disk_singular(disk_rule, lambda w: np.ones_like(w), 1.0, "inverse-distance")

    def test_unknown_kind(self, disk_rule):
        with pytest.raises(DomainError):
            integrate_disk_singular(disk_rule, lambda w: np.ones_like(w), 0j, "cauchy")


class TestBuildRules:
    def test_default_passes(self):
        circle, disk = build_rules(96, 256, 1e-8)
        assert circle.n_nodes == 256
        assert disk.radial_n == 96

    def test_spec_sizes_pass(self):
        build_rules(64, 128, 1e-8)

    def test_coarse_rule_loose_tol(self):
        build_rules(4, 4, 1e-1)

    def test_coarse_rule_tight_tol_fails(self):
        with pytest.raises(QuadratureValidationError):
            build_rules(4, 4, 1e-12)

    def test_too_small_rejected(self):
        with pytest.raises(DomainError):
            build_rules(2, 4, 1e-2)

    def test_doubling_reduces_probe_error(self):
        # the log probe error falls monotonically with resolution
        errs = []
        for n_r, n_a in ((24, 64), (48, 128), (96, 256)):
            circle = CircleRule(n_a)
            disk = DiskRule.build(n_r, n_a)
            errs.append(_validation_report(circle, disk)["log_plain_mean"])
        assert errs[0] > errs[1] > errs[2]
        assert errs[2] < 1e-8
