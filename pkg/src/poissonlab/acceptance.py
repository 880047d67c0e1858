"""The verification suite behind `poissonlab verify-all`.

Each criterion is a function of a ToleranceProfile returning a
CriterionResult; thresholds are fixed here, profiles only choose
resolutions.  The suite re-measures every bound the package exposes:
sharpness of the value bound, the solver's representation and PDE
residual, the Green-potential magnitude, the derivative majorant, the
closed-form integrals, the univalence radius, the gradient bound, the
boundary quotient, the coefficient bound, the shrinking-image families,
and the bi-Lipschitz ratios.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad

from .bounds import (
    boundary_schwarz_lower,
    disk_inverse_distance_integral,
    disk_inverse_distance_upper,
    green_deriv_majorant,
    greens_magnitude_bound,
    log_sine_integral,
    radial_power_integral,
)
from .kernels import as_complex
from .landau import LandauParameters, landau_radius, univalence_margin, deviation_profile_monotone
from .potentials import BoundaryFunction, SourceFunction, green_potential, solve
from .profiles import FAST, ToleranceProfile
from .quadrature import TWO_PI, build_rules
from .testbed import GridSpec, bilipschitz_probe, boundary_quotient, builtin, landau_failure_demo, sweep


@dataclass
class CriterionResult:
    cid: str
    title: str
    passed: bool = True
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def check(self, ok: bool, label: str):
        if not ok:
            self.passed = False
            self.failures.append(label)

    def to_dict(self) -> dict:
        return {"criterion": self.cid, "title": self.title, "passed": self.passed,
                "failures": list(self.failures), "details": self.details}


def _rule(profile: ToleranceProfile):
    return build_rules(profile.radial_n, profile.angular_n, profile.rule_tol)[1]


def criterion_sharp_pair(profile: ToleranceProfile = FAST) -> CriterionResult:
    """Constant-source pair: potential value at 0 and value-bound margins."""
    res = CriterionResult("C01", "value bound is sharp for the constant-source pair")
    rule = _rule(profile)
    s = builtin("sharp-quadratic:1", profile)
    g0 = green_potential(s.g, 0j, rule)
    res.details["green_potential_at_0"] = [g0.real, g0.imag]
    res.check(abs(g0 - (-1.0)) < 1e-6, "G(0) within 1e-6 of -1")

    report = sweep(s, "1.1", GridSpec(10, 20, r_max=0.9), rule=rule, evaluator="pipeline")
    origin = np.argmin(np.abs(report.points))
    res.details["origin_margin"] = float(report.margin[origin])
    res.details["min_margin"] = report.min_margin
    res.check(abs(report.margin[origin]) < 1e-6, "margin at 0 within 1e-6 of 0")
    res.check(report.min_margin >= -1e-8, "all grid margins >= -1e-8")
    return res


def criterion_representation(profile: ToleranceProfile = FAST) -> CriterionResult:
    """Solve with unit source and constant trace; compare with the paraboloid."""
    res = CriterionResult("C02", "representation and PDE residual for the paraboloid")
    rule = _rule(profile)
    sol = solve(BoundaryFunction.constant(0.25, profile.boundary_samples),
                SourceFunction.constant(1.0), rule=rule)
    grid = GridSpec(20, 20, r_max=0.95)
    pts = grid.points()
    errs = np.array([abs(sol.value(z) - abs(z) ** 2 / 4.0) for z in pts])
    res.details["max_value_error"] = float(errs.max())
    res.check(errs.max() < 1e-6, "max |f - |z|^2/4| < 1e-6 on |z| <= 0.95")

    residuals = [sol.laplacian_residual(z, h=1e-3)
                 for z in (0j, 0.2 + 0.1j, -0.3j, 0.4, -0.25 + 0.35j)]
    res.details["max_laplacian_residual"] = float(max(residuals))
    res.check(max(residuals) < 1e-3, "5-point Laplacian residual < 1e-3")
    return res


def _random_sources(n: int, seed: int = 7):
    rng = np.random.default_rng(seed)
    sources = []
    for _ in range(n):
        coef = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))

        def g(w, coef=coef):
            w = np.asarray(w, dtype=complex)
            wb = np.conj(w)
            # Horner in conj(w) inside, then in w
            rows = [(coef[j, 2] * wb + coef[j, 1]) * wb + coef[j, 0] for j in range(3)]
            return (rows[2] * w + rows[1]) * w + rows[0]

        # sup over a dense closed-disk grid: the bound needs a sound norm
        rr = np.linspace(0.0, 1.0, 129)
        tt = TWO_PI * np.arange(512) / 512
        dense = np.multiply.outer(rr, np.exp(1j * tt)).ravel()
        sources.append(SourceFunction(g, sup_norm=float(np.max(np.abs(g(dense))))))
    return sources


def criterion_green_magnitude(profile: ToleranceProfile = FAST) -> CriterionResult:
    """Magnitude bound for the Green potential, with equality for the sharp pair."""
    res = CriterionResult("C03", "Green potential magnitude bound and its equality case")
    rule = _rule(profile)
    pts = GridSpec(20, 20, r_max=0.9, include_origin=False).points()
    worst = -math.inf
    for idx, g in enumerate(_random_sources(5)):
        norm = g.sup_norm_on(rule)
        for z in pts:
            excess = abs(green_potential(g, z, rule)) - greens_magnitude_bound(abs(z), norm)
            worst = max(worst, excess)
    res.details["max_excess_random"] = float(worst)
    res.check(worst <= 1e-8, "|G| <= bound + 1e-8 for 5 random sources at 400 points")

    sharp = builtin("sharp-quadratic:1", profile)
    gap = max(abs(abs(green_potential(sharp.g, z, rule)) - greens_magnitude_bound(abs(z), 4.0))
              for z in pts)
    res.details["max_equality_gap_sharp_pair"] = float(gap)
    res.check(gap < 1e-6, "equality within 1e-6 for the sharp pair")
    return res


def criterion_derivative_majorant(profile: ToleranceProfile = FAST) -> CriterionResult:
    """Limits, monotonicity, and the quadrature oracle for the derivative majorant."""
    res = CriterionResult("C04", "radial majorant of the potential derivative")
    near0 = 3.0 * green_deriv_majorant(1e-4, 1.0)
    near1 = 4.0 * green_deriv_majorant(0.999, 1.0)
    res.details["limit_at_0_scaled"] = near0
    res.details["limit_at_1_scaled"] = near1
    res.check(abs(near0 - 1.0) < 1e-6, "3 mu(1e-4) = 1 within 1e-6")
    res.check(abs(near1 - 1.0) < 1e-3, "4 mu(0.999) = 1 within 1e-3")

    xs = np.linspace(1e-3, 1 - 1e-3, 1000)
    vals = np.array([green_deriv_majorant(x, 1.0) for x in xs])
    res.check(bool(np.all(np.diff(vals) < 0)), "strictly decreasing on the 1000-point grid")
    res.check(bool(np.all(vals >= 0.25 - 1e-12) and np.all(vals <= 1 / 3 + 1e-12)),
              "values within [1/4, 1/3]")

    def series_integrand(r, x):
        return (1 - r * r) * (1 + (x * r) ** 2) / (1 - (x * r) ** 2) ** 3

    oracle, _ = quad(series_integrand, 0.0, 1.0, args=(0.5,), epsabs=1e-13, epsrel=1e-13)
    oracle *= 0.5 * (1 - 0.25)
    got = green_deriv_majorant(0.5, 1.0)
    res.details["mu_half"] = got
    res.details["mu_half_oracle"] = oracle
    res.check(abs(got - oracle) < 1e-8, "mu(0.5) matches the radial-series oracle within 1e-8")
    res.check(abs(got - 0.316015) < 1e-5, "mu(0.5) near 0.316015")
    return res


def brute_pair_integral(r: float) -> float:
    """Adaptive 2-d oracle for the disk integral of 1/(|w| |z - w|), |z| = r.

    Nested adaptive quadrature in polar coordinates about z; breakpoints
    are placed at the ray through the second singular point.
    """
    def ray_length(th):
        b = r * math.cos(th)
        return -b + math.sqrt(b * b + 1 - r * r)

    def outer(th):
        R = ray_length(th)
        inner, _ = quad(lambda rho: 1.0 / abs(r + rho * np.exp(1j * th)), 0.0, R,
                        points=[min(r, R)], limit=200, epsabs=1e-11, epsrel=1e-11)
        return inner

    val, _ = quad(outer, 0.0, TWO_PI, points=[math.pi], limit=400, epsabs=1e-9, epsrel=1e-9)
    return val


def criterion_closed_forms(profile: ToleranceProfile = FAST) -> CriterionResult:
    """Closed-form integrals against adaptive quadrature oracles."""
    res = CriterionResult("C05", "closed-form radial, log-sine, and pair integrals")
    for x in (0.1, 0.5, 0.9):
        for p in (1, 2, 3):
            oracle, _ = quad(lambda rr: 1.0 / (1 - (x * rr) ** 2) ** p, 0.0, 1.0,
                             epsabs=1e-13, epsrel=1e-13)
            got = radial_power_integral(x, p)
            res.check(abs(got - oracle) < 1e-8, f"radial power {p} at {x} within 1e-8")

    ls = log_sine_integral()
    res.details["log_sine"] = ls
    res.check(abs(ls + (math.pi / 2) * math.log(2)) < 1e-6,
              "log-sine integral = -(pi/2) log 2 within 1e-6")

    for r in (0.2, 0.5, 0.8):
        closed = disk_inverse_distance_integral(r)
        brute = brute_pair_integral(r)
        upper = disk_inverse_distance_upper(r)
        res.details[f"pair_integral_r{r:g}"] = {"closed": closed, "brute": brute, "upper": upper}
        res.check(abs(closed - brute) < 1e-4, f"pair integral at r={r} matches brute within 1e-4")
        res.check(closed <= upper, f"pair integral at r={r} below its log bound")
    grid_ok = all(disk_inverse_distance_integral(r) <= disk_inverse_distance_upper(r)
                  for r in np.linspace(0.01, 0.99, 100))
    res.check(grid_ok, "closed form below the log bound on a 100-point grid")
    return res


def criterion_landau(profile: ToleranceProfile = FAST) -> CriterionResult:
    """Univalence radius: closed-form case, residuals, monotonicity."""
    res = CriterionResult("C06", "univalence radius and covered-disk radius")
    p = LandauParameters(0.0, 1.0)
    out = landau_radius(p)
    r0_closed = 1.0 - 1.0 / math.sqrt(1.0 + math.pi ** 2 / 16.0)
    R0_closed = (2.0 / math.pi) * r0_closed ** 2 * (2 - r0_closed) / (1 - r0_closed) ** 2
    res.details["r0"] = out.r0
    res.details["r0_closed_form"] = r0_closed
    res.details["R0"] = out.R0
    res.check(abs(out.r0 - r0_closed) < 1e-9, "r0 matches the quadratic-formula root within 1e-9")
    res.check(abs(out.R0 - R0_closed) < 1e-6, "R0 matches the closed-form substitution within 1e-6")

    rng = np.random.default_rng(11)
    worst_resid = 0.0
    for _ in range(20):
        params = LandauParameters(float(3 * rng.random()), float(0.2 + 2.8 * rng.random()))
        result = landau_radius(params)
        worst_resid = max(worst_resid, result.phi_residual)
        xs = np.linspace(1e-3, 1 - 1e-3, 1000)
        vals = np.array([univalence_margin(x, params) for x in xs])
        res.check(bool(np.all(np.diff(vals) < 0)), f"margin strictly decreasing for {params}")
        res.check(deviation_profile_monotone(result.r0), f"deviation profiles monotone for {params}")
    res.details["worst_phi_residual"] = worst_resid
    res.check(worst_resid < 1e-10, "all 20 roots have |margin(r0)| < 1e-10")
    return res


def criterion_gradient_bound(profile: ToleranceProfile = FAST) -> CriterionResult:
    """Gradient bound: sharpness for the extremal family and margins elsewhere."""
    res = CriterionResult("C07", "gradient bound sharpness and margins")
    rule = _rule(profile)
    grid = GridSpec(12, 24, r_max=0.9)
    s = builtin("colonna-extremal:1:0:0", profile)
    report = sweep(s, "1.3", grid, rule=rule, evaluator="pipeline", slack=1e-6)
    scaled = report.measured * (1.0 - np.abs(report.points) ** 2)
    res.details["max_scaled_gradient"] = float(scaled.max())
    res.check(scaled.max() >= 4 / math.pi - 1e-3, "sharpness reached within 1e-3 somewhere")
    res.check(scaled.max() <= 4 / math.pi + 1e-6, "harmonic gradient never above 4/pi + 1e-6")

    worst = math.inf
    for name in ("sharp-quadratic:1", "radial-pinch:0.0125", "quadratic-shift:0.05"):
        mixed = sweep(builtin(name, profile), "1.3", grid, rule=rule,
                      evaluator="pipeline", slack=1e-6)
        worst = min(worst, mixed.min_margin)
        res.check(mixed.min_margin >= -1e-6, f"{name}: gradient margin >= -1e-6")
    res.details["min_mixed_margin"] = worst
    return res


def criterion_boundary_quotient(profile: ToleranceProfile = FAST) -> CriterionResult:
    """Boundary difference quotients against the lower bound."""
    res = CriterionResult("C08", "boundary difference quotients meet the lower bound")
    r_star = 1.0 - 2.0 ** (-14)
    for name in ("identity", "power:2"):
        s = builtin(name, profile)
        q = boundary_quotient(s, 1.0 + 0j, r_list=[r_star])
        res.details[f"quotient_{name}"] = q
        res.check(q > 2 / math.pi, f"{name}: quotient at r = 1 - 2^-14 exceeds 2/pi")

    pinch = builtin("radial-pinch:0.0125", profile)  # source norm exactly 0.1
    q = boundary_quotient(pinch, 1.0 + 0j)
    lower = boundary_schwarz_lower(pinch.g_norm)
    res.details["quotient_pinch"] = q
    res.details["lower_bound_pinch"] = lower
    res.check(q >= lower - 1e-3, "source-norm-0.1 scenario quotient >= 2/pi - 3(0.1)/4 - 1e-3")
    return res


def criterion_coefficient_bound(profile: ToleranceProfile = FAST) -> CriterionResult:
    """Coefficient pair norms of bounded harmonic maps stay below 4M/pi."""
    res = CriterionResult("C09", "coefficient bound for bounded harmonic maps")
    from .potentials import harmonic_coefficients

    worst = -math.inf
    for seed in range(10):
        s = builtin(f"random-harmonic:{seed}:8", profile)
        m = s.psi.sup_norm
        coeffs = harmonic_coefficients(s.psi, 128)
        excess = float(np.max(coeffs.pair_norms()) - 4.0 * m / math.pi)
        worst = max(worst, excess)
    res.details["max_excess"] = worst
    res.check(worst <= 1e-10, "|a_n| + |b_n| <= 4M/pi + 1e-10 for n <= 128, 10 scenarios")
    return res


def criterion_landau_failure(profile: ToleranceProfile = FAST) -> CriterionResult:
    """Stretch families: normalized at 0, images contain no uniform disk."""
    res = CriterionResult("C10", "no uniform covered disk for the stretch families")
    rows = landau_failure_demo(10)
    radii = [row["harmonic_inscribed_radius"] for row in rows]
    res.details["harmonic_radii"] = radii
    for row in rows:
        k = row["k"]
        res.check(abs(row["harmonic_jacobian0"] - 1.0) < 1e-10, f"harmonic k={k}: unit Jacobian")
        res.check(abs(row["poisson_jacobian0"] - 1.0) < 1e-10, f"poisson k={k}: unit Jacobian")
        res.check(row["harmonic_f0"] < 1e-12 and row["poisson_f0"] < 1e-12, f"k={k}: f(0) = 0")
        res.check(row["harmonic_inscribed_radius"] <= 1.0 / k + 0.05,
                  f"harmonic k={k}: inscribed radius <= 1/k + 0.05")
        res.check(row["poisson_laplacian_residual"] < 1e-6, f"poisson k={k}: source residual")
    res.check(bool(np.all(np.diff(radii) < 0)), "inscribed radii strictly decreasing in k")
    return res


def criterion_bilipschitz(profile: ToleranceProfile = FAST) -> CriterionResult:
    """Pair ratios inside the univalence disk against the two Lipschitz constants."""
    res = CriterionResult("C11", "bi-Lipschitz ratios inside the univalence disk")
    for name in ("identity", "quadratic-shift:0.05"):
        s = builtin(name, profile)
        params = LandauParameters(s.landau_m1, s.landau_m2)
        out = landau_radius(params, rho_fraction=0.9)
        lo, hi = bilipschitz_probe(s, out.r0, out.rho, n_pairs=profile.pair_count, seed=3)
        res.details[name] = {"r0": out.r0, "rho": out.rho, "L1": out.L1, "L2": out.L2,
                             "min_ratio": lo, "max_ratio": hi}
        res.check(lo >= out.L1 - 1e-6, f"{name}: min ratio >= L1 - 1e-6")
        res.check(hi <= out.L2 + 1e-6, f"{name}: max ratio <= L2 + 1e-6")
    return res


CRITERIA = {
    "C01": criterion_sharp_pair,
    "C02": criterion_representation,
    "C03": criterion_green_magnitude,
    "C04": criterion_derivative_majorant,
    "C05": criterion_closed_forms,
    "C06": criterion_landau,
    "C07": criterion_gradient_bound,
    "C08": criterion_boundary_quotient,
    "C09": criterion_coefficient_bound,
    "C10": criterion_landau_failure,
    "C11": criterion_bilipschitz,
}


def run_all(profile: ToleranceProfile = FAST):
    """Run every criterion in order; returns the list of results."""
    return [fn(profile) for fn in CRITERIA.values()]
