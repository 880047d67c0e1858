"""Built-in scenario families and the verification harness.

A Scenario bundles a source g, boundary data psi, an optional explicit
solution closure, and the norm constants the bounds need.  sweep()
measures a bound over a polar grid and reports per-point margins;
boundary_quotient, inscribed_disk_radius, bilipschitz_probe and
landau_failure_demo cover the boundary, covering and injectivity checks
that do not fit the grid pattern.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bounds import (
    BOUNDARY_LOWER_THRESHOLD,
    BoundInputs,
    boundary_schwarz_lower,
    gradient_bound,
    schwarz_bound,
)
from .errors import DomainError, HypothesisMismatchError, HypothesisViolationError, UnknownScenarioError
from .kernels import as_complex, wirtinger_numeric
from .potentials import BoundaryFunction, PoissonSolution, SourceFunction, solve
from .profiles import FAST, ToleranceProfile
from .quadrature import TWO_PI, DiskRule, build_rules

CHECK_IDS = ("1.1", "1.2", "1.3")

DEFAULT_SLACK = {"1.1": 1e-8, "1.2": 1e-3, "1.3": 1e-6}
DEFAULT_SHARP_TOL = {"1.1": 1e-3, "1.2": 5e-2, "1.3": 1e-3}

# liminf approximation: geometric radius ladder r = 1 - 2^-j
QUOTIENT_LADDER = tuple(1.0 - 2.0 ** (-j) for j in range(4, 15))

RADIAL_LIMIT_OFFSET = 1e-8


@dataclass
class Scenario:
    """A test case: source, boundary data, optional explicit solution, constants."""

    name: str
    psi: BoundaryFunction
    g: SourceFunction
    f_exact: object = None          # vectorized closure z -> f(z), or None
    g_norm: float = 0.0
    p_norm: float = 0.0
    f_norm: float | None = None     # sup |f| over the closed disk
    harmonic: bool = False
    maps_into_disk: bool = False
    univalent: bool = False
    f0_is_zero: bool = False
    unit_radial_limit: bool = False
    excluded_boundary_angles: tuple = ()
    landau_m1: float | None = None  # set only for the normalized class
    landau_m2: float | None = None
    expectations: dict = field(default_factory=dict)
    series_terms: int = 256
    _solution: PoissonSolution | None = field(default=None, repr=False)

    def solution(self, rule: DiskRule | None = None) -> PoissonSolution:
        if self._solution is None or (rule is not None and self._solution.rule is not rule):
            self._solution = solve(self.psi, self.g, rule=rule, series_terms=self.series_terms)
        return self._solution

    def value(self, z, evaluator: str = "auto") -> complex:
        zc = as_complex(z)
        if evaluator == "exact" or (evaluator == "auto" and self.f_exact is not None):
            if self.f_exact is None:
                raise DomainError(f"scenario {self.name} has no explicit solution closure")
            return complex(np.asarray(self.f_exact(np.array([zc])))[0])
        return self.solution().value(zc)

    def wirtinger(self, z, evaluator: str = "auto"):
        zc = as_complex(z)
        if evaluator == "exact" or (evaluator == "auto" and self.f_exact is not None):
            if self.f_exact is None:
                raise DomainError(f"scenario {self.name} has no explicit solution closure")
            h = min(1e-5, max(1e-7, (1 - abs(zc)) / 8))
            return wirtinger_numeric(lambda w: np.asarray(self.f_exact(np.array([w])))[0], zc, h=h)
        return self.solution().wirtinger(zc)


@dataclass(frozen=True)
class GridSpec:
    """Polar evaluation grid: n_radial radii up to r_max times n_angular angles."""

    n_radial: int
    n_angular: int
    r_max: float = 0.9
    include_origin: bool = True

    @classmethod
    def parse(cls, text: str, r_max: float = 0.9) -> "GridSpec":
        try:
            r, a = text.lower().split("x")
            return cls(int(r), int(a), r_max=r_max)
        except (ValueError, AttributeError):
            raise DomainError(f"grid spec must look like '16x16', got {text!r}")

    def label(self) -> str:
        return f"{self.n_radial}x{self.n_angular}@{self.r_max:g}"

    def radii(self) -> np.ndarray:
        return np.linspace(self.r_max / self.n_radial, self.r_max, self.n_radial)

    def angles(self) -> np.ndarray:
        return TWO_PI * np.arange(self.n_angular) / self.n_angular

    def points(self) -> np.ndarray:
        pts = np.multiply.outer(self.radii(), np.exp(1j * self.angles())).ravel()
        if self.include_origin:
            pts = np.concatenate(([0j], pts))
        return pts


@dataclass
class BoundReport:
    """Per-point margins of one check over one grid."""

    scenario: str
    check_id: str
    grid: str
    points: np.ndarray = field(repr=False)
    measured: np.ndarray = field(repr=False)
    bound: np.ndarray = field(repr=False)
    margin: np.ndarray = field(repr=False)
    slack: float = 1e-8
    sharp_tol: float = 1e-3
    hypotheses_ok: bool = True
    hypothesis_failures: tuple = ()
    expected: str = "holds"

    @property
    def min_margin(self) -> float:
        return float(self.margin.min()) if len(self.margin) else math.inf

    @property
    def sharp_points(self) -> np.ndarray:
        return self.points[np.abs(self.margin) <= self.sharp_tol]

    @property
    def passed(self) -> bool:
        return self.hypotheses_ok and self.min_margin >= -self.slack

    def to_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "check": self.check_id,
            "grid": self.grid,
            "expected": self.expected,
            "hypotheses_ok": self.hypotheses_ok,
            "hypothesis_failures": list(self.hypothesis_failures),
            "records": [
                {"z_re": z.real, "z_im": z.imag, "measured": m, "bound": b, "margin": g}
                for z, m, b, g in zip(self.points, self.measured, self.bound, self.margin)
            ],
            "summary": {
                "min_margin": self.min_margin,
                "sharp_points": [[z.real, z.imag] for z in self.sharp_points],
                "passed": self.passed,
            },
        }


def reconcile(report: BoundReport) -> BoundReport:
    """Raise HypothesisMismatchError when a report contradicts its expectation."""
    expected = report.expected
    if expected == "violates-hypothesis":
        if report.hypotheses_ok:
            raise HypothesisMismatchError(
                f"{report.scenario}/{report.check_id}: expected a hypothesis violation, found none")
        return report
    if not report.hypotheses_ok:
        raise HypothesisMismatchError(
            f"{report.scenario}/{report.check_id}: hypotheses unexpectedly violated: "
            f"{report.hypothesis_failures}")
    if report.min_margin < -report.slack:
        raise HypothesisMismatchError(
            f"{report.scenario}/{report.check_id}: margin {report.min_margin:.3e} "
            f"below -{report.slack:.1e}")
    if expected == "sharp" and len(report.sharp_points) == 0:
        raise HypothesisMismatchError(
            f"{report.scenario}/{report.check_id}: expected a sharp point, none within "
            f"{report.sharp_tol:.1e}")
    return report


def _hypothesis_failures(s: Scenario, check_id: str) -> tuple:
    if check_id != "1.2":
        return ()
    failures = []
    if s.g_norm >= BOUNDARY_LOWER_THRESHOLD:
        failures.append(f"source norm {s.g_norm:.4f} >= 8/(3 pi)")
    if not s.maps_into_disk:
        failures.append("map does not send the disk into itself")
    if not s.f0_is_zero:
        failures.append("f(0) != 0")
    if not s.unit_radial_limit:
        failures.append("|f| does not tend to 1 along radii")
    return tuple(failures)


def boundary_quotient(s: Scenario, zeta, r_list=None, enforce: bool = True) -> float:
    """Minimum difference quotient |f(zeta) - f(r zeta)| / (1 - r) over a radius ladder.

    Approximates the liminf from below the boundary; f(zeta) is the radial
    limit, evaluated at 1 - 1e-8.  Requires an explicit solution closure:
    this close to the boundary the quadrature pipeline is ill-conditioned.
    """
    failures = _hypothesis_failures(s, "1.2")
    if enforce and failures:
        raise HypothesisViolationError(f"{s.name}: {'; '.join(failures)}")
    if s.f_exact is None:
        raise DomainError(
            f"scenario {s.name} has no explicit closure; boundary quotients need one")
    zc = as_complex(zeta)
    if abs(abs(zc) - 1.0) > 1e-9:
        raise DomainError("zeta must be a boundary point")
    zc = zc / abs(zc)
    radii = np.asarray(QUOTIENT_LADDER if r_list is None else r_list, dtype=float)
    f = lambda pts: np.asarray(s.f_exact(np.asarray(pts, dtype=complex)))
    limit_val = f([(1.0 - RADIAL_LIMIT_OFFSET) * zc])[0]
    vals = f(radii * zc)
    quotients = np.abs(limit_val - vals) / (1.0 - radii)
    return float(quotients.min())


def sweep(s: Scenario, check_id: str, grid: GridSpec, rule: DiskRule | None = None,
          evaluator: str = "auto", slack: float | None = None,
          sharp_tol: float | None = None, enforce: bool = True,
          threads: int = 1) -> BoundReport:
    """Measure one check over a polar grid and report per-point margins.

    Margins are oriented so that nonnegative means the bound holds: upper
    bounds report bound - measured, the boundary lower bound reports
    measured - bound.  Scenarios expected to violate the hypotheses are
    swept anyway and the report records what was observed; unexpected
    hypothesis violations raise HypothesisViolationError when enforce is
    set.
    """
    if check_id not in CHECK_IDS:
        raise DomainError(f"unknown check id {check_id!r}; choose from {CHECK_IDS}")
    slack = DEFAULT_SLACK[check_id] if slack is None else slack
    sharp_tol = DEFAULT_SHARP_TOL[check_id] if sharp_tol is None else sharp_tol
    failures = _hypothesis_failures(s, check_id)
    expected = s.expectations.get(check_id, "holds")
    if failures and enforce and expected != "violates-hypothesis":
        raise HypothesisViolationError(f"{s.name}: {'; '.join(failures)}")
    if rule is not None:
        s.solution(rule)

    if check_id == "1.2":
        angles = [t for t in grid.angles()
                  if all(min(abs(t - e), TWO_PI - abs(t - e)) > 1e-9
                         for e in s.excluded_boundary_angles)]
        pts = np.exp(1j * np.asarray(angles))
        lower = (boundary_schwarz_lower(s.g_norm)
                 if s.g_norm < BOUNDARY_LOWER_THRESHOLD else math.nan)
        measured = np.array([boundary_quotient(s, z, enforce=False) for z in pts])
        bound = np.full_like(measured, lower)
        margin = measured - bound
    else:
        pts = grid.points()
        if check_id == "1.1":
            ratio = (1.0 - np.abs(pts) ** 2) / (1.0 + np.abs(pts) ** 2)
            center = s.psi.mean
            vals = _map_points(lambda z: s.value(z, evaluator), pts, threads)
            measured = np.abs(vals - ratio * center)
            bound = np.array([schwarz_bound(BoundInputs(s.p_norm, s.g_norm, abs(z))) for z in pts])
        else:
            derivs = _map_points(lambda z: s.wirtinger(z, evaluator), pts, threads)
            measured = np.array([d.norm for d in derivs])
            bound = np.array([gradient_bound(BoundInputs(s.p_norm, s.g_norm, abs(z))) for z in pts])
        margin = bound - measured

    return BoundReport(
        scenario=s.name, check_id=check_id, grid=grid.label(),
        points=pts, measured=np.asarray(measured, dtype=float),
        bound=np.asarray(bound, dtype=float), margin=np.asarray(margin, dtype=float),
        slack=slack, sharp_tol=sharp_tol,
        hypotheses_ok=not failures, hypothesis_failures=failures, expected=expected,
    )


def _map_points(fn, pts, threads: int):
    if threads <= 1:
        return [fn(z) for z in pts]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, pts))


def inscribed_disk_radius(s: Scenario, n_boundary: int = 4096, n_grid: int = 64) -> float:
    """Approximate radius of the largest disk inside the image of the disk.

    Candidate centers run over a grid of the image's bounding box, kept
    when the sampled image curve winds around them; the radius at a center
    is the min distance to the curve samples.  The estimate is biased low
    by the center grid resolution.
    """
    if not s.univalent:
        raise DomainError(f"inscribed_disk_radius needs a univalent scenario, got {s.name}")
    if s.f_exact is None:
        raise DomainError("inscribed_disk_radius needs an explicit closure")
    t = TWO_PI * np.arange(n_boundary) / n_boundary
    curve = np.asarray(s.f_exact(np.exp(1j * t)))
    closed = np.append(curve, curve[0])
    xs = np.linspace(curve.real.min(), curve.real.max(), n_grid)
    ys = np.linspace(curve.imag.min(), curve.imag.max(), n_grid)
    centers = (xs[:, None] + 1j * ys[None, :]).ravel()
    best = 0.0
    for chunk in np.array_split(centers, max(1, len(centers) // 256)):
        diff = closed[None, :] - chunk[:, None]
        winding = np.abs(np.angle(diff[:, 1:] / diff[:, :-1]).sum(axis=1))
        inside = winding > math.pi
        if not inside.any():
            continue
        dists = np.abs(curve[None, :] - chunk[inside, None]).min(axis=1)
        best = max(best, float(dists.max()))
    return best


def bilipschitz_probe(s: Scenario, r0: float, rho: float, n_pairs: int = 10_000,
                      seed: int = 0):
    """Empirical (min, max) pair ratio |f(z1)-f(z2)| / |z1-z2| in the rho-disk."""
    if not 0.0 < rho < r0 < 1.0:
        raise DomainError("need 0 < rho < r0 < 1")
    rng = np.random.default_rng(seed)
    u = rng.random((2, n_pairs))
    v = rng.random((2, n_pairs))
    z = rho * np.sqrt(u) * np.exp(1j * TWO_PI * v)
    sep = np.abs(z[0] - z[1])
    keep = sep > 1e-12
    if s.f_exact is not None:
        f0, f1 = np.asarray(s.f_exact(z[0])), np.asarray(s.f_exact(z[1]))
    else:
        sol = s.solution()
        f0, f1 = sol.values(z[0]), sol.values(z[1])
    ratios = np.abs(f0 - f1)[keep] / sep[keep]
    return float(ratios.min()), float(ratios.max())


def _stretch_harmonic_map(k: float):
    return lambda z: k * np.asarray(z).real + 1j * np.asarray(z).imag / k


def _stretch_poisson_map(k: float):
    return lambda z: (k * np.asarray(z).real + np.abs(np.asarray(z)) ** 2 / 4.0
                      + 1j * np.asarray(z).imag / k)


def landau_failure_demo(k_max: int, n_boundary: int = 4096, n_grid: int = 64) -> list[dict]:
    """Normalization and shrinking-image table for the two stretch families.

    For k = 1..k_max both families have unit Jacobian and vanish at the
    origin, yet the harmonic family's image contains no disk of radius
    beyond 1/k: no radius works for the whole class.
    """
    if k_max < 2:
        raise DomainError("k_max must be at least 2")
    rows = []
    for k in range(1, k_max + 1):
        harmonic = builtin(f"stretch-harmonic:{k}")
        poisson = builtin(f"stretch-poisson:{k}")
        dh = wirtinger_numeric(lambda z: _stretch_harmonic_map(k)(np.array([z]))[0], 0j)
        dp = wirtinger_numeric(lambda z: _stretch_poisson_map(k)(np.array([z]))[0], 0j)
        lap = 0.0
        for z in (0.1 + 0.1j, -0.3j, 0.4):
            lap = max(lap, _fd_laplacian_residual(poisson.f_exact, z, poisson.g))
        rows.append({
            "k": k,
            "harmonic_jacobian0": dh.jacobian,
            "harmonic_f0": abs(_stretch_harmonic_map(k)(np.array([0j]))[0]),
            "harmonic_inscribed_radius": inscribed_disk_radius(harmonic, n_boundary, n_grid),
            "poisson_jacobian0": dp.jacobian,
            "poisson_f0": abs(_stretch_poisson_map(k)(np.array([0j]))[0]),
            "poisson_laplacian_residual": lap,
        })
    return rows


def _fd_laplacian_residual(f_exact, z, g: SourceFunction, h: float = 1e-4) -> float:
    f = lambda w: np.asarray(f_exact(np.array([w])))[0]
    zc = complex(z)
    lap = (f(zc + h) + f(zc - h) + f(zc + 1j * h) + f(zc - 1j * h) - 4 * f(zc)) / h ** 2
    return abs(lap - complex(np.asarray(g(np.array([zc])))[0]))


# ---------------------------------------------------------------------------
# scenario registry


def _identity_like(n_power: int, profile: ToleranceProfile) -> Scenario:
    n_power = int(n_power)
    if n_power < 1:
        raise DomainError("power must be a positive integer")
    name = "identity" if n_power == 1 else f"power:{n_power}"
    return Scenario(
        name=name,
        psi=BoundaryFunction.from_callable(lambda t: np.exp(1j * n_power * t),
                                           profile.boundary_samples),
        g=SourceFunction.zero(),
        f_exact=lambda z: np.asarray(z, dtype=complex) ** n_power,
        g_norm=0.0, p_norm=1.0, f_norm=1.0,
        harmonic=True, maps_into_disk=True, univalent=(n_power == 1),
        f0_is_zero=True, unit_radial_limit=True,
        landau_m1=0.0 if n_power == 1 else None,
        landau_m2=1.0 if n_power == 1 else None,
        expectations={"1.1": "holds", "1.2": "holds", "1.3": "holds"},
        series_terms=profile.series_terms,
    )


def _sharp_quadratic(m: float, profile: ToleranceProfile) -> Scenario:
    if m <= 0:
        raise DomainError("sharp-quadratic needs M > 0")
    return Scenario(
        name=f"sharp-quadratic:{m:g}",
        psi=BoundaryFunction.constant(0.0, profile.boundary_samples),
        g=SourceFunction.constant(-4.0 * m),
        f_exact=lambda z: m * (1.0 - np.abs(np.asarray(z, dtype=complex)) ** 2) + 0j,
        g_norm=4.0 * m, p_norm=0.0, f_norm=m,
        harmonic=False, maps_into_disk=(m <= 1.0), univalent=False,
        f0_is_zero=False, unit_radial_limit=False,
        expectations={"1.1": "sharp", "1.2": "violates-hypothesis", "1.3": "holds"},
        series_terms=profile.series_terms,
    )


def _stretch_poisson(k: float, profile: ToleranceProfile) -> Scenario:
    if k < 1:
        raise DomainError("stretch-poisson needs k >= 1")
    f = _stretch_poisson_map(k)
    return Scenario(
        name=f"stretch-poisson:{k:g}",
        psi=BoundaryFunction.from_callable(
            lambda t: k * np.cos(t) + 0.25 + 1j * np.sin(t) / k, profile.boundary_samples),
        g=SourceFunction.constant(1.0),
        f_exact=f,
        g_norm=1.0, p_norm=k + 0.25, f_norm=k + 0.25,
        harmonic=False, maps_into_disk=False, univalent=True,
        f0_is_zero=True, unit_radial_limit=False,
        landau_m1=1.0, landau_m2=k + 0.25,
        expectations={"1.1": "holds", "1.2": "violates-hypothesis", "1.3": "holds"},
        series_terms=profile.series_terms,
    )


def _stretch_harmonic(k: float, profile: ToleranceProfile) -> Scenario:
    if k < 1:
        raise DomainError("stretch-harmonic needs k >= 1")
    return Scenario(
        name=f"stretch-harmonic:{k:g}",
        psi=BoundaryFunction.from_callable(
            lambda t: k * np.cos(t) + 1j * np.sin(t) / k, profile.boundary_samples),
        g=SourceFunction.zero(),
        f_exact=_stretch_harmonic_map(k),
        g_norm=0.0, p_norm=k, f_norm=k,
        harmonic=True, maps_into_disk=(k == 1.0), univalent=True,
        f0_is_zero=True, unit_radial_limit=(k == 1.0),
        landau_m1=0.0, landau_m2=k,
        expectations={"1.1": "holds",
                      "1.2": "holds" if k == 1.0 else "violates-hypothesis",
                      "1.3": "holds"},
        series_terms=profile.series_terms,
    )


def _colonna_extremal(m: float, alpha_angle: float, a: float, profile: ToleranceProfile) -> Scenario:
    if m <= 0:
        raise DomainError("colonna-extremal needs M > 0")
    if abs(a) >= 1:
        raise DomainError("automorphism parameter a must be interior")
    alpha = np.exp(1j * alpha_angle)

    def automorph(z):
        return (a + z) / (1.0 + a * z)  # real a, so conj(a) = a

    def f(z):
        w = automorph(np.asarray(z, dtype=complex))
        return (2.0 * m * alpha / math.pi) * np.angle((1.0 + w) / (1.0 - w))

    def psi_fn(t):
        # on the circle (1 + w)/(1 - w) is purely imaginary: arg = +-pi/2,
        # with the sign of Im w; jump samples snap to the midpoint 0, which
        # keeps the sampled mean exactly zero
        s = np.imag(automorph(np.exp(1j * t)))
        return m * alpha * np.where(np.abs(s) < 1e-12, 0.0, np.sign(s))

    return Scenario(
        name=f"colonna-extremal:{m:g}:{alpha_angle:g}:{a:g}",
        psi=BoundaryFunction.from_callable(psi_fn, profile.jump_boundary_samples),
        g=SourceFunction.zero(),
        f_exact=f,
        g_norm=0.0, p_norm=m, f_norm=m,
        harmonic=True, maps_into_disk=(m <= 1.0), univalent=False,
        f0_is_zero=(a == 0.0), unit_radial_limit=(m == 1.0),
        excluded_boundary_angles=_colonna_jump_angles(a),
        expectations={"1.1": "sharp",
                      "1.2": "sharp" if (m == 1.0 and a == 0.0) else "violates-hypothesis",
                      "1.3": "sharp"},
        series_terms=profile.series_terms,
    )


def _colonna_jump_angles(a: float) -> tuple:
    # preimages of +-1 under the automorphism, where the radial limit fails
    return (0.0, math.pi)


def _radial_pinch(c: float, profile: ToleranceProfile) -> Scenario:
    if not 0.0 < c < 0.25:
        raise DomainError("radial-pinch needs 0 < c < 0.25")
    return Scenario(
        name=f"radial-pinch:{c:g}",
        psi=BoundaryFunction.from_callable(lambda t: np.exp(1j * t), profile.boundary_samples),
        g=SourceFunction(lambda w: 8.0 * c * np.asarray(w, dtype=complex), sup_norm=8.0 * c),
        f_exact=lambda z: np.asarray(z, dtype=complex)
            * (1.0 - c * (1.0 - np.abs(np.asarray(z, dtype=complex)) ** 2)),
        g_norm=8.0 * c, p_norm=1.0, f_norm=1.0,
        harmonic=False, maps_into_disk=True, univalent=False,
        f0_is_zero=True, unit_radial_limit=True,
        expectations={"1.1": "holds", "1.2": "holds", "1.3": "holds"},
        series_terms=profile.series_terms,
    )


def _quadratic_shift(beta: float, profile: ToleranceProfile) -> Scenario:
    if not 0.0 < beta < 0.5:
        raise DomainError("quadratic-shift needs 0 < beta < 1/2 for univalence")
    return Scenario(
        name=f"quadratic-shift:{beta:g}",
        psi=BoundaryFunction.from_callable(lambda t: np.exp(1j * t) + beta, profile.boundary_samples),
        g=SourceFunction.constant(4.0 * beta),
        f_exact=lambda z: np.asarray(z, dtype=complex)
            + beta * np.abs(np.asarray(z, dtype=complex)) ** 2,
        g_norm=4.0 * beta, p_norm=1.0 + beta, f_norm=1.0 + beta,
        harmonic=False, maps_into_disk=False, univalent=True,
        f0_is_zero=True, unit_radial_limit=False,
        landau_m1=4.0 * beta, landau_m2=1.0 + beta,
        expectations={"1.1": "sharp", "1.2": "violates-hypothesis", "1.3": "holds"},
        series_terms=profile.series_terms,
    )


def _random_harmonic(seed: float, degree: float, profile: ToleranceProfile) -> Scenario:
    seed, degree = int(seed), int(degree)
    if degree < 1:
        raise DomainError("degree must be >= 1")
    rng = np.random.default_rng(seed)
    scale = 1.0 / np.arange(1, degree + 1) ** 2
    a = (rng.standard_normal(degree) + 1j * rng.standard_normal(degree)) * scale
    b = (rng.standard_normal(degree) + 1j * rng.standard_normal(degree)) * scale

    def raw(z):
        z = np.asarray(z, dtype=complex)
        k = np.arange(1, degree + 1)
        zk = z[..., None] ** k
        return zk @ a + np.conj(zk @ b)

    t = TWO_PI * np.arange(8192) / 8192
    sup = float(np.max(np.abs(raw(np.exp(1j * t))))) * (1.0 + 1e-9)
    f = lambda z: raw(z) / sup
    return Scenario(
        name=f"random-harmonic:{seed}:{degree}",
        psi=BoundaryFunction.from_callable(lambda t: f(np.exp(1j * t)), profile.boundary_samples),
        g=SourceFunction.zero(),
        f_exact=f,
        g_norm=0.0, p_norm=1.0, f_norm=1.0,
        harmonic=True, maps_into_disk=True, univalent=False,
        f0_is_zero=True, unit_radial_limit=False,
        expectations={"1.1": "holds", "1.2": "violates-hypothesis", "1.3": "holds"},
        series_terms=profile.series_terms,
    )


_REGISTRY = {
    "identity": (lambda profile: _identity_like(1, profile), ()),
    "power": (_identity_like, (2,)),
    "sharp-quadratic": (_sharp_quadratic, (1.0,)),
    "stretch-poisson": (_stretch_poisson, (2.0,)),
    "stretch-harmonic": (_stretch_harmonic, (2.0,)),
    "colonna-extremal": (_colonna_extremal, (1.0, 0.0, 0.0)),
    "radial-pinch": (_radial_pinch, (0.0125,)),
    "quadratic-shift": (_quadratic_shift, (0.05,)),
    "random-harmonic": (_random_harmonic, (0, 8)),
}


def scenario_names() -> list[str]:
    return sorted(_REGISTRY)


def _parse_scenario_name(text: str):
    text = text.strip()
    if "(" in text and text.endswith(")"):
        base, _, rest = text.partition("(")
        args = rest[:-1]
        parts = [p for p in args.split(",") if p.strip()]
    else:
        pieces = text.split(":")
        base, parts = pieces[0], pieces[1:]
    try:
        values = tuple(float(p) for p in parts)
    except ValueError:
        raise UnknownScenarioError(f"bad scenario parameters in {text!r}")
    return base.strip(), values


def builtin(name: str, profile: ToleranceProfile = FAST) -> Scenario:
    """Scenario registry lookup; accepts 'name', 'name:arg', or 'name(arg, ...)'."""
    base, values = _parse_scenario_name(name)
    if base not in _REGISTRY:
        raise UnknownScenarioError(
            f"unknown scenario {base!r}; known: {', '.join(scenario_names())}")
    builder, defaults = _REGISTRY[base]
    args = list(defaults)
    if len(values) > len(defaults):
        raise UnknownScenarioError(f"{base} takes at most {len(defaults)} parameters")
    args[: len(values)] = values
    return builder(*args, profile)


def default_rule(profile: ToleranceProfile = FAST) -> DiskRule:
    return build_rules(profile.radial_n, profile.angular_n, profile.rule_tol)[1]
