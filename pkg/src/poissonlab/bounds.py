"""Closed-form bound functions and auxiliary integrals.

Everything here is a pure function of norms and radii: the right-hand
sides of the value and gradient bounds, the boundary lower bound, the
radial majorant of the Green-potential derivative, the closed forms of
the auxiliary radial integrals, and the two deviation bounds that drive
the univalence-radius computation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, HypothesisViolationError
from .quadrature import TWO_PI, CircleRule, gauss_legendre_01, integrate_circle

# Below this radius the majorant's closed form loses ~6 digits to
# cancellation and the Taylor expansion about 0 takes over.
MAJORANT_TAYLOR_CUTOFF = 1e-3

BOUNDARY_LOWER_THRESHOLD = 8.0 / (3.0 * math.pi)


@dataclass(frozen=True)
class BoundInputs:
    """Norm data entering the value and gradient bounds."""

    p_norm: float
    g_norm: float
    z_mod: float

    def __post_init__(self):
        for name in ("p_norm", "g_norm", "z_mod"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0:
                raise DomainError(f"{name} must be finite and nonnegative, got {v}")
        if self.z_mod > 1:
            raise DomainError(f"z_mod must lie in [0, 1], got {self.z_mod}")


def schwarz_bound(b: BoundInputs) -> float:
    """Right-hand side of the pointwise value bound.

    (4 p_norm / pi) arctan|z| + (g_norm / 4)(1 - |z|^2); at z = 0 only the
    source term survives, and it is attained by the constant-source pair.
    """
    return (4.0 * b.p_norm / math.pi) * math.atan(b.z_mod) + (b.g_norm / 4.0) * (1.0 - b.z_mod ** 2)


def green_deriv_majorant(z_mod: float, g_norm: float) -> float:
    """Radial majorant of |dG/dz|, decreasing from g_norm/3 to g_norm/4.

    Closed form (g (1-x^2) / (8x^2)) [ (1+x^2)/(1-x^2)
    - ((1-x^2)/(2x)) log((1+x)/(1-x)) ]; for x below the cutoff a Taylor
    expansion g (1/3 - x^2/15 - x^4/105) avoids catastrophic cancellation.
    """
    x = float(z_mod)
    if x <= 0.0 or x >= 1.0:
        raise DomainError("green_deriv_majorant is defined on 0 < z_mod < 1; use the limits g/3, g/4")
    if x < MAJORANT_TAYLOR_CUTOFF:
        return g_norm * (1.0 / 3.0 - x * x / 15.0 - x ** 4 / 105.0)
    x2 = x * x
    bracket = (1 + x2) / (1 - x2) - ((1 - x2) / (2 * x)) * math.log((1 + x) / (1 - x))
    return g_norm * (1 - x2) / (8 * x2) * bracket


def gradient_bound(b: BoundInputs) -> float:
    """Right-hand side of the gradient bound.

    (4 p_norm / pi) / (1 - |z|^2) + 2 * majorant(|z|); at z = 0 the limit
    form 4 p_norm / pi + (2/3) g_norm applies.
    """
    if b.z_mod >= 1:
        raise DomainError("gradient_bound requires z_mod < 1")
    if b.z_mod == 0.0:
        return 4.0 * b.p_norm / math.pi + (2.0 / 3.0) * b.g_norm
    return (4.0 * b.p_norm / math.pi) / (1.0 - b.z_mod ** 2) + 2.0 * green_deriv_majorant(b.z_mod, b.g_norm)


def boundary_schwarz_lower(g_norm: float) -> float:
    """Lower bound 2/pi - 3 g_norm / 4 for the boundary difference quotient.

    Only meaningful under the hypothesis g_norm < 8/(3 pi), where it is
    strictly positive; larger norms raise HypothesisViolationError.
    """
    if g_norm < 0:
        raise DomainError("g_norm must be nonnegative")
    if g_norm >= BOUNDARY_LOWER_THRESHOLD:
        raise HypothesisViolationError(
            f"boundary lower bound needs g_norm < 8/(3 pi) ~ {BOUNDARY_LOWER_THRESHOLD:.6f}, got {g_norm}")
    return 2.0 / math.pi - 3.0 * g_norm / 4.0


def radial_power_integral(z_mod: float, power: int) -> float:
    """Closed form of int_0^1 dr / (1 - r^2 z_mod^2)^power for power in 1..3.

    These are the radial moments behind the derivative majorant; the log
    term is log((1+x)/sqrt(1-x^2)).
    """
    x = float(z_mod)
    if not 0.0 < x < 1.0:
        raise DomainError("radial_power_integral is defined on 0 < z_mod < 1")
    x2 = x * x
    log_term = math.log((1 + x) / math.sqrt(1 - x2))
    if power == 1:
        return log_term / x
    if power == 2:
        return log_term / (2 * x) + 1.0 / (2 * (1 - x2))
    if power == 3:
        return (1.0 / (4 * (1 - x2) ** 2) + 3.0 / (8 * (1 - x2)) + 3.0 * log_term / (8 * x))
    raise DomainError(f"power must be 1, 2 or 3, got {power}")


_PAIR_RULE = CircleRule(4096)


def disk_inverse_distance_integral(r: float) -> float:
    """Closed form of the disk integral of 1/(|w| |z - w|) at |z| = r.

    Equal to the circle integral of log(1 - r cos t + sqrt(1 + r^2
    - 2 r cos t)) plus 2 pi (log 2 - log r); the circle integrand is
    smooth for r < 1 and is evaluated by the uniform rule.
    """
    r = float(r)
    if not 0.0 < r < 1.0:
        raise DomainError("disk_inverse_distance_integral is defined on 0 < r < 1")

    def integrand(t):
        root = np.sqrt(1 + r * r - 2 * r * np.cos(t))
        return np.log(1 - r * np.cos(t) + root)

    t_integral = integrate_circle(_PAIR_RULE, integrand).real
    return t_integral - TWO_PI * math.log(r) + TWO_PI * math.log(2.0)


def disk_inverse_distance_upper(r: float) -> float:
    """Upper bound 2 pi log(4 (1 + r)) - 2 pi log r for the pair integral."""
    r = float(r)
    if not 0.0 < r < 1.0:
        raise DomainError("disk_inverse_distance_upper is defined on 0 < r < 1")
    return TWO_PI * math.log(4.0 * (1.0 + r)) - TWO_PI * math.log(r)


def log_sine_integral(n: int = 64) -> float:
    """Numeric value of int_0^{pi/2} log(sin x) dx.

    The endpoint log singularity is subtracted analytically: log(sin x)
    = log(sin x / x) + log x, the first factor is analytic and handled by
    Gauss-Legendre, the second integrates to a (log a - 1).
    """
    a = math.pi / 2
    x, w = gauss_legendre_01(n)
    xs = a * x
    smooth = np.log(np.sinc(xs / np.pi))  # log(sin x / x), removable at 0
    return float(a * np.sum(w * smooth) + a * (math.log(a) - 1.0))


def greens_magnitude_bound(z_mod: float, g_norm: float) -> float:
    """Magnitude bound g_norm (1 - |z|^2) / 4 for the Green potential."""
    if not 0.0 <= z_mod <= 1.0:
        raise DomainError("z_mod must lie in [0, 1]")
    return g_norm * (1.0 - z_mod ** 2) / 4.0


def green_deriv_deviation_bound(z_mod: float, source_bound: float) -> float:
    """Bound for |dG/dz (z) - dG/dz (0)| given a source sup bound.

    source_bound * [log(4 (1+x)) - log x] * x * (2 + x); tends to 0 at the
    origin (the log divergence is beaten by the factor x), so z_mod = 0
    returns the limit 0.
    """
    x = float(z_mod)
    if not 0.0 <= x < 1.0:
        raise DomainError("green_deriv_deviation_bound is defined on 0 <= z_mod < 1")
    if x == 0.0:
        return 0.0
    return source_bound * (math.log(4.0 * (1.0 + x)) - math.log(x)) * x * (2.0 + x)


def extension_deriv_deviation_bound(z_mod: float, sup_bound: float) -> float:
    """Bound for the extension-derivative deviation from its value at 0.

    (4 sup_bound / pi) * x (2 - x) / (1 - x)^2, from the coefficient bound
    applied to the differentiated series.
    """
    x = float(z_mod)
    if not 0.0 <= x < 1.0:
        raise DomainError("extension_deriv_deviation_bound is defined on 0 <= z_mod < 1")
    return (4.0 * sup_bound / math.pi) * x * (2.0 - x) / (1.0 - x) ** 2
