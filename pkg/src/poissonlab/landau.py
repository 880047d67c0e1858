"""Univalence radius, covered-disk radius, and bi-Lipschitz constants.

For the normalized class (f(0) = 0, unit Jacobian at 0) with source sup
bound m1 and solution sup bound m2, the map is injective up to the root
r0 of a strictly decreasing margin function, and the image of that disk
covers a concrete round disk of radius R0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import extension_deriv_deviation_bound, green_deriv_deviation_bound
from .errors import BracketError, DomainError

BRACKET_EPS = 1e-12
DEFAULT_ROOT_TOL = 1e-12
DEFAULT_RHO_FRACTION = 0.9


@dataclass(frozen=True)
class LandauParameters:
    """Norm bounds for the normalized class: m1 >= 0 caps |g|, m2 > 0 caps |f|."""

    m1: float
    m2: float

    def __post_init__(self):
        if not (math.isfinite(self.m1) and self.m1 >= 0):
            raise DomainError(f"m1 must be finite and >= 0, got {self.m1}")
        if not (math.isfinite(self.m2) and self.m2 > 0):
            raise DomainError(f"m2 must be finite and > 0, got {self.m2}")


@dataclass(frozen=True)
class LandauResult:
    """Computed radii and Lipschitz data.

    r0            root of the univalence margin in (0, 1)
    R0            radius of the covered disk, (2 m2 / pi) r0^2 (2-r0)/(1-r0)^2
    phi_residual  |margin(r0)| at the returned root
    rho           radius at which the lower Lipschitz margin is reported
    L1            lower pair-ratio margin at rho (positive for rho < r0)
    L2            upper Lipschitz constant (4 m2 / pi)/(1 - r0^2) + (2/3) m1
    """

    r0: float
    R0: float
    phi_residual: float
    rho: float
    L1: float
    L2: float


def lambda_lower_bound(p: LandauParameters) -> float:
    """Lower bound 1 / ((4/pi) m2 + (2/3) m1) for the smallest singular value at 0."""
    return 1.0 / ((4.0 / math.pi) * p.m2 + (2.0 / 3.0) * p.m1)


def univalence_margin(x: float, p: LandauParameters) -> float:
    """Guaranteed pair-separation margin at radius x.

    lambda_lower minus the two derivative-deviation bounds accumulated
    along a segment inside the disk of radius x.  Strictly decreasing on
    (0, 1), positive limit at 0+, divergent to -inf at 1-.
    """
    x = float(x)
    if not 0.0 < x < 1.0:
        raise DomainError("univalence_margin is defined on 0 < x < 1")
    return (lambda_lower_bound(p)
            - extension_deriv_deviation_bound(x, p.m2)
            - 2.0 * green_deriv_deviation_bound(x, p.m1))


def landau_radius(p: LandauParameters, tol: float = DEFAULT_ROOT_TOL,
                  rho_fraction: float = DEFAULT_RHO_FRACTION) -> LandauResult:
    """Bisect the univalence margin to its unique root and fill the radii.

    Monotonicity guarantees a bracket on (eps, 1 - eps); eps keeps the log
    singularity of the margin away from the endpoints.  The lower
    Lipschitz margin L1 is reported at rho = rho_fraction * r0 (it
    degenerates to 0 at r0 by definition of the root, so a single constant
    on the full disk of radius r0 does not exist).
    """
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    if not 0.0 < rho_fraction < 1.0:
        raise DomainError("rho_fraction must lie in (0, 1)")
    a, b = BRACKET_EPS, 1.0 - BRACKET_EPS
    fa = univalence_margin(a, p)
    fb = univalence_margin(b, p)
    if fa <= 0 or fb >= 0:
        raise BracketError("univalence margin does not change sign on the bracket")
    while b - a > min(tol, 1e-14):
        mid = 0.5 * (a + b)
        if univalence_margin(mid, p) > 0:
            a = mid
        else:
            b = mid
    r0 = 0.5 * (a + b)
    rho = rho_fraction * r0
    return LandauResult(
        r0=r0,
        R0=(2.0 * p.m2 / math.pi) * r0 ** 2 * (2.0 - r0) / (1.0 - r0) ** 2,
        phi_residual=abs(univalence_margin(r0, p)),
        rho=rho,
        L1=univalence_margin(rho, p),
        L2=(4.0 * p.m2 / math.pi) / (1.0 - r0 ** 2) + (2.0 / 3.0) * p.m1,
    )


def deviation_profile_monotone(r0: float, n_grid: int = 1000, slack: float = 1e-12) -> bool:
    """Check that both deviation profiles are nondecreasing on (0, 1].

    The profiles are (2 - r0 x)/(1 - r0 x)^2 and x [log(4 (1 + r0 x))
    - log(r0 x)], the factors pulled out of the covered-radius estimate.
    """
    if not 0.0 < r0 < 1.0:
        raise DomainError("r0 must lie in (0, 1)")
    x = np.linspace(1.0 / n_grid, 1.0, n_grid)
    tau1 = (2.0 - r0 * x) / (1.0 - r0 * x) ** 2
    tau2 = x * (np.log(4.0 * (1.0 + r0 * x)) - np.log(r0 * x))
    return bool(np.all(np.diff(tau1) >= -slack) and np.all(np.diff(tau2) >= -slack))
