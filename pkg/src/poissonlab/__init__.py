"""Poisson-equation toolbox on the unit disk.

Solves Delta f = g with boundary data psi through the Green/Poisson
integral representation, evaluates the sharp value/gradient/boundary
bounds for such maps, and computes the guaranteed univalence radius and
covered-disk radius for the normalized class.
"""

from .errors import (
    BracketError,
    CenterOutsideDiskError,
    CoincidentPointsError,
    DomainError,
    HypothesisMismatchError,
    HypothesisViolationError,
    InsufficientSamplesError,
    QuadratureValidationError,
    StencilError,
    UnknownScenarioError,
)
from .kernels import ComplexPoint, WirtingerDerivatives, green, mobius, poisson_kernel, wirtinger_numeric
from .quadrature import CircleRule, DiskRule, build_rules, integrate_circle, integrate_disk, integrate_disk_singular
from .potentials import (
    BoundaryFunction,
    HarmonicCoefficients,
    PoissonSolution,
    SourceFunction,
    green_potential,
    green_potential_dz,
    green_potential_dzbar,
    harmonic_coefficients,
    poisson_extension,
    poisson_extension_dz,
    solve,
)
from .bounds import (
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
from .landau import LandauParameters, LandauResult, deviation_profile_monotone, lambda_lower_bound, landau_radius, univalence_margin
from .profiles import FAST, STRICT, ToleranceProfile, resolve_profile
from .testbed import (
    BoundReport,
    GridSpec,
    Scenario,
    bilipschitz_probe,
    boundary_quotient,
    builtin,
    inscribed_disk_radius,
    landau_failure_demo,
    scenario_names,
    sweep,
)

__version__ = "0.1.0"
