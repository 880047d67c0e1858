"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument lies outside the mathematical domain of an operation."""


class CoincidentPointsError(DomainError):
    """Two points that must be distinct are (numerically) equal."""


class StencilError(DomainError):
    """A finite-difference stencil would leave the unit disk."""


class CenterOutsideDiskError(DomainError):
    """Singular-rule center is not an interior point of the disk."""


class QuadratureValidationError(RuntimeError):
    """A freshly built rule failed its closed-form validation probes."""


class InsufficientSamplesError(ValueError):
    """Too few boundary samples for the requested number of coefficients."""


class UnknownScenarioError(KeyError):
    """Scenario name is not in the registry."""


class HypothesisViolationError(ValueError):
    """A check was requested for a scenario that violates its hypotheses."""


class HypothesisMismatchError(RuntimeError):
    """Measured behaviour contradicts the scenario's declared expectation."""


class BracketError(RuntimeError):
    """Root bracketing failed (defensive; cannot occur for valid inputs)."""
