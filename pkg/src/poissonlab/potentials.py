"""Evaluation of the boundary/source potentials and the solution map.

The solution of Delta f = g on the unit disk with boundary data psi is
f = P - G, where P is the Poisson (harmonic) extension of psi and G is
the Green potential of g.  P is evaluated as a kernel average over the
boundary samples, G through a disk-automorphism pullback that moves the
logarithmic singularity of the Green function to the origin, where the
log-weighted radial rule integrates it exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InsufficientSamplesError
from .kernels import WirtingerDerivatives, as_complex, poisson_kernel
from .quadrature import TWO_PI, DiskRule, build_rules, integrate_disk_singular

DEFAULT_BOUNDARY_SAMPLES = 4096
DEFAULT_SERIES_TERMS = 256


class BoundaryFunction:
    """Boundary data psi on the unit circle, held as uniform samples.

    Built either from a closure t -> psi(e^{it}) (vectorized over an
    ndarray of angles) or from an explicit sample array.  sup_norm is the
    max modulus over the samples and doubles as the bound for the harmonic
    extension (maximum principle); mean is the extension's value at 0.
    """

    def __init__(self, samples: np.ndarray, fn=None):
        samples = np.asarray(samples, dtype=complex)
        if samples.ndim != 1 or len(samples) < 4:
            raise DomainError("boundary data needs a 1-d array of at least 4 samples")
        self.samples = samples
        self.fn = fn
        self.angles = TWO_PI * np.arange(len(samples)) / len(samples)
        self.sup_norm = float(np.max(np.abs(samples)))
        self.mean = complex(samples.mean())

    @classmethod
    def from_callable(cls, fn, n: int = DEFAULT_BOUNDARY_SAMPLES) -> "BoundaryFunction":
        t = TWO_PI * np.arange(n) / n
        return cls(np.asarray(fn(t), dtype=complex), fn=fn)

    @classmethod
    def from_samples(cls, values) -> "BoundaryFunction":
        return cls(np.asarray(values, dtype=complex))

    @classmethod
    def constant(cls, value: complex, n: int = DEFAULT_BOUNDARY_SAMPLES) -> "BoundaryFunction":
        return cls(np.full(n, complex(value)), fn=lambda t: np.full_like(t, complex(value), dtype=complex))

    def __len__(self) -> int:
        return len(self.samples)


class SourceFunction:
    """Source term g on the closed disk.

    sup_norm may be supplied exactly; otherwise it is estimated as the max
    over the quadrature nodes of the rule in use (a grid max slightly
    under-estimates a true supremum, hence the override).
    """

    def __init__(self, fn, sup_norm: float | None = None):
        self.fn = fn
        self._sup_norm = None if sup_norm is None else float(sup_norm)

    @classmethod
    def constant(cls, value: complex) -> "SourceFunction":
        value = complex(value)
        return cls(lambda w: np.full_like(np.asarray(w), value, dtype=complex), sup_norm=abs(value))

    @classmethod
    def zero(cls) -> "SourceFunction":
        return cls.constant(0.0)

    def __call__(self, w):
        return self.fn(w)

    @property
    def is_zero(self) -> bool:
        return self._sup_norm == 0.0

    def sup_norm_on(self, rule: DiskRule) -> float:
        if self._sup_norm is not None:
            return self._sup_norm
        pts, _ = rule.disk_nodes()
        return float(np.max(np.abs(np.asarray(self.fn(pts)))))


@dataclass(frozen=True)
class HarmonicCoefficients:
    """Series data of a harmonic map: sum a_n z^n + sum conj(b_n) zbar^n.

    a has length N+1 (a[0] is the mean); b has the same length with b[0]
    fixed at zero so that a and b index alike.
    """

    a: np.ndarray = field(repr=False)
    b: np.ndarray = field(repr=False)

    @property
    def n_terms(self) -> int:
        return len(self.a) - 1

    def pair_norms(self) -> np.ndarray:
        """|a_n| + |b_n| for n = 1..N, the quantity the coefficient bound caps."""
        return np.abs(self.a[1:]) + np.abs(self.b[1:])


def poisson_extension(psi: BoundaryFunction, z) -> complex:
    """Harmonic extension of psi at interior z, as a Poisson-kernel average."""
    zc = as_complex(z)
    if abs(zc) >= 1:
        raise DomainError("poisson_extension requires |z| < 1; use psi directly on the boundary")
    return complex(np.mean(poisson_kernel(zc, psi.angles) * psi.samples))


def green_potential(g: SourceFunction, z, rule: DiskRule | None = None) -> complex:
    """Green potential of g at interior z: (1/2pi) * int G(z, w) g(w) dA(w).

    Computed after the pullback w = (z - zeta)/(1 - conj(z) zeta), which
    turns the Green weight into log(1/|zeta|) at the origin and multiplies
    the integrand by the automorphism's area Jacobian.
    """
    zc = as_complex(z)
    if abs(zc) >= 1:
        raise DomainError("green_potential requires |z| < 1")
    if rule is None:
        rule = default_rules()[1]
    jac_scale = (1 - abs(zc) ** 2) ** 2

    def h(zeta):
        denom = 1 - np.conj(zc) * zeta
        w = (zc - zeta) / denom
        return np.asarray(g(w)) * jac_scale / np.abs(denom) ** 4

    return integrate_disk_singular(rule, h, 0j, "green-log") / TWO_PI


def green_potential_dz(g: SourceFunction, z, rule: DiskRule | None = None) -> complex:
    """d/dz of the Green potential, by the inverse-distance rule centered at z.

    The integrand (1 - |w|^2) g(w) / ((z - w)(z conj(w) - 1)) has a simple
    1/|z - w| singularity; multiplying by |z - w| leaves a bounded phase
    factor that is constant along each polar ray.
    """
    zc = as_complex(z)
    if abs(zc) >= 1:
        raise DomainError("green_potential_dz requires |z| < 1")
    if rule is None:
        rule = default_rules()[1]

    def h(w):
        return ((1 - np.abs(w) ** 2) * np.asarray(g(w)) * np.abs(zc - w)
                / ((zc - w) * (zc * np.conj(w) - 1)))

    return integrate_disk_singular(rule, h, zc, "inverse-distance") / (2 * TWO_PI)


def green_potential_dzbar(g: SourceFunction, z, rule: DiskRule | None = None) -> complex:
    """d/dzbar of the Green potential; mirror of green_potential_dz."""
    zc = as_complex(z)
    if abs(zc) >= 1:
        raise DomainError("green_potential_dzbar requires |z| < 1")
    if rule is None:
        rule = default_rules()[1]

    def h(w):
        return ((1 - np.abs(w) ** 2) * np.asarray(g(w)) * np.abs(zc - w)
                / ((np.conj(zc) - np.conj(w)) * (w * np.conj(zc) - 1)))

    return integrate_disk_singular(rule, h, zc, "inverse-distance") / (2 * TWO_PI)


def harmonic_coefficients(psi: BoundaryFunction, n_terms: int = DEFAULT_SERIES_TERMS) -> HarmonicCoefficients:
    """Discrete Fourier analysis of the boundary samples.

    Positive frequencies give the analytic-part coefficients a_n, negative
    frequencies the conjugates of the co-analytic coefficients b_n.
    """
    n = len(psi)
    if n_terms > n // 2:
        raise InsufficientSamplesError(
            f"{n_terms} coefficients need at least {2 * n_terms} samples, got {n}")
    c = np.fft.fft(psi.samples) / n
    a = c[: n_terms + 1].copy()
    b = np.zeros(n_terms + 1, dtype=complex)
    b[1:] = np.conj(c[-1 : -1 - n_terms : -1])
    return HarmonicCoefficients(a=a, b=b)


def poisson_extension_dz(coeffs: HarmonicCoefficients, z):
    """Wirtinger pair of the harmonic extension from its truncated series."""
    zc = as_complex(z)
    if abs(zc) >= 1:
        raise DomainError("series derivatives require |z| < 1")
    k = np.arange(1, coeffs.n_terms + 1)
    powers = zc ** (k - 1)
    dz = complex(np.sum(k * coeffs.a[1:] * powers))
    dzbar = complex(np.conj(np.sum(k * coeffs.b[1:] * powers)))
    return dz, dzbar


def series_extension(coeffs: HarmonicCoefficients, z) -> complex:
    """Value of the harmonic extension from its truncated series."""
    zc = as_complex(z)
    k = np.arange(1, coeffs.n_terms + 1)
    return complex(coeffs.a[0]
                   + np.sum(coeffs.a[1:] * zc ** k)
                   + np.conj(np.sum(coeffs.b[1:] * zc ** k)))


_DEFAULT_RULES = None


def default_rules():
    """Module-default validated (CircleRule, DiskRule) pair, built once."""
    global _DEFAULT_RULES
    if _DEFAULT_RULES is None:
        _DEFAULT_RULES = build_rules()
    return _DEFAULT_RULES


class PoissonSolution:
    """Evaluator for f = P - G and its Wirtinger derivatives.

    Point evaluations are pure and cached per point; the caches are only
    mutated under the interpreter's atomic dict insertion, so concurrent
    sweeps over disjoint points are safe.
    """

    def __init__(self, psi: BoundaryFunction, g: SourceFunction,
                 rule: DiskRule | None = None, series_terms: int = DEFAULT_SERIES_TERMS):
        self.psi = psi
        self.g = g
        self.rule = default_rules()[1] if rule is None else rule
        self.series_terms = min(series_terms, len(psi) // 2)
        self.coeffs = harmonic_coefficients(psi, self.series_terms)
        self.p_norm = psi.sup_norm
        self.g_norm = g.sup_norm_on(self.rule)
        self._value_cache: dict[complex, complex] = {}
        self._deriv_cache: dict[complex, WirtingerDerivatives] = {}

    def value(self, z) -> complex:
        zc = as_complex(z)
        hit = self._value_cache.get(zc)
        if hit is not None:
            return hit
        val = poisson_extension(self.psi, zc)
        if not self.g.is_zero:
            val -= green_potential(self.g, zc, self.rule)
        self._value_cache[zc] = val
        return val

    def values(self, zs) -> np.ndarray:
        return np.array([self.value(z) for z in np.asarray(zs, dtype=complex).ravel()])

    def wirtinger(self, z) -> WirtingerDerivatives:
        """Series derivatives of P minus quadrature derivatives of G."""
        zc = as_complex(z)
        hit = self._deriv_cache.get(zc)
        if hit is not None:
            return hit
        dz, dzbar = poisson_extension_dz(self.coeffs, zc)
        if not self.g.is_zero:
            dz -= green_potential_dz(self.g, zc, self.rule)
            dzbar -= green_potential_dzbar(self.g, zc, self.rule)
        result = WirtingerDerivatives(fz=dz, fzbar=dzbar)
        self._deriv_cache[zc] = result
        return result

    def laplacian_residual(self, z, h: float = 1e-3) -> float:
        """5-point Laplacian of the solution minus g at an interior point."""
        zc = as_complex(z)
        if abs(zc) + h >= 1:
            raise DomainError("Laplacian stencil leaves the disk")
        lap = (self.value(zc + h) + self.value(zc - h)
               + self.value(zc + 1j * h) + self.value(zc - 1j * h)
               - 4 * self.value(zc)) / h ** 2
        return abs(lap - complex(np.asarray(self.g(np.array([zc])))[0]))


def solve(psi: BoundaryFunction, g: SourceFunction, rule: DiskRule | None = None,
          series_terms: int = DEFAULT_SERIES_TERMS) -> PoissonSolution:
    """Build the evaluator for the solution of Delta f = g with trace psi."""
    return PoissonSolution(psi, g, rule=rule, series_terms=series_terms)
