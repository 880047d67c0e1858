"""Closed-form elementary objects on the unit disk.

Green function, Poisson kernel, the disk automorphism used to relocate
singularities, and numeric Wirtinger derivatives of arbitrary point maps.
All functions accept plain complex numbers, ComplexPoint, or numpy arrays
of complex values and broadcast in the numpy way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CoincidentPointsError, DomainError, StencilError

# Guard for the log singularity of the Green function; avoids relying on
# platform signed-zero behaviour of an exact equality test.
COINCIDENCE_GUARD = 1e-300

BOUNDARY_TOL = 1e-12

DEFAULT_FD_STEP = 1e-5


@dataclass(frozen=True)
class ComplexPoint:
    """A point of the closed unit disk."""

    re: float
    im: float

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexPoint":
        z = complex(z)
        return cls(z.real, z.imag)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def modulus(self) -> float:
        return math.hypot(self.re, self.im)

    def argument(self) -> float:
        return math.atan2(self.im, self.re)

    def is_interior(self) -> bool:
        return self.modulus() < 1.0

    def is_boundary(self, tol: float = BOUNDARY_TOL) -> bool:
        return abs(self.modulus() - 1.0) <= tol

    def validate(self, tol: float = BOUNDARY_TOL) -> "ComplexPoint":
        if self.modulus() > 1.0 + tol:
            raise DomainError(f"point {self.to_complex()} lies outside the closed unit disk")
        return self


def as_complex(z):
    """Coerce ComplexPoint / scalar / array input to complex."""
    if isinstance(z, ComplexPoint):
        return z.to_complex()
    if isinstance(z, np.ndarray):
        return z.astype(complex, copy=False)
    return complex(z)


@dataclass(frozen=True)
class WirtingerDerivatives:
    """The pair (df/dz, df/dzbar) of a planar map at a point."""

    fz: complex
    fzbar: complex

    @property
    def norm(self) -> float:
        """Operator norm of the real differential: |fz| + |fzbar|."""
        return abs(self.fz) + abs(self.fzbar)

    @property
    def lambda_(self) -> float:
        """Smallest singular value of the real differential: ||fz| - |fzbar||."""
        return abs(abs(self.fz) - abs(self.fzbar))

    @property
    def jacobian(self) -> float:
        """Jacobian determinant: |fz|^2 - |fzbar|^2."""
        return abs(self.fz) ** 2 - abs(self.fzbar) ** 2


def green(z, w):
    """Green function of the unit disk, log|1 - z*conj(w)| - log|z - w|.

    Symmetric in its arguments and nonnegative for points of the closed
    disk; raises CoincidentPointsError when |z - w| underflows the guard.
    """
    zc, wc = as_complex(z), as_complex(w)
    sep = np.abs(zc - wc)
    if np.any(sep < COINCIDENCE_GUARD):
        raise CoincidentPointsError("green(z, w) requires z != w")
    if np.any(np.abs(zc) > 1 + BOUNDARY_TOL) or np.any(np.abs(wc) > 1 + BOUNDARY_TOL):
        raise DomainError("green(z, w) is defined on the closed unit disk")
    return np.log(np.abs(1 - zc * np.conj(wc))) - np.log(sep)


def poisson_kernel(z, t):
    """Poisson kernel (1 - |z|^2) / |1 - z e^{-it}|^2 for interior z."""
    zc = as_complex(z)
    if np.any(np.abs(zc) >= 1):
        raise DomainError("poisson_kernel requires |z| < 1")
    t = np.asarray(t, dtype=float)
    return (1 - np.abs(zc) ** 2) / np.abs(1 - zc * np.exp(-1j * t)) ** 2


def mobius(z, w):
    """Disk automorphism w -> (z - w) / (1 - conj(z) w) for fixed interior z.

    For fixed z this map is an involution of the closed disk: applying it
    twice returns w.
    """
    zc, wc = as_complex(z), as_complex(w)
    if np.any(np.abs(zc) >= 1):
        raise DomainError("mobius requires |z| < 1")
    if np.any(np.abs(wc) > 1 + BOUNDARY_TOL):
        raise DomainError("mobius requires |w| <= 1")
    return (zc - wc) / (1 - np.conj(zc) * wc)


def _central_pair(f, z: complex, h: float) -> WirtingerDerivatives:
    fx = (f(z + h) - f(z - h)) / (2 * h)
    fy = (f(z + 1j * h) - f(z - 1j * h)) / (2 * h)
    return WirtingerDerivatives(fz=(fx - 1j * fy) / 2, fzbar=(fx + 1j * fy) / 2)


def wirtinger_numeric(f, z, h: float = DEFAULT_FD_STEP, richardson: bool = False) -> WirtingerDerivatives:
    """O(h^2) central-difference Wirtinger pair of a point map at interior z.

    The four stencil points must stay inside the disk; callers close to the
    boundary must shrink h. With richardson=True a second evaluation at h/2
    removes the leading error term.
    """
    zc = as_complex(z)
    if abs(zc) + h >= 1:
        raise StencilError(f"stencil of width {h} leaves the disk at z={zc}")
    d = _central_pair(f, zc, h)
    if not richardson:
        return d
    d2 = _central_pair(f, zc, h / 2)
    return WirtingerDerivatives(
        fz=(4 * d2.fz - d.fz) / 3,
        fzbar=(4 * d2.fzbar - d.fzbar) / 3,
    )
