"""Tolerance/resolution profiles shared by the CLI and the test harness.

The acceptance thresholds themselves are fixed; profiles only set the
resolution knobs (rule sizes, sample counts, pair counts). "fast" keeps
the whole verification under a couple of minutes; "strict" roughly
doubles every resolution for slower, tighter reruns.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import DomainError

ENV_PROFILE = "POISSON_LAB_TOL"


@dataclass(frozen=True)
class ToleranceProfile:
    name: str
    radial_n: int
    angular_n: int
    rule_tol: float
    boundary_samples: int
    jump_boundary_samples: int
    series_terms: int
    pair_count: int


FAST = ToleranceProfile(
    name="fast",
    radial_n=96,
    angular_n=256,
    rule_tol=1e-8,
    boundary_samples=8192,
    jump_boundary_samples=1 << 17,
    series_terms=256,
    pair_count=10_000,
)

STRICT = ToleranceProfile(
    name="strict",
    radial_n=160,
    angular_n=512,
    rule_tol=1e-8,
    boundary_samples=32768,
    jump_boundary_samples=1 << 18,
    series_terms=384,
    pair_count=40_000,
)

_PROFILES = {"fast": FAST, "strict": STRICT}


def resolve_profile(name: str | None = None) -> ToleranceProfile:
    """Profile by name, falling back to the environment, then to fast."""
    if name is None:
        name = os.environ.get(ENV_PROFILE, "fast")
    try:
        return _PROFILES[name]
    except KeyError:
        raise DomainError(f"unknown tolerance profile {name!r}; choose from {sorted(_PROFILES)}")
