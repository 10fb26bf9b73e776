"""Spherical points and conversions between spherical and Cartesian vector components.

All vector components expressed "in the spherical basis" refer to the local
orthonormal triad (r_hat, theta_hat, phi_hat) at the point in question.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SphericalPoint:
    """Position (r, theta, phi) with r >= 0, theta in [0, pi], phi in [0, 2*pi)."""

    r: float
    theta: float
    phi: float

    def __post_init__(self):
        if not (math.isfinite(self.r) and math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise DomainError("spherical coordinates must be finite")
        if self.r < 0.0:
            raise DomainError(f"r must be nonnegative, got {self.r}")
        if not 0.0 <= self.theta <= math.pi:
            raise DomainError(f"theta must lie in [0, pi], got {self.theta}")
        if not 0.0 <= self.phi < TWO_PI:
            raise DomainError(f"phi must lie in [0, 2*pi), got {self.phi}")

    def to_cartesian(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array(
            [
                self.r * st * math.cos(self.phi),
                self.r * st * math.sin(self.phi),
                self.r * math.cos(self.theta),
            ]
        )

    @classmethod
    def from_cartesian(cls, xyz) -> "SphericalPoint":
        x, y, z = (float(c) for c in xyz)
        r = math.sqrt(x * x + y * y + z * z)
        if r == 0.0:
            return cls(0.0, 0.0, 0.0)
        theta = math.acos(max(-1.0, min(1.0, z / r)))
        phi = math.atan2(y, x) % TWO_PI
        if phi >= TWO_PI:  # guard against rounding x % 2pi up to 2pi itself
            phi = 0.0
        return cls(r, theta, phi)


def pole_safe_sin(theta: float) -> float:
    """sin(theta) with the theta = pi endpoint mapped to exactly zero.

    math.sin(math.pi) is ~1.2e-16, but within the [0, pi] colatitude domain
    the endpoint denotes the south pole, where axial geometry must be exact
    (zero azimuthal speed, singular azimuthal phase).
    """
    return 0.0 if theta == math.pi else math.sin(theta)


def spherical_basis(point: SphericalPoint) -> np.ndarray:
    """Rows are the unit vectors r_hat, theta_hat, phi_hat in Cartesian components."""
    st, ct = math.sin(point.theta), math.cos(point.theta)
    sp, cp = math.sin(point.phi), math.cos(point.phi)
    return np.array(
        [
            [st * cp, st * sp, ct],
            [ct * cp, ct * sp, -st],
            [-sp, cp, 0.0],
        ]
    )


def vector_to_cartesian(point: SphericalPoint, components) -> np.ndarray:
    """Map (v_r, v_theta, v_phi) at the point to Cartesian (v_x, v_y, v_z)."""
    return spherical_basis(point).T @ np.asarray(components, dtype=float)


def vector_to_spherical(point: SphericalPoint, vec) -> np.ndarray:
    """Map Cartesian (v_x, v_y, v_z) to local (v_r, v_theta, v_phi) at the point."""
    return spherical_basis(point) @ np.asarray(vec, dtype=float)
