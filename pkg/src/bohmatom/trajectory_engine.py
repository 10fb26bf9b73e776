"""Particle trajectories as integral curves of a model's velocity field.

Integration runs in Cartesian coordinates with fixed-step classical RK4, which
avoids the phi coordinate singularity on the polar axis and keeps runs exactly
reproducible. The Dirac ground-state flow is a family of horizontal circles
(r and theta constant), so every numerical orbit can be checked against the
exact rotation returned by analytic_orbit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .coords import SphericalPoint, pole_safe_sin, vector_to_cartesian
from .dirac_states import SpinOrientation, bohm_velocity
from .errors import OriginSingularityError, TrajectorySingularityError
from .physics_core import AtomConfig
from .schrodinger_states import QuantumNumbers, bohm_momentum

#: Trajectories are aborted when they come this close to the nucleus, in units
#: of the Bohr radius. Ground-state circles never do; the guard protects
#: future superposition fields.
ORIGIN_GUARD_RADII = 1e-6


@dataclass(frozen=True)
class VelocityField:
    """Callable velocity field v(x) with model metadata and an origin guard."""

    fn: Callable[[np.ndarray], np.ndarray]
    model: str
    spin: SpinOrientation | None = None
    min_radius: float = 0.0

    def __call__(self, xyz: np.ndarray) -> np.ndarray:
        if self.min_radius > 0.0 and float(np.dot(xyz, xyz)) < self.min_radius**2:
            raise OriginSingularityError(
                f"trajectory entered guard radius {self.min_radius} around the origin"
            )
        return self.fn(xyz)


@dataclass(frozen=True)
class TrajectoryState:
    """Snapshot along a trajectory: time, Cartesian position and velocity."""

    t: float
    xyz: np.ndarray
    velocity: np.ndarray

    @property
    def position(self) -> SphericalPoint:
        return SphericalPoint.from_cartesian(self.xyz)

    @property
    def speed(self) -> float:
        return float(np.linalg.norm(self.velocity))


@dataclass
class Trajectory:
    """Uniform-step trajectory with its model tag (and spin for Dirac runs)."""

    states: list[TrajectoryState] = field(default_factory=list)
    model: str = ""
    spin: SpinOrientation | None = None

    def positions(self) -> np.ndarray:
        return np.array([s.xyz for s in self.states])

    def times(self) -> np.ndarray:
        return np.array([s.t for s in self.states])


def schrodinger_velocity_field(q: QuantumNumbers, atom: AtomConfig) -> VelocityField:
    """Guidance velocity grad(S)/mass of an eigenstate, as a Cartesian field.

    m = 0 states have identically zero field; the closure returns exact zeros
    without touching the wavefunction, so their trajectories are fixed points
    bit for bit.
    """
    if q.m == 0:
        def zero_fn(xyz: np.ndarray) -> np.ndarray:
            return np.zeros(3)

        return VelocityField(zero_fn, model="schrodinger", min_radius=0.0)

    guard = ORIGIN_GUARD_RADII * atom.bohr_radius

    def fn(xyz: np.ndarray) -> np.ndarray:
        point = SphericalPoint.from_cartesian(xyz)
        return vector_to_cartesian(point, bohm_momentum(q, atom, point) / atom.mass)

    return VelocityField(fn, model="schrodinger", min_radius=guard)


def dirac_velocity_field(spin: SpinOrientation, atom: AtomConfig) -> VelocityField:
    """Ground-state Dirac flow v = j/j0 as a Cartesian field."""
    guard = ORIGIN_GUARD_RADII * atom.bohr_radius

    def fn(xyz: np.ndarray) -> np.ndarray:
        return bohm_velocity(spin, atom, SphericalPoint.from_cartesian(xyz))

    return VelocityField(fn, model="dirac", spin=spin, min_radius=guard)


def integrate_trajectory(
    field: VelocityField, start: SphericalPoint, dt: float, steps: int
) -> Trajectory:
    """Fixed-step RK4 integration of dx/dt = v(x), returning every state.

    steps = 0 yields the single starting state. If any field evaluation hits
    the origin guard, a TrajectorySingularityError carrying the partial
    trajectory (up to the last good state) is raised.
    """
    if dt <= 0.0 or not math.isfinite(dt):
        raise ValueError(f"dt must be positive and finite, got {dt}")
    if steps < 0:
        raise ValueError(f"steps must be nonnegative, got {steps}")

    trajectory = Trajectory(model=field.model, spin=field.spin)
    x = start.to_cartesian()
    try:
        v = field(x)
    except OriginSingularityError as exc:
        raise TrajectorySingularityError(str(exc), trajectory=trajectory) from exc
    trajectory.states.append(TrajectoryState(0.0, x, v))

    for k in range(1, steps + 1):
        try:
            k1 = v
            k2 = field(x + 0.5 * dt * k1)
            k3 = field(x + 0.5 * dt * k2)
            k4 = field(x + dt * k3)
            x = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            v = field(x)
        except OriginSingularityError as exc:
            raise TrajectorySingularityError(str(exc), trajectory=trajectory) from exc
        trajectory.states.append(TrajectoryState(k * dt, x, v))
    return trajectory


def circular_orbit(start: SphericalPoint, angular_rate: float, t: float) -> SphericalPoint:
    """Uniform rotation about the z axis: r and theta fixed, phi advanced by rate*t."""
    phi = (start.phi + angular_rate * t) % (2.0 * math.pi)
    if phi >= 2.0 * math.pi:
        phi = 0.0
    return SphericalPoint(start.r, start.theta, phi)


def analytic_orbit(
    spin: SpinOrientation, atom: AtomConfig, start: SphericalPoint, t: float
) -> SphericalPoint:
    """Exact Dirac ground-state trajectory through `start` evaluated at time t.

    The flow rotates the point about the z axis at angular rate
    omega = |v(theta)| / (r sin(theta)), anticlockwise for spin up and
    clockwise for spin down. On the axis (sin(theta) = 0) the point is fixed.
    """
    st = pole_safe_sin(start.theta)
    if st == 0.0:
        return start
    speed = float(np.linalg.norm(bohm_velocity(spin, atom, start)))
    omega = speed / (start.r * st)
    if spin is SpinOrientation.DOWN:
        omega = -omega
    return circular_orbit(start, omega, t)


def orbital_period(spin: SpinOrientation, atom: AtomConfig, start: SphericalPoint) -> float:
    """Period of the analytic circular orbit through `start`; inf on the axis."""
    st = pole_safe_sin(start.theta)
    if st == 0.0:
        return math.inf
    speed = float(np.linalg.norm(bohm_velocity(spin, atom, start)))
    if speed == 0.0:
        return math.inf
    return 2.0 * math.pi * start.r * st / speed
