"""Non-relativistic hydrogen eigenstates, their polar form, and the guidance flow.

An energy eigenstate psi_nlm = R_nl(r) Y_l^m(theta, phi) has phase S = m*phi
wherever it does not vanish, so the phase gradient is known in closed form:

    grad S = (0, 0, m / (r sin(theta)))   in the (r_hat, theta_hat, phi_hat) basis.

The guidance momentum is grad S and the probability current is
|psi|^2 grad S / mass. Every vector returned by this module is expressed in
the local spherical basis; use coords.vector_to_cartesian to convert.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coords import SphericalPoint, pole_safe_sin
from .errors import DomainError, PhaseSingularityError
from .physics_core import AtomConfig
from .quadrature import angular_nodes, composite_gauss_legendre
from .special_functions import associated_laguerre, spherical_harmonic


@dataclass(frozen=True)
class QuantumNumbers:
    """(n, l, m) with n >= 1, 0 <= l <= n - 1, |m| <= l."""

    n: int
    l: int
    m: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.l <= self.n - 1:
            raise DomainError(f"l must lie in [0, n-1], got n={self.n}, l={self.l}")
        if abs(self.m) > self.l:
            raise DomainError(f"|m| must not exceed l, got l={self.l}, m={self.m}")


@dataclass(frozen=True)
class PolarForm:
    """Amplitude-phase decomposition psi = amplitude * exp(i * phase).

    phase_defined is False exactly when the amplitude vanishes; the stored
    phase is NaN in that case.
    """

    amplitude: float
    phase: float
    phase_defined: bool = True


def radial_function(q: QuantumNumbers, atom: AtomConfig, r: float) -> float:
    """Normalized radial factor R_nl(r) with int_0^inf R^2 r^2 dr = 1."""
    if r < 0.0 or not math.isfinite(r):
        raise DomainError(f"r must be nonnegative and finite, got {r}")
    a = atom.bohr_radius
    rho = 2.0 * r / (q.n * a)
    norm = math.sqrt(
        (2.0 / (q.n * a)) ** 3
        * math.factorial(q.n - q.l - 1)
        / (2.0 * q.n * math.factorial(q.n + q.l))
    )
    return norm * rho**q.l * math.exp(-0.5 * rho) * associated_laguerre(q.n - q.l - 1, 2 * q.l + 1, rho)


def hydrogen_wavefunction(q: QuantumNumbers, atom: AtomConfig, p: SphericalPoint) -> complex:
    """psi_nlm(r, theta, phi), normalized so that int |psi|^2 d^3x = 1."""
    return radial_function(q, atom, p.r) * spherical_harmonic(q.l, q.m, p.theta, p.phi)


def polar_decompose(psi: complex) -> PolarForm:
    """Split psi into amplitude |psi| and phase arg(psi) in (-pi, pi]."""
    amplitude = abs(psi)
    if amplitude == 0.0:
        return PolarForm(0.0, math.nan, phase_defined=False)
    return PolarForm(amplitude, math.atan2(psi.imag, psi.real))


def bohm_momentum(q: QuantumNumbers, atom: AtomConfig, p: SphericalPoint) -> np.ndarray:
    """Guidance momentum grad S in the spherical basis.

    Identically zero for m = 0 states (real wavefunction, S = 0). For m != 0
    the phase S = m*phi is singular on the polar axis and undefined at nodes.
    """
    if q.m == 0:
        return np.zeros(3)
    st = pole_safe_sin(p.theta)
    if p.r == 0.0 or st == 0.0:
        raise PhaseSingularityError(
            f"phase singularity: grad(m*phi) undefined at r={p.r}, theta={p.theta}"
        )
    if hydrogen_wavefunction(q, atom, p) == 0.0:
        raise PhaseSingularityError("phase singularity: wavefunction node")
    return np.array([0.0, 0.0, q.m / (p.r * st)])


def probability_current(q: QuantumNumbers, atom: AtomConfig, p: SphericalPoint) -> np.ndarray:
    """Probability current |psi|^2 grad S / mass in the spherical basis.

    Well defined everywhere: it vanishes at nodes and (for m != 0) on the
    polar axis, where |psi|^2 goes to zero faster than 1/(r sin theta) grows.
    """
    if q.m == 0:
        return np.zeros(3)
    st = pole_safe_sin(p.theta)
    if p.r == 0.0 or st == 0.0:
        return np.zeros(3)
    density = abs(hydrogen_wavefunction(q, atom, p)) ** 2
    return np.array([0.0, 0.0, density * q.m / (atom.mass * p.r * st)])


def state_norm(q: QuantumNumbers, atom: AtomConfig, n_radial: int = 64, n_theta: int = 64) -> float:
    """Quadrature value of int |psi_nlm|^2 d^3x (should equal 1).

    Composite Gauss-Legendre panels in r out to 45 n a0 (density tail below
    1e-39 of the peak), Gauss-Legendre in cos(theta), exact 2*pi in phi.
    """
    a = atom.bohr_radius
    edges = np.array([0.0, 2.0, 8.0, 20.0, 45.0]) * q.n * a
    r_nodes, r_weights = composite_gauss_legendre(edges, n_radial)
    radial = np.array([radial_function(q, atom, r) ** 2 * r * r for r in r_nodes])
    theta_nodes, theta_weights = angular_nodes(n_theta)
    angular = np.array(
        [abs(spherical_harmonic(q.l, q.m, t, 0.0)) ** 2 for t in theta_nodes]
    )
    return 2.0 * math.pi * float(np.sum(r_weights * radial)) * float(np.sum(theta_weights * angular))
