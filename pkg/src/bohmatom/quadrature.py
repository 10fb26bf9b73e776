"""Deterministic quadrature rules for normalization and averaging integrals.

Node sets are fixed functions of their arguments and sums are taken with
numpy's pairwise accumulation, so repeated runs give identical results.
"""

from __future__ import annotations

import numpy as np
from scipy.special import roots_genlaguerre, roots_legendre

from .physics_core import AtomConfig


def gauss_legendre(n: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights mapped to [a, b]."""
    x, w = roots_legendre(n)
    half = 0.5 * (b - a)
    return a + half * (x + 1.0), half * w


def composite_gauss_legendre(edges, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre rule with n nodes on each panel between consecutive edges."""
    nodes, weights = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        x, w = gauss_legendre(n, lo, hi)
        nodes.append(x)
        weights.append(w)
    return np.concatenate(nodes), np.concatenate(weights)


def angular_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes theta_i and weights w_i with sum_i w_i f(theta_i) ~ int_0^pi f sin(theta) dtheta.

    Gauss-Legendre in x = cos(theta), exact for integrands polynomial in
    cos(theta) up to degree 2n - 1.
    """
    x, w = roots_legendre(n)
    return np.arccos(x), w


def radial_nodes(atom: AtomConfig, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes r_i and weights W_i with sum_i W_i g(r_i) ~ int_0^inf g(r) r^2 dr.

    Generalized Gauss-Laguerre in u = 2 m Z alpha r with weight exponent
    2 * gamma_exp, matched to the relativistic ground-state density so its
    integrable r^(2 gamma - 2) endpoint behavior is handled exactly and r = 0
    is never sampled. Weights are assembled in log space to avoid overflow in
    the exp(u) compensation factor.
    """
    g = atom.gamma_exp
    c = 2.0 * atom.mass * atom.za
    u, w = roots_genlaguerre(n, 2.0 * g)
    weights = np.exp(np.log(w) + u + (2.0 - 2.0 * g) * np.log(u)) / c**3
    return u / c, weights
