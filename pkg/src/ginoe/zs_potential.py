"""The Zakharov-Shabat potential y(x; gamma) read off the Fredholm resolvent.

The potential is purely imaginary, y(x; gamma) = 2i X(x, gamma) with
X(x, gamma) = Y(2x, gamma), and Y(t, gamma) equals the resolvent
((1 - gamma T chi_t)^{-1} sqrt(gamma) g) evaluated at the cut point t.  Every
closed-form identity checked below then becomes a comparison between
independent Nystrom computations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .fredholm import build_system, log_det, resolvent_apply, resolvent_eval
from .gap_distribution import DistributionPoint, Route, gamma_factor
from .specfun import gauss_legendre, gaussian_g

#: Y decays like exp(-x^2); integrals over (t, inf) stop here
UPPER_CUTOFF = 6.0
QUAD_PER_UNIT = 8
MIN_QUAD = 40


@dataclass(frozen=True)
class PotentialSample:
    x: float
    gamma: float
    y12: float
    im_y: float


def y12(t: float, gamma: float = 1.0, m: int | None = None) -> float:
    """Y(t, gamma) = sqrt(gamma) ((1 - gamma T chi_t)^{-1} g)(t)."""
    gamma = float(gamma)
    if not (0.0 <= gamma <= 1.0):
        raise ValueError(f"gamma must lie in [0, 1], got {gamma}")
    if gamma == 0.0:
        return 0.0
    sys = build_system(kernels.T, t, gamma, m)
    q = resolvent_apply(sys, gaussian_g)
    return math.sqrt(gamma) * resolvent_eval(sys, q, gaussian_g, float(t))


def potential_sample(x: float, gamma: float = 1.0) -> PotentialSample:
    """y(x; gamma) = 2i Y(2x, gamma); returns the imaginary part as ``im_y``."""
    v = y12(2.0 * x, gamma)
    return PotentialSample(float(x), float(gamma), v, 2.0 * v)


def _rule(t: float, n: int | None):
    upper = max(UPPER_CUTOFF, t + 2.0)
    if n is None:
        n = max(MIN_QUAD, math.ceil(QUAD_PER_UNIT * (upper - t)))
    return gauss_legendre(n).mapped(t, upper)


def _profile(t: float, gamma: float, n: int | None):
    rule = _rule(t, n)
    values = np.array([y12(x, gamma) for x in rule.nodes])
    return rule, values


def mu(t: float, gamma: float = 1.0, n: int | None = None) -> float:
    """int_t^inf Y(x, gamma) dx, Gauss-Legendre on (t, 6)."""
    if gamma == 0.0:
        return 0.0
    rule, values = _profile(t, gamma, n)
    return float(np.dot(rule.weights, values))


def _integrals(t: float, gamma: float, n: int | None):
    rule, values = _profile(t, gamma, n)
    mu_val = float(np.dot(rule.weights, values))
    energy = float(np.dot(rule.weights, (rule.nodes - t) * values**2))
    return mu_val, energy


def cdf_closed_form(t: float, gamma: float = 1.0, n: int | None = None) -> DistributionPoint:
    """F^2 = exp(-int_t^inf (x-t) Y(x)^2 dx) (cosh mu - sqrt(gamma) sinh mu)."""
    t = float(t)
    gamma = float(gamma)
    if not (0.0 <= gamma <= 1.0):
        raise ValueError(f"gamma must lie in [0, 1], got {gamma}")
    if gamma == 0.0:
        return DistributionPoint(t, gamma, 1.0, 1.0, 1.0, Route.CLOSED_FORM)
    mu_val, energy = _integrals(t, gamma, n)
    det = math.exp(-energy)
    gam = math.cosh(mu_val) - math.sqrt(gamma) * math.sinh(mu_val)
    F = math.sqrt(max(det * gam, 0.0))
    return DistributionPoint(t, gamma, det, gam, min(F, 1.0), Route.CLOSED_FORM)


def verify_part1_identity(t: float, gamma: float = 1.0, n: int | None = None) -> float:
    """|ln det(1 - gamma T chi_t) + int_t^inf (x-t) Y(x)^2 dx|."""
    if gamma == 0.0:
        return 0.0
    _, energy = _integrals(t, gamma, n)
    return abs(log_det(build_system(kernels.T, t, gamma)) + energy)


def verify_gamma_closed_form(t: float, gamma: float = 1.0, n: int | None = None) -> float:
    """|Gamma_{t gamma} - (cosh mu - sqrt(gamma) sinh mu)|."""
    if gamma == 0.0:
        return 0.0
    mu_val = mu(t, gamma, n)
    return abs(gamma_factor(t, gamma) - (math.cosh(mu_val) - math.sqrt(gamma) * math.sinh(mu_val)))


@dataclass(frozen=True)
class ABReport:
    t: float
    gamma: float
    a_closed: float
    a_resolvent: float
    a_residual: float
    du_dt: float
    du_dt_predicted: float
    du_residual: float


def a_closed_form(t: float, gamma: float, n: int | None = None) -> float:
    m_ = mu(t, gamma, n)
    return math.sqrt(gamma) * math.cosh(m_) - math.sinh(m_)


def a_resolvent(t: float, gamma: float, n_quad: int = 96) -> float:
    """int_{-inf}^t ((1 - gamma T chi_t)^{-1} sqrt(gamma) g)(y) dy.

    Below min(t, 0) - 8 the integrand is g itself to double precision and
    its mass there is negligible."""
    sys = build_system(kernels.T, t, gamma)
    q = resolvent_apply(sys, gaussian_g)
    rule = gauss_legendre(n_quad).mapped(min(t, 0.0) - 8.0, t)
    return math.sqrt(gamma) * float(np.dot(rule.weights, resolvent_eval(sys, q, gaussian_g, rule.nodes)))


def verify_ab_system(t: float, gamma: float = 1.0, h: float = 1e-3) -> ABReport:
    """Check the closed form of A against the resolvent integral, and
    du/dt = -Y(t) A(t) with u = 1 - Gamma by a five-point difference."""
    t = float(t)
    gamma = float(gamma)
    if not (0.0 < gamma <= 1.0):
        raise ValueError(f"gamma must lie in (0, 1], got {gamma}")
    a_cf = a_closed_form(t, gamma)
    a_rs = a_resolvent(t, gamma)
    u = [1.0 - gamma_factor(t + k * h, gamma) for k in (-2, -1, 1, 2)]
    du = (u[0] - 8.0 * u[1] + 8.0 * u[2] - u[3]) / (12.0 * h)
    pred = -y12(t, gamma) * a_cf
    return ABReport(t, gamma, a_cf, a_rs, abs(a_cf - a_rs), du, pred, abs(du - pred))
