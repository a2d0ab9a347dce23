"""The limiting law F(t; gamma) of the largest real GinOE eigenvalue.

Two Fredholm routes are provided: the product of det(1 - gamma T chi_t) with
the rank-one correction Gamma, and (for gamma = 1) the single determinant
det(1 - S chi_t).  The closed form through the Zakharov-Shabat potential lives
in :mod:`ginoe.zs_potential`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .fredholm import (
    build_system,
    log_det,
    log_det_matrix,
    resolvent_apply,
)
from .specfun import gaussian_G, gaussian_g

PDF_STEP = 1e-2

#: reference moments of the GOE Tracy-Widom law (excess kurtosis)
GOE_TABLE_MOMENTS = {"mean": -1.20653, "variance": 1.60778, "skewness": 0.29346, "kurtosis": 0.16524}
#: reference moments of F(t; 1) (excess kurtosis)
GINOE_TABLE_MOMENTS = {"mean": -1.30319, "variance": 3.97536, "skewness": -1.76969, "kurtosis": 5.14560}


class Route(enum.Enum):
    PRODUCT = "PRODUCT"
    SINGLE_DET = "SINGLE_DET"
    CLOSED_FORM = "CLOSED_FORM"


@dataclass(frozen=True)
class DistributionPoint:
    t: float
    gamma: float
    det_factor: float
    gamma_factor: float | None
    F: float
    route: Route


@dataclass(frozen=True)
class MomentSummary:
    mean: float
    variance: float
    skewness: float
    kurtosis: float
    gamma: float
    grid_range: tuple[float, float]
    tail_corrected: bool
    kurtosis_convention: str = "excess"


def _check_gamma(gamma: float) -> float:
    gamma = float(gamma)
    if not (0.0 <= gamma <= 1.0):
        raise ValueError(f"gamma must lie in [0, 1], got {gamma}")
    return gamma


def gamma_factor(t: float, gamma: float = 1.0, m: int | None = None) -> float:
    """Gamma_{t gamma} = 1 - gamma int_t^inf G(x) ((1 - gamma T chi_t)^{-1} g)(x) dx."""
    gamma = _check_gamma(gamma)
    if gamma == 0.0:
        return 1.0
    sys = build_system(kernels.T, t, gamma, m)
    q = resolvent_apply(sys, gaussian_g)
    return 1.0 - gamma * float(np.dot(sys.weights, gaussian_G(sys.grid) * q))


def _product_point(t: float, gamma: float, m: int | None) -> DistributionPoint:
    if gamma == 0.0:
        return DistributionPoint(t, gamma, 1.0, 1.0, 1.0, Route.PRODUCT)
    sys = build_system(kernels.T, t, gamma, m)
    det = math.exp(log_det(sys))
    q = resolvent_apply(sys, gaussian_g)
    gam = 1.0 - gamma * float(np.dot(sys.weights, gaussian_G(sys.grid) * q))
    F = math.sqrt(max(det * gam, 0.0))
    return DistributionPoint(t, gamma, det, gam, min(F, 1.0), Route.PRODUCT)


def _single_det_point(t: float, m: int | None) -> DistributionPoint:
    sys = build_system(kernels.S, t, 1.0, m)
    F = math.exp(log_det(sys))
    return DistributionPoint(t, 1.0, F, None, min(F, 1.0), Route.SINGLE_DET)


def cdf(t: float, gamma: float = 1.0, route: Route | str | None = None, m: int | None = None) -> DistributionPoint:
    """Evaluate F(t; gamma).

    ``route`` defaults to PRODUCT; SINGLE_DET is only valid at gamma = 1 and
    CLOSED_FORM is delegated to :func:`ginoe.zs_potential.cdf_closed_form`.
    """
    gamma = _check_gamma(gamma)
    t = float(t)
    route = Route(route) if route is not None else Route.PRODUCT
    if route is Route.PRODUCT:
        return _product_point(t, gamma, m)
    if route is Route.SINGLE_DET:
        if gamma != 1.0:
            raise ValueError("the single-determinant formula holds for gamma = 1 only")
        return _single_det_point(t, m)
    from .zs_potential import cdf_closed_form

    return cdf_closed_form(t, gamma)


def _fast_route(gamma: float) -> Route:
    return Route.SINGLE_DET if gamma == 1.0 else Route.PRODUCT


def cdf_values(ts, gamma: float = 1.0, route: Route | str | None = None, m: int | None = None) -> np.ndarray:
    return np.array([cdf(t, gamma, route, m).F for t in np.asarray(ts, dtype=float)])


def _five_point(values: np.ndarray, h: float) -> np.ndarray:
    return (values[:-4] - 8.0 * values[1:-3] + 8.0 * values[3:-1] - values[4:]) / (12.0 * h)


def pdf(t: float, gamma: float = 1.0, h: float = PDF_STEP, route: Route | str | None = None) -> float:
    """Density by a five-point central difference of the CDF."""
    gamma = _check_gamma(gamma)
    if gamma == 0.0:
        return 0.0
    route = Route(route) if route is not None else _fast_route(gamma)
    ts = float(t) + h * np.arange(-2, 3)
    return float(_five_point(cdf_values(ts, gamma, route), h)[0])


def pdf_grid(t_min: float, t_max: float, gamma: float = 1.0, h: float = PDF_STEP, route=None):
    """Density on the uniform grid t_min, t_min + h, ..., t_max; shares CDF stencil points."""
    gamma = _check_gamma(gamma)
    n = int(round((t_max - t_min) / h))
    ts = t_min + h * np.arange(-2, n + 3)
    if gamma == 0.0:
        return ts[2:-2], np.zeros(n + 1)
    route = Route(route) if route is not None else _fast_route(gamma)
    return ts[2:-2], _five_point(cdf_values(ts, gamma, route), h)


def _tail_raw(a: float, rate: float, k: int) -> float:
    # int_{-inf}^a t^k rate e^{rate (t - a)} dt, by parts
    if k == 0:
        return 1.0
    return a**k - (k / rate) * _tail_raw(a, rate, k - 1)


def moments(
    gamma: float = 1.0,
    t_min: float = -30.0,
    t_max: float = 8.0,
    h: float = PDF_STEP,
    tail_correct: bool = True,
    route=None,
) -> MomentSummary:
    """Mean, variance, skewness and excess kurtosis of F(.; gamma).

    The density is integrated by the trapezoid rule on [t_min, t_max]; mass
    below t_min follows the exponential left tail eta0 exp(eta1 t).  Raw
    moments are normalised by the total mass before centring.
    """
    gamma = _check_gamma(gamma)
    if gamma == 0.0:
        raise ValueError("moments need gamma in (0, 1]")
    ts, p = pdf_grid(t_min, t_max, gamma, h, route)
    raw = np.array([np.trapezoid(p * ts**k, ts) for k in range(5)])
    if tail_correct:
        from .tails import estimate_eta0

        params = estimate_eta0(gamma)
        mass = params.eta0 * math.exp(params.eta1 * t_min)
        raw = raw + np.array([mass * _tail_raw(t_min, params.eta1, k) for k in range(5)])
    raw = raw / raw[0]
    mu = raw[1]
    var = raw[2] - mu**2
    c3 = raw[3] - 3 * mu * raw[2] + 2 * mu**3
    c4 = raw[4] - 4 * mu * raw[3] + 6 * mu**2 * raw[2] - 3 * mu**4
    return MomentSummary(
        mean=float(mu),
        variance=float(var),
        skewness=float(c3 / var**1.5),
        kurtosis=float(c4 / var**2 - 3.0),
        gamma=gamma,
        grid_range=(float(t_min), float(t_max)),
        tail_corrected=tail_correct,
    )


@dataclass(frozen=True)
class FSReport:
    t: float
    det_minus: float
    det_plus: float
    bracket: float
    fs8_residual: float
    product_residual: float


def verify_fs_identities(t: float, m: int | None = None) -> FSReport:
    """Check det(1-S_t) = det(1+S_t) <chi_0, (1+S_t)^{-1} delta_0> and
    det(1 - T chi_t) Gamma_t = det(1 - S_t)^2 on discretised (0, inf)."""
    t = float(t)
    sys = build_system(kernels.S_shifted(t), t, 1.0, m)
    a = sys.scaled_matrix
    eye = np.eye(sys.m)
    d_minus = math.exp(log_det(sys))
    d_plus = math.exp(log_det_matrix(eye + a))
    # (1+S_t)^{-1} delta_0 = delta_0 - r, with r solving (1 + S_t) r = S_t(., 0)
    sw = sys.sqrt_weights
    col = sys.kernel(sys.grid, 0.0)
    r = np.linalg.solve(eye + a, sw * col) / sw
    bracket = 1.0 - float(np.dot(sys.weights, r))
    fs8 = abs(d_minus - d_plus * bracket)
    pt = _product_point(t, 1.0, None)
    product = abs(pt.det_factor * pt.gamma_factor - d_minus**2)
    return FSReport(t, d_minus, d_plus, bracket, fs8, product)
