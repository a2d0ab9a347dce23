"""Tail asymptotics of F(t; gamma) and the left-tail constants."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .gap_distribution import Route, cdf
from .specfun import SQRT_2PI, erfc, polylog_3_2

#: eta0(1) as quoted with the Fredholm evaluation
ETA0_REFERENCE = 0.75277069
#: the value quoted for the series representation of eta0(1)
FORRESTER_REFERENCE = 1.06470738

DEFAULT_WINDOW = (-14.0, -10.0)
WINDOW_STEP = 0.5
SPREAD_LIMIT = 1e-2
WINDOW_FLOOR = -20.0


class TailConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class TailParams:
    gamma: float
    eta1: float
    eta0: float
    fit_window: tuple[float, float]
    spread: float = 0.0


def right_tail(t, gamma: float = 1.0):
    """1 - (gamma/4) erfc(t)."""
    return 1.0 - 0.25 * gamma * erfc(t)


def eta1(gamma: float) -> float:
    """Left-tail rate Li_{3/2}(gamma) / (2 sqrt(2 pi))."""
    gamma = float(gamma)
    if not (0.0 < gamma <= 1.0):
        raise ValueError(f"the left tail needs gamma in (0, 1], got {gamma}")
    return polylog_3_2(gamma) / (2.0 * SQRT_2PI)


def left_tail(t, params: TailParams):
    """eta0 exp(eta1 t)."""
    return params.eta0 * np.exp(params.eta1 * np.asarray(t, dtype=float))


def _window_ratios(gamma: float, rate: float, window: tuple[float, float]) -> np.ndarray:
    route = Route.SINGLE_DET if gamma == 1.0 else Route.PRODUCT
    lo, hi = window
    ts = np.arange(lo, hi + 0.5 * WINDOW_STEP, WINDOW_STEP)
    return np.array([cdf(t, gamma, route).F * math.exp(-rate * t) for t in ts])


def estimate_eta0(gamma: float = 1.0, window: tuple[float, float] = DEFAULT_WINDOW) -> TailParams:
    """Fit eta0 as the mean of F(t)/exp(eta1 t) over ``window``.

    The relative spread (max - min)/mean of the ratios must stay below 1%;
    otherwise the window slides left one unit at a time down to t = -20.
    """
    gamma = float(gamma)
    if not (0.05 < gamma <= 1.0):
        raise ValueError(f"eta0 estimation needs gamma in (0.05, 1], got {gamma}")
    rate = eta1(gamma)
    lo, hi = map(float, window)
    while True:
        r = _window_ratios(gamma, rate, (lo, hi))
        mean = float(np.mean(r))
        spread = float((r.max() - r.min()) / mean)
        if mean > 0 and spread < SPREAD_LIMIT:
            return TailParams(gamma, rate, mean, (lo, hi), spread)
        if lo - 1.0 < WINDOW_FLOOR:
            raise TailConvergenceError(
                f"eta0 ratios still spread by {spread:.3g} on [{lo}, {hi}]"
            )
        lo -= 1.0
        hi -= 1.0


def inner_sum(n: int) -> float:
    """sum_{m=1}^{n-1} 1/sqrt(m (n-m))."""
    m = np.arange(1, n, dtype=float)
    return float(np.sum(1.0 / np.sqrt(m * (n - m))))


def _series_partial_sums(ns: list[int]) -> list[float]:
    # partial sums of (1/n)(inner_sum(n) - pi) at each cutoff in ns
    out = []
    acc = 0.0
    n = 2
    for stop in ns:
        while n <= stop:
            acc += (inner_sum(n) - math.pi) / n
            n += 1
        out.append(acc)
    return out


def forrester_series(n0: int = 128, max_levels: int = 9, tol: float = 1e-9) -> float:
    """sum_{n>=2} (1/n)(-pi + sum_{m=1}^{n-1} 1/sqrt(m(n-m))).

    The summand behaves like n^{-3/2} with corrections in powers n^{-k-3/2}
    (both endpoints of the inner Riemann sum carry inverse square-root
    singularities), so partial sums at N = n0 2^i are Richardson-extrapolated
    with exponents 1/2, 3/2, 5/2, ... in 1/N.
    """
    ns = [n0 * 2**i for i in range(max_levels)]
    sums = _series_partial_sums(ns)
    rows = [[sums[0]]]
    for i in range(1, max_levels):
        row = [sums[i]]
        for j in range(i):
            f = 2.0 ** (j + 0.5)
            row.append((f * row[j] - rows[i - 1][j]) / (f - 1.0))
        rows.append(row)
        if i >= 2 and abs(row[-1] - rows[i - 1][-1]) < tol:
            return row[-1]
    raise TailConvergenceError("series extrapolation did not settle")


def forrester_constant() -> float:
    """exp(ln 2 - 1/4 + series / (4 pi)), the series form of eta0(1)."""
    return math.exp(math.log(2.0) - 0.25 + forrester_series() / (4.0 * math.pi))


def verify_intform(t: float, gamma: float) -> float:
    """|int_R -ln(1 - gamma exp(-t^2 x^2 / 2)) dx - sqrt(2 pi) Li_{3/2}(gamma)/|t||."""
    t = float(t)
    gamma = float(gamma)
    if t == 0.0:
        raise ValueError("t must be nonzero")
    if not (0.0 < gamma < 1.0):
        raise ValueError(f"gamma must lie in (0, 1), got {gamma}")
    a = 0.5 * t * t

    def h(x):
        return -math.log1p(-gamma * math.exp(-a * x * x))

    half, _ = integrate.quad(h, 0.0, math.inf, epsabs=1e-14, epsrel=1e-13, limit=200)
    return abs(2.0 * half - SQRT_2PI * polylog_3_2(gamma) / abs(t))
