"""Special functions and Gauss-Legendre quadrature."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import special

SQRT_PI = math.sqrt(math.pi)
SQRT_2PI = math.sqrt(2.0 * math.pi)

# B_{2j} for j = 1..12
_BERNOULLI_EVEN = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
)


def erfc(x):
    """Complementary error function, elementwise.

    Backed by the Cephes implementation in scipy, which is accurate to a few
    ulp over the normal floating range (|x| <~ 26.2; beyond that the result is
    subnormal and only absolutely accurate).
    """
    return special.erfc(x)


def gaussian_g(x):
    """g(x) = exp(-x^2)/sqrt(pi)."""
    x = np.asarray(x, dtype=float)
    return np.exp(-x * x) / SQRT_PI


def gaussian_G(x):
    """Cumulative of ``gaussian_g``: G(x) = erfc(-x)/2."""
    return 0.5 * special.erfc(-np.asarray(x, dtype=float))


def _zeta_euler_maclaurin(s: float, n_terms: int = 20) -> float:
    # Valid for real s > -1, s != 1.
    head = math.fsum(k ** (-s) for k in range(1, n_terms))
    N = float(n_terms)
    tail = N ** (1.0 - s) / (s - 1.0) + 0.5 * N ** (-s)
    rising = s  # s (s+1) ... (s+2j-2)
    power = N ** (-s - 1.0)
    fact = 2.0
    for j, b2j in enumerate(_BERNOULLI_EVEN, start=1):
        term = b2j / fact * rising * power
        tail += term
        if abs(term) < 1e-18 * abs(head + tail):
            break
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power /= N * N
        fact *= (2 * j + 1) * (2 * j + 2)
    return head + tail


def riemann_zeta(s: float) -> float:
    """Riemann zeta at a real non-pole argument (used for half-integers)."""
    if s == 1.0:
        raise ValueError("pole at s = 1")
    if s > -0.75:
        return _zeta_euler_maclaurin(s)
    # reflection: zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
    return (
        2.0**s
        * math.pi ** (s - 1.0)
        * math.sin(0.5 * math.pi * s)
        * math.gamma(1.0 - s)
        * _zeta_euler_maclaurin(1.0 - s)
    )


ZETA_3_2 = _zeta_euler_maclaurin(1.5)


def polylog_3_2(gamma: float) -> float:
    """Li_{3/2}(gamma) = sum_{k>=1} gamma^k k^{-3/2} for 0 <= gamma <= 1."""
    gamma = float(gamma)
    if not (0.0 <= gamma <= 1.0):
        raise ValueError(f"polylog_3_2 needs gamma in [0, 1], got {gamma}")
    if gamma == 0.0:
        return 0.0
    if gamma == 1.0:
        return ZETA_3_2
    if gamma <= 0.5:
        # terms fall below 1e-17 after at most ~57 steps; geometric tail bound
        k = np.arange(1, 80, dtype=float)
        terms = gamma**k * k**-1.5
        return math.fsum(terms[terms > 1e-300])
    # Expansion about gamma = 1 in mu = ln(gamma), |mu| <= ln 2 < 2 pi:
    #   Li_s(e^mu) = Gamma(1-s) (-mu)^(s-1) + sum_k zeta(s-k) mu^k / k!
    mu = math.log(gamma)
    total = -2.0 * SQRT_PI * math.sqrt(-mu)
    coeff = 1.0
    for k in range(0, 40):
        term = riemann_zeta(1.5 - k) * coeff
        total += term
        if k > 2 and abs(term) < 1e-18:
            break
        coeff *= mu / (k + 1)
    return total


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre rule on [-1, 1] and its affine image on ``interval``."""

    order: int
    nodes: np.ndarray
    weights: np.ndarray
    interval: tuple[float, float] = (-1.0, 1.0)

    def mapped(self, a: float, b: float) -> "QuadratureRule":
        if not b > a:
            raise ValueError(f"empty interval ({a}, {b})")
        a0, b0 = self.interval
        scale = (b - a) / (b0 - a0)
        nodes = a + (self.nodes - a0) * scale
        return QuadratureRule(self.order, nodes, self.weights * scale, (float(a), float(b)))

    def integrate(self, f) -> float:
        return float(np.dot(self.weights, f(self.nodes)))


def _legendre_newton(m: int):
    k = np.arange(1, m + 1, dtype=float)
    x = np.cos(math.pi * (k - 0.25) / (m + 0.5))
    for _ in range(100):
        p0 = np.ones_like(x)
        p1 = x.copy()
        for j in range(2, m + 1):
            p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
        dp = m * (x * p1 - p0) / (x * x - 1.0)
        dx = p1 / dp
        x = x - dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    # derivative at the converged nodes
    p0 = np.ones_like(x)
    p1 = x.copy()
    for j in range(2, m + 1):
        p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
    dp = m * (x * p1 - p0) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    return x, w


@lru_cache(maxsize=256)
def _gauss_legendre_cached(m: int):
    x, w = _legendre_newton(m)
    # roots come out decreasing; symmetrise to kill rounding asymmetry
    x = x[::-1]
    w = w[::-1]
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    if m % 2 == 1:
        x[m // 2] = 0.0
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def gauss_legendre(m: int) -> QuadratureRule:
    """m-point Gauss-Legendre rule on [-1, 1], 1 <= m <= 4096."""
    if isinstance(m, bool) or int(m) != m or not (1 <= m <= 4096):
        raise ValueError(f"Gauss-Legendre order must be an integer in [1, 4096], got {m}")
    m = int(m)
    x, w = _gauss_legendre_cached(m)
    return QuadratureRule(m, x, w)
