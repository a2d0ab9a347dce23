"""Nystrom discretisation of the kernels on a truncated half-line.

Determinants, resolvent solves and Nystrom interpolation of the resolvent
applied to a right-hand side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy import linalg

from . import kernels
from .kernels import KernelKind, KernelSpec
from .specfun import gauss_legendre, gaussian_G, gaussian_g

#: truncation length beyond |t|
TRUNCATION = 8.0
NODES_PER_UNIT = 5
MIN_NODES = 50


class SingularDiscretizationError(ArithmeticError):
    """I - gamma*A is singular or has a non-positive determinant."""


def default_nodes(length: float) -> int:
    return max(MIN_NODES, math.ceil(NODES_PER_UNIT * length))


@dataclass(frozen=True)
class NystromSystem:
    kernel: KernelSpec
    t: float
    t_max: float
    gamma: float
    grid: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    scaled_matrix: np.ndarray = field(repr=False)

    @property
    def m(self) -> int:
        return self.grid.size

    @cached_property
    def sqrt_weights(self) -> np.ndarray:
        return np.sqrt(self.weights)

    @cached_property
    def _lu(self):
        a = np.eye(self.m) - self.gamma * self.scaled_matrix
        lu, piv = linalg.lu_factor(a, check_finite=False)
        if np.any(np.diag(lu) == 0.0):
            raise SingularDiscretizationError(
                f"singular I - gamma*K for {self.kernel.kind.name} at t={self.t}, gamma={self.gamma}"
            )
        return lu, piv


def build_system(kernel: KernelSpec, t: float, gamma: float = 1.0, m: int | None = None) -> NystromSystem:
    """Discretise ``gamma * K`` on (t, |t| + 8) with mapped Gauss-Legendre nodes.

    For the shifted kernel S_t the operator acts on (0, inf): ``t`` is the
    shift, the grid covers (0, |t| + 8), and ``sys.t`` records the left end 0.
    """
    t = float(t)
    gamma = float(gamma)
    if not math.isfinite(t):
        raise ValueError(f"t must be finite, got {t}")
    if not (0.0 <= gamma <= 1.0):
        raise ValueError(f"gamma must lie in [0, 1], got {gamma}")
    t_max = abs(t) + TRUNCATION
    if kernel.kind is KernelKind.S_SHIFTED:
        if kernel.shift != t:
            kernel = kernels.S_shifted(t)
        left = 0.0
    else:
        left = t
    if m is None:
        m = default_nodes(t_max - left)
    rule = gauss_legendre(m).mapped(left, t_max)
    x, w = rule.nodes, rule.weights
    sw = np.sqrt(w)
    a = sw[:, None] * kernel(x[:, None], x[None, :]) * sw[None, :]
    a = 0.5 * (a + a.T)
    return NystromSystem(kernel, left, t_max, gamma, x, w, a)


def log_det_matrix(a: np.ndarray) -> float:
    """ln det(a) by pivoted LU, for a matrix whose determinant must be positive."""
    lu, piv = linalg.lu_factor(a, check_finite=False)
    d = np.diag(lu)
    if np.any(d == 0.0):
        raise SingularDiscretizationError("singular matrix")
    sign = np.prod(np.sign(d)) * (-1.0) ** np.count_nonzero(piv != np.arange(piv.size))
    if sign <= 0:
        raise SingularDiscretizationError("non-positive determinant")
    return float(np.sum(np.log(np.abs(d))))


def log_det(sys: NystromSystem) -> float:
    """ln det(I - gamma A) for the scaled Nystrom matrix A."""
    if sys.gamma == 0.0:
        return 0.0
    lu, piv = sys._lu
    d = np.diag(lu)
    sign = np.prod(np.sign(d)) * (-1.0) ** np.count_nonzero(piv != np.arange(piv.size))
    if sign <= 0:
        raise SingularDiscretizationError(
            f"non-positive determinant for {sys.kernel.kind.name} at t={sys.t}, gamma={sys.gamma}"
        )
    return float(np.sum(np.log(np.abs(d))))


def resolvent_apply(sys: NystromSystem, rhs) -> np.ndarray:
    """Solve q = rhs + gamma K q at the grid nodes; returns q(x_i)."""
    f = np.asarray(rhs(sys.grid), dtype=float)
    if sys.gamma == 0.0:
        return f.copy()
    sw = sys.sqrt_weights
    z = linalg.lu_solve(sys._lu, sw * f, check_finite=False)
    return z / sw


def resolvent_eval(sys: NystromSystem, q: np.ndarray, rhs, x):
    """Nystrom interpolant rhs(x) + gamma sum_j w_j K(x, x_j) q_j, any finite x."""
    xa = np.asarray(x, dtype=float)
    base = np.asarray(rhs(xa), dtype=float)
    if sys.gamma == 0.0:
        return base if base.ndim else float(base)
    if sys.kernel.kind is KernelKind.S_SHIFTED:
        xs = np.maximum(xa, 0.0)
    else:
        xs = xa
    kmat = sys.kernel(xs[..., None], sys.grid)
    out = base + sys.gamma * (kmat @ (sys.weights * q))
    return out if out.ndim else float(out)


def verify_resolvent_integration(t: float, gamma: float, m: int | None = None, n_quad: int = 96) -> float:
    """Residual of the resolvent/integration interchange at x = t.

    Compares ((1 - gamma T chi_t)^{-1} sqrt(gamma) G)(t) with
    int_{min(t,0)-8}^{t} ((1 - gamma T chi_t)^{-1} sqrt(gamma) g)(y) dy.
    """
    sys = build_system(kernels.T, t, gamma, m)
    rg = math.sqrt(gamma)

    def big_g(x):
        return rg * gaussian_G(x)

    def small_g(x):
        return rg * gaussian_g(x)

    left = resolvent_eval(sys, resolvent_apply(sys, big_g), big_g, t)
    q = resolvent_apply(sys, small_g)
    rule = gauss_legendre(n_quad).mapped(min(t, 0.0) - TRUNCATION, t)
    right = float(np.dot(rule.weights, resolvent_eval(sys, q, small_g, rule.nodes)))
    return abs(left - right)
