"""Closed-form integral kernels T, S and the shifted S_t."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .specfun import SQRT_PI

_SQRT2 = math.sqrt(2.0)
_T_PREFACTOR = 1.0 / (2.0 * math.sqrt(2.0 * math.pi))


class KernelKind(enum.Enum):
    T_KERNEL = "T"
    S_KERNEL = "S"
    S_SHIFTED = "S_t"


def kernel_T(x, y):
    """T(x, y) = (1/pi) int_0^inf exp(-(x+u)^2 - (y+u)^2) du, in closed form.

    Completing the square gives exp(-(x-y)^2/2) erfc((x+y)/sqrt 2) / (2 sqrt(2 pi)).
    For x + y > 0 the product is assembled as exp(-(x^2+y^2)) erfcx((x+y)/sqrt 2)
    so that neither factor under- or overflows.
    """
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    s = x + y
    pos = s > 0
    out = np.empty(s.shape)
    out[pos] = np.exp(-(x[pos] ** 2 + y[pos] ** 2)) * special.erfcx(s[pos] / _SQRT2)
    neg = ~pos
    d = x[neg] - y[neg]
    out[neg] = np.exp(-0.5 * d * d) * special.erfc(s[neg] / _SQRT2)
    out *= _T_PREFACTOR
    return out if out.ndim else float(out)


def kernel_S(x, y):
    """S(x, y) = exp(-(x+y)^2/4) / (2 sqrt pi)."""
    s = np.asarray(x, dtype=float) + np.asarray(y, dtype=float)
    out = np.exp(-0.25 * s * s) / (2.0 * SQRT_PI)
    return out if out.ndim else float(out)


def kernel_S_shifted(x, y, t):
    """S_t(x, y) = exp(-(x+y+t)^2) / sqrt pi on (0, inf)^2."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(x < 0) or np.any(y < 0):
        raise ValueError("S_t is defined for x, y >= 0 only")
    s = x + y + t
    out = np.exp(-s * s) / SQRT_PI
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class KernelSpec:
    kind: KernelKind
    shift: float = 0.0

    def __call__(self, x, y):
        if self.kind is KernelKind.T_KERNEL:
            return kernel_T(x, y)
        if self.kind is KernelKind.S_KERNEL:
            return kernel_S(x, y)
        return kernel_S_shifted(x, y, self.shift)


T = KernelSpec(KernelKind.T_KERNEL)
S = KernelSpec(KernelKind.S_KERNEL)


def S_shifted(t: float) -> KernelSpec:
    return KernelSpec(KernelKind.S_SHIFTED, float(t))
