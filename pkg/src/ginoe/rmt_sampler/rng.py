"""Counter-based normal variates.

Raw 64-bit words come from the Philox4x64 counter generator keyed by the seed,
so a (seed, count) pair fixes the stream independently of platform and of
numpy's higher-level sampling algorithms.  Normals are produced here by
Box-Muller from 53-bit uniforms in the open interval (0, 1).
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_TWO_PI = 2.0 * np.pi


def check_seed(seed) -> int:
    if isinstance(seed, bool) or int(seed) != seed or not (0 <= int(seed) <= _MASK64):
        raise ValueError(f"seed must be an integer in [0, 2^64), got {seed!r}")
    return int(seed)


def derive_seed(base: int, index: int) -> int:
    """splitmix64 of base + golden-ratio multiple of index; disjoint per-sample keys."""
    z = (check_seed(base) + (int(index) + 1) * 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def uniforms(seed: int, size: int) -> np.ndarray:
    """``size`` doubles in (0, 1): (top 53 bits + 1/2) * 2^-53."""
    bits = np.random.Philox(key=check_seed(seed)).random_raw(int(size))
    return ((bits >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53


def standard_normals(seed: int, size: int) -> np.ndarray:
    """``size`` iid N(0, 1) variates by the Box-Muller transform."""
    half = (int(size) + 1) // 2
    u = uniforms(seed, 2 * half)
    r = np.sqrt(-2.0 * np.log(u[0::2]))
    theta = _TWO_PI * u[1::2]
    out = np.empty(2 * half)
    out[0::2] = r * np.cos(theta)
    out[1::2] = r * np.sin(theta)
    return out[: int(size)]
