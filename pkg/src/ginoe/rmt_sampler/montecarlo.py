"""Monte Carlo comparison of GinOE extremes with their limit laws.

Sample i uses the key derive_seed(seed, i), so results do not depend on how
indices are split across workers; chunks are reduced in index order.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .empirical import EmpiricalLaw, LawKind, empirical_cdf
from .rng import derive_seed
from .sampler import MIN_RADIUS_N, ginoe_spectrum, scaled_complex_radius, scaled_max_real

BIAS_ALLOWANCE = 0.02
WIDTH_FACTOR = 3.0
CHUNK = 250


def sample_seeds(seed: int, n_samples: int) -> list[int]:
    return [derive_seed(seed, i) for i in range(int(n_samples))]


def default_threads() -> int:
    env = os.environ.get("GINOE_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _chunk_statistics(n: int, seed: int, start: int, stop: int) -> tuple[np.ndarray, np.ndarray]:
    # NaN marks an absent statistic (no real eigenvalue / no complex pair)
    max_real = np.full(stop - start, math.nan)
    radius = np.full(stop - start, math.nan)
    for k, i in enumerate(range(start, stop)):
        sp = ginoe_spectrum(n, derive_seed(seed, i))
        v = scaled_max_real(sp)
        if v is not None:
            max_real[k] = v
        if n >= MIN_RADIUS_N and sp.complex_pairs.shape[0]:
            radius[k] = scaled_complex_radius(sp)
    return max_real, radius


def sample_statistics(n: int, n_samples: int, seed: int, threads: int | None = None):
    """Scaled max-real and complex-radius statistics of ``n_samples`` draws."""
    bounds = [(s, min(s + CHUNK, n_samples)) for s in range(0, n_samples, CHUNK)]
    threads = default_threads() if threads is None else max(1, int(threads))
    if threads == 1 or len(bounds) == 1:
        parts = [_chunk_statistics(n, seed, a, b) for a, b in bounds]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_chunk_statistics, n, seed, a, b) for a, b in bounds]
            parts = [f.result() for f in futures]
    return np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts])


@dataclass(frozen=True)
class LimitComparison:
    law: EmpiricalLaw
    reference: np.ndarray
    half_widths: np.ndarray
    tolerance: np.ndarray

    @property
    def deviations(self) -> np.ndarray:
        return np.abs(self.law.probabilities - self.reference)

    @property
    def within(self) -> np.ndarray:
        return self.deviations <= self.tolerance


def compare(law: EmpiricalLaw, reference, allowance: float = BIAS_ALLOWANCE, width_factor: float = WIDTH_FACTOR) -> LimitComparison:
    """Accept when |p_hat - F| <= max(width_factor * Wilson half-width, allowance)."""
    ref = np.asarray(reference, dtype=float)
    hw = law.wilson_half_widths()
    return LimitComparison(law, ref, hw, np.maximum(width_factor * hw, allowance))


def gumbel_cdf(t):
    """exp(-exp(-t)/2)."""
    return np.exp(-0.5 * np.exp(-np.asarray(t, dtype=float)))


def max_real_experiment(n: int, n_samples: int, seed: int, ts, threads: int | None = None) -> LimitComparison:
    """P(max real eigenvalue <= sqrt(n) + t) against F(t; 1)."""
    from ..gap_distribution import cdf_values

    max_real, _ = sample_statistics(n, n_samples, seed, threads)
    values = [None if math.isnan(v) else v for v in max_real]
    law = empirical_cdf(values, ts, LawKind.MAX_REAL)
    return compare(law, cdf_values(law.ts, 1.0, "SINGLE_DET"))


def complex_radius_experiment(n: int, n_samples: int, seed: int, ts, threads: int | None = None, allowance: float = 0.05) -> LimitComparison:
    """Scaled complex spectral radius against exp(-exp(-t)/2)."""
    _, radius = sample_statistics(n, n_samples, seed, threads)
    if np.any(np.isnan(radius)):
        raise ValueError("a draw had no complex eigenvalues")
    law = empirical_cdf(list(radius), ts, LawKind.COMPLEX_RADIUS)
    return compare(law, gumbel_cdf(law.ts), allowance=allowance, width_factor=0.0)
