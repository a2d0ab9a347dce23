"""GinOE draws and their spectra."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .rng import check_seed, standard_normals, uniforms
from .schur import quasi_triangular_blocks, schur_factor

MAX_N = 2048


@dataclass(frozen=True)
class SpectrumSample:
    """Eigenvalues of one draw; ``complex_pairs`` rows are (re, im > 0).

    ``backward_error`` is ||Z T Z^T - A||_F / ||A||_F, or NaN when the Schur
    vectors were not accumulated.
    """

    n: int
    seed: int
    real_eigs: np.ndarray
    complex_pairs: np.ndarray
    backward_error: float

    def eigenvalues(self) -> np.ndarray:
        re, im = self.complex_pairs[:, 0], self.complex_pairs[:, 1]
        return np.concatenate([self.real_eigs.astype(complex), re + 1j * im, re - 1j * im])


def sample_ginoe(n: int, seed: int) -> np.ndarray:
    """n x n matrix of iid standard normals, fixed by (n, seed)."""
    if isinstance(n, bool) or int(n) != n or not (2 <= n <= MAX_N):
        raise ValueError(f"n must be an integer in [2, {MAX_N}], got {n}")
    n = int(n)
    return standard_normals(seed, n * n).reshape(n, n)


def real_schur(a: np.ndarray, *, vectors: bool = True, seed: int = 0) -> SpectrumSample:
    """Spectrum of ``a`` from its real Schur form.

    Real eigenvalues are the 1x1 diagonal blocks and complex pairs the 2x2
    blocks, so the real/complex split is structural.
    """
    a = np.asarray(a, dtype=np.float64)
    t, z = schur_factor(a, vectors=vectors)
    reals, re, im = quasi_triangular_blocks(t)
    if vectors:
        scale = np.linalg.norm(a)
        resid = np.linalg.norm(z @ np.triu(t, -1) @ z.T - a)
        berr = float(resid / scale) if scale > 0 else float(resid)
    else:
        berr = math.nan
    return SpectrumSample(
        n=a.shape[0],
        seed=check_seed(seed),
        real_eigs=np.sort(reals),
        complex_pairs=np.column_stack([re, im]) if len(re) else np.empty((0, 2)),
        backward_error=berr,
    )


def ginoe_spectrum(n: int, seed: int, *, vectors: bool = False) -> SpectrumSample:
    return real_schur(sample_ginoe(n, seed), vectors=vectors, seed=seed)


def scaled_max_real(sample: SpectrumSample) -> float | None:
    """max(real eigenvalues) - sqrt(n); None when there are no real eigenvalues."""
    if sample.real_eigs.size == 0:
        return None
    return float(sample.real_eigs[-1] - math.sqrt(sample.n))


#: smallest n with gamma_n > 0
MIN_RADIUS_N = 164


def radius_scale(n: int) -> float:
    """gamma_n = ln(n / (2 pi ln^2 n)); positive only from n = 164 on."""
    if n < MIN_RADIUS_N:
        raise ValueError(f"the complex-radius scaling needs gamma_n > 0, i.e. n >= {MIN_RADIUS_N}, got {n}")
    return math.log(n / (2.0 * math.pi * math.log(n) ** 2))


def scaled_complex_radius(sample: SpectrumSample) -> float:
    """(max |z| over complex pairs - sqrt n - sqrt(gamma_n/4)) sqrt(4 gamma_n)."""
    g = radius_scale(sample.n)
    if sample.complex_pairs.shape[0] == 0:
        raise ValueError("sample has no complex eigenvalues")
    r = float(np.max(np.hypot(sample.complex_pairs[:, 0], sample.complex_pairs[:, 1])))
    return (r - math.sqrt(sample.n) - math.sqrt(g / 4.0)) * math.sqrt(4.0 * g)


@dataclass(frozen=True)
class ThinnedReals:
    """Real eigenvalues kept after independent thinning.

    Exploratory: whether the largest survivor follows F(t; gamma) with
    gamma = 2 xi - xi^2 is an open question.
    """

    values: np.ndarray
    xi: float
    exploratory: bool = True


def thin_real_spectrum(sample: SpectrumSample, xi: float, seed: int) -> ThinnedReals:
    """Keep each real eigenvalue independently with probability ``xi``."""
    xi = float(xi)
    if not (0.0 <= xi <= 1.0):
        raise ValueError(f"xi must lie in [0, 1], got {xi}")
    k = sample.real_eigs.size
    keep = uniforms(seed, k) < xi if k else np.zeros(0, dtype=bool)
    return ThinnedReals(sample.real_eigs[keep], xi)


@dataclass(frozen=True)
class CloudPoints:
    re: np.ndarray
    im: np.ndarray
    is_real: np.ndarray


def circular_law_cloud(n: int, n_samples: int, seed: int) -> CloudPoints:
    """All eigenvalues of ``n_samples`` draws scaled by 1/sqrt(n), both members
    of each conjugate pair included."""
    from .montecarlo import sample_seeds

    res, ims, flags = [], [], []
    s = 1.0 / math.sqrt(n)
    for sd in sample_seeds(seed, n_samples):
        sp = ginoe_spectrum(n, sd)
        cp = sp.complex_pairs
        res.append(np.concatenate([sp.real_eigs, cp[:, 0], cp[:, 0]]) * s)
        ims.append(np.concatenate([np.zeros(sp.real_eigs.size), cp[:, 1], -cp[:, 1]]) * s)
        flags.append(np.arange(n) < sp.real_eigs.size)
    return CloudPoints(np.concatenate(res), np.concatenate(ims), np.concatenate(flags))
