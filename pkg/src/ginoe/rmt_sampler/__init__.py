"""GinOE sampling, real Schur spectra and Monte Carlo checks of the limit laws."""

from .empirical import EmpiricalLaw, LawKind, empirical_cdf
from .montecarlo import (
    LimitComparison,
    complex_radius_experiment,
    gumbel_cdf,
    max_real_experiment,
    sample_statistics,
)
from .rng import derive_seed, standard_normals
from .sampler import (
    CloudPoints,
    SpectrumSample,
    ThinnedReals,
    circular_law_cloud,
    ginoe_spectrum,
    radius_scale,
    real_schur,
    sample_ginoe,
    scaled_complex_radius,
    scaled_max_real,
    thin_real_spectrum,
)
from .schur import SchurConvergenceError, schur_factor

__all__ = [
    "CloudPoints",
    "EmpiricalLaw",
    "LawKind",
    "LimitComparison",
    "SchurConvergenceError",
    "SpectrumSample",
    "ThinnedReals",
    "circular_law_cloud",
    "complex_radius_experiment",
    "derive_seed",
    "empirical_cdf",
    "ginoe_spectrum",
    "gumbel_cdf",
    "max_real_experiment",
    "radius_scale",
    "real_schur",
    "sample_ginoe",
    "sample_statistics",
    "scaled_complex_radius",
    "scaled_max_real",
    "schur_factor",
    "standard_normals",
    "thin_real_spectrum",
]
