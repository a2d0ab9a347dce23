"""Largest real eigenvalue of the real Ginibre ensemble: Fredholm evaluation of
the limit law F(t; gamma), its Zakharov-Shabat closed form, tail constants and
Monte Carlo checks."""

from .gap_distribution import DistributionPoint, MomentSummary, Route, cdf, moments, pdf
from .tails import TailParams, estimate_eta0, forrester_constant
from .zs_potential import PotentialSample, cdf_closed_form, y12

__all__ = [
    "DistributionPoint",
    "MomentSummary",
    "PotentialSample",
    "Route",
    "TailParams",
    "cdf",
    "cdf_closed_form",
    "estimate_eta0",
    "forrester_constant",
    "moments",
    "pdf",
    "y12",
]
