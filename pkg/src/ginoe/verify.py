"""Residual table over the identities the Fredholm evaluation must satisfy."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import tails, zs_potential
from .fredholm import verify_resolvent_integration
from .gap_distribution import Route, cdf, verify_fs_identities


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.residual < self.tolerance)


def route_agreement(ts=np.arange(-6.0, 4.0 + 1e-9, 0.25)) -> float:
    return max(abs(cdf(t, 1.0, Route.PRODUCT).F - cdf(t, 1.0, Route.SINGLE_DET).F) for t in ts)


def run_suite() -> list[Check]:
    out = [Check("route_agreement", route_agreement(), 1e-8)]
    for t in (-4.0, 0.0, 6.0):
        r = verify_fs_identities(t)
        out.append(Check(f"fs_bracket t={t:g}", r.fs8_residual, 1e-8))
        out.append(Check(f"product_vs_square t={t:g}", r.product_residual, 1e-8))
    for t, g in ((0.0, 0.5), (0.0, 1.0), (-2.0, 0.5), (-2.0, 1.0)):
        out.append(Check(f"resolvent_integration t={t:g} gamma={g:g}", verify_resolvent_integration(t, g), 1e-8))
        out.append(Check(f"det_energy t={t:g} gamma={g:g}", zs_potential.verify_part1_identity(t, g), 1e-7))
        out.append(Check(f"gamma_closed_form t={t:g} gamma={g:g}", zs_potential.verify_gamma_closed_form(t, g), 1e-7))
    for t, g in ((0.0, 1.0), (-1.0, 0.5)):
        r = zs_potential.verify_ab_system(t, g)
        out.append(Check(f"a_closed_form t={t:g} gamma={g:g}", r.a_residual, 1e-7))
        out.append(Check(f"du_dt t={t:g} gamma={g:g}", r.du_residual, 1e-6))
    for t, g in ((-1.0, 0.5), (-2.0, 0.9)):
        out.append(Check(f"log_integral t={t:g} gamma={g:g}", tails.verify_intform(t, g), 1e-9))
    for g in (0.5, 1.0):
        out.append(Check(f"right_tail t=3 gamma={g:g}", abs(cdf(3.0, g).F - tails.right_tail(3.0, g)), 5e-8))
        out.append(Check(f"right_tail t=5 gamma={g:g}", abs(cdf(5.0, g).F - tails.right_tail(5.0, g)), 1e-12))
    v = zs_potential.y12(3.0, 1.0)
    out.append(Check("potential_asymptote t=3", abs(v * math.sqrt(math.pi) * math.exp(9.0) - 1.0), 2e-4))
    for t in (-6.0, -2.0, 0.0, 4.0):
        d = abs(cdf(t, 1.0, Route.SINGLE_DET, m=50).F - cdf(t, 1.0, Route.SINGLE_DET, m=100).F)
        out.append(Check(f"nodes_50_vs_100 t={t:g}", d, 1e-10))
    return out
