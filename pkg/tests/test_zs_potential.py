import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ginoe import zs_potential as zs
from ginoe.gap_distribution import Route, cdf


def test_gamma_zero():
    assert zs.y12(0.3, 0.0) == 0.0
    assert zs.mu(0.3, 0.0) == 0.0
    assert zs.cdf_closed_form(-2.0, 0.0).F == 1.0
    assert zs.verify_gamma_closed_form(1.0, 0.0) == 0.0


def test_right_asymptote():
    v = zs.y12(3.0, 1.0)
    assert abs(v * math.sqrt(math.pi) * math.exp(9.0) - 1.0) < 2e-4


@pytest.mark.parametrize("t", [3.0, 3.5, 4.0, 5.0])
def test_asymptote_correction_bound(t):
    lead = math.exp(-t * t) / math.sqrt(math.pi)
    assert abs(zs.y12(t, 1.0) / lead - 1.0) <= math.exp(-t * t + 2.0)


def test_node_refinement():
    a = zs.y12(0.0, 1.0, 50)
    b = zs.y12(0.0, 1.0, 100)
    assert abs(a - b) < 1e-11


def test_mu_right_tail_and_refinement():
    assert abs(zs.mu(5.0, 1.0) / (0.5 * math.erfc(5.0)) - 1.0) < 1e-3
    assert abs(zs.mu(5.0, 0.5) / (0.5 * math.sqrt(0.5) * math.erfc(5.0)) - 1.0) < 1e-3
    a = zs.mu(-4.0, 1.0)
    b = zs.mu(-4.0, 1.0, n=160)
    assert abs(a - b) < 1e-9 and a > 0


@pytest.mark.parametrize("t", [-4.0, -3.0, -2.0, 0.0, 2.0])
@pytest.mark.parametrize("gamma", [0.25, 0.5, 1.0])
def test_closed_form_matches_product(t, gamma):
    a = zs.cdf_closed_form(t, gamma)
    b = cdf(t, gamma, Route.PRODUCT)
    assert a.route is Route.CLOSED_FORM
    assert abs(a.F / b.F - 1.0) < 1e-6


def test_closed_form_via_cdf_dispatch():
    assert cdf(0.5, 0.5, "CLOSED_FORM").route is Route.CLOSED_FORM


@pytest.mark.parametrize("t,gamma,tol", [(6.0, 1.0, 1e-12), (0.0, 1.0, 1e-7), (-2.0, 0.5, 1e-6)])
def test_part1_identity(t, gamma, tol):
    assert zs.verify_part1_identity(t, gamma) < tol


@pytest.mark.parametrize("t,gamma", [(0.0, 1.0), (-2.0, 0.25), (-5.0, 0.75)])
def test_gamma_closed_form(t, gamma):
    assert zs.verify_gamma_closed_form(t, gamma) < 1e-7


@pytest.mark.parametrize("t,gamma", [(0.0, 1.0), (-1.0, 0.5), (5.0, 1.0), (-3.0, 0.9)])
def test_ab_system(t, gamma):
    r = zs.verify_ab_system(t, gamma)
    assert r.a_residual < 1e-7
    assert r.du_residual < 1e-6


def test_ab_boundary_value():
    r = zs.verify_ab_system(5.0, 1.0)
    assert abs(r.a_closed - 1.0) < 1e-9
    assert abs(zs.a_closed_form(5.0, 0.36) - 0.6) < 1e-9


def test_ab_rejects_gamma_zero():
    with pytest.raises(ValueError):
        zs.verify_ab_system(0.0, 0.0)


def test_potential_sample():
    s = zs.potential_sample(2.0, 1.0)
    assert s.im_y == 2.0 * s.y12
    assert abs(s.im_y / (2.0 * math.exp(-16.0) / math.sqrt(math.pi)) - 1.0) < 1e-3


@given(st.floats(-8.0, 6.0), st.sampled_from([0.1, 0.3, 0.5, 0.7, 0.9, 1.0]))
@settings(max_examples=40, deadline=None)
def test_potential_nonnegative(t, gamma):
    assert zs.y12(t, gamma) >= -1e-12


@given(st.floats(-6.0, 4.0), st.floats(0.0, 1.0), st.floats(0.0, 1.0))
@settings(max_examples=25, deadline=None)
def test_potential_nondecreasing_in_gamma(t, g1, g2):
    lo, hi = sorted((g1, g2))
    assert zs.y12(t, hi) >= zs.y12(t, lo) - 1e-13


def test_potential_rejects_bad_gamma():
    with pytest.raises(ValueError):
        zs.y12(0.0, 1.5)
