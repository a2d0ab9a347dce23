import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ginoe import specfun
from oracles import polylog_mp


@pytest.mark.parametrize("x", [-6.0, -1.5, -1e-3, 0.0, 0.3, 1.0, 5.0, 10.0, 20.0, 26.0])
def test_erfc_relative_accuracy(x):
    ref = float(mpmath.erfc(mpmath.mpf(x)))
    assert abs(specfun.erfc(x) / ref - 1.0) < 1e-14


def test_erfc_values():
    assert specfun.erfc(0.0) == 1.0
    assert abs(specfun.erfc(3.0) - 2.209049699858544e-05) < 1e-19


@given(st.floats(-5.0, 26.0))
@settings(max_examples=60, deadline=None)
def test_erfc_reflection(x):
    assert abs(specfun.erfc(x) + specfun.erfc(-x) - 2.0) < 1e-15


def test_gaussian_pair():
    xs = np.linspace(-4, 4, 9)
    assert np.allclose(specfun.gaussian_g(xs), np.exp(-xs**2) / math.sqrt(math.pi), rtol=1e-15)
    # G' = g by central difference, G(-inf) = 0, G(inf) = 1
    h = 1e-5
    assert np.allclose((specfun.gaussian_G(xs + h) - specfun.gaussian_G(xs - h)) / (2 * h), specfun.gaussian_g(xs), atol=1e-9)
    assert specfun.gaussian_G(-40.0) == 0.0 and specfun.gaussian_G(40.0) == 1.0


@pytest.mark.parametrize("s", [1.5, 0.5, -0.5, -1.5, -2.5, -5.5, -10.5, 2.5, 3.0])
def test_zeta_against_mpmath(s):
    ref = float(mpmath.zeta(s))
    assert abs(specfun.riemann_zeta(s) - ref) <= 1e-13 * max(1.0, abs(ref))


def test_zeta_pole():
    with pytest.raises(ValueError):
        specfun.riemann_zeta(1.0)


def test_polylog_examples():
    assert specfun.polylog_3_2(0.0) == 0.0
    assert abs(specfun.polylog_3_2(1.0) - 2.612375348685488) < 1e-12
    assert abs(specfun.polylog_3_2(0.5) - polylog_mp(1.5, 0.5)) < 1e-14


@given(st.floats(0.0, 1.0))
@settings(max_examples=80, deadline=None)
def test_polylog_against_mpmath(g):
    ref = polylog_mp(1.5, g)
    assert abs(specfun.polylog_3_2(g) - ref) <= 5e-15 * max(1.0, ref)


@given(st.floats(0.0, 0.999), st.floats(1e-3, 1.0))
@settings(max_examples=40, deadline=None)
def test_polylog_increasing(g, dg):
    g2 = min(1.0, g + dg)
    assert specfun.polylog_3_2(g2) > specfun.polylog_3_2(g)


@pytest.mark.parametrize("g", [-0.1, 1.0000001, math.nan])
def test_polylog_domain(g):
    with pytest.raises(ValueError):
        specfun.polylog_3_2(g)


@pytest.mark.parametrize("m", [1, 2, 3, 7, 20, 50, 101, 400])
def test_gauss_legendre_matches_numpy(m):
    rule = specfun.gauss_legendre(m)
    x, w = np.polynomial.legendre.leggauss(m)
    assert np.allclose(rule.nodes, x, atol=1e-14, rtol=0)
    # numpy's own end weights drift by ~5e-10 at m = 400; see the mpmath check below
    assert np.allclose(rule.weights, w, atol=0, rtol=1e-9)
    assert abs(rule.weights.sum() - 2.0) < 1e-13


@pytest.mark.parametrize("i", [0, 1, 57, 199])
def test_gauss_legendre_weights_high_precision(i):
    m = 400
    rule = specfun.gauss_legendre(m)
    with mpmath.workdps(40):
        x0 = mpmath.findroot(lambda t: mpmath.legendre(m, t), mpmath.mpf(rule.nodes[i]))
        dp = mpmath.diff(lambda t: mpmath.legendre(m, t), x0)
        ref = float(2 / ((1 - x0**2) * dp**2))
        assert abs(rule.nodes[i] - float(x0)) < 1e-15
    assert abs(rule.weights[i] / ref - 1.0) < 1e-11


@given(st.integers(1, 60), st.data())
@settings(max_examples=40, deadline=None)
def test_gauss_legendre_exact_for_polynomials(m, data):
    k = data.draw(st.integers(0, 2 * m - 1))
    rule = specfun.gauss_legendre(m)
    exact = 0.0 if k % 2 else 2.0 / (k + 1)
    assert abs(rule.integrate(lambda x: x**k) - exact) < 1e-13


def test_gauss_legendre_symmetry_and_order():
    rule = specfun.gauss_legendre(51)
    assert np.all(np.diff(rule.nodes) > 0)
    assert np.array_equal(rule.nodes, -rule.nodes[::-1])
    assert rule.nodes[25] == 0.0


def test_mapped_rule():
    r = specfun.gauss_legendre(30).mapped(2.0, 5.0)
    assert r.interval == (2.0, 5.0)
    assert abs(r.integrate(np.exp) - (math.exp(5) - math.exp(2))) < 1e-12
    with pytest.raises(ValueError):
        specfun.gauss_legendre(5).mapped(1.0, 1.0)


@pytest.mark.parametrize("m", [0, -3, 4097, 2.5, True])
def test_gauss_legendre_rejects(m):
    with pytest.raises(ValueError):
        specfun.gauss_legendre(m)
