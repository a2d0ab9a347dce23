"""Real Schur decomposition by Householder-Hessenberg reduction and Francis
implicit double-shift QR.

The iteration follows the classical small-matrix scheme (deflation test of
Ahues and Tisseur, exceptional shifts, 2x2 block standardisation), so that a
converged quasi-triangular factor carries every complex pair in a 2x2 block
with nonzero subdiagonal and every real eigenvalue on a 1x1 block.
"""

from __future__ import annotations

import math

import numba
import numpy as np

_EPS = np.finfo(np.float64).eps
_SAFMIN = np.finfo(np.float64).tiny


class SchurConvergenceError(RuntimeError):
    """QR iteration did not deflate within the iteration budget."""


@numba.njit(cache=True)
def _sign(a, b):
    return abs(a) if b >= 0.0 else -abs(a)


@numba.njit(cache=True)
def _hessenberg(a, z, wantz):
    n = a.shape[0]
    v = np.empty(n)
    w = np.empty(n)
    for k in range(n - 2):
        alpha = a[k + 1, k]
        xnorm = 0.0
        for i in range(k + 2, n):
            xnorm = math.hypot(xnorm, a[i, k])
        if xnorm == 0.0:
            continue
        beta = -_sign(math.hypot(alpha, xnorm), alpha)
        tau = (beta - alpha) / beta
        scal = 1.0 / (alpha - beta)
        v[k + 1] = 1.0
        for i in range(k + 2, n):
            v[i] = a[i, k] * scal
        # left: rows k+1.., columns k..
        for j in range(k, n):
            w[j] = 0.0
        for i in range(k + 1, n):
            vi = v[i]
            for j in range(k, n):
                w[j] += vi * a[i, j]
        for i in range(k + 1, n):
            c = tau * v[i]
            for j in range(k, n):
                a[i, j] -= c * w[j]
        # right: all rows, columns k+1..
        for i in range(n):
            s = 0.0
            for j in range(k + 1, n):
                s += a[i, j] * v[j]
            s *= tau
            for j in range(k + 1, n):
                a[i, j] -= s * v[j]
        if wantz:
            for i in range(n):
                s = 0.0
                for j in range(k + 1, n):
                    s += z[i, j] * v[j]
                s *= tau
                for j in range(k + 1, n):
                    z[i, j] -= s * v[j]
        a[k + 1, k] = beta
        for i in range(k + 2, n):
            a[i, k] = 0.0


@numba.njit(cache=True)
def _lanv2(a, b, c, d):
    # Standardise [[a, b], [c, d]]; returns (a, b, c, d, cs, sn).
    if c == 0.0:
        cs, sn = 1.0, 0.0
    elif b == 0.0:
        cs, sn = 0.0, 1.0
        a, d = d, a
        b = -c
        c = 0.0
    elif (a - d) == 0.0 and (b >= 0.0) != (c >= 0.0):
        cs, sn = 1.0, 0.0
    else:
        temp = a - d
        p = 0.5 * temp
        bcmax = max(abs(b), abs(c))
        bcmis = min(abs(b), abs(c)) * _sign(1.0, b) * _sign(1.0, c)
        scale = max(abs(p), bcmax)
        zz = (p / scale) * p + (bcmax / scale) * bcmis
        if zz >= 4.0 * _EPS:
            zz = p + _sign(math.sqrt(scale) * math.sqrt(zz), p)
            a = d + zz
            d = d - (bcmax / zz) * bcmis
            tau = math.hypot(c, zz)
            cs = zz / tau
            sn = c / tau
            b = b - c
            c = 0.0
        else:
            sigma = b + c
            tau = math.hypot(sigma, temp)
            cs = math.sqrt(0.5 * (1.0 + abs(sigma) / tau))
            sn = -(p / (tau * cs)) * _sign(1.0, sigma)
            aa = a * cs + b * sn
            bb = -a * sn + b * cs
            cc = c * cs + d * sn
            dd = -c * sn + d * cs
            a = aa * cs + cc * sn
            b = bb * cs + dd * sn
            c = -aa * sn + cc * cs
            d = -bb * sn + dd * cs
            temp = 0.5 * (a + d)
            a = temp
            d = temp
            if c != 0.0:
                if b != 0.0:
                    if (b >= 0.0) == (c >= 0.0):
                        sab = math.sqrt(abs(b))
                        sac = math.sqrt(abs(c))
                        p = _sign(sab * sac, c)
                        tau = 1.0 / math.sqrt(abs(b + c))
                        a = temp + p
                        d = temp - p
                        b = b - c
                        c = 0.0
                        cs1 = sab * tau
                        sn1 = sac * tau
                        temp = cs * cs1 - sn * sn1
                        sn = cs * sn1 + sn * cs1
                        cs = temp
                else:
                    b = -c
                    c = 0.0
                    temp = cs
                    cs = -sn
                    sn = temp
    return a, b, c, d, cs, sn


@numba.njit(cache=True)
def _francis(h, z, wantt, wantz, maxit_per_dim):
    """Quasi-triangularise the Hessenberg matrix ``h`` in place.

    Returns 0 on success, otherwise 1 + the index of the unconverged row.
    """
    n = h.shape[0]
    if n == 0:
        return 0
    for j in range(n - 3):
        h[j + 2, j] = 0.0
        h[j + 3, j] = 0.0
    if n > 2:
        h[n - 1, n - 3] = 0.0
    ulp = _EPS
    smlnum = _SAFMIN * (n / ulp)
    itmax = maxit_per_dim * max(10, n)
    v = np.zeros(3)

    i1 = 0
    i2 = n - 1
    i = n - 1
    while i >= 0:
        l = 0
        converged = False
        for its in range(itmax + 1):
            # deflation search
            k = i
            while k > l:
                if abs(h[k, k - 1]) <= smlnum:
                    break
                tst = abs(h[k - 1, k - 1]) + abs(h[k, k])
                if tst == 0.0:
                    if k - 2 >= l:
                        tst += abs(h[k - 1, k - 2])
                    if k + 1 <= i:
                        tst += abs(h[k + 1, k])
                if abs(h[k, k - 1]) <= ulp * tst:
                    ab = max(abs(h[k, k - 1]), abs(h[k - 1, k]))
                    ba = min(abs(h[k, k - 1]), abs(h[k - 1, k]))
                    aa = max(abs(h[k, k]), abs(h[k - 1, k - 1] - h[k, k]))
                    bb = min(abs(h[k, k]), abs(h[k - 1, k - 1] - h[k, k]))
                    s = aa + ab
                    if ba * (ab / s) <= max(smlnum, ulp * (bb * (aa / s))):
                        break
                k -= 1
            l = k
            if l > 0:
                h[l, l - 1] = 0.0
            if l >= i - 1:
                converged = True
                break
            if not wantt:
                i1 = l
                i2 = i

            # shifts
            if its > 0 and its % 20 == 10:
                s = abs(h[l + 1, l]) + abs(h[l + 2, l + 1])
                h11 = 0.75 * s + h[l, l]
                h12 = -0.4375 * s
                h21 = s
                h22 = h11
            elif its > 0 and its % 20 == 0:
                s = abs(h[i, i - 1]) + abs(h[i - 1, i - 2])
                h11 = 0.75 * s + h[i, i]
                h12 = -0.4375 * s
                h21 = s
                h22 = h11
            else:
                h11 = h[i - 1, i - 1]
                h21 = h[i, i - 1]
                h12 = h[i - 1, i]
                h22 = h[i, i]
            s = abs(h11) + abs(h12) + abs(h21) + abs(h22)
            if s == 0.0:
                rt1r = 0.0
                rt1i = 0.0
                rt2r = 0.0
                rt2i = 0.0
            else:
                h11 /= s
                h21 /= s
                h12 /= s
                h22 /= s
                tr = (h11 + h22) / 2.0
                det = (h11 - tr) * (h22 - tr) - h12 * h21
                rtdisc = math.sqrt(abs(det))
                if det >= 0.0:
                    rt1r = tr * s
                    rt2r = rt1r
                    rt1i = rtdisc * s
                    rt2i = -rt1i
                else:
                    rt1r = tr + rtdisc
                    rt2r = tr - rtdisc
                    if abs(rt1r - h22) <= abs(rt2r - h22):
                        rt1r *= s
                        rt2r = rt1r
                    else:
                        rt2r *= s
                        rt1r = rt2r
                    rt1i = 0.0
                    rt2i = 0.0

            # two consecutive small subdiagonals
            m = i - 2
            while True:
                h21s = h[m + 1, m]
                s = abs(h[m, m] - rt2r) + abs(rt2i) + abs(h21s)
                h21s = h[m + 1, m] / s
                v[0] = h21s * h[m, m + 1] + (h[m, m] - rt1r) * ((h[m, m] - rt2r) / s) - rt1i * (rt2i / s)
                v[1] = h21s * (h[m, m] + h[m + 1, m + 1] - rt1r - rt2r)
                v[2] = h21s * h[m + 2, m + 1]
                s = abs(v[0]) + abs(v[1]) + abs(v[2])
                v[0] /= s
                v[1] /= s
                v[2] /= s
                if m == l:
                    break
                h00 = abs(h[m, m - 1]) * (abs(v[1]) + abs(v[2]))
                h11b = abs(v[0]) * (abs(h[m - 1, m - 1]) + abs(h[m, m]) + abs(h[m + 1, m + 1]))
                if h00 <= ulp * h11b:
                    break
                m -= 1

            # double-shift bulge chase
            for k in range(m, i):
                nr = min(3, i - k + 1)
                if k > m:
                    for q in range(nr):
                        v[q] = h[k + q, k - 1]
                alpha = v[0]
                xnorm = 0.0
                for q in range(1, nr):
                    xnorm = math.hypot(xnorm, v[q])
                if xnorm == 0.0:
                    t1 = 0.0
                else:
                    beta = -_sign(math.hypot(alpha, xnorm), alpha)
                    t1 = (beta - alpha) / beta
                    scal = 1.0 / (alpha - beta)
                    for q in range(1, nr):
                        v[q] *= scal
                    v[0] = beta
                if k > m:
                    h[k, k - 1] = v[0]
                    h[k + 1, k - 1] = 0.0
                    if k < i - 1:
                        h[k + 2, k - 1] = 0.0
                elif m > l:
                    h[k, k - 1] = h[k, k - 1] * (1.0 - t1)
                v2 = v[1]
                t2 = t1 * v2
                if nr == 3:
                    v3 = v[2]
                    t3 = t1 * v3
                    for j in range(k, i2 + 1):
                        sm = h[k, j] + v2 * h[k + 1, j] + v3 * h[k + 2, j]
                        h[k, j] -= sm * t1
                        h[k + 1, j] -= sm * t2
                        h[k + 2, j] -= sm * t3
                    for j in range(i1, min(k + 3, i) + 1):
                        sm = h[j, k] + v2 * h[j, k + 1] + v3 * h[j, k + 2]
                        h[j, k] -= sm * t1
                        h[j, k + 1] -= sm * t2
                        h[j, k + 2] -= sm * t3
                    if wantz:
                        for j in range(n):
                            sm = z[j, k] + v2 * z[j, k + 1] + v3 * z[j, k + 2]
                            z[j, k] -= sm * t1
                            z[j, k + 1] -= sm * t2
                            z[j, k + 2] -= sm * t3
                elif nr == 2:
                    for j in range(k, i2 + 1):
                        sm = h[k, j] + v2 * h[k + 1, j]
                        h[k, j] -= sm * t1
                        h[k + 1, j] -= sm * t2
                    for j in range(i1, i + 1):
                        sm = h[j, k] + v2 * h[j, k + 1]
                        h[j, k] -= sm * t1
                        h[j, k + 1] -= sm * t2
                    if wantz:
                        for j in range(n):
                            sm = z[j, k] + v2 * z[j, k + 1]
                            z[j, k] -= sm * t1
                            z[j, k + 1] -= sm * t2

        if not converged:
            return i + 1

        if l == i - 1:
            a, b, c, d, cs, sn = _lanv2(h[i - 1, i - 1], h[i - 1, i], h[i, i - 1], h[i, i])
            h[i - 1, i - 1] = a
            h[i - 1, i] = b
            h[i, i - 1] = c
            h[i, i] = d
            if wantt:
                for j in range(i + 1, i2 + 1):
                    x = h[i - 1, j]
                    y = h[i, j]
                    h[i - 1, j] = cs * x + sn * y
                    h[i, j] = cs * y - sn * x
                for j in range(i1, i - 1):
                    x = h[j, i - 1]
                    y = h[j, i]
                    h[j, i - 1] = cs * x + sn * y
                    h[j, i] = cs * y - sn * x
            if wantz:
                for j in range(n):
                    x = z[j, i - 1]
                    y = z[j, i]
                    z[j, i - 1] = cs * x + sn * y
                    z[j, i] = cs * y - sn * x
        i = l - 1
    return 0


@numba.njit(cache=True)
def _blocks(t):
    # Walk the quasi-triangular diagonal; complex blocks have t[k+1, k] != 0.
    n = t.shape[0]
    reals = np.empty(n)
    re = np.empty(n // 2)
    im = np.empty(n // 2)
    nr = 0
    nc = 0
    k = 0
    while k < n:
        if k + 1 < n and t[k + 1, k] != 0.0:
            re[nc] = t[k, k]
            im[nc] = math.sqrt(abs(t[k, k + 1])) * math.sqrt(abs(t[k + 1, k]))
            nc += 1
            k += 2
        else:
            reals[nr] = t[k, k]
            nr += 1
            k += 1
    return reals[:nr], re[:nc], im[:nc]


def schur_factor(a: np.ndarray, *, vectors: bool = True, maxit: int = 30):
    """Return ``(T, Z)`` with ``a = Z @ T @ Z.T``; ``Z`` is None unless ``vectors``.

    Without vectors only the active diagonal window of ``T`` is maintained, so
    the strictly upper part is not meaningful; the block structure is.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    h = np.array(a, dtype=np.float64, order="C")
    n = h.shape[0]
    z = np.eye(n) if vectors else np.empty((0, 0))
    _hessenberg(h, z, vectors)
    status = _francis(h, z, vectors, vectors, maxit)
    if status:
        raise SchurConvergenceError(
            f"Francis QR failed to converge at row {status - 1} after {maxit}*n iterations"
        )
    return h, (z if vectors else None)


def quasi_triangular_blocks(t: np.ndarray):
    """Split a standardised quasi-triangular matrix into real eigenvalues and
    complex pairs ``(re, im > 0)``."""
    return _blocks(np.ascontiguousarray(t, dtype=np.float64))
