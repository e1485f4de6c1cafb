"""Pure-NumPy reference implementation of the hot solver kernels.

The compiled extension `_core` mirrors every function here one-to-one;
both must produce results matching to floating-point rounding so the
backend can be swapped freely.  Everything takes SI inputs and returns
potential-matrix entries in volts per coulomb (per unit length for the
planar kernel).
"""

from __future__ import annotations

import numpy as np

NAME = "python"

EPS0 = 8.8541878128e-12
_TWO_PI_EPS = 2.0 * np.pi * EPS0
_RING_NORM = 2.0 * np.pi**2 * EPS0

# 16-point Gauss-Legendre rule on (-1, 1); shared verbatim with _core.pyx
_GAUSS_X = np.array([
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318,
    -0.755404408355003, -0.6178762444026438, -0.45801677765722737,
    -0.2816035507792589, -0.09501250983763745, 0.09501250983763745,
    0.2816035507792589, 0.45801677765722737, 0.6178762444026438,
    0.755404408355003, 0.8656312023878318, 0.9445750230732326,
    0.9894009349916499,
])
_GAUSS_W = np.array([
    0.027152459411754037, 0.062253523938647706, 0.09515851168249259,
    0.12462897125553403, 0.14959598881657676, 0.16915651939500262,
    0.1826034150449236, 0.18945061045506859, 0.18945061045506859,
    0.1826034150449236, 0.16915651939500262, 0.14959598881657676,
    0.12462897125553403, 0.09515851168249259, 0.062253523938647706,
    0.027152459411754037,
])

#: near-field off-diagonal entries are re-integrated when closer than this
#: many combined widths
NEAR_FACTOR = 2.5


def ellipk_grid(m):
    """Vectorized complete elliptic integral K(m), m < 1, AGM iteration."""
    m = np.asarray(m, dtype=float)
    neg = m < 0.0
    mp = np.where(neg, m / (m - 1.0), m)
    a = np.ones_like(mp)
    b = np.sqrt(1.0 - mp)
    for _ in range(40):
        if np.max(np.abs(a - b)) <= 1e-15 * np.max(a):
            break
        a, b = 0.5 * (a + b), np.sqrt(a * b)
    k = np.pi / (a + b)
    return np.where(neg, k / np.sqrt(1.0 - m), k)


def planar_matrix(x, y, w):
    """2-D logarithmic potential matrix for line-charge strip elements.

    Off-diagonal entries use the point kernel ln(1/rho)/(2 pi eps); the
    diagonal is the uniform-strip self term (ln(2/w) + 3/2)/(2 pi eps).
    """
    x = np.asarray(x, float); y = np.asarray(y, float); w = np.asarray(w, float)
    dx = x[:, None] - x[None, :]
    dy = y[:, None] - y[None, :]
    rho = np.hypot(dx, dy)
    with np.errstate(divide="ignore"):
        m = np.log(1.0 / rho) / _TWO_PI_EPS
    np.fill_diagonal(m, (np.log(2.0 / w) + 1.5) / _TWO_PI_EPS)
    return m


def _ring_kernel(rho, ri, rj):
    return ellipk_grid(-4.0 * ri * rj / rho**2) / (_RING_NORM * rho)


def _ring_self(r, w):
    """Average self potential of a ring band: split the log singularity
    analytically, integrate the remainder by fixed Gauss quadrature."""
    asym = (np.log(8.0 * r / w) + 1.5) / (2.0 * _RING_NORM * r)
    u = 0.5 * w[:, None] * (_GAUSS_X[None, :] + 1.0)        # (N, 16) in (0, w)
    rem = _ring_kernel(u, r[:, None], r[:, None]) \
        - np.log(8.0 * r[:, None] / u) / (2.0 * _RING_NORM * r[:, None])
    integral = 0.5 * w * np.sum(_GAUSS_W[None, :] * (w[:, None] - u) * rem, axis=1)
    return asym + 2.0 * integral / w**2


def ring_matrix(z, r, w):
    """Axisymmetric ring-charge potential matrix with self/near treatment."""
    z = np.asarray(z, float); r = np.asarray(r, float); w = np.asarray(w, float)
    n = len(z)
    dz = z[:, None] - z[None, :]
    dr = r[:, None] - r[None, :]
    rho = np.hypot(dz, dr)
    np.fill_diagonal(rho, 1.0)
    m = _ring_kernel(rho, r[:, None], r[None, :])
    m[np.diag_indices(n)] = _ring_self(r, w)
    # near pairs: average the kernel over the source element extent
    wsum = w[:, None] + w[None, :]
    ii, jj = np.nonzero((np.abs(dz) < NEAR_FACTOR * wsum) & ~np.eye(n, dtype=bool))
    if len(ii):
        zi = z[ii][:, None] + 0.5 * w[ii][:, None] * _GAUSS_X[None, :]
        zj = z[jj][:, None] + 0.5 * w[jj][:, None] * _GAUSS_X[None, :]
        du = zi[:, :, None] - zj[:, None, :]
        rr = np.hypot(du, (r[ii] - r[jj])[:, None, None])
        kv = _ring_kernel(rr, r[ii][:, None, None], r[jj][:, None, None])
        m[ii, jj] = np.einsum("i,j,pij->p", _GAUSS_W, _GAUSS_W, kv) / 4.0
    return m


def ring_mutual(z1, r1, z2, r2):
    """Plain ring kernel between two distinct ring sets (image terms)."""
    z1 = np.asarray(z1, float); z2 = np.asarray(z2, float)
    r1 = np.asarray(r1, float); r2 = np.asarray(r2, float)
    rho = np.hypot(z1[:, None] - z2[None, :], r1[:, None] - r2[None, :])
    return _ring_kernel(rho, r1[:, None], r2[None, :])


def _flat_kernel(ydist, rbar):
    return ellipk_grid(-((rbar / ydist) ** 2)) / (_RING_NORM * ydist)


def _flat_self(rb, w):
    asym = (np.log(4.0 * rb / w) + 1.5) / (_RING_NORM * rb)
    u = 0.5 * w[:, None] * (_GAUSS_X[None, :] + 1.0)
    rem = _flat_kernel(u, rb[:, None]) \
        - np.log(4.0 * rb[:, None] / u) / (_RING_NORM * rb[:, None])
    integral = 0.5 * w * np.sum(_GAUSS_W[None, :] * (w[:, None] - u) * rem, axis=1)
    return asym + 2.0 * integral / w**2


def flatwire_matrix(y, rbar, w):
    """Thin-strip wire potential matrix (edge-loaded transverse profile)."""
    y = np.asarray(y, float); rbar = np.asarray(rbar, float); w = np.asarray(w, float)
    n = len(y)
    dy = np.abs(y[:, None] - y[None, :])
    np.fill_diagonal(dy, 1.0)
    m = _flat_kernel(dy, rbar[None, :] * np.ones((n, 1)))
    m[np.diag_indices(n)] = _flat_self(rbar, w)
    wsum = w[:, None] + w[None, :]
    dyr = np.abs(y[:, None] - y[None, :])
    ii, jj = np.nonzero((dyr < NEAR_FACTOR * wsum) & ~np.eye(n, dtype=bool))
    if len(ii):
        yi = y[ii][:, None] + 0.5 * w[ii][:, None] * _GAUSS_X[None, :]
        yj = y[jj][:, None] + 0.5 * w[jj][:, None] * _GAUSS_X[None, :]
        dd = np.abs(yi[:, :, None] - yj[:, None, :])
        kv = _flat_kernel(dd, rbar[jj][:, None, None])
        m[ii, jj] = np.einsum("i,j,pij->p", _GAUSS_W, _GAUSS_W, kv) / 4.0
    return m


def flatwire_mutual(y1, y2, rbar2):
    """Plain flat-wire kernel between two element sets (image terms)."""
    y1 = np.asarray(y1, float); y2 = np.asarray(y2, float)
    rbar2 = np.asarray(rbar2, float)
    dy = np.abs(y1[:, None] - y2[None, :])
    return _flat_kernel(dy, rbar2[None, :] * np.ones((len(y1), 1)))


def segment_field(px, py, mx, my, tx, ty, w, q):
    """E at points (px, py) from uniformly charged 2-D segments.

    Segments have midpoints (mx, my), unit tangents (tx, ty), lengths w,
    and total line charges q.  Closed form per segment, summed.
    """
    px = np.asarray(px, float); py = np.asarray(py, float)
    lam = np.asarray(q, float) / np.asarray(w, float)
    ax = mx - 0.5 * w * tx; ay = my - 0.5 * w * ty
    rx = px[:, None] - ax[None, :]
    ry = py[:, None] - ay[None, :]
    u = rx * tx[None, :] + ry * ty[None, :]
    v = -rx * ty[None, :] + ry * tx[None, :]
    u2 = u - w[None, :]
    r1s = u * u + v * v
    r2s = u2 * u2 + v * v
    with np.errstate(divide="ignore", invalid="ignore"):
        e_u = lam[None, :] / (4.0 * np.pi * EPS0) * np.log(r1s / r2s)
        e_v = lam[None, :] / (_TWO_PI_EPS) * np.sign(v) \
            * (np.arctan2(u, np.abs(v)) - np.arctan2(u2, np.abs(v)))
    ex = np.sum(e_u * tx[None, :] - e_v * ty[None, :], axis=1)
    ey = np.sum(e_u * ty[None, :] + e_v * tx[None, :], axis=1)
    return ex, ey
