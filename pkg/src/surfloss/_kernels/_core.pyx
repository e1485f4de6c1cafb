# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled solver kernels; one-to-one port of the NumPy backend in _py.py.

Same math, same Gauss rule, same near-field thresholds, so results agree
with the fallback to floating-point rounding.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, log, hypot, M_PI, atan2, fabs

cnp.import_array()

NAME = "compiled"

cdef double EPS0 = 8.8541878128e-12
cdef double TWO_PI_EPS = 2.0 * M_PI * EPS0
cdef double RING_NORM = 2.0 * M_PI * M_PI * EPS0
cdef double NEAR_FACTOR = 2.5

cdef double[16] GAUSS_X
cdef double[16] GAUSS_W
GAUSS_X[:] = [
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318,
    -0.755404408355003, -0.6178762444026438, -0.45801677765722737,
    -0.2816035507792589, -0.09501250983763745, 0.09501250983763745,
    0.2816035507792589, 0.45801677765722737, 0.6178762444026438,
    0.755404408355003, 0.8656312023878318, 0.9445750230732326,
    0.9894009349916499]
GAUSS_W[:] = [
    0.027152459411754037, 0.062253523938647706, 0.09515851168249259,
    0.12462897125553403, 0.14959598881657676, 0.16915651939500262,
    0.1826034150449236, 0.18945061045506859, 0.18945061045506859,
    0.1826034150449236, 0.16915651939500262, 0.14959598881657676,
    0.12462897125553403, 0.09515851168249259, 0.062253523938647706,
    0.027152459411754037]


cdef inline double _ellipk(double m) nogil:
    """K(m) by AGM; m < 1, negative m via the imaginary-modulus transform."""
    cdef double a = 1.0, b, t, scale = 1.0
    cdef int i
    if m < 0.0:
        scale = 1.0 / sqrt(1.0 - m)
        m = m / (m - 1.0)
    b = sqrt(1.0 - m)
    for i in range(40):
        if fabs(a - b) <= 1e-15 * a:
            break
        t = 0.5 * (a + b)
        b = sqrt(a * b)
        a = t
    return scale * M_PI / (a + b)


def ellipk_grid(m):
    m = np.ascontiguousarray(m, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] flat = m.reshape(-1)
    cdef Py_ssize_t i, n = flat.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n)
    for i in range(n):
        if flat[i] >= 1.0:
            raise ValueError("ellipk_grid requires m < 1 everywhere")
        out[i] = _ellipk(flat[i])
    return out.reshape(np.shape(m))


def planar_matrix(x, y, w):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xv = np.ascontiguousarray(x, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] yv = np.ascontiguousarray(y, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] wv = np.ascontiguousarray(w, np.float64)
    cdef Py_ssize_t i, j, n = xv.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] m = np.empty((n, n))
    cdef double rho
    for i in range(n):
        for j in range(n):
            if i == j:
                m[i, i] = (log(2.0 / wv[i]) + 1.5) / TWO_PI_EPS
            else:
                rho = hypot(xv[i] - xv[j], yv[i] - yv[j])
                m[i, j] = log(1.0 / rho) / TWO_PI_EPS
    return m


cdef inline double _ring_kernel(double rho, double ri, double rj) nogil:
    return _ellipk(-4.0 * ri * rj / (rho * rho)) / (RING_NORM * rho)


cdef double _ring_self(double r, double w) nogil:
    cdef double asym = (log(8.0 * r / w) + 1.5) / (2.0 * RING_NORM * r)
    cdef double acc = 0.0, u, rem
    cdef int k
    for k in range(16):
        u = 0.5 * w * (GAUSS_X[k] + 1.0)
        rem = _ring_kernel(u, r, r) - log(8.0 * r / u) / (2.0 * RING_NORM * r)
        acc += GAUSS_W[k] * (w - u) * rem
    return asym + 2.0 * (0.5 * w * acc) / (w * w)


def ring_matrix(z, r, w):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] zv = np.ascontiguousarray(z, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] rv = np.ascontiguousarray(r, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] wv = np.ascontiguousarray(w, np.float64)
    cdef Py_ssize_t i, j, n = zv.shape[0]
    cdef int ki, kj
    cdef cnp.ndarray[cnp.float64_t, ndim=2] m = np.empty((n, n))
    cdef double rho, acc, zi, zj
    for i in range(n):
        for j in range(n):
            if i == j:
                m[i, i] = _ring_self(rv[i], wv[i])
            elif fabs(zv[i] - zv[j]) < NEAR_FACTOR * (wv[i] + wv[j]):
                acc = 0.0
                for ki in range(16):
                    zi = zv[i] + 0.5 * wv[i] * GAUSS_X[ki]
                    for kj in range(16):
                        zj = zv[j] + 0.5 * wv[j] * GAUSS_X[kj]
                        rho = hypot(zi - zj, rv[i] - rv[j])
                        acc += GAUSS_W[ki] * GAUSS_W[kj] \
                            * _ring_kernel(rho, rv[i], rv[j])
                m[i, j] = acc / 4.0
            else:
                rho = hypot(zv[i] - zv[j], rv[i] - rv[j])
                m[i, j] = _ring_kernel(rho, rv[i], rv[j])
    return m


def ring_mutual(z1, r1, z2, r2):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] z1v = np.ascontiguousarray(z1, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] r1v = np.ascontiguousarray(r1, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] z2v = np.ascontiguousarray(z2, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] r2v = np.ascontiguousarray(r2, np.float64)
    cdef Py_ssize_t i, j, n1 = z1v.shape[0], n2 = z2v.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] m = np.empty((n1, n2))
    cdef double rho
    for i in range(n1):
        for j in range(n2):
            rho = hypot(z1v[i] - z2v[j], r1v[i] - r2v[j])
            m[i, j] = _ring_kernel(rho, r1v[i], r2v[j])
    return m


cdef inline double _flat_kernel(double ydist, double rbar) nogil:
    return _ellipk(-(rbar / ydist) * (rbar / ydist)) / (RING_NORM * ydist)


cdef double _flat_self(double rb, double w) nogil:
    cdef double asym = (log(4.0 * rb / w) + 1.5) / (RING_NORM * rb)
    cdef double acc = 0.0, u, rem
    cdef int k
    for k in range(16):
        u = 0.5 * w * (GAUSS_X[k] + 1.0)
        rem = _flat_kernel(u, rb) - log(4.0 * rb / u) / (RING_NORM * rb)
        acc += GAUSS_W[k] * (w - u) * rem
    return asym + 2.0 * (0.5 * w * acc) / (w * w)


def flatwire_matrix(y, rbar, w):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] yv = np.ascontiguousarray(y, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] rv = np.ascontiguousarray(rbar, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] wv = np.ascontiguousarray(w, np.float64)
    cdef Py_ssize_t i, j, n = yv.shape[0]
    cdef int ki, kj
    cdef cnp.ndarray[cnp.float64_t, ndim=2] m = np.empty((n, n))
    cdef double dy, acc, yi, yj
    for i in range(n):
        for j in range(n):
            dy = fabs(yv[i] - yv[j])
            if i == j:
                m[i, i] = _flat_self(rv[i], wv[i])
            elif dy < NEAR_FACTOR * (wv[i] + wv[j]):
                acc = 0.0
                for ki in range(16):
                    yi = yv[i] + 0.5 * wv[i] * GAUSS_X[ki]
                    for kj in range(16):
                        yj = yv[j] + 0.5 * wv[j] * GAUSS_X[kj]
                        acc += GAUSS_W[ki] * GAUSS_W[kj] \
                            * _flat_kernel(fabs(yi - yj), rv[j])
                m[i, j] = acc / 4.0
            else:
                m[i, j] = _flat_kernel(dy, rv[j])
    return m


def flatwire_mutual(y1, y2, rbar2):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] y1v = np.ascontiguousarray(y1, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] y2v = np.ascontiguousarray(y2, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] r2v = np.ascontiguousarray(rbar2, np.float64)
    cdef Py_ssize_t i, j, n1 = y1v.shape[0], n2 = y2v.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] m = np.empty((n1, n2))
    for i in range(n1):
        for j in range(n2):
            m[i, j] = _flat_kernel(fabs(y1v[i] - y2v[j]), r2v[j])
    return m


def segment_field(px, py, mx, my, tx, ty, w, q):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] pxv = np.ascontiguousarray(px, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] pyv = np.ascontiguousarray(py, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] mxv = np.ascontiguousarray(mx, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] myv = np.ascontiguousarray(my, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] txv = np.ascontiguousarray(tx, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] tyv = np.ascontiguousarray(ty, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] wv = np.ascontiguousarray(w, np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] qv = np.ascontiguousarray(q, np.float64)
    cdef Py_ssize_t p, k, npts = pxv.shape[0], nseg = mxv.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ex = np.zeros(npts)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ey = np.zeros(npts)
    cdef double lam, ax, ay, rx, ry, u, v, u2, r1s, r2s, eu, ev, sv
    for k in range(nseg):
        lam = qv[k] / wv[k]
        ax = mxv[k] - 0.5 * wv[k] * txv[k]
        ay = myv[k] - 0.5 * wv[k] * tyv[k]
        for p in range(npts):
            rx = pxv[p] - ax
            ry = pyv[p] - ay
            u = rx * txv[k] + ry * tyv[k]
            v = -rx * tyv[k] + ry * txv[k]
            u2 = u - wv[k]
            r1s = u * u + v * v
            r2s = u2 * u2 + v * v
            eu = lam / (4.0 * M_PI * EPS0) * log(r1s / r2s)
            sv = 1.0 if v > 0.0 else (-1.0 if v < 0.0 else 0.0)
            ev = lam / TWO_PI_EPS * sv \
                * (atan2(u, fabs(v)) - atan2(u2, fabs(v)))
            ex[p] += eu * txv[k] - ev * tyv[k]
            ey[p] += eu * tyv[k] + ev * txv[k]
    return ex, ey
