# cython: language_level=3
"""Compiled kernels; operation-for-operation port of ``_pykernels``."""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, sin, cos, atan2, ceil, fabs

from ._zero_table import J0_ZEROS, J1_ZEROS, ZMAX as _ZMAX

cnp.import_array()

NAME = "cython"

SERIES_CUTOFF = 25.0
TAYLOR_RADIUS = 0.5
TAYLOR_TERMS = 18
ASYMPTOTIC_MAX_TERMS = 40

cdef double C_SERIES_CUTOFF = 25.0
cdef double C_TAYLOR_RADIUS = 0.5
cdef int C_TAYLOR_TERMS = 18
cdef int C_ASYM_MAX = 40
cdef double SPLITTER = 134217729.0
cdef double PI = 3.141592653589793
cdef double INV_SQRT_PI = 1.0 / sqrt(3.141592653589793)
cdef double ZMAX = _ZMAX

cdef double[:, ::1] Z0 = np.ascontiguousarray(np.array(J0_ZEROS, dtype=np.float64))
cdef double[:, ::1] Z1 = np.ascontiguousarray(np.array(J1_ZEROS, dtype=np.float64))


ctypedef struct dd:
    double hi
    double lo


cdef inline dd two_sum(double a, double b) nogil:
    cdef dd r
    cdef double s = a + b
    cdef double bb = s - a
    r.hi = s
    r.lo = (a - (s - bb)) + (b - bb)
    return r


cdef inline dd quick_two_sum(double a, double b) nogil:
    cdef dd r
    cdef double s = a + b
    r.hi = s
    r.lo = b - (s - a)
    return r


cdef inline dd two_prod(double a, double b) nogil:
    cdef dd r
    cdef double p = a * b
    cdef double c = SPLITTER * a
    cdef double ah = c - (c - a)
    cdef double al = a - ah
    c = SPLITTER * b
    cdef double bh = c - (c - b)
    cdef double bl = b - bh
    r.hi = p
    r.lo = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return r


cdef inline dd dd_add(dd a, dd b) nogil:
    cdef dd s = two_sum(a.hi, b.hi)
    cdef dd t = two_sum(a.lo, b.lo)
    cdef double s2 = s.lo + t.hi
    s = quick_two_sum(s.hi, s2)
    s2 = s.lo + t.lo
    return quick_two_sum(s.hi, s2)


cdef inline dd dd_mul(dd a, dd b) nogil:
    cdef dd p = two_prod(a.hi, b.hi)
    cdef double e = p.lo + (a.hi * b.lo + a.lo * b.hi)
    return quick_two_sum(p.hi, e)


cdef inline dd dd_div_d(dd a, double d) nogil:
    cdef double q1 = a.hi / d
    cdef dd p = two_prod(q1, d)
    cdef double r = ((a.hi - p.hi) - p.lo + a.lo) / d
    return quick_two_sum(q1, r)


cdef double c_series(int nu, double x) nogil:
    cdef double half = 0.5 * x
    cdef dd y = two_prod(half, half)
    cdef dd t, s
    cdef int k = 0
    if nu == 0:
        t.hi = 1.0
    else:
        t.hi = half
    t.lo = 0.0
    s = t
    while True:
        k += 1
        t = dd_mul(t, y)
        t = dd_div_d(t, <double>(k * (k + nu)))
        t.hi = -t.hi
        t.lo = -t.lo
        s = dd_add(s, t)
        if fabs(t.hi) < 1e-34 and k > half:
            break
        if k > 500:
            break
    return s.hi + s.lo


cdef double c_asymptotic(int nu, double x) nogil:
    cdef double mu = 4.0 * nu * nu
    cdef double p = 1.0, q = 0.0, t = 1.0, prev = 1.0, a, s, c, val
    cdef int k, m, r
    for k in range(1, C_ASYM_MAX):
        m = 2 * k - 1
        t = t * (mu - m * m) / (8.0 * k * x)
        a = fabs(t)
        if a > prev:
            break
        prev = a
        r = k % 4
        if r == 1:
            q += t
        elif r == 2:
            p -= t
        elif r == 3:
            q -= t
        else:
            p += t
        if a < 1e-17:
            break
    s = sin(x)
    c = cos(x)
    if nu == 0:
        val = p * (c + s) - q * (s - c)
    else:
        val = p * (s - c) + q * (s + c)
    return INV_SQRT_PI / sqrt(x) * val


cdef double c_taylor(int nu, double x, double zhi, double zlo, double slope) nogil:
    cdef double h = (x - zhi) - zlo
    cdef double z = zhi
    cdef double z2 = z * z
    cdef double nn = <double>(nu * nu)
    cdef double c[32]
    cdef double acc, total
    cdef int n
    for n in range(C_TAYLOR_TERMS + 1):
        c[n] = 0.0
    c[1] = slope
    for n in range(0, C_TAYLOR_TERMS - 1):
        acc = -z * (n + 1) * (2 * n + 1) * c[n + 1] - (n * n + z2 - nn) * c[n]
        if n >= 1:
            acc -= 2.0 * z * c[n - 1]
        if n >= 2:
            acc -= c[n - 2]
        c[n + 2] = acc / (z2 * (n + 2) * (n + 1))
    total = 0.0
    for n in range(C_TAYLOR_TERMS, 0, -1):
        total = total * h + c[n]
    return total * h


cdef double c_j(int nu, double x, double[:, ::1] zt) nogil:
    cdef Py_ssize_t lo, hi, mid, j, best
    cdef Py_ssize_t nz = zt.shape[0]
    cdef double d, bestd
    if x == 0.0:
        return 1.0 if nu == 0 else 0.0
    if x < C_SERIES_CUTOFF:
        return c_series(nu, x)
    if x <= ZMAX + C_TAYLOR_RADIUS:
        # bisect_left on the hi column
        lo = 0
        hi = nz
        while lo < hi:
            mid = (lo + hi) // 2
            if zt[mid, 0] < x:
                lo = mid + 1
            else:
                hi = mid
        best = -1
        bestd = 0.0
        for j in range(lo - 1, lo + 1):
            if 0 <= j < nz:
                d = fabs(x - zt[j, 0])
                if d <= C_TAYLOR_RADIUS and (best < 0 or d < bestd):
                    best = j
                    bestd = d
        if best >= 0:
            return c_taylor(nu, x, zt[best, 0], zt[best, 1], zt[best, 2])
    return c_asymptotic(nu, x)


def j_series(int nu, double x):
    return c_series(nu, x)


def j_asymptotic(int nu, double x):
    return c_asymptotic(nu, x)


def j_taylor(int nu, double x, double zhi, double zlo, double slope):
    return c_taylor(nu, x, zhi, zlo, slope)


def j_scalar(int nu, double x):
    return c_j(nu, x, Z0 if nu == 0 else Z1)


def _j_array(int nu, x):
    cdef cnp.ndarray arr = np.ascontiguousarray(x, dtype=np.float64)
    cdef cnp.ndarray out = np.empty_like(arr)
    cdef double[::1] xin = arr.reshape(-1)
    cdef double[::1] xout = out.reshape(-1)
    cdef double[:, ::1] zt = Z0 if nu == 0 else Z1
    cdef Py_ssize_t i, n = xin.shape[0]
    with nogil:
        for i in range(n):
            xout[i] = c_j(nu, xin[i], zt)
    return out


def j0_array(x):
    return _j_array(0, x)


def j1_array(x):
    return _j_array(1, x)


cdef inline void rk4_step(double x, double y, double vx, double vy, double w, double dt,
                          double *ox, double *oy, double *ovx, double *ovy) nogil:
    cdef double k1x = vx, k1y = vy, k1vx = -w * vy, k1vy = w * vx
    cdef double h = 0.5 * dt
    cdef double x2 = x + h * k1x, y2 = y + h * k1y, vx2 = vx + h * k1vx, vy2 = vy + h * k1vy
    cdef double k2x = vx2, k2y = vy2, k2vx = -w * vy2, k2vy = w * vx2
    cdef double x3 = x + h * k2x, y3 = y + h * k2y, vx3 = vx + h * k2vx, vy3 = vy + h * k2vy
    cdef double k3x = vx3, k3y = vy3, k3vx = -w * vy3, k3vy = w * vx3
    cdef double x4 = x + dt * k3x, y4 = y + dt * k3y, vx4 = vx + dt * k3vx, vy4 = vy + dt * k3vy
    cdef double k4x = vx4, k4y = vy4, k4vx = -w * vy4, k4vy = w * vx4
    cdef double s = dt / 6.0
    ox[0] = x + s * (k1x + 2.0 * (k2x + k3x) + k4x)
    oy[0] = y + s * (k1y + 2.0 * (k2y + k3y) + k4y)
    ovx[0] = vx + s * (k1vx + 2.0 * (k2vx + k3vx) + k4vx)
    ovy[0] = vy + s * (k1vy + 2.0 * (k2vy + k3vy) + k4vy)


def rk4_exit(double rho, double b, double step, long record_every=0, long max_steps=50_000_000):
    cdef double w = 1.0 / rho
    cdef double dt = step * rho
    cdef double x = -sqrt(1.0 - b * b)
    cdef double y = b
    cdef double vx = 1.0, vy = 0.0, t = 0.0
    cdef double nx, ny, nvx, nvy, lo, hi, mid, mx, my, mvx, mvy, tau
    cdef long n = 0
    cdef int it
    path = [(x, y)] if record_every else []
    while True:
        rk4_step(x, y, vx, vy, w, dt, &nx, &ny, &nvx, &nvy)
        n += 1
        if nx * nx + ny * ny > 1.0:
            break
        x = nx
        y = ny
        vx = nvx
        vy = nvy
        t += dt
        if record_every and n % record_every == 0:
            path.append((x, y))
        if n >= max_steps:
            return x, y, vx, vy, t, -n, path
    lo = 0.0
    hi = dt
    for it in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi or hi - lo < 1e-13:
            break
        rk4_step(x, y, vx, vy, w, mid, &mx, &my, &mvx, &mvy)
        if mx * mx + my * my > 1.0:
            hi = mid
        else:
            lo = mid
    tau = 0.5 * (lo + hi)
    rk4_step(x, y, vx, vy, w, tau, &nx, &ny, &nvx, &nvy)
    if record_every:
        path.append((nx, ny))
    return nx, ny, nvx, nvy, t + tau, n, path


cdef inline double c_arc(double rho, double b) nogil:
    cdef double s = sqrt(1.0 - b * b)
    cdef double px = -s, py = b, cx = -s, cy = b + rho
    cdef double norm = sqrt(cx * cx + cy * cy)
    cdef double ux, uy, d, qx, qy, theta
    if not norm > 0.0:
        return 0.0
    ux = cx / norm
    uy = cy / norm
    d = 2.0 * (px * ux + py * uy)
    qx = d * ux - px
    qy = d * uy - py
    theta = atan2(qx - cx, -(qy - cy))
    if theta == -PI:
        theta = PI
    return theta


def arc_deflections(double rho, b):
    cdef cnp.ndarray arr = np.ascontiguousarray(b, dtype=np.float64)
    cdef cnp.ndarray out = np.empty_like(arr)
    cdef double[::1] bin_ = arr.reshape(-1)
    cdef double[::1] tout = out.reshape(-1)
    cdef Py_ssize_t i, n = bin_.shape[0]
    with nogil:
        for i in range(n):
            tout[i] = c_arc(rho, bin_[i])
    return out


def mc_counts(double rho, b, long n_bins):
    cdef double[::1] bv = np.ascontiguousarray(b, dtype=np.float64).reshape(-1)
    cdef cnp.ndarray counts = np.zeros(n_bins, dtype=np.int64)
    cdef cnp.int64_t[::1] cv = counts
    cdef double width = 2.0 * PI / n_bins
    cdef Py_ssize_t i, n = bv.shape[0]
    cdef long idx
    cdef double theta
    with nogil:
        for i in range(n):
            theta = c_arc(rho, bv[i])
            idx = <long>ceil((theta + PI) / width) - 1
            if idx < 0:
                idx = 0
            elif idx > n_bins - 1:
                idx = n_bins - 1
            cv[idx] += 1
    return counts
