"""Pure-Python kernels.

Same algorithms, same operation order and same signatures as ``_ckernels``;
used when the compiled extension is unavailable or disabled with
``SOLENOID_SCATTER_PURE_PYTHON=1``.
"""
import math
from bisect import bisect_left

import numpy as np

from ._zero_table import J0_ZEROS, J1_ZEROS, ZMAX

NAME = "python"

SERIES_CUTOFF = 25.0
TAYLOR_RADIUS = 0.5
TAYLOR_TERMS = 18
ASYMPTOTIC_MAX_TERMS = 40

_SPLITTER = 134217729.0  # 2**27 + 1
_INV_SQRT_PI = 1.0 / math.sqrt(math.pi)
_ZEROS = (J0_ZEROS, J1_ZEROS)
_ZERO_HI = (tuple(r[0] for r in J0_ZEROS), tuple(r[0] for r in J1_ZEROS))


# double-double arithmetic ---------------------------------------------------

def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def _split(a):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def _two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _dd_add(ah, al, bh, bl):
    s1, s2 = _two_sum(ah, bh)
    t1, t2 = _two_sum(al, bl)
    s2 += t1
    s1, s2 = _quick_two_sum(s1, s2)
    s2 += t2
    return _quick_two_sum(s1, s2)


def _dd_mul(ah, al, bh, bl):
    p, e = _two_prod(ah, bh)
    e += ah * bl + al * bh
    return _quick_two_sum(p, e)


def _dd_div_d(ah, al, d):
    q1 = ah / d
    p, e = _two_prod(q1, d)
    r = ((ah - p) - e + al) / d
    return _quick_two_sum(q1, r)


# Bessel branches ------------------------------------------------------------

def j_series(nu, x):
    """Ascending series for J_nu(x), nu in {0, 1}, summed in double-double."""
    half = 0.5 * x
    yh, yl = _two_prod(half, half)
    if nu == 0:
        th, tl = 1.0, 0.0
    else:
        th, tl = half, 0.0
    sh, sl = th, tl
    k = 0
    while True:
        k += 1
        th, tl = _dd_mul(th, tl, yh, yl)
        th, tl = _dd_div_d(th, tl, float(k * (k + nu)))
        th, tl = -th, -tl
        sh, sl = _dd_add(sh, sl, th, tl)
        if abs(th) < 1e-34 and k > half:
            break
        if k > 500:
            break
    return sh + sl


def j_asymptotic(nu, x):
    """Hankel asymptotic expansion in amplitude/phase form, x > 0."""
    mu = 4.0 * nu * nu
    p = 1.0
    q = 0.0
    t = 1.0
    prev = 1.0
    for k in range(1, ASYMPTOTIC_MAX_TERMS):
        m = 2 * k - 1
        t = t * (mu - m * m) / (8.0 * k * x)
        a = abs(t)
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
    s = math.sin(x)
    c = math.cos(x)
    if nu == 0:
        val = p * (c + s) - q * (s - c)
    else:
        val = p * (s - c) + q * (s + c)
    return _INV_SQRT_PI / math.sqrt(x) * val


def j_taylor(nu, x, zhi, zlo, slope):
    """Taylor expansion of J_nu about one of its zeros zhi + zlo."""
    h = (x - zhi) - zlo
    z = zhi
    z2 = z * z
    nn = float(nu * nu)
    c = [0.0] * (TAYLOR_TERMS + 1)
    c[1] = slope
    for n in range(0, TAYLOR_TERMS - 1):
        acc = -z * (n + 1) * (2 * n + 1) * c[n + 1] - (n * n + z2 - nn) * c[n]
        if n >= 1:
            acc -= 2.0 * z * c[n - 1]
        if n >= 2:
            acc -= c[n - 2]
        c[n + 2] = acc / (z2 * (n + 2) * (n + 1))
    total = 0.0
    for n in range(TAYLOR_TERMS, 0, -1):
        total = total * h + c[n]
    return total * h


def _near_zero(nu, x):
    his = _ZERO_HI[nu]
    i = bisect_left(his, x)
    best = None
    for j in (i - 1, i):
        if 0 <= j < len(his):
            d = abs(x - his[j])
            if d <= TAYLOR_RADIUS and (best is None or d < best[0]):
                best = (d, j)
    return None if best is None else _ZEROS[nu][best[1]]


def j_scalar(nu, x):
    if x == 0.0:
        return 1.0 if nu == 0 else 0.0
    if x < SERIES_CUTOFF:
        return j_series(nu, x)
    if x <= ZMAX + TAYLOR_RADIUS:
        row = _near_zero(nu, x)
        if row is not None:
            return j_taylor(nu, x, row[0], row[1], row[2])
    return j_asymptotic(nu, x)


def j0_array(x):
    x = np.ascontiguousarray(x, dtype=np.float64)
    out = np.empty_like(x)
    flat_in = x.ravel()
    flat_out = out.ravel()
    for i in range(flat_in.size):
        flat_out[i] = j_scalar(0, float(flat_in[i]))
    return out


def j1_array(x):
    x = np.ascontiguousarray(x, dtype=np.float64)
    out = np.empty_like(x)
    flat_in = x.ravel()
    flat_out = out.ravel()
    for i in range(flat_in.size):
        flat_out[i] = j_scalar(1, float(flat_in[i]))
    return out


# classical orbits -----------------------------------------------------------

def _rk4_step(x, y, vx, vy, w, dt):
    # uniform field inside the disk: dv/dt = w * (-vy, vx)
    k1x, k1y, k1vx, k1vy = vx, vy, -w * vy, w * vx
    h = 0.5 * dt
    x2, y2, vx2, vy2 = x + h * k1x, y + h * k1y, vx + h * k1vx, vy + h * k1vy
    k2x, k2y, k2vx, k2vy = vx2, vy2, -w * vy2, w * vx2
    x3, y3, vx3, vy3 = x + h * k2x, y + h * k2y, vx + h * k2vx, vy + h * k2vy
    k3x, k3y, k3vx, k3vy = vx3, vy3, -w * vy3, w * vx3
    x4, y4, vx4, vy4 = x + dt * k3x, y + dt * k3y, vx + dt * k3vx, vy + dt * k3vy
    k4x, k4y, k4vx, k4vy = vx4, vy4, -w * vy4, w * vx4
    s = dt / 6.0
    return (
        x + s * (k1x + 2.0 * (k2x + k3x) + k4x),
        y + s * (k1y + 2.0 * (k2y + k3y) + k4y),
        vx + s * (k1vx + 2.0 * (k2vx + k3vx) + k4vx),
        vy + s * (k1vy + 2.0 * (k2vy + k3vy) + k4vy),
    )


def rk4_exit(rho, b, step, record_every=0, max_steps=50_000_000):
    """Integrate from the entry point until the orbit leaves the unit disk.

    Returns ``(x, y, vx, vy, t_exit, n_steps, path)`` where ``path`` is a list
    of (x, y) samples every ``record_every`` steps (empty when 0).
    """
    w = 1.0 / rho
    dt = step * rho
    x = -math.sqrt(1.0 - b * b)
    y = b
    vx, vy = 1.0, 0.0
    t = 0.0
    n = 0
    path = [(x, y)] if record_every else []
    while True:
        nx, ny, nvx, nvy = _rk4_step(x, y, vx, vy, w, dt)
        n += 1
        if nx * nx + ny * ny > 1.0:
            break
        x, y, vx, vy = nx, ny, nvx, nvy
        t += dt
        if record_every and n % record_every == 0:
            path.append((x, y))
        if n >= max_steps:
            return x, y, vx, vy, t, -n, path
    lo, hi = 0.0, dt
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi or hi - lo < 1e-13:
            break
        mx, my, _, _ = _rk4_step(x, y, vx, vy, w, mid)
        if mx * mx + my * my > 1.0:
            hi = mid
        else:
            lo = mid
    tau = 0.5 * (lo + hi)
    ex, ey, evx, evy = _rk4_step(x, y, vx, vy, w, tau)
    if record_every:
        path.append((ex, ey))
    return ex, ey, evx, evy, t + tau, n, path


def arc_deflections(rho, b):
    """Exact arc-geometry deflection for an array of impact parameters."""
    b = np.asarray(b, dtype=np.float64)
    s = np.sqrt(1.0 - b * b)
    px = -s
    py = b
    cx = -s
    cy = b + rho
    norm = np.sqrt(cx * cx + cy * cy)
    with np.errstate(invalid="ignore", divide="ignore"):
        ux = cx / norm
        uy = cy / norm
    d = 2.0 * (px * ux + py * uy)
    qx = d * ux - px
    qy = d * uy - py
    theta = np.arctan2(qx - cx, -(qy - cy))
    theta = np.where(theta == -math.pi, math.pi, theta)
    return np.where(norm > 0.0, theta, 0.0)


def mc_counts(rho, b, n_bins):
    """Histogram of arc deflections in ``n_bins`` right-closed bins on (-pi, pi]."""
    theta = arc_deflections(rho, b)
    width = 2.0 * math.pi / n_bins
    idx = np.ceil((theta + math.pi) / width).astype(np.int64) - 1
    np.clip(idx, 0, n_bins - 1, out=idx)
    return np.bincount(idx, minlength=n_bins).astype(np.int64)
