"""Bessel J_nu kernels for real order nu >= 0 and real x >= 0.

Three branches: ascending series for small x, Miller backward recurrence
for intermediate x, Hankel asymptotic expansion for large x.  Each branch
exists twice, once as a scalar numba loop and once vectorised in numpy.
"""
import math

import numpy as np

from ._accel import njit, numba_enabled

SERIES_CUT = 8.0
HANKEL_CUT = 25.0
_TINY = 1e-300


def series_limit(nu: float) -> float:
    return max(SERIES_CUT, 2.0 * math.sqrt(nu + 1.0))


def hankel_limit(nu: float) -> float:
    return max(HANKEL_CUT, nu * nu, series_limit(nu))


def miller_start(nu: float, xmax: float) -> int:
    return int(xmax + 3.0 * max(xmax, 1.0) ** (1.0 / 3.0) + 30.0)


def _miller_weights(nu: float, n: int) -> np.ndarray:
    # (x/2)^nu / Gamma(nu+1) = sum_k w_k J_{nu+2k}(x)
    w = np.empty(n // 2 + 2)
    w[0] = 1.0
    poch = 1.0  # (nu+1)_{k-1} / k!
    for k in range(1, w.size):
        if k > 1:
            poch *= (nu + k - 1.0) / k
        else:
            poch = 1.0
        w[k] = (nu + 2.0 * k) * poch
    return w


# ----------------------------------------------------------------- numba


@njit
def _series_scalar(nu, x, lam):
    # lam=True returns Gamma(nu+1) (2/x)^nu J_nu(x)
    h = 0.25 * x * x
    term = 1.0
    total = 1.0
    j = 0
    while True:
        j += 1
        term *= -h / (j * (nu + j))
        total += term
        if abs(term) < 1e-17 * abs(total) and j > 0.5 * x:
            break
        if j > 500:
            break
    if lam:
        return total
    if x == 0.0:
        return total if nu == 0.0 else 0.0
    return total * math.exp(nu * math.log(0.5 * x) - math.lgamma(nu + 1.0))


@njit
def _hankel_scalar(nu, x):
    mu = 4.0 * nu * nu
    p = 1.0
    q = 0.0
    term = 1.0
    prev = 1e300
    k = 0
    while True:
        k += 1
        term *= (mu - (2.0 * k - 1.0) ** 2) / (8.0 * k * x)
        a = abs(term)
        if a == 0.0 or a > prev:
            break
        sgn = 1.0 if (k // 2) % 2 == 0 else -1.0
        if k % 2 == 0:
            p += sgn * term
        else:
            q += sgn * term
        if a < 1e-17:
            break
        prev = a
    chi = x - (0.5 * nu + 0.25) * math.pi
    return math.sqrt(2.0 / (math.pi * x)) * (p * math.cos(chi) - q * math.sin(chi))


@njit
def _miller_scalar(nu, x, weights):
    n = int(x + 3.0 * max(x, 1.0) ** (1.0 / 3.0) + 30.0)
    if n % 2 == 1:
        n += 1
    jp1 = 0.0
    jn = 1e-30
    s = 0.0
    j0 = 0.0
    for m in range(n, 0, -1):
        if m % 2 == 0:
            s += weights[m // 2] * jn
        jm1 = 2.0 * (nu + m) / x * jn - jp1
        jp1 = jn
        jn = jm1
        if abs(jn) > 1e250:
            jn *= 1e-250
            jp1 *= 1e-250
            s *= 1e-250
    j0 = jn
    s += weights[0] * j0
    norm = math.exp(nu * math.log(0.5 * x) - math.lgamma(nu + 1.0))
    return j0 * norm / s


@njit
def _jv_numba(nu, x, weights, lam, out):
    scut = max(8.0, 2.0 * math.sqrt(nu + 1.0))
    hcut = max(25.0, nu * nu, scut)
    for i in range(x.size):
        xi = x[i]
        if xi < scut:
            out[i] = _series_scalar(nu, xi, lam)
            continue
        if xi >= hcut:
            v = _hankel_scalar(nu, xi)
        else:
            v = _miller_scalar(nu, xi, weights)
        if lam:
            v *= math.exp(math.lgamma(nu + 1.0) + nu * math.log(2.0 / xi))
        out[i] = v
    return out


# ----------------------------------------------------------------- numpy


def _series_np(nu: float, x: np.ndarray, lam: bool) -> np.ndarray:
    h = 0.25 * x * x
    term = np.ones_like(x)
    total = np.ones_like(x)
    jmax = int(0.5 * x.max()) + 60 if x.size else 0
    for j in range(1, min(jmax, 500) + 1):
        term = term * (-h / (j * (nu + j)))
        total = total + term
        if j > 0.5 * x.max() and np.all(np.abs(term) < 1e-17 * np.abs(total)):
            break
    if lam:
        return total
    if nu == 0.0:
        return total
    with np.errstate(divide="ignore", invalid="ignore"):
        pre = np.exp(nu * np.log(0.5 * x) - math.lgamma(nu + 1.0))
    return total * np.where(x > 0, pre, 0.0)


def _hankel_np(nu: float, x: np.ndarray) -> np.ndarray:
    mu = 4.0 * nu * nu
    p = np.ones_like(x)
    q = np.zeros_like(x)
    term = np.ones_like(x)
    prev = np.full_like(x, 1e300)
    active = np.ones(x.shape, dtype=bool)
    k = 0
    while np.any(active) and k < 200:
        k += 1
        term = term * (mu - (2.0 * k - 1.0) ** 2) / (8.0 * k * x)
        a = np.abs(term)
        active &= (a != 0.0) & (a <= prev)
        sgn = 1.0 if (k // 2) % 2 == 0 else -1.0
        contrib = np.where(active, sgn * term, 0.0)
        if k % 2 == 0:
            p += contrib
        else:
            q += contrib
        active &= a >= 1e-17
        prev = a
    chi = x - (0.5 * nu + 0.25) * math.pi
    return np.sqrt(2.0 / (math.pi * x)) * (p * np.cos(chi) - q * np.sin(chi))


def _miller_np(nu: float, x: np.ndarray) -> np.ndarray:
    n = miller_start(nu, float(x.max()))
    n += n % 2
    w = _miller_weights(nu, n)
    jp1 = np.zeros_like(x)
    jn = np.full_like(x, 1e-30)
    s = np.zeros_like(x)
    for m in range(n, 0, -1):
        if m % 2 == 0:
            s += w[m // 2] * jn
        jm1 = 2.0 * (nu + m) / x * jn - jp1
        jp1, jn = jn, jm1
        big = np.abs(jn) > 1e250
        if np.any(big):
            scale = np.where(big, 1e-250, 1.0)
            jn *= scale
            jp1 *= scale
            s *= scale
    s += w[0] * jn
    norm = np.exp(nu * np.log(0.5 * x) - math.lgamma(nu + 1.0))
    return jn * norm / s


def _jv_numpy(nu: float, x: np.ndarray, lam: bool) -> np.ndarray:
    out = np.empty_like(x)
    scut, hcut = series_limit(nu), hankel_limit(nu)
    lo = x < scut
    hi = x >= hcut
    mid = ~lo & ~hi
    if np.any(lo):
        out[lo] = _series_np(nu, x[lo], lam)
    for mask, fn in ((hi, _hankel_np), (mid, _miller_np)):
        if np.any(mask):
            xm = x[mask]
            v = fn(nu, xm)
            if lam:
                v = v * np.exp(math.lgamma(nu + 1.0) + nu * np.log(2.0 / xm))
            out[mask] = v
    return out


def jv_kernel(nu: float, x: np.ndarray, lam: bool = False, use_numba=None) -> np.ndarray:
    """Evaluate J_nu (or the normalised Lambda_nu when ``lam``) on a flat array."""
    x = np.ascontiguousarray(x, dtype=np.float64).ravel()
    if use_numba is None:
        use_numba = numba_enabled()
    if use_numba:
        n = miller_start(nu, hankel_limit(nu)) + 2
        weights = _miller_weights(nu, n + n % 2)
        return _jv_numba(float(nu), x, weights, bool(lam), np.empty_like(x))
    return _jv_numpy(float(nu), x, lam)


def branch_of(nu: float, x: float) -> str:
    if x < series_limit(nu):
        return "series"
    if x >= hankel_limit(nu):
        return "hankel"
    return "miller"
