"""Bessel functions, the amplitude/remainder split of J_nu and sphere transforms.

``sigma_hat(n, t)`` is the Fourier transform of surface measure on S^(n-1)
evaluated at a point of norm ``t``:

    sigma_hat(n, t) = (2 pi)^(n/2) t^((2-n)/2) J_((n-2)/2)(t),

with the n = 1 case (two point masses) equal to ``2 cos t``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._bessel import branch_of, jv_kernel

__all__ = [
    "BesselSplit",
    "amplitude",
    "bessel_j",
    "bessel_lambda",
    "bessel_split",
    "branch_of",
    "normalized_remainder",
    "principal_part",
    "remainder_envelope_constant",
    "sigma_hat",
    "sphere_area",
]


def _check_order(nu: float) -> float:
    nu = float(nu)
    if not np.isfinite(nu) or nu < 0:
        raise ValueError(f"Bessel order must be a finite real >= 0, got {nu}")
    return nu


def _as_nonneg(x):
    arr = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(arr)):
        raise ValueError("argument must be finite")
    if np.any(arr < 0):
        raise ValueError("argument must be >= 0")
    return arr


def bessel_j(nu: float, x):
    """J_nu(x) for real nu >= 0 and x >= 0; scalar in, scalar out."""
    nu = _check_order(nu)
    arr = _as_nonneg(x)
    out = jv_kernel(nu, arr).reshape(arr.shape)
    return float(out) if out.ndim == 0 else out


def bessel_lambda(nu: float, x):
    """Gamma(nu+1) (2/x)^nu J_nu(x), equal to 1 at x = 0."""
    nu = _check_order(nu)
    arr = _as_nonneg(x)
    out = jv_kernel(nu, arr, lam=True).reshape(arr.shape)
    return float(out) if out.ndim == 0 else out


def sphere_area(n: int) -> float:
    """Surface measure of the unit sphere S^(n-1) in R^n (n >= 1)."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    return 2.0 * math.pi ** (0.5 * n) / math.gamma(0.5 * n)


def sigma_hat(d: int, r):
    """Transform of the surface measure of S^(d-1) at radius r, d >= 2."""
    if int(d) != d or d < 2:
        raise ValueError("sigma_hat needs an integer dimension d >= 2")
    _as_nonneg(r)
    return _sigma_hat(int(d), r)


def _sigma_hat(n: int, t):
    # also covers n = 1, needed for the k = 1 and k = d-1 slices
    arr = np.abs(np.asarray(t, dtype=float))
    if n == 1:
        out = 2.0 * np.cos(arr)
    else:
        out = sphere_area(n) * jv_kernel(0.5 * (n - 2), arr, lam=True).reshape(arr.shape)
    return float(out) if np.ndim(out) == 0 else out


def amplitude(nu: float) -> complex:
    """Leading coefficient A_nu = (2 pi)^(-1/2) exp(-i (nu pi/2 + pi/4)).

    With this normalisation A e^{ir} + conj(A) e^{-ir} = sqrt(2/pi) cos(r - nu pi/2 - pi/4),
    the first Hankel term, so the remainder decays like r^(-3/2).
    """
    return (2.0 * math.pi) ** -0.5 * complex(np.exp(-1j * (0.5 * nu * math.pi + 0.25 * math.pi)))


def principal_part(nu: float, r):
    """(A e^{ir} + conj(A) e^{-ir}) r^(-1/2) on [1, inf), zero below 1."""
    r = np.asarray(r, dtype=float)
    a = amplitude(nu)
    safe = np.where(r >= 1.0, r, 1.0)
    val = 2.0 * np.real(a * np.exp(1j * safe)) / np.sqrt(safe)
    return np.where(r >= 1.0, val, 0.0)


@dataclass(frozen=True)
class BesselSplit:
    """J_nu(r) = principal + remainder, with principal as above."""

    nu: float
    r: float
    principal: float
    remainder: float
    amplitude: complex

    @property
    def value(self) -> float:
        return self.principal + self.remainder


def bessel_split(nu: float, r: float) -> BesselSplit:
    nu = _check_order(nu)
    r = float(_as_nonneg(r))
    j = bessel_j(nu, r)
    p = float(principal_part(nu, r))
    return BesselSplit(nu, r, p, j - p, amplitude(nu))


def normalized_remainder(nu: float, t):
    """t^(-nu) R_nu(t), bounded by a multiple of (1+t)^(-nu-3/2)."""
    nu = _check_order(nu)
    t = _as_nonneg(t)
    lam = jv_kernel(nu, t, lam=True).reshape(t.shape)
    jnorm = lam / (2.0**nu * math.gamma(nu + 1.0))
    safe = np.where(t >= 1.0, t, 1.0)
    principal = principal_part(nu, t) * safe ** (-nu)
    return jnorm - np.where(t >= 1.0, principal, 0.0)


def remainder_envelope_constant(nu: float, r) -> float:
    """sup |R_nu(r)| / (r^nu (1+r)^(-nu-3/2)) over the sample points."""
    r = _as_nonneg(r)
    r = r[r > 0]
    rem = normalized_remainder(nu, r)
    return float(np.max(np.abs(rem) * (1.0 + r) ** (nu + 1.5)))
