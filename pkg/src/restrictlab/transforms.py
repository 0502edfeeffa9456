"""Fourier transform of symmetric profiles and extension of symmetric caps.

In reduced form, with nu1 = (d-k-2)/2 and nu2 = (k-2)/2,

    f^(eta, zeta) = int int rho1^(d-k-1) rho2^(k-1) f0 s_{d-k}(rho1 |eta|) s_k(rho2 |zeta|),

where s_n = sigma_hat(n, .) is entire, so no special handling is needed at
|eta| = 0 or |zeta| = 0.  The amplitude/remainder split of each Bessel
factor yields five pieces; ``split_transform`` evaluates them all.
"""
from __future__ import annotations

import csv
import json
import math
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import quadrature as qd
from .quadrature import QuadratureSpec
from .specfun import _sigma_hat, amplitude, normalized_remainder
from .symgeom import CapProfile, RadialProfile2D, SymmetryParams, TruncationWarning

__all__ = [
    "ExtensionField",
    "SplitTransform",
    "decay_ratio",
    "extension_grid",
    "extension_operator",
    "f4_via_R",
    "radius_query",
    "split_transform",
    "symmetric_fourier",
    "symmetric_fourier_grid",
]


@dataclass(frozen=True)
class ExtensionField:
    eta_nodes: np.ndarray
    zeta_nodes: np.ndarray
    values: np.ndarray
    side: str = "space"

    def __post_init__(self):
        if self.side not in ("space", "frequency-sphere"):
            raise ValueError("side must be 'space' or 'frequency-sphere'")
        for g in (self.eta_nodes, self.zeta_nodes):
            g = np.asarray(g)
            if np.any(g < 0) or np.any(np.diff(g) <= 0):
                raise ValueError("field grids must be non-negative and strictly increasing")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("field values must be finite")

    def to_csv(self, path, header: Optional[dict] = None) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["y", "z", "re", "im"])
            for i, a in enumerate(self.eta_nodes):
                for j, b in enumerate(self.zeta_nodes):
                    v = complex(self.values[i, j])
                    w.writerow([repr(float(a)), repr(float(b)), repr(float(v.real)), repr(float(v.imag))])
        meta = dict(header or {})
        meta.update({"side": self.side, "shape": list(np.shape(self.values))})
        with open(str(path).rsplit(".", 1)[0] + ".json", "w", encoding="utf-8") as fh:
            json.dump(meta, fh, indent=2, sort_keys=True)


# ---------------------------------------------------------------- Fourier side


def _axis_rule(radius: float, freq: float, profile_breaks, order: int, extra=()):
    panel = math.pi / max(freq, 1.0)
    br = qd.merge_breaks(qd.uniform_breaks(0.0, radius, panel), profile_breaks,
                         [b for b in extra if 0.0 < b < radius])
    return qd.composite_legendre(br, order)


def _profile_on(f: RadialProfile2D, x1, x2) -> np.ndarray:
    return np.asarray(f.evaluate(x1, x2), dtype=complex)


def _tail_check(f: RadialProfile2D, tol: float) -> None:
    v = np.abs(f.values)
    top = v.max() if v.size else 0.0
    if top == 0:
        return
    # outermost node on each axis stands in for the value at the truncation radius
    edge = max(v[-1, :].max(), v[:, -1].max())
    if edge > tol * top:
        warnings.warn("profile is not negligible at the truncation radius", TruncationWarning, stacklevel=3)


def _check_sliced(params: SymmetryParams):
    if not params.sliced:
        raise ValueError("the reduced transform needs 1 <= k <= d-1")


def symmetric_fourier_grid(f: RadialProfile2D, etas, zetas, params: SymmetryParams,
                           quad: Optional[QuadratureSpec] = None) -> np.ndarray:
    """f^ on the tensor grid etas x zetas (magnitudes)."""
    _check_sliced(params)
    quad = quad or QuadratureSpec()
    _tail_check(f, quad.tol)
    etas = np.abs(np.atleast_1d(np.asarray(etas, dtype=float)))
    zetas = np.abs(np.atleast_1d(np.asarray(zetas, dtype=float)))
    d, k = params.d, params.k
    x1, w1 = _axis_rule(f.grid1.radius, etas.max(initial=0.0), f.grid1.breaks, quad.order)
    x2, w2 = _axis_rule(f.grid2.radius, zetas.max(initial=0.0), f.grid2.breaks, quad.order)
    F = _profile_on(f, x1, x2)
    k1 = (w1 * x1 ** (d - k - 1))[None, :] * _sigma_hat(d - k, etas[:, None] * x1[None, :])
    k2 = (w2 * x2 ** (k - 1))[None, :] * _sigma_hat(k, zetas[:, None] * x2[None, :])
    return k1 @ F @ k2.T


def symmetric_fourier(f: RadialProfile2D, eta_mag, zeta_mag, params: SymmetryParams,
                      quad: Optional[QuadratureSpec] = None):
    """f^ at paired points (eta_mag[i], zeta_mag[i]); scalar in, scalar out."""
    _check_sliced(params)
    quad = quad or QuadratureSpec()
    _tail_check(f, quad.tol)
    e = np.abs(np.asarray(eta_mag, dtype=float))
    z = np.abs(np.asarray(zeta_mag, dtype=float))
    e, z = np.broadcast_arrays(e, z)
    shape = e.shape
    e, z = e.ravel(), z.ravel()
    d, k = params.d, params.k
    x1, w1 = _axis_rule(f.grid1.radius, e.max(initial=0.0), f.grid1.breaks, quad.order)
    x2, w2 = _axis_rule(f.grid2.radius, z.max(initial=0.0), f.grid2.breaks, quad.order)
    F = _profile_on(f, x1, x2)
    k1 = (w1 * x1 ** (d - k - 1))[None, :] * _sigma_hat(d - k, e[:, None] * x1[None, :])
    k2 = (w2 * x2 ** (k - 1))[None, :] * _sigma_hat(k, z[:, None] * x2[None, :])
    out = np.einsum("pi,ij,pj->p", k1, F, k2).reshape(shape)
    return complex(out) if out.ndim == 0 else out


# ---------------------------------------------------------------- split


@dataclass(frozen=True)
class SplitTransform:
    """Pieces f1..f5 at one point.

    ``mirror`` holds the partner of each piece j >= 2 (conjugate amplitude and
    phase, same f0); for real f0 it equals the complex conjugate.
    """

    eta: float
    zeta: float
    pieces: tuple
    mirror: tuple
    d: int

    def reconstruct(self) -> complex:
        s = self.pieces[0] + sum(self.pieces[j] + self.mirror[j] for j in range(1, 5))
        return (2.0 * math.pi) ** (0.5 * self.d) * s

    def reconstruct_real(self) -> complex:
        """Conjugate form of the identity; valid for real-valued f0 only."""
        s = self.pieces[0] + sum(p + np.conj(p) for p in self.pieces[1:])
        return (2.0 * math.pi) ** (0.5 * self.d) * s


def split_transform(f: RadialProfile2D, eta_mag: float, zeta_mag: float, params: SymmetryParams,
                    quad: Optional[QuadratureSpec] = None) -> SplitTransform:
    if not params.nondegenerate:
        raise ValueError("the Bessel split needs 2 <= k <= d-2 (orders >= 0)")
    quad = quad or QuadratureSpec()
    _tail_check(f, quad.tol)
    d, k = params.d, params.k
    nu1, nu2 = 0.5 * (d - k - 2), 0.5 * (k - 2)
    eta, zeta = abs(float(eta_mag)), abs(float(zeta_mag))
    c1 = 1.0 / eta if eta > 0 else math.inf
    c2 = 1.0 / zeta if zeta > 0 else math.inf
    x1, w1 = _axis_rule(f.grid1.radius, eta, f.grid1.breaks, quad.order, extra=(c1,))
    x2, w2 = _axis_rule(f.grid2.radius, zeta, f.grid2.breaks, quad.order, extra=(c2,))
    F = _profile_on(f, x1, x2)
    A1, A2 = amplitude(nu1), amplitude(nu2)
    on1 = x1 >= c1
    on2 = x2 >= c2

    # remainder kernels (normalised) and principal kernels per axis
    r1 = w1 * x1 ** (d - k - 1) * normalized_remainder(nu1, eta * x1)
    r2 = w2 * x2 ** (k - 1) * normalized_remainder(nu2, zeta * x2)
    if eta > 0:
        p1 = np.where(on1, w1 * x1 ** (0.5 * (d - k - 1)) * np.exp(1j * eta * x1), 0.0) * eta ** (0.5 * (k - d + 1))
    else:
        p1 = np.zeros_like(x1, dtype=complex)
    if zeta > 0:
        p2 = np.where(on2, w2 * x2 ** (0.5 * (k - 1)) * np.exp(1j * zeta * x2), 0.0) * zeta ** (0.5 * (1 - k))
    else:
        p2 = np.zeros_like(x2, dtype=complex)

    def pair(a, b):
        return complex(a @ F @ b)

    f1 = pair(r1, r2)
    f2 = A2 * pair(r1, p2)
    f3 = A1 * pair(p1, r2)
    f4 = A1 * A2 * pair(p1, p2)
    f5 = A1 * np.conj(A2) * pair(p1, np.conj(p2))
    m2 = np.conj(A2) * pair(r1, np.conj(p2))
    m3 = np.conj(A1) * pair(np.conj(p1), r2)
    m4 = np.conj(A1 * A2) * pair(np.conj(p1), np.conj(p2))
    m5 = np.conj(A1) * A2 * pair(np.conj(p1), p2)
    return SplitTransform(eta, zeta, (f1, f2, f3, f4, f5), (0j, m2, m3, m4, m5), d)


def weight_exponents(params: SymmetryParams, p: float):
    """(alpha_p, beta_p) = ((d-k-1)(1/p-1/2), (k-1)(1/p-1/2))."""
    t = 1.0 / p - 0.5
    return (params.d - params.k - 1) * t, (params.k - 1) * t


def f4_via_R(f: RadialProfile2D, eta_mag: float, zeta_mag: float, params: SymmetryParams, p: float,
             piece: int = 4, quad: Optional[QuadratureSpec] = None) -> complex:
    """Pieces 4/5 through the weighted operator R_{alpha,beta} applied to h.

    R puts |omega| in its phase, so the sign flip needed for e^{+i(...)} is
    realised by reflecting h through the origin (piece 4) or in x1 only
    (piece 5).  The indicator on [1, inf)^2 in h matches the lower limits of
    the pieces only when |eta|, |zeta| <= 1, or when f0 vanishes off [1, inf)^2.
    """
    from .weightedops import op_R

    if piece not in (4, 5):
        raise ValueError("piece must be 4 or 5")
    quad = quad or QuadratureSpec()
    d, k = params.d, params.k
    nu1, nu2 = 0.5 * (d - k - 2), 0.5 * (k - 2)
    alpha, beta = weight_exponents(params, p)
    eta, zeta = abs(float(eta_mag)), abs(float(zeta_mag))
    s1 = -1.0
    s2 = -1.0 if piece == 4 else 1.0

    def h(x1, x2):
        r1, r2 = s1 * x1, s2 * x2
        inside = (r1 >= 1.0) & (r2 >= 1.0)
        a = np.where(inside, r1, 1.0)
        b = np.where(inside, r2, 1.0)
        val = a ** (0.5 * (d - k - 1)) * b ** (0.5 * (k - 1)) * (1 + a) ** alpha * (1 + b) ** beta
        return np.where(inside, val * _profile_on_points(f, a, b), 0.0)

    lo1, hi1 = -f.grid1.radius, -1.0
    lo2, hi2 = (-f.grid2.radius, -1.0) if piece == 4 else (1.0, f.grid2.radius)
    rval = op_R(h, np.array([[eta, zeta]]), alpha, beta, box=((lo1, hi1), (lo2, hi2)),
                breaks=(np.concatenate([-f.grid1.breaks[::-1], [-1.0 / max(eta, 1e-300)]]),
                        np.concatenate([s2 * f.grid2.breaks, [s2 / max(zeta, 1e-300)]])),
                order=quad.order)[0]
    A1, A2 = amplitude(nu1), amplitude(nu2)
    amp = A1 * A2 if piece == 4 else A1 * np.conj(A2)
    return complex(amp * eta ** (0.5 * (k - d + 1)) * zeta ** (0.5 * (1 - k)) * rval)


def _profile_on_points(f: RadialProfile2D, a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if f.func is not None:
        return np.asarray(f.func(a, b), dtype=complex)
    shp = np.broadcast(a, b).shape
    aa, bb = np.broadcast_arrays(a, b)
    m1 = f.grid1.interpolation(aa.ravel())
    m2 = f.grid2.interpolation(bb.ravel())
    return np.einsum("pi,ij,pj->p", m1, f.values, m2).reshape(shp)


# ---------------------------------------------------------------- sphere side


def _extension_kernels(F: CapProfile, ys, zs):
    d, k = F.params.d, F.params.k
    r = F.nodes
    s = np.sqrt(np.clip(1.0 - r * r, 0.0, None))
    a = _sigma_hat(d - k, np.asarray(ys, dtype=float)[:, None] * r[None, :])
    b = _sigma_hat(k, s[:, None] * np.asarray(zs, dtype=float)[None, :])
    return a, b


def extension_grid(F: CapProfile, ys, zs, chunk: int = 4096) -> ExtensionField:
    """F^sigma on the tensor grid |y| in ys, |z| in zs."""
    ys = np.abs(np.atleast_1d(np.asarray(ys, dtype=float)))
    zs = np.abs(np.atleast_1d(np.asarray(zs, dtype=float)))
    wf = F.weights * F.values
    out = np.empty((ys.size, zs.size), dtype=complex)
    a, _ = _extension_kernels(F, ys, zs[:1])
    left = a * wf[None, :]
    for j in range(0, zs.size, chunk):
        _, b = _extension_kernels(F, ys[:1], zs[j:j + chunk])
        out[:, j:j + chunk] = left @ b
    return ExtensionField(ys, zs, out, "space")


def extension_operator(F: CapProfile, y_mag, z_mag, params: Optional[SymmetryParams] = None,
                       quad: Optional[QuadratureSpec] = None):
    """F^sigma(y, z) at paired magnitudes; scalar in, scalar out."""
    if params is not None and params != F.params:
        raise ValueError("profile built for different symmetry parameters")
    y = np.abs(np.asarray(y_mag, dtype=float))
    z = np.abs(np.asarray(z_mag, dtype=float))
    y, z = np.broadcast_arrays(y, z)
    shape = y.shape
    d, k = F.params.d, F.params.k
    r = F.nodes
    s = np.sqrt(np.clip(1.0 - r * r, 0.0, None))
    a = _sigma_hat(d - k, y.ravel()[:, None] * r[None, :])
    b = _sigma_hat(k, z.ravel()[:, None] * s[None, :])
    out = (a * b) @ (F.weights * F.values)
    out = out.reshape(shape)
    return complex(out) if out.ndim == 0 else out


def decay_ratio(F: CapProfile, ys, zs, params: Optional[SymmetryParams] = None) -> float:
    """sup |F^sigma| (1+|y|)^((d-k-1)/2) (1+|z|)^((k-1)/2) over the grid."""
    params = F.params if params is None else params
    field = extension_grid(F, ys, zs)
    d, k = params.d, params.k
    env = (1 + field.eta_nodes[:, None]) ** (0.5 * (d - k - 1)) * (1 + field.zeta_nodes[None, :]) ** (0.5 * (k - 1))
    return float(np.max(np.abs(field.values) * env))


def radius_query(field, eps: float) -> float:
    """Smallest grid radius R with sup_{|x| > R} |F^sigma| < eps (inf if none)."""
    rad = np.hypot(field.eta_nodes[:, None], field.zeta_nodes[None, :]).ravel()
    mag = np.abs(field.values).ravel()
    order = np.argsort(rad)
    rad, mag = rad[order], mag[order]
    # suffix maximum: sup over points strictly beyond each radius
    suffix = np.maximum.accumulate(mag[::-1])[::-1]
    beyond = np.concatenate([suffix[1:], [0.0]])
    ok = beyond < eps
    # last index where the condition fails, answer is the next radius
    bad = np.nonzero(~ok)[0]
    return float(rad[0] if bad.size == 0 else rad[bad[-1] + 1])
