"""Search for symmetric extension maximizers by p'-norm power iteration.

The discrete operator maps cap values F_i (on Gauss-Jacobi nodes) to
F^sigma on a tensor space grid in (|y|, |z|).  With cap inner product
weights W_i and space measure mu, the step

    F+  ∝  A^H ( |A F|^(p'-2) A F )

never decreases ||A F||_{p', mu} / ||F||_W (Hölder twice).  For p' = inf the
step moves to the conjugate kernel at the current argmax, which is also
monotone by Cauchy-Schwarz.
"""
from __future__ import annotations

import logging
import math
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import quadrature as qd
from .quadrature import QuadratureSpec
from .specfun import _sigma_hat, sphere_area
from .symgeom import (CapProfile, RadialProfile2D, SymmetryParams, TruncationWarning,
                      dual_exponent, lp_norm_2d)
from .transforms import extension_grid, symmetric_fourier

log = logging.getLogger(__name__)

__all__ = [
    "DiscreteExtension",
    "MaximizerRun",
    "StagnationWarning",
    "default_jobs",
    "duality_check",
    "existence_label",
    "maximize",
    "objective",
    "power_step",
]


class StagnationWarning(RuntimeWarning):
    pass


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("RESTRICT_LAB_JOBS", "1")))
    except ValueError:
        return 1


class DiscreteExtension:
    """Extension operator on a fixed cap rule and space grid."""

    def __init__(self, params: SymmetryParams, grid: Optional[QuadratureSpec] = None):
        if not params.sliced:
            raise ValueError("need 1 <= k <= d-1")
        self.params = params
        self.grid = grid = grid or QuadratureSpec()
        d, k = params.d, params.k
        r, w = qd.cap_rule(d, k, grid.cap_nodes)
        self.r, self.w = r, w
        self.cap_weights = params.slice_constant * w
        panels = max(1, grid.space_nodes // grid.order)
        x, wx = qd.composite_legendre(np.linspace(0.0, grid.space_radius, panels + 1), grid.order)
        # the origin enters with zero weight so sup norms see x = 0
        self.y = np.concatenate([[0.0], x])
        self.z = self.y
        wy = np.concatenate([[0.0], wx])
        self.mu = params.slice_constant * np.outer(wy * self.y ** (d - k - 1), wy * self.z ** (k - 1))
        s = np.sqrt(1.0 - r * r)
        self.Ay = _sigma_hat(d - k, self.y[:, None] * r[None, :])
        self.Bz = _sigma_hat(k, s[:, None] * self.z[None, :])
        self._radius = np.hypot(self.y[:, None], self.z[None, :])

    def profile(self, values) -> CapProfile:
        return CapProfile(self.params, self.r, self.w, values)

    def apply(self, values) -> np.ndarray:
        v = np.asarray(values, dtype=complex)
        return self.Ay @ ((self.w * v)[:, None] * self.Bz)

    def adjoint(self, G) -> np.ndarray:
        """A^H with respect to (mu, W): <A F, G>_mu = <F, A^H G>_W."""
        M = (self.mu * G) @ self.Bz.T
        return np.sum(self.Ay * M, axis=0) / self.params.slice_constant

    def norm_cap(self, values) -> float:
        return float(np.sqrt(np.sum(self.cap_weights * np.abs(values) ** 2)))

    def norm_space(self, field_values, pp) -> float:
        a = np.abs(field_values)
        if pp == math.inf:
            return float(a.max())
        return float(np.sum(self.mu * a ** pp) ** (1.0 / pp))

    def tail_fraction(self, field_values, pp) -> float:
        """Estimated share of ||A F||^p' beyond the grid radius.

        Shell masses over [R/2, R] are fitted by a power law in the radius
        and integrated to infinity; inf if the fit does not decay.
        """
        R = self.grid.space_radius
        a = np.abs(field_values)
        if pp == math.inf:
            outer = a[self._radius > 0.5 * R].max()
            return float(outer / a.max()) if outer >= a.max() else 0.0
        dens = self.mu * a ** pp
        total = dens.sum()
        edges = np.linspace(0.5 * R, R, 9)
        mids = 0.5 * (edges[:-1] + edges[1:])
        mass = np.array([dens[(self._radius >= lo) & (self._radius < hi)].sum()
                         for lo, hi in zip(edges[:-1], edges[1:])]) / np.diff(edges)
        if np.any(mass <= 0):
            return 0.0
        slope, icpt = np.polyfit(np.log(mids), np.log(mass), 1)
        if slope >= -1:
            return math.inf
        tail = math.exp(icpt) * R ** (slope + 1) / (-slope - 1)
        return float(tail / total) if total > 0 else 0.0


def _pp(p) -> float:
    if p < 1:
        raise ValueError("p must be >= 1")
    return dual_exponent(float(p))


def objective(F, p, params: Optional[SymmetryParams] = None, grid=None, op: Optional[DiscreteExtension] = None,
              warn: bool = True) -> float:
    """||F^sigma||_{L^p'(R^d)} / ||F||_{L^2(S^(d-1))} on the discrete grid."""
    if op is None:
        params = params or F.params
        op = DiscreteExtension(params, grid)
    vals = _values_on(F, op)
    n = op.norm_cap(vals)
    if n == 0:
        raise ValueError("objective undefined for F = 0")
    pp = _pp(p)
    field_vals = op.apply(vals)
    if warn:
        frac = op.tail_fraction(field_vals, pp)
        if frac > op.grid.tol:
            warnings.warn(f"estimated tail beyond R={op.grid.space_radius:g} is {frac:.2e} of the norm",
                          TruncationWarning, stacklevel=2)
    return op.norm_space(field_vals, pp) / n


def _values_on(F, op: DiscreteExtension) -> np.ndarray:
    if isinstance(F, CapProfile):
        if F.nodes.shape == op.r.shape and np.allclose(F.nodes, op.r):
            return F.values
        if F.func is not None:
            return np.asarray(F.func(op.r), dtype=complex) * np.ones_like(op.r)
        return interpolate_cap(F, op.r)
    return np.asarray(F, dtype=complex)


def interpolate_cap(F: CapProfile, r_new) -> np.ndarray:
    """Polynomial interpolation in u = 2r^2 - 1 (Chebyshev basis)."""
    u = 2.0 * F.nodes ** 2 - 1.0
    un = 2.0 * np.asarray(r_new) ** 2 - 1.0
    deg = F.nodes.size - 1
    cr = np.polynomial.chebyshev.chebfit(u, F.values.real, deg)
    ci = np.polynomial.chebyshev.chebfit(u, F.values.imag, deg)
    return np.polynomial.chebyshev.chebval(un, cr) + 1j * np.polynomial.chebyshev.chebval(un, ci)


def power_step(F, p, params: Optional[SymmetryParams] = None, grid=None,
               op: Optional[DiscreteExtension] = None) -> CapProfile:
    """One ascent step; returns a unit-norm profile on the operator's nodes."""
    if op is None:
        op = DiscreteExtension(params or F.params, grid)
    vals = _values_on(F, op)
    if op.norm_cap(vals) == 0:
        raise ValueError("power step undefined for F = 0")
    return op.profile(_step(vals, _pp(p), op))


def _step(vals, pp, op: DiscreteExtension) -> np.ndarray:
    af = op.apply(vals)
    if pp == math.inf:
        i, j = np.unravel_index(np.argmax(np.abs(af)), af.shape)
        phase = af[i, j] / abs(af[i, j]) if af[i, j] != 0 else 1.0
        new = phase * op.Ay[i, :] * op.Bz[:, j]
    else:
        g = np.abs(af) ** (pp - 2.0) * af
        new = op.adjoint(g)
    n = op.norm_cap(new)
    if n == 0:
        raise ValueError("power step collapsed to zero")
    return new / n


@dataclass
class MaximizerRun:
    params: SymmetryParams
    p: float
    grid: QuadratureSpec
    iterate: CapProfile
    objective_history: list
    label: str = ""
    start: str = "constant"
    stagnated: bool = False
    converged: bool = False
    stability: Optional[float] = None
    flags: list = field(default_factory=list)

    @property
    def objective(self) -> float:
        return self.objective_history[-1]

    def to_dict(self) -> dict:
        return {
            "params": {"d": self.params.d, "k": self.params.k, "m": self.params.m},
            "p": self.p,
            "objective": self.objective,
            "history": list(self.objective_history),
            "grid": self.grid.to_dict(),
            "label": self.label,
            "start": self.start,
            "converged": self.converged,
            "stagnated": self.stagnated,
            "stability": self.stability,
            "flags": list(self.flags),
        }


def existence_label(params: SymmetryParams, p) -> str:
    d, m = params.d, params.m
    end = 2.0 * (d + m) / (d + m + 2)
    if params.nondegenerate and 1 <= float(p) < end - 1e-12:
        return "attained (existence range)"
    return "supremum estimate only"


def _run(op: DiscreteExtension, p, start_vals, start_name, max_iters, tol) -> MaximizerRun:
    pp = _pp(p)
    vals = start_vals / op.norm_cap(start_vals)
    hist = [op.norm_space(op.apply(vals), pp)]
    small = 0
    stagnated = converged = False
    for _ in range(max_iters):
        new = _step(vals, pp, op)
        obj = op.norm_space(op.apply(new), pp)
        gain = (obj - hist[-1]) / max(abs(hist[-1]), 1e-300)
        vals = new
        hist.append(obj)
        small = small + 1 if gain < tol else 0
        if small >= 5:
            converged = True
            stagnated = True
            break
    run = MaximizerRun(op.params, float(p), op.grid, op.profile(vals), hist, start=start_name,
                       stagnated=stagnated, converged=converged)
    return run


def maximize(params: SymmetryParams, p, grid: Optional[QuadratureSpec] = None, max_iters: int = 200,
             restarts: int = 8, seed: int = 0, jobs: Optional[int] = None, tol: float = 1e-10,
             check_stability: bool = True) -> MaximizerRun:
    """Best power-iteration run over a constant start and ``restarts`` random starts."""
    grid = grid or QuadratureSpec()
    op = DiscreteExtension(params, grid)
    starts = [("constant", np.ones(op.r.size, dtype=complex))]
    for i, ss in enumerate(np.random.SeedSequence(seed).spawn(restarts)):
        rng = np.random.default_rng(ss)
        starts.append((f"random-{i}", rng.normal(size=op.r.size) + 1j * rng.normal(size=op.r.size)))
    jobs = jobs or default_jobs()
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            runs = list(ex.map(lambda s: _run(op, p, s[1], s[0], max_iters, tol), starts))
    else:
        runs = [_run(op, p, v, name, max_iters, tol) for name, v in starts]
    best = max(runs, key=lambda r: r.objective)
    best.label = existence_label(params, p)
    for r in runs:
        log.debug("start %s objective %.12g after %d steps", r.start, r.objective, len(r.objective_history) - 1)
    frac = op.tail_fraction(op.apply(best.iterate.values), _pp(p))
    if frac > grid.tol:
        best.flags.append(f"truncation: estimated tail share {frac:.2e}")
        warnings.warn(best.flags[-1], TruncationWarning, stacklevel=2)
    if not best.converged:
        best.flags.append("max_iters reached before the gain fell below tol")
    if check_stability:
        fine = DiscreteExtension(params, grid.refined(2))
        start = interpolate_cap(best.iterate, fine.r)
        frun = _run(fine, p, start, "refined", max_iters, tol)
        best.stability = abs(frun.objective / best.objective - 1.0)
    return best


# ---------------------------------------------------------------- duality


@dataclass
class DualityReport:
    pairing_space: complex
    pairing_sphere: complex
    residual: float
    primal_quotient: float
    dual_objective: float
    holder_ok: bool
    restriction_norm: float

    def to_dict(self) -> dict:
        return {
            "pairing_space": [self.pairing_space.real, self.pairing_space.imag],
            "pairing_sphere": [self.pairing_sphere.real, self.pairing_sphere.imag],
            "residual": self.residual,
            "primal_quotient": self.primal_quotient,
            "dual_objective": self.dual_objective,
            "holder_ok": self.holder_ok,
            "restriction_norm": self.restriction_norm,
        }


def duality_check(params: SymmetryParams, p, f: RadialProfile2D, F: Optional[CapProfile] = None,
                  grid: Optional[QuadratureSpec] = None) -> DualityReport:
    """Compare <f, F^sigma>_{R^d} with <f^|_S, F>_S and test the Hölder link.

    If F is None it is taken to be the normalised restriction of f^.
    """
    grid = grid or QuadratureSpec()
    d, k = params.d, params.k
    r, w = qd.cap_rule(d, k, grid.cap_nodes)
    s = np.sqrt(1.0 - r * r)
    fhat = symmetric_fourier(f, r, s, params)
    cap_w = params.slice_constant * w
    rnorm = float(np.sqrt(np.sum(cap_w * np.abs(fhat) ** 2)))
    if F is None:
        if rnorm == 0:
            F = CapProfile(params, r, w, np.zeros_like(fhat))
        else:
            F = CapProfile(params, r, w, fhat / rnorm)
    Fv = _values_on(F, _NodesOnly(r))
    Fc = CapProfile(params, r, w, Fv)
    sphere = complex(np.sum(cap_w * fhat * np.conj(Fv)))
    field = extension_grid(Fc, f.nodes1, f.nodes2).values
    dens = (f.grid1.weights * f.nodes1 ** (d - k - 1))[:, None] * (f.grid2.weights * f.nodes2 ** (k - 1))[None, :]
    space = complex(params.slice_constant * np.sum(dens * f.values * np.conj(field)))
    resid = abs(space - sphere) / max(1.0, abs(space))
    fn = lp_norm_2d(f, p, params, tol=1.0)
    if fn == 0 or Fc.l2_norm() == 0:
        return DualityReport(space, sphere, resid, 0.0, 0.0, True, rnorm)
    dual = objective(Fc, p, grid=grid, warn=False)
    primal = abs(space) / (fn * Fc.l2_norm())
    return DualityReport(space, sphere, resid, primal, dual, primal <= dual * (1 + 1e-6), rnorm)


class _NodesOnly:
    def __init__(self, r):
        self.r = r
