"""Symmetric profiles on R^d = R^(d-k) x R^k and their integrals and norms.

A G_k-symmetric function f(y, z) = f0(|y|, |z|) is stored as samples of f0
on a tensor grid of composite Gauss-Legendre nodes.  A symmetric function
on the sphere is stored as F0(r) = F(r w, sqrt(1-r^2) v) on Gauss-Jacobi
nodes in r in (0, 1).
"""
from __future__ import annotations

import csv
import json
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from . import quadrature as qd
from .specfun import sphere_area

__all__ = [
    "CapProfile",
    "LorentzExponent",
    "RadialGrid",
    "RadialProfile2D",
    "SymmetryParams",
    "TruncationWarning",
    "dual_exponent",
    "lorentz_norm",
    "lp_norm_2d",
    "slice_integrate",
    "sphere_area",
]


class TruncationWarning(RuntimeWarning):
    """Raised when a truncated integral may have lost a non-negligible tail."""


def dual_exponent(p):
    """p' = p/(p-1) with 1' = inf and inf' = 1.  Fractions stay exact."""
    if p == math.inf:
        return 1
    if p == 1:
        return math.inf
    if isinstance(p, Fraction):
        return p / (p - 1)
    return p / (p - 1.0)


@dataclass(frozen=True)
class SymmetryParams:
    d: int
    k: int

    def __post_init__(self):
        if int(self.d) != self.d or int(self.k) != self.k:
            raise ValueError("d and k must be integers")
        if self.d < 2:
            raise ValueError("d must be >= 2")
        if not 0 <= self.k <= self.d:
            raise ValueError("k must satisfy 0 <= k <= d")

    @property
    def m(self) -> int:
        return min(self.k, self.d - self.k)

    @property
    def nondegenerate(self) -> bool:
        """True when 2 <= k <= d-2, where both Bessel orders are >= 0."""
        return 2 <= self.k <= self.d - 2

    @property
    def sliced(self) -> bool:
        return 1 <= self.k <= self.d - 1

    @property
    def slice_constant(self) -> float:
        return sphere_area(self.d - self.k) * sphere_area(self.k)

    def swapped(self) -> "SymmetryParams":
        return SymmetryParams(self.d, self.d - self.k)


@dataclass(frozen=True)
class LorentzExponent:
    p: float
    s: float

    def __post_init__(self):
        if not (self.p >= 1 and self.s >= 1):
            raise ValueError("Lorentz exponents need p >= 1 and s >= 1")

    @property
    def dual(self):
        return dual_exponent(self.p)

    @classmethod
    def lebesgue(cls, p) -> "LorentzExponent":
        return cls(p, p)


@dataclass(frozen=True)
class RadialGrid:
    """Composite Gauss-Legendre nodes on [0, breaks[-1]]."""

    breaks: np.ndarray
    order: int = 16

    def __post_init__(self):
        b = np.asarray(self.breaks, dtype=float)
        if b.ndim != 1 or b.size < 2 or b[0] != 0.0 or np.any(np.diff(b) <= 0):
            raise ValueError("breaks must start at 0 and increase strictly")
        object.__setattr__(self, "breaks", b)
        x, w = qd.composite_legendre(b, self.order)
        object.__setattr__(self, "_nodes", x)
        object.__setattr__(self, "_weights", w)

    @classmethod
    def default(cls, radius: float, nodes: int = 256, order: int = 16) -> "RadialGrid":
        """Graded near 0, then uniform panels; about ``nodes`` points."""
        panels = max(1, nodes // order - 4)
        return cls(qd.graded_breaks(radius, radius / panels, levels=4), order)

    @classmethod
    def uniform(cls, radius: float, panel: float, order: int = 16) -> "RadialGrid":
        return cls(qd.uniform_breaks(0.0, radius, panel), order)

    @property
    def nodes(self) -> np.ndarray:
        return self._nodes

    @property
    def weights(self) -> np.ndarray:
        return self._weights

    @property
    def radius(self) -> float:
        return float(self.breaks[-1])

    def spec(self) -> dict:
        return {"breaks": [float(b) for b in self.breaks], "order": int(self.order)}

    def interpolation(self, x) -> np.ndarray:
        """Matrix mapping node values to the piecewise interpolant at x (zero outside)."""
        x = np.asarray(x, dtype=float).ravel()
        t, _ = qd.gauss_legendre(self.order)
        out = np.zeros((x.size, self.nodes.size))
        idx = np.searchsorted(self.breaks, x, side="right") - 1
        idx = np.where(x == self.breaks[-1], self.breaks.size - 2, idx)
        for p in np.unique(idx):
            if p < 0 or p >= self.breaks.size - 1:
                continue
            sel = idx == p
            a, b = self.breaks[p], self.breaks[p + 1]
            loc = 2.0 * (x[sel] - a) / (b - a) - 1.0
            out[np.ix_(sel, np.arange(p * self.order, (p + 1) * self.order))] = qd.interp_matrix(t, loc)
        return out


@dataclass(frozen=True)
class RadialProfile2D:
    """Samples of f0 on a tensor grid, optionally backed by a callable."""

    grid1: RadialGrid
    grid2: RadialGrid
    values: np.ndarray
    func: Optional[Callable] = field(default=None, compare=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        if v.shape != (self.grid1.nodes.size, self.grid2.nodes.size):
            raise ValueError("values shape does not match the grids")
        if not np.all(np.isfinite(v)):
            raise ValueError("profile values must be finite")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    @classmethod
    def from_function(cls, func, grid1: RadialGrid, grid2: Optional[RadialGrid] = None):
        grid2 = grid1 if grid2 is None else grid2
        vals = func(grid1.nodes[:, None], grid2.nodes[None, :])
        vals = np.broadcast_to(np.asarray(vals, dtype=complex), (grid1.nodes.size, grid2.nodes.size))
        return cls(grid1, grid2, vals.copy(), func)

    @property
    def nodes1(self) -> np.ndarray:
        return self.grid1.nodes

    @property
    def nodes2(self) -> np.ndarray:
        return self.grid2.nodes

    def evaluate(self, r1, r2) -> np.ndarray:
        """f0 on the tensor product r1 x r2."""
        r1 = np.asarray(r1, dtype=float).ravel()
        r2 = np.asarray(r2, dtype=float).ravel()
        if self.func is not None:
            out = self.func(r1[:, None], r2[None, :])
            return np.broadcast_to(np.asarray(out, dtype=complex), (r1.size, r2.size))
        return self.grid1.interpolation(r1) @ self.values @ self.grid2.interpolation(r2).T

    def scaled(self, c) -> "RadialProfile2D":
        f = None if self.func is None else (lambda a, b, _f=self.func: c * _f(a, b))
        return RadialProfile2D(self.grid1, self.grid2, c * self.values, f)

    def swapped(self) -> "RadialProfile2D":
        f = None if self.func is None else (lambda a, b, _f=self.func: _f(b.T, a.T).T)
        return RadialProfile2D(self.grid2, self.grid1, self.values.T.copy(), f)

    # serialisation: CSV of samples plus JSON metadata
    def to_csv(self, path, params: SymmetryParams, meta_path=None) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["rho1", "rho2", "re", "im"])
            for i, a in enumerate(self.nodes1):
                for j, b in enumerate(self.nodes2):
                    v = self.values[i, j]
                    w.writerow([repr(float(a)), repr(float(b)), repr(float(v.real)), repr(float(v.imag))])
        meta = {"d": params.d, "k": params.k, "grid1": self.grid1.spec(), "grid2": self.grid2.spec()}
        meta_path = meta_path or str(path).rsplit(".", 1)[0] + ".json"
        with open(meta_path, "w", encoding="utf-8") as fh:
            json.dump(meta, fh, indent=2, sort_keys=True)

    @classmethod
    def from_csv(cls, path, meta_path=None):
        meta_path = meta_path or str(path).rsplit(".", 1)[0] + ".json"
        with open(meta_path, encoding="utf-8") as fh:
            meta = json.load(fh)
        g1 = RadialGrid(np.array(meta["grid1"]["breaks"]), meta["grid1"]["order"])
        g2 = RadialGrid(np.array(meta["grid2"]["breaks"]), meta["grid2"]["order"])
        data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
        if data.shape[0] != g1.nodes.size * g2.nodes.size:
            raise ValueError("CSV row count does not match the grid metadata")
        vals = (data[:, 2] + 1j * data[:, 3]).reshape(g1.nodes.size, g2.nodes.size)
        return cls(g1, g2, vals), SymmetryParams(meta["d"], meta["k"])


@dataclass(frozen=True)
class CapProfile:
    """F0(r) on the cap-slice rule: sum(weights * g(nodes)) integrates
    r^(d-k-1) (1-r^2)^((k-2)/2) g(r) over (0, 1)."""

    params: SymmetryParams
    nodes: np.ndarray
    weights: np.ndarray
    values: np.ndarray
    func: Optional[Callable] = field(default=None, compare=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex).ravel()
        if v.shape != np.shape(self.nodes):
            raise ValueError("values must match the nodes")
        if not np.all(np.isfinite(v)):
            raise ValueError("profile values must be finite")
        object.__setattr__(self, "values", v)

    @classmethod
    def rule(cls, params: SymmetryParams, n: int = 64, breaks=()):
        if not params.sliced:
            raise ValueError("cap profiles need 1 <= k <= d-1")
        return qd.cap_rule(params.d, params.k, n, breaks)

    @classmethod
    def from_function(cls, func, params: SymmetryParams, n: int = 64, breaks=()):
        r, w = cls.rule(params, n, breaks)
        vals = np.broadcast_to(np.asarray(func(r), dtype=complex), r.shape)
        return cls(params, r, w, vals.copy(), func)

    @classmethod
    def constant(cls, params: SymmetryParams, n: int = 64, value: complex = 1.0):
        return cls.from_function(lambda r: np.full_like(r, value, dtype=complex), params, n)

    def with_values(self, values) -> "CapProfile":
        return CapProfile(self.params, self.nodes, self.weights, values)

    def resample(self, n: int, breaks=()) -> "CapProfile":
        if self.func is None:
            raise ValueError("resampling needs a callable profile")
        return CapProfile.from_function(self.func, self.params, n, breaks)

    @property
    def measure_weights(self) -> np.ndarray:
        """Surface-measure weights of the nodes (sum = |S^(d-1)|)."""
        return self.params.slice_constant * self.weights

    def l2_norm(self) -> float:
        return float(np.sqrt(np.sum(self.measure_weights * np.abs(self.values) ** 2)))

    def normalized(self) -> "CapProfile":
        n = self.l2_norm()
        if n == 0:
            raise ValueError("cannot normalise the zero profile")
        return self.with_values(self.values / n)


def slice_integrate(F, params: Optional[SymmetryParams] = None) -> complex:
    """Integral of a symmetric function over S^(d-1) with unnormalised measure."""
    params = F.params if params is None else params
    if params.k in (0, params.d):
        # O(d)-invariant: F is constant on the sphere
        return complex(sphere_area(params.d) * np.mean(np.asarray(F.values)))
    return complex(params.slice_constant * np.sum(F.weights * F.values))


def _tail_fraction(f: RadialProfile2D, dens: np.ndarray) -> float:
    total = dens.sum()
    if total == 0:
        return 0.0
    edge = dens[-1, :].sum() + dens[:, -1].sum()
    return float(edge / total)


def lp_norm_2d(f: RadialProfile2D, exp, params: SymmetryParams, tol: float = 1e-6) -> float:
    """||f||_{L^p(R^d)} of the symmetric function with profile f0."""
    p = exp.p if isinstance(exp, LorentzExponent) else exp
    if p < 1:
        raise ValueError("p must be >= 1")
    if p == math.inf:
        # grid-resolved only
        return float(np.max(np.abs(f.values)))
    d, k = params.d, params.k
    a = np.abs(f.values) ** p
    if k in (0, d):
        # radial in R^d: sample along the first (k=0) or second axis at 0
        g = f.grid1 if k == 0 else f.grid2
        prof = f.evaluate(g.nodes, [0.0])[:, 0] if k == 0 else f.evaluate([0.0], g.nodes)[0]
        dens = g.weights * g.nodes ** (d - 1) * np.abs(prof) ** p
        return float((sphere_area(d) * dens.sum()) ** (1.0 / p))
    w1 = f.grid1.weights * f.nodes1 ** (d - k - 1)
    w2 = f.grid2.weights * f.nodes2 ** (k - 1)
    dens = w1[:, None] * a * w2[None, :]
    if _tail_fraction(f, dens) > tol:
        warnings.warn("profile mass near the grid edge exceeds tolerance; L^p norm may be truncated",
                      TruncationWarning, stacklevel=2)
    return float((params.slice_constant * dens.sum()) ** (1.0 / p))


def lorentz_norm(values, weights, exp: LorentzExponent) -> float:
    """Lorentz L^{p,s} quasi-norm of a simple function.

    Uses ||f||_{p,s} = ((s/p) int_0^inf (t^(1/p) f*(t))^s dt/t)^(1/s), which for a
    step rearrangement with levels v_1 >= v_2 >= ... and cumulative measures
    M_i collapses to (sum_i v_i^s (M_i^(s/p) - M_{i-1}^(s/p)))^(1/s).
    s = inf gives max_i v_i M_i^(1/p).
    """
    p, s = exp.p, exp.s
    if p < 1 or s < 1:
        raise ValueError("Lorentz exponents must be >= 1")
    v = np.abs(np.asarray(values, dtype=complex).ravel())
    w = np.asarray(weights, dtype=float).ravel()
    if v.shape != w.shape or np.any(w < 0):
        raise ValueError("values and non-negative weights must align")
    keep = (v > 0) & (w > 0)
    v, w = v[keep], w[keep]
    if v.size == 0:
        return 0.0
    order = np.argsort(-v, kind="stable")
    v, w = v[order], w[order]
    cm = np.cumsum(w)
    if p == math.inf:
        return float(v[0])
    if s == math.inf:
        return float(np.max(v * cm ** (1.0 / p)))
    prev = np.concatenate([[0.0], cm[:-1]])
    # normalise by the top value to avoid overflow for large s
    top = v[0]
    acc = np.sum((v / top) ** s * (cm ** (s / p) - prev ** (s / p)))
    return float(top * acc ** (1.0 / s))
