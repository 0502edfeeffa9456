"""Weighted Hardy-type operators on the half line, the weighted circle
operator R_{alpha,beta} and its adjoint, and a one-sided oscillatory integral.

Boundedness cannot be proved numerically.  ``norm_probe`` reports the largest
observed ratio ||op f||_q / ||f||_p over test functions together with its
relative change under a resolution (or truncation) refinement.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

import numpy as np

from . import quadrature as qd
from .symgeom import dual_exponent

__all__ = [
    "CircleRule",
    "PlaneRule",
    "ProbeReport",
    "SMesh",
    "WeightedOpParams",
    "adjoint_l2_norm",
    "hausdorff_young_ratio",
    "norm_probe",
    "op_R",
    "op_R_adjoint",
    "op_S",
    "op_S_adjoint",
    "op_T",
    "oscillatory_bound_ratio",
    "oscillatory_integral",
    "remark_family",
]


class DivergentIntegralError(ValueError):
    pass


@dataclass(frozen=True)
class WeightedOpParams:
    a: float = 0.0
    b: float = 0.0
    ell: float = 1.0
    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        if self.ell <= 0:
            raise ValueError("ell must be positive")
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("alpha and beta must be >= 0")

    def hypotheses(self, op: str, p: float, q: float) -> dict:
        """Exponent conditions of the boundedness statements, evaluated."""
        pp = dual_exponent(p)
        inv_pp = 0.0 if pp == math.inf else 1.0 / pp
        if op == "T":
            return {"1<p<=q<inf": 1 < p <= q < math.inf,
                    "b*p'<1": self.b * pp < 1,
                    "1/p'+1/q=a+b": abs(inv_pp + 1.0 / q - self.a - self.b) < 1e-12}
        if op == "S":
            return {"1<p<=q<inf": 1 < p <= q < math.inf,
                    "a>=0": self.a >= 0,
                    "0<b<1": 0 < self.b < 1,
                    "1/p'+1/q>=a+b": inv_pp + 1.0 / q >= self.a + self.b - 1e-12}
        if op == "R":
            s = self.alpha + self.beta
            g = s + min(self.alpha, self.beta)
            return {"1<p<=2<=q<inf": 1 < p <= 2 <= q < math.inf,
                    "1/p'<alpha+beta<2/p'": inv_pp < s < 2 * inv_pp,
                    "gamma>=3/p'-1/q": g >= 3 * inv_pp - 1.0 / q - 1e-12}
        if op == "HY":
            delta = 1 - 1.0 / p - 1.0 / q
            return {"1<p<=2<=q<inf": 1 < p <= 2 <= q < math.inf, "0<=delta<1": 0 <= delta < 1}
        raise ValueError(f"unknown operator {op!r}")


# ---------------------------------------------------------------- T and S


def _geometric_panels(levels: int = 40, order: int = 16):
    """Composite rule on [0, 1]: Legendre on [2^-j-1, 2^-j], j < levels."""
    br = np.concatenate([[0.0], 0.5 ** np.arange(levels, -1, -1)])
    x, w = qd.composite_legendre(br[1:], order)
    return x, w


def _call(f, x):
    return np.asarray(f(x), dtype=complex) * np.ones_like(x)


def op_T(f: Callable, x, a: float, b: float, levels: int = 40, order: int = 16):
    """x^(-a) int_0^x y^(-b) f(y) dy."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise ValueError("x must be positive")
    if b >= 1:
        f0 = complex(np.ravel(_call(f, np.array([1e-300])))[0])
        if f0 != 0:
            raise DivergentIntegralError("y^(-b) f(y) is not integrable at 0 for b >= 1 and f(0) != 0")
    xs = x.ravel()
    # Jacobi rule for y^(-b) on the innermost panel, Legendre on the geometric ones
    h = 0.5 ** levels
    t, wj = qd.gauss_jacobi(order, 0.0, -b) if b < 1 else qd.gauss_legendre(order)
    u0 = 0.5 * h * (t + 1.0)
    w0 = wj * (0.5 * h) ** (1 - b) if b < 1 else wj * 0.5 * h * u0 ** (-b)
    ug, wg = _geometric_panels(levels, order)
    u = np.concatenate([u0, ug])
    w = np.concatenate([w0, wg * ug ** (-b)])
    vals = _call(f, xs[:, None] * u[None, :])
    out = xs ** (1 - a - b) * (vals @ w)
    out = out.reshape(x.shape)
    return complex(out) if out.ndim == 0 else out


def _check_b(b):
    if not 0 < b < 1:
        raise ValueError("S needs 0 < b < 1")


def op_S(f: Callable, x, a: float, b: float, levels: int = 60, order: int = 16):
    """x^(-a) int_0^x (x-y)^(-b) f(y) dy  =  x^(1-a-b) int_0^1 (1-u)^(-b) f(xu) du."""
    _check_b(b)
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise ValueError("x must be positive")
    xs = x.ravel()
    # Jacobi panel at the kernel singularity u = 1, geometric panels toward u = 0
    t, wj = qd.gauss_jacobi(order, -b, 0.0)
    uj = 0.5 + 0.25 * (t + 1.0)
    wj = wj * 0.25 ** (1 - b)
    br = 0.5 ** np.arange(levels, 0, -1)
    ug, wg = qd.composite_legendre(br, order)
    wg = wg * (1.0 - ug) ** (-b)
    u = np.concatenate([ug, uj])
    w = np.concatenate([wg, wj])
    vals = _call(f, xs[:, None] * u[None, :])
    out = xs ** (1 - a - b) * (vals @ w)
    out = out.reshape(x.shape)
    return complex(out) if out.ndim == 0 else out


def op_S_adjoint(g: Callable, y, a: float, b: float, ell: float, levels: int = 30, order: int = 16):
    """int_y^ell (x-y)^(-b) x^(-a) g(x) dx."""
    _check_b(b)
    y = np.asarray(y, dtype=float)
    ys = y.ravel()
    out = np.zeros(ys.shape, dtype=complex)
    t, wj = qd.gauss_jacobi(order, 0.0, -b)
    tl, wl = qd.gauss_legendre(order)
    for i, y0 in enumerate(ys):
        length = ell - y0
        if length <= 0:
            continue
        # panels [y0 + L 2^-j-1, y0 + L 2^-j]; the first one carries the Jacobi weight
        h0 = length * 0.5 ** levels
        xs = [y0 + 0.5 * h0 * (t + 1.0)]
        ws = [wj * (0.5 * h0) ** (1 - b) * np.ones_like(t)]
        br = y0 + length * 0.5 ** np.arange(levels, -1, -1)
        for lo, hi in zip(br[:-1], br[1:]):
            xx = lo + 0.5 * (hi - lo) * (tl + 1.0)
            xs.append(xx)
            ws.append(0.5 * (hi - lo) * wl * (xx - y0) ** (-b))
        xx = np.concatenate(xs)
        ww = np.concatenate(ws)
        out[i] = np.sum(ww * xx ** (-a) * _call(g, xx))
    out = out.reshape(y.shape)
    return complex(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class SMesh:
    """Graded mesh on [0, ell] and the product-integration matrix of S.

    Cells are graded toward 0 with exponent 2/(1-b); f is piecewise constant
    on cells (sampled at midpoints) and the kernel (x-y)^(-b) is integrated
    exactly on each cell.  The discrete adjoint W^-1 K^H W makes
    <K f, g>_W = <f, K* g>_W hold to rounding.
    """

    ell: float
    n: int
    a: float
    b: float

    def __post_init__(self):
        _check_b(self.b)
        grade = 2.0 / (1.0 - self.b)
        edges = self.ell * (np.arange(self.n + 1) / self.n) ** grade
        mids = 0.5 * (edges[:-1] + edges[1:])
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "nodes", mids)
        object.__setattr__(self, "weights", np.diff(edges))

    def matrix(self) -> np.ndarray:
        c = self.nodes[:, None]
        lo = self.edges[None, :-1]
        hi = np.minimum(self.edges[None, 1:], c)
        e = 1.0 - self.b
        span = np.clip(c - lo, 0.0, None) ** e - np.clip(c - hi, 0.0, None) ** e
        k = np.where(lo < c, span / e, 0.0)
        return self.nodes[:, None] ** (-self.a) * k

    def adjoint_matrix(self) -> np.ndarray:
        w = self.weights
        return (self.matrix().conj().T * w[None, :]) / w[:, None]

    def inner(self, u, v) -> complex:
        return complex(np.sum(self.weights * u * np.conj(v)))


# ---------------------------------------------------------------- oscillatory


def oscillatory_integral(gamma: float, a: float, lam: float, order: int = 16,
                         wavelengths: float = 40.0) -> complex:
    """int_a^inf r^(-gamma) e^{i lam r} dr for gamma > 0, gamma != 1, a >= 1, lam != 0.

    Geometric panels near a, half-period panels up to X with |lam| X >= 40,
    then the integration-by-parts series for the tail.
    """
    if gamma <= 0 or gamma == 1:
        raise ValueError("gamma must be positive and != 1")
    if a < 1:
        raise ValueError("a must be >= 1")
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    if lam < 0:
        return complex(np.conj(oscillatory_integral(gamma, a, -lam, order, wavelengths)))
    half = math.pi / lam
    X = max(a, wavelengths / lam) + half
    n_half = int(math.ceil((X - a) / half))
    br = a + half * np.arange(n_half + 1)
    # refine the first panels geometrically when a is small relative to the period
    if half > a:
        first = br[1]
        extra = a + (first - a) * 0.5 ** np.arange(12, 0, -1)
        br = np.concatenate([[a], extra, br[1:]])
    X = float(br[-1])
    x, w = qd.composite_legendre(br, order)
    body = np.sum(w * x ** (-gamma) * np.exp(1j * lam * x))
    # tail: int_X^inf r^-g e^{i lam r} = -e^{i lam X}/(i lam) sum_n (g)_n X^(-g-n) (i lam)^(-n)
    tail = 0j
    term = -np.exp(1j * lam * X) / (1j * lam) * X ** (-gamma)
    prev = math.inf
    for n in range(60):
        if abs(term) > prev:
            break
        tail += term
        prev = abs(term)
        if prev < 1e-18:
            break
        term = term * (gamma + n) / (1j * lam * X)
    return complex(body + tail)


def oscillatory_bound_ratio(gamma: float, a: float, lam: float) -> float:
    """|I| divided by the bound lam^(gamma-1) (gamma < 1) or a^(1-gamma) (gamma > 1)."""
    val = abs(oscillatory_integral(gamma, a, lam))
    bound = abs(lam) ** (gamma - 1) if gamma < 1 else a ** (1 - gamma)
    return val / bound


# ---------------------------------------------------------------- R and R*


@dataclass(frozen=True)
class CircleRule:
    """Uniform trapezoid rule on S^1 with M angles (offset by half a step)."""

    M: int = 4096

    @property
    def angles(self) -> np.ndarray:
        return 2.0 * math.pi * (np.arange(self.M) + 0.5) / self.M

    @property
    def points(self) -> np.ndarray:
        t = self.angles
        return np.stack([np.cos(t), np.sin(t)], axis=1)

    @property
    def weights(self) -> np.ndarray:
        return np.full(self.M, 2.0 * math.pi / self.M)


@dataclass(frozen=True)
class PlaneRule:
    """Tensor Gauss-Legendre rule on a box [lo1, hi1] x [lo2, hi2]."""

    x1: np.ndarray
    w1: np.ndarray
    x2: np.ndarray
    w2: np.ndarray

    @classmethod
    def box(cls, box, panel: float = math.pi / 2, breaks=((), ()), order: int = 8) -> "PlaneRule":
        axes = []
        for (lo, hi), extra in zip(box, breaks):
            extra = [e for e in np.ravel(extra) if lo < e < hi]
            br = qd.merge_breaks(qd.uniform_breaks(lo, hi, panel), extra)
            axes.append(qd.composite_legendre(br, order))
        (x1, w1), (x2, w2) = axes
        return cls(x1, w1, x2, w2)

    @classmethod
    def square(cls, radius: float, panel: float = math.pi / 2, order: int = 8) -> "PlaneRule":
        return cls.box(((-radius, radius), (-radius, radius)), panel, ((0.0,), (0.0,)), order)


def _axis_factor(x, freq, weight_exp):
    """(1+|x|)^-w 1_{freq |x| >= 1} e^{i x freq} on the axis grid, for all frequencies."""
    ax = np.abs(x)[:, None]
    on = ax * freq[None, :] >= 1.0
    return np.where(on, (1.0 + ax) ** (-weight_exp) * np.exp(1j * x[:, None] * freq[None, :]), 0.0)


def op_R_adjoint(F, x, alpha: float, beta: float, circle: Optional[CircleRule] = None) -> np.ndarray:
    """R*F at points x (shape (n, 2)); F is a callable on S^1 points or samples on ``circle``."""
    circle = circle or CircleRule()
    om = circle.points
    vals = np.asarray(F(om) if callable(F) else F, dtype=complex) * circle.weights
    x = np.atleast_2d(np.asarray(x, dtype=float))
    a1, a2 = np.abs(om[:, 0]), np.abs(om[:, 1])
    out = np.empty(x.shape[0], dtype=complex)
    for s in range(0, x.shape[0], 2048):
        xs = x[s:s + 2048]
        on = (np.abs(xs[:, :1]) * a1[None, :] >= 1.0) & (np.abs(xs[:, 1:]) * a2[None, :] >= 1.0)
        ph = np.exp(1j * (xs[:, :1] * a1[None, :] + xs[:, 1:] * a2[None, :]))
        out[s:s + 2048] = (np.where(on, ph, 0.0) @ vals)
    w = (1 + np.abs(x[:, 0])) ** (-alpha) * (1 + np.abs(x[:, 1])) ** (-beta)
    return w * out


def op_R(g, omegas, alpha: float, beta: float, plane: Optional[PlaneRule] = None,
         box=None, breaks=((), ()), order: int = 16) -> np.ndarray:
    """R g at circle points ``omegas`` (shape (M, 2)) using a tensor plane rule.

    g is a callable g(x1, x2) on broadcast grids or samples on the plane grid.
    """
    om = np.atleast_2d(np.asarray(omegas, dtype=float))
    a1, a2 = np.abs(om[:, 0]), np.abs(om[:, 1])
    if plane is None:
        if box is None:
            raise ValueError("need a plane rule or a box")
        freq = max(float(np.max(a1)), float(np.max(a2)), 1.0)
        plane = PlaneRule.box(box, math.pi / freq, breaks, order)
    G = np.asarray(g(plane.x1[:, None], plane.x2[None, :]) if callable(g) else g, dtype=complex)
    # e^{-i x.|w|} = conj of the adjoint factor; weights applied per axis
    U = np.conj(_axis_factor(plane.x1, a1, alpha)) * plane.w1[:, None]
    V = np.conj(_axis_factor(plane.x2, a2, beta)) * plane.w2[:, None]
    return np.einsum("im,ij,jm->m", U, G, V)


def op_R_adjoint_grid(F, alpha: float, beta: float, plane: PlaneRule,
                      circle: Optional[CircleRule] = None) -> np.ndarray:
    """R*F on the tensor grid of ``plane`` (separable matrix form)."""
    circle = circle or CircleRule()
    om = circle.points
    vals = np.asarray(F(om) if callable(F) else F, dtype=complex) * circle.weights
    U = _axis_factor(plane.x1, np.abs(om[:, 0]), alpha)
    V = _axis_factor(plane.x2, np.abs(om[:, 1]), beta)
    return (U * vals[None, :]) @ V.T


def adjoint_l2_norm(F, alpha: float, beta: float, radius: float,
                    circle: Optional[CircleRule] = None, panel: float = math.pi / 2,
                    order: int = 8) -> float:
    """||R*F||_{L^2([-radius, radius]^2)} through per-axis Gram matrices.

    R*F is a sum over angles of products of one-variable factors, so the
    squared norm is sum_{m,m'} c_m conj(c_m') G1[m,m'] G2[m,m'] with
    G_i the Gram matrix of the axis factors.  Angles sharing (|w1|, |w2|)
    are merged first.
    """
    circle = circle or CircleRule()
    om = circle.points
    vals = np.asarray(F(om) if callable(F) else F, dtype=complex) * circle.weights
    key = np.round(np.abs(om), 12)
    uniq, inv = np.unique(key, axis=0, return_inverse=True)
    c = np.zeros(uniq.shape[0], dtype=complex)
    np.add.at(c, inv.ravel(), vals)
    x, w = qd.composite_legendre(qd.uniform_breaks(0.0, radius, panel), order)

    def gram(freq, e):
        U = _axis_factor(x, freq, e)
        # both signs of x contribute conjugate halves
        return 2.0 * np.real((U.conj().T * w[None, :]) @ U)

    g1 = gram(uniq[:, 0], alpha)
    g2 = gram(uniq[:, 1], beta)
    val = np.real(np.conj(c) @ ((g1 * g2) @ c))
    return float(math.sqrt(max(val, 0.0)))


# ---------------------------------------------------------------- probes


def remark_family(p: float, eps: float) -> Callable:
    """x^(-1/p) |log x|^(-(1+eps)/p) on (0, 1/2], zero elsewhere."""

    def f(x):
        x = np.asarray(x, dtype=float)
        inside = (x > 0) & (x <= 0.5)
        xs = np.where(inside, x, 0.25)
        return np.where(inside, xs ** (-1.0 / p) * np.abs(np.log(xs)) ** (-(1.0 + eps) / p), 0.0)

    return f


@dataclass
class ProbeReport:
    operator: str
    params: dict
    exponents: dict
    trials: int
    max_ratio: float
    stability: float
    ratios: list = field(default_factory=list)
    refined_ratios: list = field(default_factory=list)
    hypotheses: dict = field(default_factory=dict)
    note: str = ("empirical: boundedness is read as stability of the largest ratio "
                 "under refinement; this is evidence, not proof")

    def to_dict(self) -> dict:
        return asdict(self)


def _lp_half_line(vals, w, p):
    return float(np.sum(w * np.abs(vals) ** p) ** (1.0 / p))


def _random_halfline_function(rng, support: float, p: float):
    # smooth bumps plus an integrable power singularity at 0
    n = int(rng.integers(1, 4))
    c = rng.normal(size=n) + 1j * rng.normal(size=n)
    mu = rng.uniform(0, support, size=n)
    s = rng.uniform(0.05, 0.5, size=n) * support
    expo = rng.uniform(0.0, 0.9 / p)
    c0 = rng.normal()

    def f(x):
        x = np.asarray(x, dtype=float)
        inside = (x > 0) & (x <= support)
        xs = np.where(inside, x, 1.0)
        v = c0 * xs ** (-expo) + np.sum(c[:, None] * np.exp(-0.5 * ((xs.ravel()[None, :] - mu[:, None]) / s[:, None]) ** 2), axis=0).reshape(xs.shape)
        return np.where(inside, v, 0.0)

    return f


def _t_ratio(f, a, b, p, q, support, panels):
    # ||f||_p on (0, support]; ||T f||_q on (0, support] plus the exact power tail beyond
    br = np.concatenate([[0.0], support * 0.5 ** np.arange(40, 0, -1), np.linspace(support / 2, support, panels + 1)[1:]])
    x, w = qd.composite_legendre(br[1:], 16)
    fn = _lp_half_line(_call(f, x), w, p)
    tf = op_T(f, x, a, b)
    inner = np.sum(w * np.abs(tf) ** q)
    c = abs(op_T(f, np.array([support]), a, b)[0]) * support ** a
    if a * q <= 1:
        return math.inf, fn
    tail = c ** q * support ** (1 - a * q) / (a * q - 1)
    return float((inner + tail) ** (1.0 / q)), fn


def norm_probe(op: str, p: float, q: float, params: WeightedOpParams, trials: int = 10,
               seed: int = 0, family: str = "random", eps: float = 0.1, **kw) -> ProbeReport:
    """Largest ||op f||_q / ||f||_p over test functions, with a refinement check.

    op: "T", "S", "R" (the adjoint R* on L^{q'}(S^1) -> L^{p'}(R^2)) or "HY".
    family "random" uses seeded random functions and doubles the resolution;
    family "remark" (S only) uses x^(-1/p)|log x|^(-(1+eps)/p) and refines the
    lower truncation point toward 0, reporting the growth factor.
    """
    rng = np.random.default_rng(seed)
    hyp = params.hypotheses(op, p, q)
    exps = {"p": p, "q": q}
    if op == "T":
        support = kw.get("support", 4.0)
        ratios, fine = [], []
        for _ in range(trials):
            f = _random_halfline_function(rng, support, p)
            n1, d1 = _t_ratio(f, params.a, params.b, p, q, support, 8)
            n2, d2 = _t_ratio(f, params.a, params.b, p, q, support, 16)
            ratios.append(n1 / d1)
            fine.append(n2 / d2)
        return _report("T", params, exps, trials, ratios, fine, hyp)
    if op == "S":
        if family == "remark":
            return _s_remark(p, q, params, eps, kw.get("truncations", (1e-2, 1e-8, 1e-32, 1e-128)), hyp)
        n = kw.get("n", 256)
        ratios, fine = [], []
        for _ in range(trials):
            f = _random_halfline_function(rng, params.ell, p)
            for mesh_n, store in ((n, ratios), (2 * n, fine)):
                mesh = SMesh(params.ell, mesh_n, params.a, params.b)
                fv = _cell_average(f, mesh)
                sf = mesh.matrix() @ fv
                store.append(_lp_half_line(sf, mesh.weights, q) / _lp_half_line(fv, mesh.weights, p))
        return _report("S", params, exps, trials, ratios, fine, hyp)
    if op == "R":
        radius = kw.get("radius", 100.0)
        circle = CircleRule(kw.get("angles", 1024))
        pp, qq = dual_exponent(p), dual_exponent(q)
        ratios, fine = [], []
        for _ in range(trials):
            modes = rng.integers(0, 6, size=3)
            coef = rng.normal(size=3) + 1j * rng.normal(size=3)

            def F(om, modes=modes, coef=coef):
                t = np.arctan2(om[:, 1], om[:, 0])
                return np.sum(coef[:, None] * np.exp(1j * modes[:, None] * t[None, :]), axis=0)

            fval = F(circle.points)
            den = float(np.sum(circle.weights * np.abs(fval) ** qq) ** (1.0 / qq))
            for rad, store in ((radius, ratios), (2 * radius, fine)):
                if pp == 2:
                    num = adjoint_l2_norm(F, params.alpha, params.beta, rad, circle)
                else:
                    plane = PlaneRule.square(rad)
                    g = op_R_adjoint_grid(F, params.alpha, params.beta, plane, circle)
                    num = float(np.sum(plane.w1[:, None] * plane.w2[None, :] * np.abs(g) ** pp) ** (1.0 / pp))
                store.append(num / den)
        return _report("R", params, exps, trials, ratios, fine, hyp)
    if op == "HY":
        ratios, fine = [], []
        for _ in range(trials):
            f = _random_halfline_function(rng, 2.0, p)
            ratios.append(hausdorff_young_ratio(f, p, q, freq_max=kw.get("freq_max", 200.0)))
            fine.append(hausdorff_young_ratio(f, p, q, freq_max=2 * kw.get("freq_max", 200.0)))
        return _report("HY", params, exps, trials, ratios, fine, hyp)
    raise ValueError(f"unknown operator {op!r}")


def _cell_average(f, mesh: SMesh, order: int = 8):
    t, w = qd.gauss_legendre(order)
    lo, hi = mesh.edges[:-1, None], mesh.edges[1:, None]
    x = lo + 0.5 * (hi - lo) * (t[None, :] + 1.0)
    return (_call(f, x) @ w) * 0.5


def _report(op, params, exps, trials, ratios, fine, hyp) -> ProbeReport:
    coarse, refined = max(ratios), max(fine)
    stab = abs(refined / coarse - 1.0) if coarse > 0 else math.inf
    return ProbeReport(op, asdict(params), exps, trials, float(refined), float(stab),
                       [float(r) for r in ratios], [float(r) for r in fine], hyp)


def _s_remark(p, q, params: WeightedOpParams, eps, truncations, hyp) -> ProbeReport:
    """Growth of ||S f_eps||_{L^q([x0, ell])} / ||f_eps||_p as x0 -> 0."""
    f = remark_family(p, eps)
    a, b, ell = params.a, params.b, params.ell
    # ||f_eps||_p^p = int_0^{1/2} x^-1 |log x|^-(1+eps) dx = (log 2)^-eps / eps
    fnorm = (math.log(2.0) ** (-eps) / eps) ** (1.0 / p)
    ratios = []
    for x0 in truncations:
        # integrate in t = -log x, dx = x dt
        t0, t1 = -math.log(ell), -math.log(x0)
        br = np.geomspace(max(t0, 1e-3), t1, 64)
        br = np.concatenate([[t0], br[br > t0]])
        t, w = qd.composite_legendre(br, 16)
        x = np.exp(-t)
        sf = op_S(f, x, a, b)
        ratios.append(float(np.sum(w * x * np.abs(sf) ** q) ** (1.0 / q) / fnorm))
    growth = ratios[-1] / ratios[0]
    rep = ProbeReport("S", asdict(params), {"p": p, "q": q, "eps": eps}, len(truncations),
                      float(max(ratios)), float(growth), ratios[:1], ratios, hyp)
    rep.note = ("remark family: stability field holds the growth factor between the coarsest "
                "and finest truncation; monotone growth indicates unboundedness")
    return rep


def hausdorff_young_ratio(f: Callable, p: float, q: float, freq_max: float = 200.0,
                          support: float = 2.0) -> float:
    """||F(f |.|^-delta)||_{L^q(R)} / ||f||_{L^p(R)} for f even, supported in [-support, support]."""
    delta = 1.0 - 1.0 / p - 1.0 / q
    # uniform panels short enough for cos(xi y) up to freq_max, graded inside the first
    n_pan = max(32, int(math.ceil(support * freq_max / 8.0)))
    h = support / n_pan
    br = np.concatenate([h * 0.5 ** np.arange(40, 0, -1), h * np.arange(1, n_pan + 1)])
    y, wy = qd.composite_legendre(br, 16)
    fy = _call(f, y)
    fn = (2.0 * np.sum(wy * np.abs(fy) ** p)) ** (1.0 / p)
    g = fy * y ** (-delta)
    xi, wxi = qd.composite_legendre(qd.uniform_breaks(0.0, freq_max, math.pi / (2 * support)), 16)
    hat = 2.0 * (np.cos(xi[:, None] * y[None, :]) @ (wy * g))
    num = 2.0 * np.sum(wxi * np.abs(hat) ** q)
    return float(num ** (1.0 / q) / fn)
