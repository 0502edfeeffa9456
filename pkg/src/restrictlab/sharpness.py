"""Knapp-type counterexamples for symmetric extension estimates.

For the cap C_delta = {|eta| < delta} the extension of its indicator is
computed on a delta-adapted box in (|y|, |z|): |y| <= c_y / delta and
|z| <= z_J + c with J = floor(c delta^-2), z_j the j-th local maximum of
J_{(k-2)/2}.  In the scaled variables (delta |y|, delta^2 |z|) the box is
fixed, so the fitted log-log slope of the quotient
||ext(1_delta)||_{p'} / ||1_delta||_{q'} is comparable with the predicted
exponent.  Note the full-space norm itself can be infinite (e.g. p' = 2).
"""
from __future__ import annotations

import csv
import logging
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import quadrature as qd
from ._bessel import jv_kernel
from .specfun import _sigma_hat, sphere_area
from .symgeom import SymmetryParams, dual_exponent

log = logging.getLogger(__name__)

__all__ = [
    "KnappConfig",
    "SlopeFit",
    "TailVerdict",
    "bessel_maxima",
    "cap_measure",
    "default_delta_grid",
    "EndpointProbe",
    "endpoint_exponent",
    "knapp_dual_profile",
    "lorentz_endpoint_probe",
    "restriction_lorentz_quotient",
    "g1_knapp",
    "knapp_quotient",
    "knapp_sweep",
    "predicted_slope",
    "radial_tail",
    "regime",
    "slope_fit",
    "write_sweep_csv",
]


def default_delta_grid(n: int = 8, lo: float = 0.005, hi: float = 0.16) -> np.ndarray:
    return np.geomspace(lo, hi, n)


@dataclass(frozen=True)
class KnappConfig:
    delta: float
    d: int
    k: int
    p: float
    q: float
    c: float = 1.0
    c_y: float = 1.0
    j0: int = 3
    g1: bool = False

    def __post_init__(self):
        if not 0 < self.delta < 0.5:
            raise ValueError("delta must lie in (0, 1/2)")
        if self.p < 1 or self.q < 1:
            raise ValueError("p, q must be >= 1")
        if self.g1:
            if self.d < 3:
                raise ValueError("the G_1 construction needs d >= 3")
        elif not 2 <= self.k <= self.d - 2:
            raise ValueError("Knapp caps need 2 <= k <= d-2")

    @property
    def m(self) -> int:
        return 1 if self.g1 else min(self.k, self.d - self.k)

    @property
    def j_max(self) -> int:
        # the relative nudge keeps e.g. 0.1**-2 = 99.999... from dropping a shell
        if self.g1:
            return int(math.floor((2 * self.delta) ** -2 * (1 + 1e-12)))
        return int(math.floor(self.c * self.delta ** -2 * (1 + 1e-12)))

    @property
    def j_range(self):
        return (self.j0, self.j_max)

    @property
    def params(self) -> SymmetryParams:
        # the cap lives in the larger block: (y, z) in R^(d-m) x R^m
        return SymmetryParams(self.d, self.m)

    def with_delta(self, delta: float) -> "KnappConfig":
        return replace(self, delta=float(delta))


def bessel_maxima(nu: float, count: int, step: float = 0.05) -> np.ndarray:
    """First ``count`` positive local maxima of J_nu (sign change of J_nu' from + to -)."""
    if count <= 0:
        return np.zeros(0)
    xmax = 2.0 * math.pi * (count + 2) + 10.0
    x = np.arange(step, xmax, step)
    # J_nu' = (nu/x) J_nu - J_{nu+1}
    dj = (nu / x) * jv_kernel(nu, x) - jv_kernel(nu + 1.0, x)
    jv = jv_kernel(nu, x)
    idx = np.nonzero((dj[:-1] > 0) & (dj[1:] <= 0) & (jv[:-1] > 0))[0]
    # linear refinement of the derivative root
    x0, x1 = x[idx], x[idx + 1]
    d0, d1 = dj[idx], dj[idx + 1]
    roots = x0 - d0 * (x1 - x0) / (d1 - d0)
    return roots[:count]


def _z_cut(cfg: KnappConfig) -> float:
    if cfg.g1:
        return 2.0 * math.pi * cfg.j_max + math.pi / 4
    nu = 0.5 * (cfg.m - 2)
    J = cfg.j_max
    if J <= 2000:
        zs = bessel_maxima(nu, J)
        return float(zs[-1]) + cfg.c
    # far out the maxima sit near nu pi/2 + pi/4 + 2 pi n; anchor n on the first one
    phase = (0.5 * nu + 0.25) * math.pi
    n0 = round((float(bessel_maxima(nu, 1)[0]) - phase) / (2 * math.pi))
    guess = phase + 2.0 * math.pi * (n0 + J - 1)
    xs = np.linspace(guess - 1.0, guess + 1.0, 20001)
    return float(xs[np.argmax(jv_kernel(nu, xs))]) + cfg.c


def _y_cut(cfg: KnappConfig) -> float:
    return (math.pi / (4 * cfg.delta)) if cfg.g1 else cfg.c_y / cfg.delta


def cap_measure(cfg: KnappConfig, n: int = 32) -> float:
    """sigma(C_delta)^(1/q') through the slice rule on [0, delta]."""
    P = cfg.params
    r, w = qd.cap_rule_interval(P.d, P.k, n, cfg.delta)
    meas = P.slice_constant * float(np.sum(w))
    qq = dual_exponent(float(cfg.q))
    if qq == math.inf:
        return 1.0
    return meas ** (1.0 / qq)


@dataclass
class KnappPoint:
    delta: float
    numerator: float
    denominator: float
    z_cut: float
    y_cut: float

    @property
    def quotient(self) -> float:
        return self.numerator / self.denominator


def knapp_quotient(cfg: KnappConfig, n_r: int = 24, y_nodes: int = 32, z_per_pi: int = 8,
                   chunk: int = 1 << 16, detail: bool = False):
    """||ext(1_delta)||_{L^p'(box)} / ||1_delta||_{L^q'(S^(d-1))}."""
    P = cfg.params
    d, k = P.d, P.k
    pp = dual_exponent(float(cfg.p))
    r, w = qd.cap_rule_interval(d, k, n_r, cfg.delta)
    s = np.sqrt(1.0 - r * r)
    ycut, zcut = _y_cut(cfg), _z_cut(cfg)
    y, wy = qd.composite_legendre(np.linspace(0.0, ycut, max(1, y_nodes // 16) + 1), 16)
    a = _sigma_hat(d - k, y[:, None] * r[None, :]) * w[None, :]
    zbr = qd.uniform_breaks(0.0, zcut, math.pi)
    tz, wz_ref = qd.gauss_legendre(z_per_pi)
    my = sphere_area(d - k) * sphere_area(k) * wy * y ** (d - k - 1)
    acc = 0.0
    amax = 0.0
    npan = zbr.size - 1
    per = max(1, chunk // z_per_pi)
    for p0 in range(0, npan, per):
        lo, hi = zbr[p0:min(npan, p0 + per)], zbr[p0 + 1:min(npan, p0 + per) + 1]
        h = 0.5 * (hi - lo)
        z = (lo[:, None] + h[:, None] * (tz[None, :] + 1.0)).ravel()
        wz = (h[:, None] * wz_ref[None, :]).ravel() * z ** (k - 1)
        b = _sigma_hat(k, s[:, None] * z[None, :])
        fld = np.abs(a @ b)
        if pp == math.inf:
            amax = max(amax, float(fld.max()))
        else:
            acc += float(my @ (fld ** pp) @ wz)
    num = amax if pp == math.inf else acc ** (1.0 / pp)
    den = cap_measure(cfg)
    pt = KnappPoint(cfg.delta, num, den, zcut, ycut)
    return pt if detail else pt.quotient


def regime(cfg: KnappConfig) -> str:
    if cfg.g1:
        return "g1"
    k = cfg.m
    inv = Fraction(cfg.p).limit_denominator(10**6) ** -1
    crit = Fraction(k + 1, 2 * k)
    if inv < crit:
        return "i"
    if inv == crit:
        return "ii"
    return "iii"


def predicted_slope(cfg: KnappConfig) -> float:
    d, k = cfg.d, cfg.m
    ip, iq = 1.0 / cfg.p, 1.0 / cfg.q
    if cfg.g1:
        return (d + 1) * ip + (d - 1) * iq - d - 1
    if regime(cfg) == "iii":
        return (d - k) * ip + (d - k) * iq - d + k
    return (d + k) * ip + (d - k) * iq - d - 1


@dataclass
class SlopeFit:
    slope: float
    predicted: float
    regime: str
    verdict: bool
    tolerance: float
    deltas: list
    quotients: list
    numerators: list = field(default_factory=list)
    denominators: list = field(default_factory=list)
    log_coefficient: float = 0.0

    def to_dict(self) -> dict:
        return {
            "slope": self.slope,
            "predicted": self.predicted,
            "regime": self.regime,
            "match": self.verdict,
            "tolerance": self.tolerance,
            "log_coefficient": self.log_coefficient,
            "deltas": list(self.deltas),
            "quotients": list(self.quotients),
        }


def knapp_sweep(cfg: KnappConfig, delta_grid: Optional[Sequence[float]] = None, jobs: int = 1,
                **kw) -> list:
    deltas = default_delta_grid() if delta_grid is None else np.asarray(delta_grid, dtype=float)
    cfgs = [cfg.with_delta(dl) for dl in deltas]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(lambda c: knapp_quotient(c, detail=True, **kw), cfgs))
    return [knapp_quotient(c, detail=True, **kw) for c in cfgs]


def slope_fit(cfg: KnappConfig, delta_grid: Optional[Sequence[float]] = None, tol: float = 0.1,
              jobs: int = 1, **kw) -> SlopeFit:
    """Least-squares slope of log(quotient) against log(delta).

    In the critical regime the model carries a fixed (1/p') log|log delta|
    term, which is subtracted before fitting.
    """
    deltas = default_delta_grid() if delta_grid is None else np.asarray(delta_grid, dtype=float)
    if deltas.size < 6:
        warnings.warn("slope fit on fewer than 6 delta values is poorly conditioned", RuntimeWarning, stacklevel=2)
    pts = knapp_sweep(cfg, deltas, jobs=jobs, **kw)
    q = np.array([pt.quotient for pt in pts])
    x = np.log(deltas)
    yv = np.log(q)
    reg = regime(cfg)
    logc = 0.0
    if reg == "ii":
        pp = dual_exponent(float(cfg.p))
        logc = 0.0 if pp == math.inf else 1.0 / pp
        yv = yv - logc * np.log(np.abs(np.log(deltas)))
    slope = float(np.polyfit(x, yv, 1)[0])
    pred = predicted_slope(cfg)
    return SlopeFit(slope, pred, reg, abs(slope - pred) <= tol, tol, list(map(float, deltas)),
                    list(map(float, q)), [pt.numerator for pt in pts], [pt.denominator for pt in pts], logc)


def g1_knapp(delta_grid: Optional[Sequence[float]], d: int, p: float, q: float, tol: float = 0.1,
             jobs: int = 1, **kw) -> SlopeFit:
    """Slope fit for the G_1 cap {|eta| < delta}, eta in R^(d-1), shells at 2 pi j."""
    deltas = default_delta_grid() if delta_grid is None else delta_grid
    cfg = KnappConfig(float(np.max(deltas)), d, 1, p, q, g1=True)
    return slope_fit(cfg, deltas, tol=tol, jobs=jobs, **kw)


def write_sweep_csv(path, fit: SlopeFit) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["delta", "numerator", "denominator", "quotient"])
        for row in zip(fit.deltas, fit.numerators, fit.denominators, fit.quotients):
            w.writerow([repr(float(v)) for v in row])


# ---------------------------------------------------------------- radial tail


@dataclass
class TailVerdict:
    d: int
    p_prime: float
    threshold: float
    verdict: str
    slope: float
    slope_spread: float
    radii: list
    shell_masses: list
    eta: float

    def to_dict(self) -> dict:
        return {
            "d": self.d, "p_prime": self.p_prime, "threshold": self.threshold,
            "verdict": self.verdict, "slope": self.slope, "slope_spread": self.slope_spread,
            "radii": self.radii, "shell_masses": self.shell_masses, "eta": self.eta,
        }


def radial_tail(d: int, p_prime: float, R_grid: Optional[Sequence[float]] = None, eta: float = 0.01,
                last: int = 4) -> TailVerdict:
    """Decide whether sigma_hat lies in L^p'(R^d) from shell masses on doubling radii.

    Shell mass m_j = int_{R_j <= |x| <= R_{j+1}} |sigma_hat|^p'.  On doubling
    radii log2(m_{j+1}/m_j) tends to d - p'(d-1)/2; geometric decay of the
    increments means convergence, a non-negative slope means divergence.
    The last ``last`` slopes are averaged and compared with -eta.
    """
    if not 1 < p_prime < math.inf:
        raise ValueError("p' must lie in (1, inf)")
    if d < 2:
        raise ValueError("d must be >= 2")
    R = np.asarray(R_grid if R_grid is not None else 10.0 * 2.0 ** np.arange(13), dtype=float)
    if R.size < last + 2:
        raise ValueError("radius grid too short")
    area = sphere_area(d)
    masses = []
    for lo, hi in zip(R[:-1], R[1:]):
        x, w = qd.composite_legendre(qd.uniform_breaks(lo, hi, math.pi / 2), 8)
        masses.append(float(area * np.sum(w * x ** (d - 1) * np.abs(_sigma_hat(d, x)) ** p_prime)))
    masses = np.array(masses)
    ratio = np.log2(masses[1:] / masses[:-1]) / np.log2(R[2:] / R[1:-1])
    tail = ratio[-last:]
    s, spread = float(tail.mean()), float(tail.std(ddof=1))
    if s + 2 * spread < -eta:
        verdict = "converges"
    elif s - 2 * spread > -eta:
        verdict = "diverges"
    else:
        verdict = "inconclusive"
    return TailVerdict(d, float(p_prime), 2.0 * d / (d - 1), verdict, s, spread,
                       list(map(float, R)), list(map(float, masses)), eta)


# ---------------------------------------------------------------- Lorentz endpoint


def endpoint_exponent(params: SymmetryParams) -> Fraction:
    """p = 2m/(m+1), where restriction maps L^{p,1} into weak L^{p'} on the sphere."""
    m = params.m
    return Fraction(2 * m, m + 1)


def restriction_lorentz_quotient(f, params: SymmetryParams, cap_n: int = 32, cap_breaks=(),
                                 quad=None) -> tuple:
    """(||f^||_{L^{p',inf}(S^(d-1))}, ||f||_{L^{p,1}(R^d)}) at the endpoint p = 2m/(m+1)."""
    from .symgeom import LorentzExponent, lorentz_norm
    from .transforms import symmetric_fourier

    if not params.nondegenerate:
        raise ValueError("the endpoint probe needs 2 <= k <= d-2")
    d, k = params.d, params.k
    p = float(endpoint_exponent(params))
    pp = float(dual_exponent(endpoint_exponent(params)))
    r, w = qd.cap_rule(d, k, cap_n, breaks=cap_breaks)
    fh = symmetric_fourier(f, r, np.sqrt(1.0 - r * r), params, quad)
    num = lorentz_norm(fh, params.slice_constant * w, LorentzExponent(pp, math.inf))
    m1 = f.grid1.weights * f.nodes1 ** (d - k - 1)
    m2 = f.grid2.weights * f.nodes2 ** (k - 1)
    mu = params.slice_constant * (m1[:, None] * m2[None, :])
    den = lorentz_norm(f.values, mu, LorentzExponent(p, 1.0))
    return num, den


def _random_bumps(rng, n_bumps: int = 3, spread: float = 3.0):
    c = rng.normal(size=n_bumps) + 1j * rng.normal(size=n_bumps)
    b1, b2 = rng.uniform(0, spread, n_bumps), rng.uniform(0, spread, n_bumps)
    a1, a2 = rng.uniform(0.5, 2.0, n_bumps), rng.uniform(0.5, 2.0, n_bumps)

    def f0(x1, x2):
        out = 0.0
        for j in range(n_bumps):
            out = out + c[j] * np.exp(-a1[j] * (x1 - b1[j]) ** 2 - a2[j] * (x2 - b2[j]) ** 2)
        return out
    return f0


def knapp_dual_profile(delta: float, params: SymmetryParams, nodes: int = 128):
    """phi(delta |y|) sigma_hat_k(|z|) chi(delta^2 |z|): Fourier side sits on a delta-cap.

    The cap is {|eta| < delta}, so the transform concentrates near |zeta| = 1
    with width ~ delta^2; phi and chi are Gaussians.
    """
    from .symgeom import RadialGrid, RadialProfile2D

    k = params.k

    def f0(x1, x2):
        return np.exp(-0.5 * (delta * x1) ** 2) * _sigma_hat(k, x2) * np.exp(-0.5 * (delta * delta * x2) ** 2)

    g1 = RadialGrid.default(9.0 / delta, nodes)
    g2 = RadialGrid.uniform(9.0 / delta ** 2, math.pi)
    return RadialProfile2D.from_function(f0, g1, g2)


@dataclass
class EndpointProbe:
    family: str
    quotients: list
    refined: list
    labels: list

    @property
    def max_quotient(self) -> float:
        return float(np.max(self.quotients))

    @property
    def stability(self) -> float:
        q, r = np.asarray(self.quotients), np.asarray(self.refined)
        return float(np.max(np.abs(r / q - 1.0)))

    def to_dict(self) -> dict:
        return {"family": self.family, "labels": list(self.labels), "quotients": list(self.quotients),
                "refined": list(self.refined), "max_quotient": self.max_quotient,
                "stability": self.stability}


def lorentz_endpoint_probe(params: SymmetryParams, family: str = "random", trials: int = 20, seed: int = 0,
                           deltas=(0.4, 0.2, 0.1), nodes: int = 96, cap_n: int = 24) -> EndpointProbe:
    """Quotient ||f^||_{p',inf} / ||f||_{p,1} at the endpoint, base and refined resolution.

    ``random``: smooth complex Gaussian-bump profiles.  ``knapp``: the
    delta-family of :func:`knapp_dual_profile`.  Refinement doubles the
    profile nodes and the cap nodes.
    """
    from .symgeom import RadialGrid, RadialProfile2D
    from .quadrature import QuadratureSpec

    quad = QuadratureSpec(tol=1e-3)
    qs, rs, labels = [], [], []
    if family == "random":
        rng = np.random.default_rng(seed)
        for t in range(trials):
            f0 = _random_bumps(rng)
            vals = []
            for n, c in ((nodes, cap_n), (2 * nodes, 2 * cap_n)):
                g = RadialGrid.default(12.0, n)
                num, den = restriction_lorentz_quotient(RadialProfile2D.from_function(f0, g, g), params, c,
                                                        quad=quad)
                vals.append(num / den)
            qs.append(vals[0])
            rs.append(vals[1])
            labels.append(f"trial-{t}")
    elif family == "knapp":
        for dl in deltas:
            vals = []
            for n, c in ((nodes, cap_n), (2 * nodes, 2 * cap_n)):
                f = knapp_dual_profile(dl, params, n)
                br = [dl * s for s in (0.5, 1.0, 2.0, 4.0) if dl * s < 1]
                num, den = restriction_lorentz_quotient(f, params, c, br, quad=quad)
                vals.append(num / den)
            qs.append(vals[0])
            rs.append(vals[1])
            labels.append(f"delta={dl:g}")
    else:
        raise ValueError("family must be 'random' or 'knapp'")
    return EndpointProbe(family, [float(v) for v in qs], [float(v) for v in rs], labels)
