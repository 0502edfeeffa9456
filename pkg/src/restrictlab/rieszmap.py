"""Exact classification of exponent pairs (1/p, 1/q) for symmetric restriction.

All comparisons are done in rational arithmetic; float inputs are converted
with ``Fraction.limit_denominator`` so that e.g. 1.5 and 3/2 agree.

Status labels
-------------
``unbounded:necessary``        none of the necessary conditions holds
``bounded:sufficient-i``       the interpolated range 1/p < (m+1)/(2m)
``bounded:sufficient-ii``      1/p = (m+1)/(2m), 1/p + 1/q > 1
``bounded:sufficient-iii``     1/p > (m+1)/(2m), 1/p + 1/q >= 1
``bounded:stein-tomas``        implied by the unrestricted inequality
``open``                       necessary conditions hold, no sufficient one
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Union

import numpy as np

from .symgeom import SymmetryParams

Number = Union[int, float, Fraction, str]

UNBOUNDED = "unbounded:necessary"
BOUNDED_I = "bounded:sufficient-i"
BOUNDED_II = "bounded:sufficient-ii"
BOUNDED_III = "bounded:sufficient-iii"
BOUNDED_ST = "bounded:stein-tomas"
OPEN = "open"
STATUSES = (BOUNDED_I, BOUNDED_II, BOUNDED_III, BOUNDED_ST, UNBOUNDED, OPEN)
# raster codes for ``diagram``
CODES = {s: i for i, s in enumerate(STATUSES)}


def as_fraction(x: Number) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        if x.strip().lower() in ("inf", "infinity"):
            return Fraction(0)  # caller passes 1/x; see reciprocal
        return Fraction(x)
    if isinstance(x, float):
        if math.isinf(x):
            raise ValueError("use reciprocal() for infinite exponents")
        return Fraction(x).limit_denominator(10**9)
    return Fraction(x)


def reciprocal(p: Number) -> Fraction:
    """1/p as an exact fraction; p = inf maps to 0."""
    if (isinstance(p, float) and math.isinf(p)) or (isinstance(p, str) and p.strip().lower() in ("inf", "infinity")):
        return Fraction(0)
    f = as_fraction(p)
    if f < 1:
        raise ValueError("exponents must satisfy 1 <= p <= inf")
    return 1 / f


@dataclass(frozen=True)
class Landmarks:
    """Abscissas/ordinates that delimit the regions, as exact fractions."""
    d: int
    m: int

    @property
    def necessary_left(self) -> Fraction:          # (d+1)/(2d)
        return Fraction(self.d + 1, 2 * self.d)

    @property
    def sufficient_left(self) -> Fraction:         # (d+m+2)/(2(d+m))
        return Fraction(self.d + self.m + 2, 2 * (self.d + self.m))

    @property
    def critical(self) -> Fraction:                # (m+1)/(2m)
        return Fraction(self.m + 1, 2 * self.m)

    @property
    def stein_tomas(self) -> Fraction:             # (d+3)/(2d+2)
        return Fraction(self.d + 3, 2 * self.d + 2)

    @property
    def lorentz_ordinate(self) -> Fraction:        # (m-1)/(2m)
        return Fraction(self.m - 1, 2 * self.m)

    def abscissas(self) -> dict:
        return {
            "(d+1)/(2d)": self.necessary_left,
            "(d+m+2)/(2(d+m))": self.sufficient_left,
            "(m+1)/(2m)": self.critical,
            "(d+3)/(2d+2)": self.stein_tomas,
        }

    def ordinates(self) -> dict:
        return {"(m-1)/(2m)": self.lorentz_ordinate, "1/2": Fraction(1, 2)}


def landmarks(params: SymmetryParams) -> Landmarks:
    _check(params)
    return Landmarks(params.d, params.m)


@dataclass
class RegionVerdict:
    status: str
    citations: List[str] = field(default_factory=list)
    inv_p: Fraction = Fraction(0)
    inv_q: Fraction = Fraction(0)
    necessary: bool = True
    sufficient: bool = False

    @property
    def bounded(self) -> bool:
        return self.status.startswith("bounded")

    @property
    def unbounded(self) -> bool:
        return self.status == UNBOUNDED

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "citations": list(self.citations),
            "inv_p": str(self.inv_p),
            "inv_q": str(self.inv_q),
        }


def _check(params: SymmetryParams):
    if params.d < 4 or not params.nondegenerate:
        raise ValueError("classification needs d >= 4 and 2 <= k <= d-2")


def necessary_clauses(L: Landmarks, ip: Fraction, iq: Fraction) -> List[str]:
    d, m = L.d, L.m
    out = []
    if L.necessary_left < ip < L.critical and (d + m) * ip + (d - m) * iq >= d + 1:
        out.append("necessary-i: (d+1)/(2d)<1/p<(m+1)/(2m), (d+m)/p+(d-m)/q>=d+1")
    if ip == L.critical and ip + iq > 1:
        out.append("necessary-ii: 1/p=(m+1)/(2m), 1/p+1/q>1")
    if ip > L.critical and ip + iq >= 1:
        out.append("necessary-iii: 1/p>(m+1)/(2m), 1/p+1/q>=1")
    return out


def sufficient_clauses(L: Landmarks, ip: Fraction, iq: Fraction) -> List[str]:
    d, m = L.d, L.m
    out = []
    if L.sufficient_left <= ip < L.critical and (d + m) * ip + (d - m) * iq >= d + 1:
        out.append("sufficient-i: (d+m+2)/(2(d+m))<=1/p<(m+1)/(2m), (d+m)/p+(d-m)/q>=d+1")
    if ip == L.critical and ip + iq > 1:
        out.append("sufficient-ii: 1/p=(m+1)/(2m), 1/p+1/q>1")
    if ip > L.critical and ip + iq >= 1:
        out.append("sufficient-iii: 1/p>(m+1)/(2m), 1/p+1/q>=1")
    return out


def stein_tomas_region(L: Landmarks, ip: Fraction, iq: Fraction) -> bool:
    """Hull of (1/p_d, 1/2), (1, 0) and everything above it (q may decrease on the sphere)."""
    a = L.stein_tomas
    if ip < a:
        return False
    # segment from (a, 1/2) to (1, 0)
    return iq >= Fraction(1, 2) * (1 - ip) / (1 - a)


def classify(params: SymmetryParams, p: Number, q: Number) -> RegionVerdict:
    _check(params)
    L = Landmarks(params.d, params.m)
    ip, iq = reciprocal(p), reciprocal(q)
    return _classify(L, ip, iq)


def _classify(L: Landmarks, ip: Fraction, iq: Fraction) -> RegionVerdict:
    nec = necessary_clauses(L, ip, iq)
    if not nec:
        return RegionVerdict(UNBOUNDED, ["necessary conditions (i)-(iii) all fail"], ip, iq, False, False)
    suff = sufficient_clauses(L, ip, iq)
    if suff:
        tag = suff[0].split(":")[0]
        status = {"sufficient-i": BOUNDED_I, "sufficient-ii": BOUNDED_II, "sufficient-iii": BOUNDED_III}[tag]
        return RegionVerdict(status, suff, ip, iq, True, True)
    if stein_tomas_region(L, ip, iq):
        return RegionVerdict(BOUNDED_ST, ["stein-tomas: 1/p>=(d+3)/(2d+2), interpolation with (1,inf)"],
                             ip, iq, True, True)
    return RegionVerdict(OPEN, nec, ip, iq, True, False)


@dataclass
class Diagram:
    d: int
    k: int
    inv_p: np.ndarray
    inv_q: np.ndarray
    codes: np.ndarray          # codes[j, i] for (inv_q[j], inv_p[i])
    conflicts: int             # cells where a sufficient clause and a necessary failure co-fire
    landmarks: Landmarks

    def counts(self) -> dict:
        return {s: int(np.sum(self.codes == c)) for s, c in CODES.items()}


def diagram(params: SymmetryParams, resolution: int = 256) -> Diagram:
    """Classify the lattice 1/p = i/(n-1), 1/q = j/(n-1) exactly."""
    _check(params)
    if resolution < 32:
        raise ValueError("resolution must be >= 32")
    L = Landmarks(params.d, params.m)
    n = resolution
    grid = [Fraction(i, n - 1) for i in range(n)]
    codes = np.empty((n, n), dtype=np.int8)
    conflicts = 0
    for j, iq in enumerate(grid):
        for i, ip in enumerate(grid):
            v = _classify(L, ip, iq)
            codes[j, i] = CODES[v.status]
            # independent co-firing check
            if not necessary_clauses(L, ip, iq) and (sufficient_clauses(L, ip, iq) or stein_tomas_region(L, ip, iq)):
                conflicts += 1
    axis = np.array([float(g) for g in grid])
    return Diagram(params.d, params.k, axis, axis.copy(), codes, conflicts, L)


def diagonal_endpoint(params: SymmetryParams) -> dict:
    """Dual of p = 2(d+m)/(d+m+2) on the diagonal, against 2 + 8/(3d)."""
    d, m = params.d, params.m
    p = Fraction(2 * (d + m), d + m + 2)
    pd = p / (p - 1)
    approx = 2 + Fraction(8, 3 * d)
    return {"p": p, "p_prime": pd, "asymptotic": approx, "gap": float(pd - approx)}


_COLORS = {
    BOUNDED_I: "#f2d600", BOUNDED_II: "#f2d600", BOUNDED_III: "#f2d600",
    BOUNDED_ST: "#f28c28", UNBOUNDED: "#e6e6e6", OPEN: "#d62728",
}


def diagram_svg(diag: Diagram, path) -> None:
    """Self-contained SVG of the region raster with landmark lines."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.colors import ListedColormap

    plt.rcParams["svg.hashsalt"] = "restrictlab"
    plt.rcParams["svg.fonttype"] = "none"
    cmap = ListedColormap([_COLORS[s] for s in STATUSES])
    fig, ax = plt.subplots(figsize=(5, 5))
    h = 0.5 / (diag.inv_p.size - 1)
    ax.imshow(diag.codes, origin="lower", extent=(-h, 1 + h, -h, 1 + h), cmap=cmap,
              vmin=-0.5, vmax=len(STATUSES) - 0.5, interpolation="nearest")
    for name, x in diag.landmarks.abscissas().items():
        ax.axvline(float(x), color="k", lw=0.5, ls=":")
        ax.text(float(x), -0.04, name, rotation=90, fontsize=5, ha="center", va="top")
    for name, y in diag.landmarks.ordinates().items():
        ax.axhline(float(y), color="k", lw=0.5, ls=":")
        ax.text(-0.02, float(y), name, fontsize=5, ha="right", va="center")
    ax.set_xlabel("1/p")
    ax.set_ylabel("1/q")
    ax.set_title(f"d={diag.d}, k={diag.k}")
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
