"""Gauss rules: Legendre panels, Jacobi end panels and the cap-slice rule."""
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi, roots_legendre


@lru_cache(maxsize=256)
def _legendre(n: int):
    x, w = roots_legendre(n)
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


@lru_cache(maxsize=256)
def _jacobi(n: int, alpha: float, beta: float):
    x, w = roots_jacobi(n, alpha, beta)
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


def gauss_legendre(n: int, a: float = -1.0, b: float = 1.0):
    x, w = _legendre(int(n))
    h = 0.5 * (b - a)
    return a + h * (x + 1.0), h * w


def gauss_jacobi(n: int, alpha: float, beta: float):
    """Nodes/weights for the weight (1-x)^alpha (1+x)^beta on [-1, 1]."""
    if abs(alpha) < 1e-15 and abs(beta) < 1e-15:
        return _legendre(int(n))
    return _jacobi(int(n), float(alpha), float(beta))


def composite_legendre(breaks, order: int):
    """Gauss-Legendre of the given order on every panel between breakpoints."""
    breaks = np.asarray(breaks, dtype=float)
    t, w = _legendre(int(order))
    a, b = breaks[:-1, None], breaks[1:, None]
    h = 0.5 * (b - a)
    x = (a + h * (t + 1.0)).ravel()
    ww = (h * w).ravel()
    return x, ww


def uniform_breaks(a: float, b: float, max_len: float) -> np.ndarray:
    n = max(1, int(np.ceil((b - a) / max_len - 1e-12)))
    return np.linspace(a, b, n + 1)


def graded_breaks(length: float, panel: float, levels: int = 6) -> np.ndarray:
    """Uniform panels on [0, length], the first one split geometrically toward 0."""
    uni = uniform_breaks(0.0, length, panel)
    first = uni[1]
    geo = first * 0.5 ** np.arange(levels, 0, -1)
    return np.concatenate([[0.0], geo, uni[1:]])


def merge_breaks(*arrays, tol: float = 1e-12) -> np.ndarray:
    b = np.unique(np.concatenate([np.asarray(a, dtype=float).ravel() for a in arrays]))
    keep = np.concatenate([[True], np.diff(b) > tol * max(1.0, abs(b[-1]))])
    return b[keep]


def cap_rule(d: int, k: int, n: int, breaks=()):
    """Rule for int_0^1 r^(d-k-1) (1-r^2)^((k-2)/2) g(r) dr.

    Works in u = 2r^2 - 1, where the weight becomes
    2^(-d/2) (1-u)^((k-2)/2) (1+u)^((d-k-2)/2).  Interior breakpoints in r
    split the interval; end panels keep their Jacobi singularity, interior
    panels are plain Legendre.  ``n`` is the node count per panel.
    """
    alpha = 0.5 * (k - 2)
    beta = 0.5 * (d - k - 2)
    scale = 2.0 ** (-0.5 * d)
    rb = [float(b) for b in breaks if 0.0 < float(b) < 1.0]
    ub = np.concatenate([[-1.0], 2.0 * np.sort(np.asarray(rb)) ** 2 - 1.0, [1.0]])
    ub = _grade_interior(ub, alpha, beta)
    us, ws = [], []
    last = len(ub) - 2
    for i in range(len(ub) - 1):
        a, b = ub[i], ub[i + 1]
        h = 0.5 * (b - a)
        if last == 0:
            t, w = gauss_jacobi(n, alpha, beta)
            u = t
            wu = w
        elif i == 0:
            t, w = gauss_jacobi(n, 0.0, beta)
            u = a + h * (t + 1.0)
            wu = h ** (beta + 1.0) * w * (1.0 - u) ** alpha
        elif i == last:
            t, w = gauss_jacobi(n, alpha, 0.0)
            u = a + h * (t + 1.0)
            wu = h ** (alpha + 1.0) * w * (1.0 + u) ** beta
        else:
            t, w = _legendre(n)
            u = a + h * (t + 1.0)
            wu = h * w * (1.0 - u) ** alpha * (1.0 + u) ** beta
        us.append(u)
        ws.append(wu)
    u = np.concatenate(us)
    r = np.sqrt(0.5 * (1.0 + u))
    return r, scale * np.concatenate(ws)


def _grade_interior(ub: np.ndarray, alpha: float, beta: float) -> np.ndarray:
    """Add breaks at geometric distances from a singular endpoint.

    When the first (last) break sits close to u = -1 (u = 1), the next panel
    would see the endpoint factor as a near singularity; panels growing by a
    factor 4 up to the midpoint keep every Legendre panel well separated.
    """
    if ub.size <= 2:
        return ub
    extra = []
    for exp_, end, gap in ((beta, -1.0, ub[1] + 1.0), (alpha, 1.0, 1.0 - ub[-2])):
        if float(exp_).is_integer() and exp_ >= 0:
            continue
        t = 4.0 * gap
        while t < 1.0:
            extra.append(end - np.sign(end) * t)
            t *= 4.0
    return merge_breaks(ub, extra)


def cap_rule_interval(d: int, k: int, n: int, rmax: float):
    """Rule for the same weight restricted to [0, rmax], rmax < 1."""
    r, w = cap_rule(d, k, n, breaks=(rmax,))
    return r[:n], w[:n]


def interp_matrix(nodes_t: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Barycentric Lagrange interpolation matrix from nodes on [-1,1] to x."""
    t = np.asarray(nodes_t, dtype=float)
    n = t.size
    diff = t[:, None] - t[None, :]
    np.fill_diagonal(diff, 1.0)
    lam = 1.0 / np.prod(diff, axis=1)
    x = np.asarray(x, dtype=float)
    dx = x[:, None] - t[None, :]
    exact = np.isclose(dx, 0.0, atol=1e-15)
    dx[exact] = 1.0
    m = lam[None, :] / dx
    m /= m.sum(axis=1, keepdims=True)
    rows = np.any(exact, axis=1)
    if np.any(rows):
        m[rows] = exact[rows].astype(float)
    return m


class QuadratureSpec:
    """Node counts, truncation radius and tolerance shared by the reduced integrals."""

    __slots__ = ("cap_nodes", "space_radius", "space_nodes", "tol", "order")

    def __init__(self, cap_nodes: int = 128, space_radius: float = 200.0,
                 space_nodes: int = 512, tol: float = 1e-6, order: int = 16):
        if cap_nodes <= 0 or space_nodes <= 0 or space_radius <= 0 or order <= 0:
            raise ValueError("quadrature sizes must be positive")
        if not 0 < tol <= 1e-3:
            raise ValueError("tol must lie in (0, 1e-3]")
        self.cap_nodes = int(cap_nodes)
        self.space_radius = float(space_radius)
        self.space_nodes = int(space_nodes)
        self.tol = float(tol)
        self.order = int(order)

    def refined(self, factor: int = 2) -> "QuadratureSpec":
        return QuadratureSpec(self.cap_nodes * factor, self.space_radius,
                              self.space_nodes * factor, self.tol, self.order)

    def to_dict(self) -> dict:
        return {s: getattr(self, s) for s in self.__slots__}

    def __repr__(self):
        args = ", ".join(f"{s}={getattr(self, s)!r}" for s in self.__slots__)
        return f"QuadratureSpec({args})"

    def __eq__(self, other):
        return isinstance(other, QuadratureSpec) and self.to_dict() == other.to_dict()
