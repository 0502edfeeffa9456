"""Profile builders shared by the test modules."""
import numpy as np

from restrictlab.symgeom import RadialGrid, RadialProfile2D


def bump(t):
    """C^inf bump supported in |t| < 1."""
    t = np.asarray(t, dtype=float)
    inside = np.abs(t) < 1
    safe = np.where(inside, t, 0.0)
    return np.where(inside, np.exp(-1.0 / (1.0 - safe * safe)), 0.0)


def random_compact_profile(rng, radius=6.0, panel=0.25, lo=0.0, n_bumps=3, complex_valued=False):
    """Sum of product bumps with centres in [lo+1, radius-1]; real unless asked otherwise."""
    c = rng.normal(size=n_bumps)
    if complex_valued:
        c = c + 1j * rng.normal(size=n_bumps)
    b1 = rng.uniform(lo + 1.0, radius - 1.0, n_bumps)
    b2 = rng.uniform(lo + 1.0, radius - 1.0, n_bumps)
    s1 = np.minimum(rng.uniform(0.6, 1.0, n_bumps), np.minimum(b1 - lo, radius - b1))
    s2 = np.minimum(rng.uniform(0.6, 1.0, n_bumps), np.minimum(b2 - lo, radius - b2))

    def f0(x1, x2):
        out = 0.0
        for j in range(n_bumps):
            out = out + c[j] * bump((x1 - b1[j]) / s1[j]) * bump((x2 - b2[j]) / s2[j])
        return out

    g = RadialGrid.uniform(radius, panel)
    return RadialProfile2D.from_function(f0, g, g)


def gaussian_profile(radius=12.0, nodes=256):
    g = RadialGrid.default(radius, nodes)
    return RadialProfile2D.from_function(lambda a, b: np.exp(-0.5 * (a * a + b * b)), g)
