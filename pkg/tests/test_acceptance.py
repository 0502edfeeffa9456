"""The twelve acceptance criteria, each at its stated tolerance.

Run alone with ``pytest tests/test_acceptance.py``; the PASS/FAIL lines are
printed in the "acceptance criteria" section of the terminal summary.
"""
import math
import sys
import time
import warnings
from fractions import Fraction

import numpy as np
import pytest
from scipy import integrate, special

from restrictlab.optimize import DiscreteExtension, duality_check, maximize, objective
from restrictlab.quadrature import QuadratureSpec
from restrictlab.rieszmap import BOUNDED_I, UNBOUNDED, classify, diagram, landmarks
from restrictlab.sharpness import (KnappConfig, default_delta_grid, g1_knapp, lorentz_endpoint_probe, radial_tail,
                                   slope_fit)
from restrictlab.specfun import bessel_split, remainder_envelope_constant, sigma_hat
from restrictlab.symgeom import CapProfile, SymmetryParams, TruncationWarning
from restrictlab.transforms import extension_grid, f4_via_R, split_transform, symmetric_fourier
from restrictlab.weightedops import WeightedOpParams, norm_probe, oscillatory_bound_ratio, oscillatory_integral

from _helpers import gaussian_profile, random_compact_profile

PAIRS = [(4, 2), (5, 2), (6, 3), (7, 3)]


def test_criterion_01_cross_identity(acceptance):
    t0 = time.perf_counter()
    g = np.linspace(0.0, 30.0, 50)
    worst = 0.0
    for d, k in PAIRS:
        field = extension_grid(CapProfile.constant(SymmetryParams(d, k), 80), g, g)
        ref = sigma_hat(d, np.hypot(g[:, None], g[None, :]))
        worst = max(worst, float(np.max(np.abs(field.values - ref) / np.abs(ref))))
    dt = time.perf_counter() - t0
    ok = worst < 1e-6 and dt < 60
    assert acceptance(1, "extension of 1 equals sigma-hat", ok, f"max rel err {worst:.2e}, {dt:.1f}s")


def test_criterion_02_gaussian_oracle(acceptance):
    rng = np.random.default_rng(2)
    f = gaussian_profile()
    worst = 0.0
    for d, k in PAIRS:
        eta, zeta = rng.uniform(0, 3, 100), rng.uniform(0, 3, 100)
        got = symmetric_fourier(f, eta, zeta, SymmetryParams(d, k))
        ref = (2 * math.pi) ** (d / 2) * np.exp(-0.5 * (eta ** 2 + zeta ** 2))
        worst = max(worst, float(np.max(np.abs(got - ref) / ref)))
    assert acceptance(2, "Gaussian Fourier oracle", worst < 1e-6, f"max rel err {worst:.2e}")


def test_criterion_03_decomposition(acceptance):
    rng = np.random.default_rng(3)
    P = SymmetryParams(4, 2)
    rec = f4 = 0.0
    for _ in range(10):
        f = random_compact_profile(rng)
        for eta, zeta in [(0.6, 0.8), (1.5, 2.5), (3.0, 4.0)]:
            direct = symmetric_fourier(f, eta, zeta, P)
            st = split_transform(f, eta, zeta, P)
            rec = max(rec, abs(st.reconstruct() - direct) / max(1.0, abs(direct)))
        piece = split_transform(f, 0.6, 0.8, P).pieces[3]
        f4 = max(f4, abs(f4_via_R(f, 0.6, 0.8, P, 1.5) - piece) / max(1.0, abs(piece)))
        g = random_compact_profile(rng, radius=7.0, lo=1.0)
        piece = split_transform(g, 3.0, 4.0, P).pieces[3]
        f4 = max(f4, abs(f4_via_R(g, 3.0, 4.0, P, 1.5) - piece) / max(1.0, abs(piece)))
    ok = rec < 1e-6 and f4 < 1e-5
    assert acceptance(3, "split reconstruction and f4 via R", ok, f"reconstruction {rec:.2e}, f4 {f4:.2e}")


KNAPP = [((4, 2, 1.5, 2.0), 0.0), ((4, 2, 1.25, 2.0), 0.6), ((6, 3, 18 / 11, 2.0), 0.0),
         ((4, 2, 2.0, 2.0), -1.0), ((4, 2, 4 / 3, 2.0), 0.5)]


def test_criterion_04_knapp_slopes(acceptance):
    t0 = time.perf_counter()
    grid = default_delta_grid(8, 0.005, 0.16)
    errs = []
    for (d, k, p, q), slope in KNAPP:
        fit = slope_fit(KnappConfig(0.1, d, k, p, q), grid)
        errs.append(abs(fit.slope - slope))
    dt = time.perf_counter() - t0
    ok = max(errs) < 0.1 and dt < 600
    assert acceptance(4, "Knapp slopes, five fixtures", ok,
                      "slope errors " + ", ".join(f"{e:.3f}" for e in errs) + f", {dt:.1f}s")


def test_criterion_05_g1_knapp(acceptance):
    a = g1_knapp(None, 4, 10 / 7, 2.0).slope
    b = g1_knapp(None, 4, 2.0, 2.0).slope
    ok = abs(a) < 0.1 and abs(b + 1) < 0.1
    assert acceptance(5, "G_1 Knapp slopes", ok, f"p=10/7: {a:.3f}, p=2: {b:.3f}")


def test_criterion_06_radial_threshold(acceptance):
    bad = []
    for d in range(3, 9):
        thr = 2 * d / (d - 1)
        if radial_tail(d, 1.02 * thr).verdict != "converges" or radial_tail(d, 0.98 * thr).verdict != "diverges":
            bad.append(d)
    assert acceptance(6, "radial threshold 2d/(d-1)", not bad, f"misclassified d: {bad or 'none'} at +-2%")


def test_criterion_07_maximizer(acceptance):
    P = SymmetryParams(4, 2)
    r1 = maximize(P, 1, restarts=2)
    v = r1.iterate.values
    const_shape = float(np.max(np.abs(v / v[0] - 1)))
    e1 = abs(r1.objective - math.sqrt(2 * math.pi ** 2))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TruncationWarning)
        r2 = maximize(P, 10 / 7, restarts=2)
    hist = r2.objective_history
    mono = all(b >= a - 1e-8 for a, b in zip(hist, hist[1:]))
    op = DiscreteExtension(P, r2.grid)
    lower = objective(np.ones(op.r.size), 10 / 7, op=op, warn=False)
    resid = duality_check(P, 10 / 7, gaussian_profile(), CapProfile.constant(P, 64)).residual
    ok = e1 < 1e-3 and const_shape < 1e-3 and mono and r2.objective >= lower - 1e-8 and r2.stability < 0.01 \
        and resid < 1e-6
    assert acceptance(7, "maximizer search and duality", ok,
                      f"p=1 err {e1:.1e}; p=10/7 monotone={mono}, {r2.objective:.6f} >= {lower:.6f}, "
                      f"doubling {r2.stability:.1e}; pairing residual {resid:.1e}")


def test_criterion_08_bessel_split(acceptance):
    rng = np.random.default_rng(8)
    nus = [0.0, 0.5, 1.0, 1.5, 2.0, 2.5]
    err = 0.0
    drift = 0.0
    consts = []
    for nu in nus:
        for r in np.concatenate([rng.uniform(0, 10, 50), np.geomspace(1e-3, 1e4, 50)]):
            err = max(err, abs(bessel_split(nu, r).value - special.jv(nu, r)))
        c1 = remainder_envelope_constant(nu, np.geomspace(1e-3, 1e4, 20000))
        c2 = remainder_envelope_constant(nu, np.geomspace(1e-3, 1e4, 40000))
        consts.append(c2)
        drift = max(drift, abs(c2 / c1 - 1))
    ok = err < 1e-9 and all(math.isfinite(c) for c in consts) and drift < 1e-2
    assert acceptance(8, "Bessel split and remainder envelope", ok,
                      f"max |J err| {err:.1e}; constants " + ", ".join(f"{c:.3g}" for c in consts)
                      + f"; doubling drift {drift:.1e}")


def test_criterion_09_oscillatory(acceptance):
    lams = np.concatenate([-np.geomspace(2, 1e-3, 10), np.geomspace(1e-3, 2, 10)])
    low = max(oscillatory_bound_ratio(g, 1.0, l) for g in np.linspace(0.05, 0.95, 20) for l in lams)
    high = max(oscillatory_bound_ratio(g, a, l) for g, a in zip(np.linspace(1.05, 3.0, 20), np.linspace(1, 5, 20))
               for l in lams)
    rng = np.random.default_rng(9)
    err = 0.0
    for _ in range(50):
        g = rng.uniform(0.05, 3.0)
        if abs(g - 1) < 0.02:
            g += 0.05
        a, lam = rng.uniform(1, 5), rng.uniform(-2, 2)
        re = integrate.quad(lambda r: r ** -g, a, np.inf, weight="cos", wvar=abs(lam), limlst=500)[0]
        im = integrate.quad(lambda r: r ** -g, a, np.inf, weight="sin", wvar=abs(lam), limlst=500)[0]
        err = max(err, abs(oscillatory_integral(g, a, lam) - complex(re, im * math.copysign(1.0, lam))))
    ok = math.isfinite(low) and math.isfinite(high) and err < 1e-6
    assert acceptance(9, "oscillatory integral bounds and oracle", ok,
                      f"sup ratio gamma<1 {low:.3g}, gamma>1 {high:.3g}; max err {err:.1e}")


def test_criterion_10_operator_probes(acceptance):
    T = norm_probe("T", 2.0, 2.0, WeightedOpParams(a=0.75, b=0.25), trials=10)
    S = norm_probe("S", 2.0, 4.0, WeightedOpParams(a=0.0, b=0.5), trials=10)
    R = norm_probe("S", 8.0, 2.0, WeightedOpParams(a=0.875, b=0.5, ell=0.5), family="remark")
    ok = T.stability < 0.05 and S.stability < 0.05 and R.stability >= 2.0
    assert acceptance(10, "weighted operator probes", ok,
                      f"T drift {T.stability:.1e}, S drift {S.stability:.1e}, remark growth {R.stability:.2f}x")


def test_criterion_11_riesz(acceptance):
    P = SymmetryParams(4, 2)
    fixtures = [classify(P, Fraction(3, 2), 2).status == BOUNDED_I, classify(P, 2, 2).status == UNBOUNDED,
                classify(P, Fraction(4, 3), 4).status == UNBOUNDED]
    marks = set(landmarks(P).abscissas().values()) == {Fraction(5, 8), Fraction(2, 3), Fraction(3, 4),
                                                        Fraction(7, 10)}
    conflicts = {(d, k): diagram(SymmetryParams(d, k), 256).conflicts for d, k in [(4, 2), (6, 2), (6, 3), (8, 4)]}
    ok = all(fixtures) and marks and not any(conflicts.values())
    assert acceptance(11, "Riesz classifier", ok,
                      f"fixtures {sum(fixtures)}/3, landmarks {'exact' if marks else 'wrong'}, "
                      f"co-firing cells {sum(conflicts.values())}")


def test_criterion_12_lorentz_endpoint(acceptance):
    P = SymmetryParams(4, 2)
    rnd = lorentz_endpoint_probe(P, "random", trials=20)
    kn = lorentz_endpoint_probe(P, "knapp")
    spread = max(kn.quotients) / min(kn.quotients) - 1
    ok = rnd.stability < 0.1 and kn.stability < 0.1 and spread < 0.1 and math.isfinite(rnd.max_quotient)
    assert acceptance(12, "Lorentz endpoint quotient bounded", ok,
                      f"random max {rnd.max_quotient:.3g} drift {rnd.stability:.1e}; knapp "
                      + ", ".join(f"{q:.3f}" for q in kn.quotients) + f" drift {kn.stability:.1e}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
