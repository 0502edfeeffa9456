import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate

from restrictlab.weightedops import (CircleRule, DivergentIntegralError, PlaneRule, SMesh, WeightedOpParams,
                                     adjoint_l2_norm, hausdorff_young_ratio, norm_probe, op_R, op_R_adjoint,
                                     op_R_adjoint_grid, op_S, op_S_adjoint, op_T, oscillatory_bound_ratio,
                                     oscillatory_integral, remark_family)


# ---- T

def test_T_examples():
    assert op_T(lambda y: np.ones_like(y), 4.0, 0.5, 0.5) == pytest.approx(2.0, rel=1e-13)
    assert op_T(lambda y: 0 * y, 3.0, 0.2, 0.3) == 0
    assert op_T(lambda y: y, 1.0, 0.0, 0.0) == pytest.approx(0.5, rel=1e-14)


@given(st.floats(0.05, 20.0), st.floats(-1.0, 2.0), st.floats(-0.9, 0.9))
@settings(max_examples=30)
def test_T_power_closed_form(x, a, b):
    # f(y) = y^2: x^-a int_0^x y^(2-b) dy = x^(3-a-b)/(3-b)
    got = op_T(lambda y: y * y, x, a, b)
    assert got == pytest.approx(x ** (3 - a - b) / (3 - b), rel=1e-12)


@given(st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False))
@settings(max_examples=25)
def test_T_homogeneity(c):
    f = lambda y: np.exp(-y) * np.cos(y)
    x = np.array([0.3, 1.0, 5.0])
    assert np.allclose(op_T(lambda y: c * f(y), x, 0.4, 0.3), c * op_T(f, x, 0.4, 0.3), rtol=1e-13, atol=1e-300)


def test_T_errors():
    with pytest.raises(DivergentIntegralError):
        op_T(lambda y: np.ones_like(y), 1.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        op_T(lambda y: y, 0.0, 0.0, 0.0)
    # b >= 1 is fine when f vanishes fast enough at 0
    assert op_T(lambda y: y * y, 1.0, 0.0, 1.5) == pytest.approx(2.0 / 3.0, rel=1e-10)


# ---- S and S*

def test_S_examples():
    assert op_S(lambda y: np.ones_like(y), 1.0, 0.0, 0.5) == pytest.approx(2.0, rel=1e-13)
    assert op_S(lambda y: 0 * y, 0.5, 0.0, 0.5) == 0


@given(st.floats(0.01, 1.0), st.floats(0.0, 1.0), st.floats(0.05, 0.95))
@settings(max_examples=30)
def test_S_against_quad(x, a, b):
    f = lambda y: np.cos(3 * y) + y
    ref = integrate.quad(lambda y: np.cos(3 * y) + y, 0, x, weight="alg", wvar=(0, -b), epsabs=0, epsrel=1e-12)[0]
    assert op_S(f, x, a, b) == pytest.approx(x ** (-a) * ref, rel=1e-9)


def test_S_adjoint_against_quad():
    g = lambda t: np.exp(-t) * (1 + t)
    assert op_S_adjoint(g, 0.0, 0.0, 0.5, 1.0) == pytest.approx(
        integrate.quad(lambda t: np.exp(-t) * (1 + t), 0.0, 1.0, weight="alg", wvar=(-0.5, 0))[0], rel=1e-10)
    for y in (0.1, 0.7):
        ref = integrate.quad(lambda t: t ** -0.3 * np.exp(-t) * (1 + t), y, 1.0,
                             weight="alg", wvar=(-0.5, 0), epsrel=1e-12)[0]
        assert op_S_adjoint(g, y, 0.3, 0.5, 1.0) == pytest.approx(ref, rel=1e-8)
    assert op_S_adjoint(g, 1.0, 0.3, 0.5, 1.0) == 0


def test_S_continuous_duality():
    # int_0^l (S f) g = int_0^l f (S* g) on smooth data
    a, b, ell = 0.2, 0.4, 1.0
    f = lambda y: 1 + np.sin(2 * y)
    g = lambda t: np.cos(t) + t * t
    x, w = np.polynomial.legendre.leggauss(60)
    x, w = 0.5 * ell * (x + 1), 0.5 * ell * w
    lhs = np.sum(w * op_S(f, x, a, b) * g(x))
    rhs = np.sum(w * f(x) * op_S_adjoint(g, x, a, b, ell))
    assert abs(lhs - rhs) < 1e-6 * abs(lhs)


@pytest.mark.parametrize("b", [0.1, 0.5, 0.9])
def test_SMesh_discrete_duality(b, rng):
    mesh = SMesh(2.0, 128, 0.3, b)
    K, Ks = mesh.matrix(), mesh.adjoint_matrix()
    for _ in range(5):
        f = rng.normal(size=128) + 1j * rng.normal(size=128)
        g = rng.normal(size=128) + 1j * rng.normal(size=128)
        lhs, rhs = mesh.inner(K @ f, g), mesh.inner(f, Ks @ g)
        assert abs(lhs - rhs) < 1e-8 * max(1.0, abs(lhs))


def test_SMesh_constant_input():
    mesh = SMesh(1.0, 256, 0.0, 0.5)
    sf = mesh.matrix() @ np.ones(256)
    assert np.allclose(sf, 2 * np.sqrt(mesh.nodes), rtol=1e-12)


def test_S_rejects_b():
    for b in (0.0, 1.0, -0.2):
        with pytest.raises(ValueError):
            op_S(lambda y: y, 0.5, 0.0, b)
        with pytest.raises(ValueError):
            SMesh(1.0, 8, 0.0, b)


# ---- oscillatory

def _quad_oracle(gamma, a, lam):
    re = integrate.quad(lambda r: r ** -gamma, a, np.inf, weight="cos", wvar=lam, limlst=200)[0]
    im = integrate.quad(lambda r: r ** -gamma, a, np.inf, weight="sin", wvar=lam, limlst=200)[0]
    return re + 1j * im


@pytest.mark.parametrize("gamma,a,lam", [(0.5, 1.0, 2.0), (2.0, 1.0, 0.3), (1.5, 3.0, 1.1), (0.3, 2.0, 0.7)])
def test_oscillatory_vs_qawf(gamma, a, lam):
    assert abs(oscillatory_integral(gamma, a, lam) - _quad_oracle(gamma, a, lam)) < 1e-6


def test_oscillatory_small_lambda_limit():
    # the limit integral is real; the imaginary part is about lam*log(1/lam) ~ 0.05 here
    v = oscillatory_integral(2.0, 1.0, 0.01)
    assert abs(v.real - 1.0) < 0.05
    assert abs(v - 1.0) < 0.01 * (math.log(100.0) + 2.0)


def _closed_form(gamma, a, lam):
    # int_a^inf r^-g e^{i lam r} dr = (-i lam)^(g-1) Gamma(1-g, -i lam a)
    import mpmath as mp
    with mp.workdps(30):
        return complex((-1j * lam) ** (gamma - 1) * mp.gammainc(1 - gamma, -1j * lam * a))


@pytest.mark.parametrize("gamma,a,lam", [(0.5, 1.0, 1e-3), (2.0, 1.0, 0.01), (3.0, 2.0, 2.0), (0.9, 1.0, 0.05)])
def test_oscillatory_vs_closed_form(gamma, a, lam):
    ref = _closed_form(gamma, a, lam)
    assert abs(oscillatory_integral(gamma, a, lam) - ref) < 1e-10 * max(1.0, abs(ref))


@given(st.floats(0.1, 3.0).filter(lambda g: abs(g - 1) > 1e-3), st.floats(1.0, 5.0), st.floats(0.05, 2.0))
@settings(max_examples=30)
def test_oscillatory_conjugate_symmetry(gamma, a, lam):
    assert oscillatory_integral(gamma, a, -lam) == pytest.approx(np.conj(oscillatory_integral(gamma, a, lam)),
                                                                   abs=1e-13)


def test_oscillatory_errors():
    for args in [(1.0, 1.0, 1.0), (0.0, 1.0, 1.0), (0.5, 0.5, 1.0), (0.5, 1.0, 0.0)]:
        with pytest.raises(ValueError):
            oscillatory_integral(*args)


def test_oscillatory_bound_ratio():
    assert oscillatory_bound_ratio(0.5, 1.0, 1e-3) == pytest.approx(abs(_closed_form(0.5, 1.0, 1e-3)) * 1e-3 ** 0.5,
                                                                    rel=1e-10)
    assert oscillatory_bound_ratio(3.0, 2.0, 2.0) == pytest.approx(abs(_closed_form(3.0, 2.0, 2.0)) * 4.0, rel=1e-10)
    # gamma < 1, lam -> 0: ratio tends to |Gamma(1-gamma)|
    assert oscillatory_bound_ratio(0.5, 1.0, 1e-8) == pytest.approx(math.sqrt(math.pi), rel=1e-3)


# ---- R and R*

def test_R_adjoint_trivial_cases():
    pts = np.array([[0.5, 10.0], [-0.99, 3.0], [0.0, 0.0]])
    assert np.all(op_R_adjoint(lambda om: np.ones(len(om)), pts, 0.3, 0.3) == 0)
    assert np.all(op_R_adjoint(lambda om: np.zeros(len(om)), [[5.0, 7.0]], 0.3, 0.3) == 0)


def test_R_adjoint_pointwise_against_quad():
    # F = cos(theta)^2; direct angular integration with the indicator breakpoints
    x1, x2, al, be = 3.0, 2.0, 0.4, 0.2
    F = lambda om: om[:, 0] ** 2
    circ = CircleRule(1 << 16)
    got = op_R_adjoint(F, [[x1, x2]], al, be, circ)[0]

    def integrand(t, part):
        c, s = abs(math.cos(t)), abs(math.sin(t))
        if c * abs(x1) < 1 or s * abs(x2) < 1:
            return 0.0
        v = math.cos(t) ** 2 * complex(math.cos(x1 * c + x2 * s), math.sin(x1 * c + x2 * s))
        return v.real if part == 0 else v.imag

    brk = [math.acos(1 / x1), math.asin(1 / x2)]
    pts = sorted(b + q * math.pi / 2 for b in brk for q in range(4))
    re = integrate.quad(integrand, 0, 2 * math.pi, args=(0,), points=pts, limit=200)[0]
    im = integrate.quad(integrand, 0, 2 * math.pi, args=(1,), points=pts, limit=200)[0]
    ref = (re + 1j * im) * (1 + x1) ** -al * (1 + x2) ** -be
    # the trapezoid rule sees jumps at the indicator edges: O(1/M)
    assert abs(got - ref) < 1e-3


def test_R_R_adjoint_discrete_duality(rng):
    al, be = 0.3, 0.5
    circ = CircleRule(256)
    plane = PlaneRule.square(20.0, panel=1.0, order=8)
    for _ in range(3):
        F = rng.normal(size=256) + 1j * rng.normal(size=256)
        G = rng.normal(size=(plane.x1.size, plane.x2.size)) + 1j * rng.normal(size=(plane.x1.size, plane.x2.size))
        Rg = op_R(G, circ.points, al, be, plane=plane)
        RsF = op_R_adjoint_grid(F, al, be, plane, circ)
        lhs = np.sum(circ.weights * Rg * np.conj(F))
        rhs = np.sum(plane.w1[:, None] * plane.w2[None, :] * G * np.conj(RsF))
        assert abs(lhs - rhs) < 1e-8 * abs(lhs)


def test_R_adjoint_grid_matches_pointwise():
    circ = CircleRule(512)
    plane = PlaneRule.square(6.0, panel=2.0, order=4)
    F = lambda om: 1 + om[:, 0] * om[:, 1]
    grid = op_R_adjoint_grid(F, 0.2, 0.7, plane, circ)
    X1, X2 = np.meshgrid(plane.x1, plane.x2, indexing="ij")
    pts = op_R_adjoint(F, np.stack([X1.ravel(), X2.ravel()], 1), 0.2, 0.7, circ).reshape(grid.shape)
    assert np.allclose(grid, pts, atol=1e-12)


def test_adjoint_l2_norm_matches_grid_norm():
    circ = CircleRule(512)
    F = lambda om: np.cos(om[:, 0] * 2)
    radius = 10 * math.pi  # whole number of panels, so both rules share nodes
    plane = PlaneRule.square(radius)
    g = op_R_adjoint_grid(F, 0.4, 0.4, plane, circ)
    direct = math.sqrt(np.sum(plane.w1[:, None] * plane.w2[None, :] * np.abs(g) ** 2))
    assert adjoint_l2_norm(F, 0.4, 0.4, radius, circ) == pytest.approx(direct, rel=1e-10)


def test_R_adjoint_l2_finite_and_doubling_stable():
    """alpha = beta = 1/3, F = 1: finite at radius 1e3 and within 2% when the radius doubles."""
    one = lambda om: np.ones(len(om))
    n1 = adjoint_l2_norm(one, 1 / 3, 1 / 3, 1000.0)
    n2 = adjoint_l2_norm(one, 1 / 3, 1 / 3, 2000.0)
    assert math.isfinite(n1)
    assert n2 / n1 - 1 < 0.02, f"growth {n2 / n1 - 1:.4f}"


# ---- probes

def test_T_probe_in_range_stable():
    rep = norm_probe("T", 2.0, 2.0, WeightedOpParams(a=0.75, b=0.25), trials=10)
    assert all(rep.hypotheses.values())
    assert rep.stability < 0.05
    assert set(rep.to_dict()) >= {"operator", "params", "exponents", "trials", "max_ratio", "stability"}


def test_S_probe_in_range_stable():
    rep = norm_probe("S", 2.0, 4.0, WeightedOpParams(a=0.0, b=0.5), trials=10)
    assert all(rep.hypotheses.values())
    assert rep.stability < 0.05


def test_S_remark_family_grows():
    params = WeightedOpParams(a=0.875, b=0.5, ell=0.5)
    rep = norm_probe("S", 8.0, 2.0, params, family="remark")
    assert not rep.hypotheses["1<p<=q<inf"]
    assert rep.stability >= 2.0
    assert all(x < y for x, y in zip(rep.refined_ratios, rep.refined_ratios[1:]))


def test_remark_family_norm():
    p, eps = 3.0, 2.0
    f = remark_family(p, eps)
    # x = e^-t up to t = 700 (before underflow); the omitted tail is 700^-eps / eps
    val = integrate.quad(lambda t: f(np.exp(-t)) ** p * np.exp(-t), math.log(2), 700.0, limit=400)[0]
    assert val + 700.0 ** -eps / eps == pytest.approx(math.log(2) ** -eps / eps, rel=1e-8)
    assert f(np.array([0.6, 0.0]))[0] == 0


def test_R_and_HY_probes_stable():
    R = norm_probe("R", 1.5, 4.0, WeightedOpParams(alpha=0.3, beta=0.3), trials=3, radius=40.0)
    assert R.max_ratio > 0 and R.stability < 0.05
    hy = norm_probe("HY", 1.5, 4.0, WeightedOpParams(), trials=4)
    assert all(hy.hypotheses.values()) and hy.stability < 0.05


def test_HY_at_plancherel():
    # p = q = 2, delta = 0: ||F f||_2 = sqrt(2 pi) ||f||_2
    f = lambda y: np.exp(-y * y)
    assert hausdorff_young_ratio(f, 2.0, 2.0, freq_max=60.0) == pytest.approx(math.sqrt(2 * math.pi), rel=1e-5)
    # more frequencies only add the small tail of the (truncated) Gaussian's spectrum
    assert hausdorff_young_ratio(f, 2.0, 2.0, freq_max=400.0) == pytest.approx(math.sqrt(2 * math.pi), rel=1e-6)


def test_probe_unknown_operator():
    with pytest.raises(ValueError):
        norm_probe("X", 2.0, 2.0, WeightedOpParams())
    with pytest.raises(ValueError):
        WeightedOpParams(ell=0.0)
