import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from restrictlab.quadrature import QuadratureSpec
from restrictlab.specfun import sigma_hat
from restrictlab.symgeom import CapProfile, RadialGrid, RadialProfile2D, SymmetryParams, TruncationWarning
from restrictlab.transforms import (ExtensionField, decay_ratio, extension_grid, extension_operator, f4_via_R,
                                    radius_query, split_transform, symmetric_fourier, symmetric_fourier_grid)

from _helpers import gaussian_profile, random_compact_profile

PAIRS = [(4, 2), (5, 2), (6, 3), (7, 3)]


@pytest.mark.parametrize("d,k", PAIRS)
def test_extension_of_one_is_sigma_hat(d, k):
    F = CapProfile.constant(SymmetryParams(d, k), 80)
    g = np.linspace(0, 30, 50)
    field = extension_grid(F, g, g)
    ref = sigma_hat(d, np.hypot(g[:, None], g[None, :]))
    assert np.max(np.abs(field.values - ref) / np.abs(ref)) < 1e-9


def test_extension_point_examples():
    P = SymmetryParams(4, 2)
    F = CapProfile.constant(P, 64)
    assert extension_operator(F, 0, 0) == pytest.approx(2 * math.pi ** 2, rel=1e-14)
    assert extension_operator(F, 3.0, 4.0) == pytest.approx(sigma_hat(4, 5.0), abs=1e-13)
    assert extension_operator(F.with_values(np.zeros(64)), 1.0, 2.0) == 0
    with pytest.raises(ValueError):
        extension_operator(F, 1.0, 1.0, params=SymmetryParams(5, 2))


@given(st.floats(0.0, 40.0), st.floats(0.0, 40.0), st.floats(-3, 3), st.floats(-3, 3))
@settings(max_examples=30)
def test_extension_linearity(y, z, a, b):
    P = SymmetryParams(5, 2)
    F = CapProfile.from_function(lambda r: np.exp(r * r), P, 48)
    G = CapProfile.from_function(lambda r: np.cos(3 * r * r), P, 48)
    H = F.with_values(a * F.values + b * G.values)
    lhs = extension_operator(H, y, z)
    rhs = a * extension_operator(F, y, z) + b * extension_operator(G, y, z)
    assert abs(lhs - rhs) < 1e-11 * (1 + abs(a) + abs(b)) * 40


def test_extension_swap_symmetry():
    # k <-> d-k with coordinates exchanged
    F = CapProfile.from_function(lambda r: 1 + r * r, SymmetryParams(5, 2), 48)
    G = CapProfile.from_function(lambda s: 2 - s * s, SymmetryParams(5, 3), 48)  # same function, r = sqrt(1-s^2)
    for y, z in [(0.5, 2.0), (3.0, 1.0), (7.0, 9.0)]:
        assert extension_operator(F, y, z) == pytest.approx(extension_operator(G, z, y), abs=1e-12)


@pytest.mark.parametrize("d,k", PAIRS)
def test_gaussian_oracle(d, k, rng):
    P = SymmetryParams(d, k)
    f = gaussian_profile()
    eta, zeta = rng.uniform(0, 3, 100), rng.uniform(0, 3, 100)
    got = symmetric_fourier(f, eta, zeta, P)
    ref = (2 * math.pi) ** (d / 2) * np.exp(-0.5 * (eta ** 2 + zeta ** 2))
    assert np.max(np.abs(got - ref) / ref) < 1e-9


def test_fourier_grid_matches_pointwise():
    P = SymmetryParams(4, 2)
    f = gaussian_profile()
    e, z = np.array([0.0, 0.7, 2.0]), np.array([0.1, 1.5])
    grid = symmetric_fourier_grid(f, e, z, P)
    pts = symmetric_fourier(f, np.repeat(e, 2), np.tile(z, 3), P).reshape(3, 2)
    assert np.allclose(grid, pts, atol=1e-13)
    assert symmetric_fourier(f.scaled(0.0), 1.0, 1.0, P) == 0


def test_fourier_samples_only_profile():
    # interpolation from the stored samples, no callable
    P = SymmetryParams(4, 2)
    f = gaussian_profile()
    g = RadialProfile2D(f.grid1, f.grid2, f.values)
    assert symmetric_fourier(g, 1.0, 0.5, P) == pytest.approx(
        (2 * math.pi) ** 2 * math.exp(-0.625), rel=1e-10)


def test_fourier_truncation_warning():
    g = RadialGrid.default(3.0, 64)
    f = RadialProfile2D.from_function(lambda a, b: np.exp(-(a + b)), g)
    with pytest.warns(TruncationWarning):
        symmetric_fourier(f, 1.0, 1.0, SymmetryParams(4, 2))


def test_split_reconstructs_direct_transform(rng):
    P = SymmetryParams(4, 2)
    for _ in range(5):
        f = random_compact_profile(rng)
        for eta, zeta in [(0.6, 0.8), (1.5, 2.5), (3.0, 4.0), (0.0, 1.0)]:
            st_ = split_transform(f, eta, zeta, P)
            direct = symmetric_fourier(f, eta, zeta, P)
            assert abs(st_.reconstruct() - direct) < 1e-6 * max(1.0, abs(direct))
            assert abs(st_.reconstruct_real() - direct) < 1e-6 * max(1.0, abs(direct))


def test_split_complex_profile_needs_mirror_pieces(rng):
    P = SymmetryParams(5, 2)
    f = random_compact_profile(rng, complex_valued=True)
    st_ = split_transform(f, 1.3, 0.7, P)
    direct = symmetric_fourier(f, 1.3, 0.7, P)
    assert abs(st_.reconstruct() - direct) < 1e-6 * max(1.0, abs(direct))


def test_split_rejects_degenerate():
    with pytest.raises(ValueError):
        split_transform(gaussian_profile(), 1.0, 1.0, SymmetryParams(4, 1))


@pytest.mark.parametrize("piece", [4, 5])
def test_f4_via_R_on_sphere(piece, rng):
    P = SymmetryParams(4, 2)
    f = random_compact_profile(rng)
    st_ = split_transform(f, 0.6, 0.8, P)
    got = f4_via_R(f, 0.6, 0.8, P, 1.5, piece=piece)
    assert abs(got - st_.pieces[piece - 1]) < 1e-5 * max(1.0, abs(st_.pieces[piece - 1]))


def test_f4_via_R_off_sphere_with_support_beyond_one(rng):
    # at (3, 4) the lower limits 1/|eta|, 1/|zeta| are below 1; agreement needs f0 = 0 off [1, inf)^2
    P = SymmetryParams(4, 2)
    f = random_compact_profile(rng, radius=7.0, lo=1.0)
    st_ = split_transform(f, 3.0, 4.0, P)
    assert abs(f4_via_R(f, 3.0, 4.0, P, 1.5) - st_.pieces[3]) < 1e-5 * max(1.0, abs(st_.pieces[3]))


def test_f4_via_R_trivial_cases():
    P = SymmetryParams(4, 2)
    g = RadialGrid.uniform(4.0, 0.5)
    zero = RadialProfile2D.from_function(lambda a, b: 0.0 * a * b, g)
    assert f4_via_R(zero, 3.0, 4.0, P, 1.5) == 0
    inner = RadialProfile2D.from_function(lambda a, b: np.where((a < 0.9) & (b < 0.9), 1.0, 0.0), g)
    assert f4_via_R(inner, 3.0, 4.0, P, 1.5) == 0
    with pytest.raises(ValueError):
        f4_via_R(zero, 1.0, 1.0, P, 1.5, piece=3)


def test_decay_ratio_bounded():
    P = SymmetryParams(6, 3)
    F = CapProfile.from_function(lambda r: np.exp(r * r), P, 64)
    ratios = [decay_ratio(F, np.linspace(0, R, 60), np.linspace(0, R, 60)) for R in (50, 100, 200)]
    # (1+|y|)^((d-k-1)/2)(1+|z|)^((k-1)/2) |F^sigma| stays bounded as the window grows
    assert max(ratios) < 1.5 * ratios[0]


def test_radius_query_and_csv(tmp_path):
    F = CapProfile.constant(SymmetryParams(4, 2), 64)
    g = np.linspace(0, 40, 81)
    field = extension_grid(F, g, g)
    r = radius_query(field, 1.0)
    rad = np.hypot(g[:, None], g[None, :])
    assert np.all(np.abs(field.values[rad > r]) < 1.0)
    assert radius_query(field, 1e6) == 0.0
    path = tmp_path / "field.csv"
    field.to_csv(path, {"d": 4, "k": 2})
    data = np.loadtxt(path, delimiter=",", skiprows=1)
    assert data.shape == (81 * 81, 4)
    with pytest.raises(ValueError):
        ExtensionField(np.array([1.0, 0.5]), g, np.zeros((2, g.size)), "space")
