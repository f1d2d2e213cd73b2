import numpy as np
import pytest
from hypothesis import given, strategies as st

from hexreg.core import Profile, SpatialGrid, eig2, eval_at, l2_norm
from hexreg.errors import ConfigError, NumericError

GRID = SpatialGrid(101)
RNG_VALUES = np.random.default_rng(7).normal(size=GRID.n_points)


def test_grid_endpoints_exact():
    g = SpatialGrid(2001)
    assert g.z[0] == 0.0 and g.z[-1] == 1.0
    assert np.all(np.diff(g.z) > 0)
    assert g.dz == pytest.approx(1.0 / 2000)


def test_grid_too_small_rejected():
    with pytest.raises(ConfigError):
        SpatialGrid(1)


def test_profile_wrong_length_rejected():
    with pytest.raises(ConfigError):
        Profile(GRID, np.zeros(7))


def test_profile_nonfinite_rejected():
    vals = np.zeros(GRID.n_points)
    vals[3] = np.nan
    with pytest.raises(NumericError):
        Profile(GRID, vals)


def test_eval_linear_function_interpolates_exactly():
    p = Profile.from_callable(GRID, lambda z: 0.4 * z)
    assert eval_at(p, 0.5) == pytest.approx(0.2, abs=1e-15)
    assert eval_at(p, 0.1234) == pytest.approx(0.4 * 0.1234, abs=1e-15)


def test_eval_actuator_influence_at_inlet():
    p = Profile.from_callable(GRID, lambda z: np.exp(-0.5 * z))
    assert eval_at(p, 0.0) == 1.0


def test_eval_zero_profile():
    p = Profile.zeros(GRID)
    for z in (0.0, 0.3, 1.0):
        assert eval_at(p, z) == 0.0


def test_eval_outside_domain_raises():
    p = Profile.zeros(GRID)
    with pytest.raises(ValueError):
        eval_at(p, -0.01)
    with pytest.raises(ValueError):
        eval_at(p, 1.01)


@given(st.integers(min_value=0, max_value=GRID.n_points - 1))
def test_eval_exact_at_grid_points(k):
    p = Profile(GRID, RNG_VALUES)
    assert eval_at(p, GRID.z[k]) == RNG_VALUES[k]


def test_l2_constant_one():
    assert l2_norm(Profile.constant(GRID, 1.0)) == pytest.approx(1.0, rel=1e-12)


def test_l2_zero():
    assert l2_norm(Profile.zeros(GRID)) == 0.0


def test_l2_identity_profile_near_closed_form():
    g = SpatialGrid(2001)
    p = Profile(g, g.z.copy())
    assert abs(l2_norm(p) - 1.0 / np.sqrt(3.0)) < 1e-6


@given(st.floats(min_value=-1e3, max_value=1e3, allow_nan=False))
def test_l2_absolutely_homogeneous(c):
    p = Profile(GRID, RNG_VALUES)
    assert l2_norm(c * p) == pytest.approx(abs(c) * l2_norm(p), rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("m, expected", [
    ([[0.0, 2.0], [-2.0, 0.0]], {2j, -2j}),
    ([[1.0, 0.0], [0.0, 1.0]], {1.0 + 0j}),
    ([[-1.0, 0.0], [0.0, -3.0]], {-1.0 + 0j, -3.0 + 0j}),
])
def test_eig2_known_spectra(m, expected):
    lams = eig2(m)
    for lam in lams:
        assert min(abs(lam - e) for e in expected) < 1e-12


@given(st.lists(st.floats(min_value=-10, max_value=10, allow_nan=False),
                min_size=4, max_size=4))
def test_eig2_sum_and_product_identities(entries):
    m = np.array(entries).reshape(2, 2)
    l1, l2 = eig2(m)
    tr = m[0, 0] + m[1, 1]
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    assert abs((l1 + l2) - tr) < 1e-12
    assert abs((l1 * l2) - det) < 1e-12


def test_profile_addition_requires_same_grid():
    other = SpatialGrid(51)
    with pytest.raises(ConfigError):
        Profile.zeros(GRID) + Profile.zeros(other)
