import numpy as np
import pytest
from hypothesis import given, strategies as st

from hexreg.errors import ConfigError
from hexreg.exosystem import ExoSystem, eigen_pairs, exo_outputs, exo_state, flow

PAPER = ExoSystem.harmonic(alpha=2.0, upsilon=5.0)


def test_state_at_zero_is_w0():
    assert np.array_equal(exo_state(PAPER, 0.0), PAPER.w0)


@pytest.mark.parametrize("t", [0.0, 0.37, 1.0, 7.5, 40.0])
def test_harmonic_readouts_match_closed_form(t):
    w = exo_state(PAPER, t)
    d, yr = exo_outputs(PAPER, w)
    assert d == pytest.approx(5.0 * np.cos(2.0 * t), abs=1e-12)
    assert yr == pytest.approx(5.0 * np.sin(2.0 * t), abs=1e-12)


@given(st.floats(min_value=0.0, max_value=100.0, allow_nan=False))
def test_norm_conserved(t):
    w = exo_state(PAPER, t)
    assert abs(np.linalg.norm(w) - np.linalg.norm(PAPER.w0)) < 1e-12


@given(st.floats(min_value=0.0, max_value=20.0),
       st.floats(min_value=0.0, max_value=20.0))
def test_flow_property(t1, t2):
    w1 = exo_state(PAPER, t1)
    w12 = flow(PAPER.S, w1, np.array([t2]))[0]
    assert np.max(np.abs(w12 - exo_state(PAPER, t1 + t2))) < 1e-12


def test_readout_examples():
    assert exo_outputs(PAPER, np.array([0.0, 5.0])) == (5.0, 0.0)
    assert exo_outputs(PAPER, np.zeros(2)) == (0.0, 0.0)
    assert exo_outputs(PAPER, np.array([1.0, 0.0])) == (0.0, 1.0)


def test_eigen_pairs_planar_block():
    pairs = eigen_pairs(PAPER)
    (ev1, psi1), (ev2, psi2) = pairs
    assert ev1 == pytest.approx(2j, abs=1e-12)
    assert ev2 == pytest.approx(-2j, abs=1e-12)
    r = 1.0 / np.sqrt(2.0)
    assert np.max(np.abs(psi1 - np.array([-1j * r, r]))) < 1e-12
    assert np.max(np.abs(psi2 - np.array([1j * r, r]))) < 1e-12
    # matches the four-digit reference rendering
    assert np.max(np.abs(psi1 - np.array([-0.7071j, 0.7071]))) < 1e-4


def test_eigen_pairs_degenerate_scalar():
    exo = ExoSystem(S=np.zeros((1, 1)), F=np.ones(1), Q=np.ones(1), w0=np.ones(1))
    (ev, psi), = eigen_pairs(exo)
    assert ev == 0
    assert np.allclose(psi, [1.0])


def test_eigen_residual_and_orthonormality():
    rng = np.random.default_rng(3)
    a = rng.normal(size=(4, 4))
    exo = ExoSystem(S=a - a.T, F=np.zeros(4), Q=np.zeros(4), w0=rng.normal(size=4))
    pairs = eigen_pairs(exo)
    vecs = np.column_stack([psi for _, psi in pairs])
    assert np.max(np.abs(vecs.conj().T @ vecs - np.eye(4))) < 1e-12
    for ev, psi in pairs:
        assert np.linalg.norm(exo.S @ psi - ev * psi) < 1e-12
    mags = [abs(ev) for ev, _ in pairs]
    assert mags == sorted(mags)


def test_general_flow_matches_blockwise_rotations():
    S = np.zeros((4, 4))
    S[0, 1], S[1, 0] = 2.0, -2.0
    S[2, 3], S[3, 2] = 5.0, -5.0
    w0 = np.array([1.0, 2.0, -0.5, 3.0])
    exo = ExoSystem(S=S, F=np.zeros(4), Q=np.zeros(4), w0=w0)
    for t in (0.0, 0.9, 4.3):
        w = exo_state(exo, t)
        c2, s2 = np.cos(2 * t), np.sin(2 * t)
        c5, s5 = np.cos(5 * t), np.sin(5 * t)
        expected = np.array([w0[0] * c2 + w0[1] * s2, -w0[0] * s2 + w0[1] * c2,
                             w0[2] * c5 + w0[3] * s5, -w0[2] * s5 + w0[3] * c5])
        assert np.max(np.abs(w - expected)) < 1e-9


def test_non_skew_rejected():
    with pytest.raises(ConfigError):
        ExoSystem(S=np.array([[0.0, 1.0], [1.0, 0.0]]), F=np.zeros(2),
                  Q=np.zeros(2), w0=np.zeros(2))


def test_wrong_readout_shape_rejected():
    with pytest.raises(ConfigError):
        ExoSystem(S=np.zeros((2, 2)), F=np.zeros(3), Q=np.zeros(2), w0=np.zeros(2))
