"""Finite-dimensional harmonic signal generator.

The generator w'(t) = S w(t) with skew-symmetric S drives both the
disturbance d(t) = F w(t) and the reference y_r(t) = Q w(t).  States are
propagated exactly (closed-form rotation for the planar block, unitary
eigen-decomposition otherwise) so the reference carries no integration
drift into tracking-error measurements.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError


@dataclass(frozen=True)
class ExoSystem:
    """Signal generator (S, F, Q) with initial state w0.

    S must be real skew-symmetric: all eigenvalues sit on the imaginary
    axis and the state norm is conserved.
    """

    S: np.ndarray
    F: np.ndarray
    Q: np.ndarray
    w0: np.ndarray

    def __post_init__(self):
        S = np.asarray(self.S, dtype=float)
        if S.ndim != 2 or S.shape[0] != S.shape[1]:
            raise ConfigError(f"S must be square, got shape {S.shape}")
        n = S.shape[0]
        scale = 1.0 + np.max(np.abs(S))
        if np.max(np.abs(S + S.T)) > 1e-12 * scale:
            raise ConfigError("S is not skew-symmetric")
        for name in ("F", "Q", "w0"):
            v = np.asarray(getattr(self, name), dtype=float)
            if v.shape != (n,):
                raise ConfigError(f"{name} must have shape ({n},), got {v.shape}")
            object.__setattr__(self, name, v)
        object.__setattr__(self, "S", S)

    @property
    def n(self) -> int:
        return self.S.shape[0]

    @classmethod
    def harmonic(cls, alpha: float, upsilon: float) -> "ExoSystem":
        """Planar generator producing d(t) = upsilon*cos(alpha t) and
        y_r(t) = upsilon*sin(alpha t)."""
        S = np.array([[0.0, alpha], [-alpha, 0.0]])
        return cls(S, F=np.array([0.0, 1.0]), Q=np.array([1.0, 0.0]),
                   w0=np.array([0.0, float(upsilon)]))


def _is_planar_block(S: np.ndarray) -> bool:
    return S.shape == (2, 2) and S[0, 0] == 0.0 and S[1, 1] == 0.0


def flow(S: np.ndarray, v0: np.ndarray, times: np.ndarray) -> np.ndarray:
    """exp(S t) v0 for each t in times, shape (len(times), n)."""
    S = np.asarray(S, dtype=float)
    v0 = np.asarray(v0, dtype=float)
    t = np.atleast_1d(np.asarray(times, dtype=float))
    if _is_planar_block(S):
        a = S[0, 1]
        c, s = np.cos(a * t), np.sin(a * t)
        return np.stack([v0[0] * c + v0[1] * s, -v0[0] * s + v0[1] * c], axis=1)
    # iS is Hermitian; S-eigenvalues are -i*mu for the real eigenvalues mu of iS
    mu, V = np.linalg.eigh(1j * S)
    coeff = V.conj().T @ v0.astype(complex)
    phases = np.exp(-1j * np.outer(t, mu))
    return np.real((phases * coeff) @ V.T)


def exo_state(exo: ExoSystem, t: float) -> np.ndarray:
    """Generator state w(t) = exp(S t) w0, propagated exactly."""
    return flow(exo.S, exo.w0, np.array([t]))[0]


def exo_outputs(exo: ExoSystem, w: np.ndarray) -> tuple[float, float]:
    """Disturbance and reference read-outs (d, y_r) = (F w, Q w)."""
    w = np.asarray(w)
    if w.shape != (exo.n,):
        raise ConfigError(f"state must have shape ({exo.n},), got {w.shape}")
    return float(exo.F @ w), float(exo.Q @ w)


def eigen_pairs(exo: ExoSystem) -> list[tuple[complex, np.ndarray]]:
    """Orthonormal eigen-decomposition S psi_k = i w_k psi_k.

    Pairs are ordered by |w_k| ascending with the +|w_k| member of each
    conjugate pair first.  Each eigenvector's phase is normalized so its
    last significant component is real and positive.  Skew-symmetric S is
    normal, hence never defective.
    """
    mu, V = np.linalg.eigh(1j * exo.S)
    pairs = []
    for k in range(exo.n):
        omega = -mu[k]
        psi = V[:, k].copy()
        mags = np.abs(psi)
        j = int(np.flatnonzero(mags > 1e-12 * mags.max())[-1])
        psi *= np.exp(-1j * np.angle(psi[j]))
        pairs.append((1j * omega, psi))
    pairs.sort(key=lambda p: (abs(p[0].imag), -p[0].imag))
    return pairs
