"""Regulator synthesis from the constrained operator equations.

The feedforward gain row gamma and the profile family Pi solve

    Pi S - A Pi = B gamma + P,      Pi(z1) = Q        (output constraint)

while the auxiliary family Pi0 solves

    Pi0 S - (A + k1 B C_m) Pi0 = -P

with P = b_d(z) F.  Written per generator coordinate these are coupled
linear initial value problems in z (all columns start at 0 so the
profiles stay in the operator domain), integrated with the same 4th-order
one-step scheme the transfer values use.  gamma itself is obtained from
one scalar complex solve per generator eigenvector, which requires every
generator frequency to stay clear of the plant's transmission zeros.

The output-injection column ly must render S + ly * (C_m Pi0) Hurwitz;
the innovation gain profile then follows from the exact identity
k2(z) b(z) = (Pi(z) + Pi0(z)) ly.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Profile, eig2, eval_at, midpoint_values
from .errors import HurwitzError, InvariantZeroError, SynthesisError
from .exosystem import ExoSystem, eigen_pairs
from .plant import PlantConfig
from .transfer import transfer_value

ZERO_TOL_SCALE = 1e-6
CONSTRAINT_TOL = 1e-3
SEPARATION_TOL = 1e-10


@dataclass(frozen=True)
class RegulatorParams:
    """Everything the output-feedback law needs.

    gamma: feedforward row; pi/pi0: profile columns indexed like the
    generator state; ly: output-injection column; k_profile: full
    innovation gain k(z) = k1 + k2(z); cm_pi/cm_pi0: the profile rows
    sampled at the measurement location z0.  S is carried along so the
    regulator can run without the generator object.
    """

    S: np.ndarray
    gamma: np.ndarray
    pi: tuple[Profile, ...]
    pi0: tuple[Profile, ...]
    ly: np.ndarray
    k1: float
    k_profile: Profile
    cm_pi: np.ndarray
    cm_pi0: np.ndarray

    @property
    def n(self) -> int:
        return self.S.shape[0]


def _zero_tol(exo: ExoSystem) -> float:
    return ZERO_TOL_SCALE * (1.0 + float(np.linalg.norm(exo.Q)))


def solve_gamma(cfg: PlantConfig, exo: ExoSystem) -> np.ndarray:
    """Feedforward gain row, one scalar solve per generator eigenvector.

    For each eigenpair (i w_k, psi_k):

        G(i w_k) (gamma psi_k) + [(i w_k I - A)^{-1} P psi_k](z1) = Q psi_k

    and the real row is reassembled from the conjugate pairs.
    """
    tol = _zero_tol(exo)
    row = np.zeros(exo.n, dtype=complex)
    for ev, psi in eigen_pairs(exo):
        G = transfer_value(cfg, ev, cfg.b, cfg.z1).value
        if abs(G) < tol:
            raise InvariantZeroError(
                f"generator frequency {ev.imag:g} hits a transmission zero "
                f"(|G| = {abs(G):.2e} < {tol:.2e}); the regulator equations are unsolvable"
            )
        p_term = (exo.F @ psi) * transfer_value(cfg, ev, cfg.b_d, cfg.z1).value
        c = (exo.Q @ psi - p_term) / G
        row += c * psi.conj()
    residue = np.max(np.abs(row.imag))
    if residue > 1e-10 * (1.0 + np.max(np.abs(row.real))):
        raise SynthesisError(f"gamma reassembly left imaginary residue {residue:.2e}")
    return row.real


def _solve_columns(cfg: PlantConfig, S: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Integrate V'(z) = g(z) V - S^T V + rhs(z), V(0) = 0.

    rhs has one column per generator coordinate; returns V sampled on the
    grid, shape (n_points, n).
    """
    dz = cfg.grid.dz
    g = cfg.g.values
    gm = midpoint_values(g)
    rm = np.column_stack([midpoint_values(rhs[:, j]) for j in range(rhs.shape[1])])
    ST = S.T
    n_pts = cfg.grid.n_points
    V = np.zeros((n_pts, rhs.shape[1]))
    for i in range(n_pts - 1):
        vi = V[i]
        k1 = g[i] * vi - ST @ vi + rhs[i]
        y = vi + 0.5 * dz * k1
        k2 = gm[i] * y - ST @ y + rm[i]
        y = vi + 0.5 * dz * k2
        k3 = gm[i] * y - ST @ y + rm[i]
        y = vi + dz * k3
        k4 = g[i + 1] * y - ST @ y + rhs[i + 1]
        V[i + 1] = vi + dz / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return V


def solve_pi(cfg: PlantConfig, exo: ExoSystem, gamma: np.ndarray) -> tuple[Profile, ...]:
    """Profile columns of Pi; asserts the output constraint Pi(z1) = Q."""
    rhs = np.outer(cfg.b.values, gamma) + np.outer(cfg.b_d.values, exo.F)
    V = _solve_columns(cfg, exo.S, rhs)
    cols = tuple(Profile(cfg.grid, V[:, j].copy()) for j in range(exo.n))
    for j, col in enumerate(cols):
        res = abs(eval_at(col, cfg.z1) - exo.Q[j])
        if res > CONSTRAINT_TOL:
            raise SynthesisError(
                f"output constraint violated in column {j + 1}: |Pi(z1) - Q| = {res:.2e}"
            )
    return cols


def solve_pi0(cfg: PlantConfig, exo: ExoSystem, k1: float = 0.0) -> tuple[Profile, ...]:
    """Auxiliary profile columns of Pi0.

    For k1 = 0 this is a plain initial value problem.  A nonzero k1 adds
    the nonlocal term k1 b(z) Pi0(z0), handled by superposition: one
    particular solve, one homogeneous solve per unknown boundary sample,
    then a small dense solve pins Pi0(z0) to itself.
    """
    n = exo.n
    rhs_p = -np.outer(cfg.b_d.values, exo.F)
    Vp = _solve_columns(cfg, exo.S, rhs_p)
    if k1 == 0.0:
        return tuple(Profile(cfg.grid, Vp[:, j].copy()) for j in range(n))

    homs = []
    for m in range(n):
        rhs_h = np.zeros((cfg.grid.n_points, n))
        rhs_h[:, m] = k1 * cfg.b.values
        homs.append(_solve_columns(cfg, exo.S, rhs_h))
    sample = lambda V: np.array([eval_at(Profile(cfg.grid, V[:, j]), cfg.z0) for j in range(n)])
    H = np.column_stack([sample(Vh) for Vh in homs])
    try:
        c = np.linalg.solve(np.eye(n) - H, sample(Vp))
    except np.linalg.LinAlgError as exc:
        raise SynthesisError(f"superposition system is singular for k1={k1}") from exc
    V = Vp + sum(c[m] * homs[m] for m in range(n))
    return tuple(Profile(cfg.grid, V[:, j].copy()) for j in range(n))


def _is_hurwitz(S: np.ndarray, ly: np.ndarray, cm_pi0: np.ndarray) -> bool:
    M = S + np.outer(ly, cm_pi0)
    if M.shape == (2, 2):
        lam = eig2(M)
    else:
        lam = np.linalg.eigvals(M)
    return all(l.real < 0.0 for l in lam)


def choose_ly(S: np.ndarray, cm_pi0: np.ndarray, candidate: np.ndarray | None = None) -> np.ndarray:
    """Output-injection column making S + ly * cm_pi0 Hurwitz.

    A supplied candidate is validated rather than searched.  The default
    search scans a logarithmic magnitude grid over a fan of directions and
    keeps the first stabilizing column (trace < 0 and det > 0 in the
    planar case).
    """
    S = np.asarray(S, dtype=float)
    cm_pi0 = np.asarray(cm_pi0, dtype=float)
    n = S.shape[0]
    if np.max(np.abs(cm_pi0)) < 1e-14:
        raise SynthesisError("cm_pi0 is zero: output injection cannot stabilize the generator")
    if candidate is not None:
        ly = np.asarray(candidate, dtype=float)
        if not _is_hurwitz(S, ly, cm_pi0):
            raise HurwitzError(f"candidate ly={ly.tolist()} fails the Hurwitz test")
        return ly

    if n == 2:
        directions = [np.array([np.cos(th), np.sin(th)])
                      for th in np.linspace(0.0, 2.0 * np.pi, 16, endpoint=False)]
    else:
        directions = [e for i in range(n) for e in (np.eye(n)[i], -np.eye(n)[i])]
        directions.append(-cm_pi0 / np.linalg.norm(cm_pi0))
    for mag in np.logspace(-2, 2, 25):
        for d in directions:
            ly = mag * d
            if n == 2:
                M = S + np.outer(ly, cm_pi0)
                if not (M[0, 0] + M[1, 1] < 0.0 and np.linalg.det(M) > 0.0):
                    continue
            if _is_hurwitz(S, ly, cm_pi0):
                return ly
    raise HurwitzError("no stabilizing output-injection column found")


def assemble_params(cfg: PlantConfig, exo: ExoSystem, gamma: np.ndarray,
                    pi: tuple[Profile, ...], pi0: tuple[Profile, ...],
                    ly: np.ndarray, k1: float = 0.0) -> RegulatorParams:
    """Combine the solved pieces and certify the structural identities."""
    b = cfg.b.values
    if np.min(b) <= 0.0:
        raise ZeroDivisionError("b vanishes on the grid; the gain profile is undefined")
    combined = sum(ly[j] * (pi[j].values + pi0[j].values) for j in range(exo.n))
    k2 = combined / b
    params = RegulatorParams(
        S=exo.S,
        gamma=np.asarray(gamma, dtype=float),
        pi=tuple(pi),
        pi0=tuple(pi0),
        ly=np.asarray(ly, dtype=float),
        k1=float(k1),
        k_profile=Profile(cfg.grid, k1 + k2),
        cm_pi=np.array([eval_at(p, cfg.z0) for p in pi]),
        cm_pi0=np.array([eval_at(p, cfg.z0) for p in pi0]),
    )
    for j, col in enumerate(pi):
        if abs(eval_at(col, cfg.z1) - exo.Q[j]) > CONSTRAINT_TOL:
            raise SynthesisError(f"output constraint violated in column {j + 1}")
    sep = np.max(np.abs(k2 * b - combined))
    if sep > SEPARATION_TOL:
        raise SynthesisError(f"separation identity residual {sep:.2e}")
    if not _is_hurwitz(exo.S, params.ly, params.cm_pi0):
        raise HurwitzError("assembled parameters fail the Hurwitz certificate")
    return params


def sylvester_residuals(cfg: PlantConfig, exo: ExoSystem, gamma: np.ndarray,
                        pi: tuple[Profile, ...], pi0: tuple[Profile, ...],
                        k1: float = 0.0) -> tuple[float, float]:
    """Max-norm finite-difference residuals of the two defining ODE systems.

    Differentiates the solved profiles numerically and substitutes them
    back, so the check is independent of the integrator that produced them.
    """
    dz = cfg.grid.dz
    g = cfg.g.values[:, None]
    V = np.column_stack([p.values for p in pi])
    V0 = np.column_stack([p.values for p in pi0])
    dV = np.gradient(V, dz, axis=0, edge_order=2)
    dV0 = np.gradient(V0, dz, axis=0, edge_order=2)
    rhs = np.outer(cfg.b.values, gamma) + np.outer(cfg.b_d.values, exo.F)
    res_pi = dV - g * V + V @ exo.S - rhs
    samples0 = np.array([eval_at(p, cfg.z0) for p in pi0])
    res_pi0 = dV0 - g * V0 - k1 * np.outer(cfg.b.values, samples0) \
        + V0 @ exo.S + np.outer(cfg.b_d.values, exo.F)
    return float(np.max(np.abs(res_pi))), float(np.max(np.abs(res_pi0)))


def separation_residual(cfg: PlantConfig, params: RegulatorParams) -> float:
    """Max-norm residual of k2(z) b(z) = (Pi(z) + Pi0(z)) ly on the grid."""
    combined = sum(params.ly[j] * (params.pi[j].values + params.pi0[j].values)
                   for j in range(params.n))
    k2 = params.k_profile.values - params.k1
    return float(np.max(np.abs(k2 * cfg.b.values - combined)))


def synthesize(cfg: PlantConfig, exo: ExoSystem, k1: float = 0.0,
               ly_candidate: np.ndarray | None = None) -> RegulatorParams:
    """Full synthesis chain: gamma, Pi, Pi0, ly, then assembly.

    A generator with zero read-outs (Q = 0 and F = 0) poses no regulation
    problem at all; that case short-circuits to all-zero parameters since
    there is nothing for the output injection to observe.
    """
    if not np.any(exo.Q) and not np.any(exo.F):
        zeros = tuple(Profile.zeros(cfg.grid) for _ in range(exo.n))
        return RegulatorParams(
            S=exo.S, gamma=np.zeros(exo.n), pi=zeros, pi0=zeros,
            ly=np.zeros(exo.n), k1=float(k1),
            k_profile=Profile.constant(cfg.grid, float(k1)),
            cm_pi=np.zeros(exo.n), cm_pi0=np.zeros(exo.n),
        )
    gamma = solve_gamma(cfg, exo)
    pi = solve_pi(cfg, exo, gamma)
    pi0 = solve_pi0(cfg, exo, k1)
    cm_pi0 = np.array([eval_at(p, cfg.z0) for p in pi0])
    ly = choose_ly(exo.S, cm_pi0, ly_candidate)
    return assemble_params(cfg, exo, gamma, pi, pi0, ly, k1)
