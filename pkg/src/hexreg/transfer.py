"""Transfer-function values by a frequency-domain spatial solve.

For this plant the resolvent action (sI - A)^{-1} f is the solution of the
initial value problem

    x'(z) = (g(z) - s) x(z) + f(z),   x(0) = 0

integrated across the grid, so a transfer value G(s) = [(sI - A)^{-1} f](z_out)
costs one sweep over the grid instead of a time-domain impulse simulation.
The one-step integrator is classical 4th order with cubic-interpolated
midpoint coefficients, keeping transfer values accurate enough to feed the
gain computation directly.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Profile, eval_at, midpoint_values
from .errors import NumericError
from .plant import PlantConfig


@dataclass(frozen=True)
class TransferValue:
    """Value of a transfer function at one complex frequency."""

    s: complex
    value: complex
    output_location: float

    def __post_init__(self):
        if not np.isfinite(self.value):
            raise NumericError(f"transfer value at s={self.s} is not finite")


def resolvent_apply(cfg: PlantConfig, s: complex, f: Profile) -> Profile:
    """Solve x' = (g - s) x + f, x(0) = 0, returning the complex profile."""
    dz = cfg.grid.dz
    q = cfg.g.values - s
    fv = f.values.astype(complex, copy=False)
    qm = midpoint_values(q)
    fm = midpoint_values(fv)
    n = cfg.grid.n_points
    x = np.empty(n, dtype=complex)
    x[0] = 0.0
    for i in range(n - 1):
        xi = x[i]
        k1 = q[i] * xi + fv[i]
        k2 = qm[i] * (xi + 0.5 * dz * k1) + fm[i]
        k3 = qm[i] * (xi + 0.5 * dz * k2) + fm[i]
        k4 = q[i + 1] * (xi + dz * k3) + fv[i + 1]
        x[i + 1] = xi + dz / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return Profile(cfg.grid, x)


def transfer_value(cfg: PlantConfig, s: complex, influence: Profile, z_out: float) -> TransferValue:
    """Transfer value [(sI - A)^{-1} influence](z_out).

    With influence = b this is the actuator transfer function; with
    influence = 1 the unit-influence variant used for distributed
    disturbances.
    """
    x = resolvent_apply(cfg, s, influence)
    return TransferValue(s=complex(s), value=complex(eval_at(x, z_out)), output_location=z_out)
