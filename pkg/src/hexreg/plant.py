"""Transport-reaction plant on [0, 1] and its explicit time stepper.

    dx/dt = -dx/dz + g(z) x + forcing(z, t),   x(0, t) = 0

with the controlled output y(t) = x(z1, t) and the measurement
y_m(t) = x(z0, t).  Space is discretized by first-order upwind
differences; time by explicit Euler.  At Courant number 1 the transport
part is reproduced exactly at the nodes, which removes numerical
diffusion for the dominant term.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Profile, SpatialGrid
from .errors import ConfigError

_CFL_SLACK = 1.0 + 1e-9


@dataclass(frozen=True)
class PlantConfig:
    """Plant coefficients, sensor locations and the Courant number.

    b must be strictly positive everywhere: the regulator gain profile
    divides by it.
    """

    grid: SpatialGrid
    g: Profile
    b: Profile
    b_d: Profile
    z1: float
    z0: float
    cfl: float = 1.0

    def __post_init__(self):
        for name in ("g", "b", "b_d"):
            p = getattr(self, name)
            if p.grid != self.grid:
                raise ConfigError(f"{name} is sampled on a different grid")
            if np.iscomplexobj(p.values):
                raise ConfigError(f"{name} must be real-valued")
        if np.min(self.b.values) <= 0.0:
            raise ConfigError("b must be strictly positive on the whole grid")
        for name in ("z1", "z0"):
            v = getattr(self, name)
            if not 0.0 < v <= 1.0:
                raise ConfigError(f"{name}={v} must lie in (0, 1]")
        if not 0.0 < self.cfl <= 1.0:
            raise ConfigError(f"cfl={self.cfl} must lie in (0, 1]")

    @property
    def dt(self) -> float:
        """Default stable step size cfl * dz."""
        return self.cfl * self.grid.dz


@dataclass(frozen=True)
class PlantState:
    """State profile at one time instant; the inflow boundary value is 0."""

    x: Profile
    t: float

    def __post_init__(self):
        v = self.x.values
        if abs(v[0]) > 1e-12 * (1.0 + np.max(np.abs(v))):
            raise ConfigError("state violates the boundary condition x(0) = 0")


def plant_step(state: PlantState, cfg: PlantConfig, forcing: Profile, dt: float) -> PlantState:
    """Advance the plant by one explicit upwind/Euler step.

    forcing is the full distributed input at the current time, already
    combining actuation, disturbance and any feedback correction.
    """
    if dt > cfg.cfl * cfg.grid.dz * _CFL_SLACK:
        raise ConfigError(
            f"dt={dt} violates the CFL bound cfl*dz={cfg.cfl * cfg.grid.dz}"
        )
    x = state.x.values
    g = cfg.g.values
    f = forcing.values
    nu = dt / cfg.grid.dz
    xn = np.empty_like(x)
    xn[1:] = x[1:] - nu * (x[1:] - x[:-1]) + dt * (g[1:] * x[1:] + f[1:])
    xn[0] = 0.0
    return PlantState(Profile(cfg.grid, xn), state.t + dt)
