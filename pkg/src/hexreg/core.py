"""Uniform grids on [0, 1], sampled profiles and small dense helpers.

Everything downstream (plant stepping, frequency-domain solves, regulator
synthesis) works with `Profile` values sampled on a shared `SpatialGrid`.
Instances are immutable after construction and safe to share.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, NumericError


@dataclass(frozen=True)
class SpatialGrid:
    """Equispaced samples of [0, 1] with z[0] = 0 and z[-1] = 1 exactly."""

    n_points: int
    z: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n_points, (int, np.integer)) or self.n_points < 2:
            raise ConfigError(f"n_points must be an integer >= 2, got {self.n_points!r}")
        object.__setattr__(self, "z", np.linspace(0.0, 1.0, self.n_points))

    @property
    def dz(self) -> float:
        return 1.0 / (self.n_points - 1)


@dataclass(frozen=True)
class Profile:
    """One finite scalar (real or complex) per grid point."""

    grid: SpatialGrid
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values)
        if v.dtype.kind not in "fc":
            v = v.astype(float)
        if v.shape != (self.grid.n_points,):
            raise ConfigError(
                f"profile has {v.shape} values for a {self.grid.n_points}-point grid"
            )
        if not np.all(np.isfinite(v)):
            raise NumericError("profile contains non-finite values")
        object.__setattr__(self, "values", v)

    @classmethod
    def from_callable(cls, grid: SpatialGrid, fn) -> "Profile":
        return cls(grid, np.broadcast_to(fn(grid.z), (grid.n_points,)).copy())

    @classmethod
    def constant(cls, grid: SpatialGrid, value) -> "Profile":
        return cls(grid, np.full(grid.n_points, value, dtype=np.result_type(value, float)))

    @classmethod
    def zeros(cls, grid: SpatialGrid) -> "Profile":
        return cls(grid, np.zeros(grid.n_points))

    def __add__(self, other: "Profile") -> "Profile":
        if self.grid != other.grid:
            raise ConfigError("profiles live on different grids")
        return Profile(self.grid, self.values + other.values)

    def __mul__(self, scalar) -> "Profile":
        return Profile(self.grid, self.values * scalar)

    __rmul__ = __mul__


def eval_at(p: Profile, z: float):
    """Value of the profile at position z by linear interpolation.

    Exact at grid points.  z outside [0, 1] is a domain error.
    """
    if not 0.0 <= z <= 1.0:
        raise ValueError(f"z={z} outside the domain [0, 1]")
    zs = p.grid.z
    i = int(np.searchsorted(zs, z, side="right")) - 1
    i = min(max(i, 0), p.grid.n_points - 2)
    th = (z - zs[i]) / (zs[i + 1] - zs[i])
    return ((1.0 - th) * p.values[i] + th * p.values[i + 1]).item()


def l2_norm(p: Profile) -> float:
    """Trapezoidal approximation of the L2(0, 1) norm."""
    w = np.abs(p.values) ** 2
    return float(np.sqrt(p.grid.dz * (w.sum() - 0.5 * (w[0] + w[-1]))))


def eig2(m) -> tuple[complex, complex]:
    """Both eigenvalues of a real 2x2 matrix, as roots of its characteristic polynomial."""
    m = np.asarray(m, dtype=float)
    if m.shape != (2, 2):
        raise ConfigError(f"eig2 expects a 2x2 matrix, got shape {m.shape}")
    tr = m[0, 0] + m[1, 1]
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    disc = cmath.sqrt(complex(tr * tr - 4.0 * det))
    return (tr + disc) / 2.0, (tr - disc) / 2.0


def midpoint_values(v: np.ndarray) -> np.ndarray:
    """Cell-midpoint samples by 4-point cubic interpolation.

    Keeps one-step 4th-order integrators at full order when coefficients are
    only known at the nodes.  Falls back to averaging on grids too small for
    a cubic stencil.
    """
    v = np.asarray(v)
    n = v.size
    if n < 4:
        return 0.5 * (v[:-1] + v[1:])
    mid = np.empty(n - 1, dtype=v.dtype)
    mid[1:-1] = (-v[:-3] + 9.0 * v[1:-2] + 9.0 * v[2:-1] - v[3:]) / 16.0
    mid[0] = (5.0 * v[0] + 15.0 * v[1] - 5.0 * v[2] + v[3]) / 16.0
    mid[-1] = (v[-4] - 5.0 * v[-3] + 15.0 * v[-2] + 5.0 * v[-1]) / 16.0
    return mid
