"""Discrete flat torus: grid, sampled fields, quadrature and densities.

Fields are point-sampled at the nodes (i*dx, j*dy), i = 0..nx-1, j = 0..ny-1,
stored as nx-by-ny float64 arrays with axis 0 along x and axis 1 along y.
All values in this module are immutable after construction; the wrapped numpy
arrays are marked read-only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Grid",
    "ScalarField",
    "VectorField",
    "Density",
    "make_grid",
    "integrate",
    "normalize_density",
    "uniform_density",
]

# Relative mass tolerance for a well-formed Density.
MASS_RTOL = 1e-10


def _frozen_array(values, shape=None):
    out = np.array(values, dtype=np.float64)
    if shape is not None and out.shape != shape:
        raise ValueError(f"expected array of shape {shape}, got {out.shape}")
    if not np.all(np.isfinite(out)):
        raise ValueError("field values must be finite")
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class Grid:
    """Periodic rectangular discretization of the torus [0,Lx) x [0,Ly)."""

    nx: int
    ny: int
    Lx: float
    Ly: float

    def __post_init__(self):
        for n in (self.nx, self.ny):
            if not isinstance(n, (int, np.integer)) or n < 4 or n % 2 != 0:
                raise ValueError("grid resolutions must be even integers >= 4")
        if not (self.Lx > 0 and self.Ly > 0):
            raise ValueError("period lengths must be positive")

    @property
    def dx(self) -> float:
        return self.Lx / self.nx

    @property
    def dy(self) -> float:
        return self.Ly / self.ny

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nx, self.ny)

    @property
    def cell_volume(self) -> float:
        return self.dx * self.dy

    @property
    def total_volume(self) -> float:
        """Total volume of the torus, vol(M) = Lx*Ly."""
        return self.Lx * self.Ly

    @property
    def min_spacing(self) -> float:
        return min(self.dx, self.dy)

    def axes(self):
        return np.arange(self.nx) * self.dx, np.arange(self.ny) * self.dy

    def mesh(self):
        xs, ys = self.axes()
        return np.meshgrid(xs, ys, indexing="ij")


def make_grid(nx: int, ny: int, Lx: float, Ly: float) -> Grid:
    return Grid(nx, ny, float(Lx), float(Ly))


@dataclass(frozen=True)
class ScalarField:
    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_array(self.values, self.grid.shape))

    @classmethod
    def constant(cls, grid: Grid, value: float) -> "ScalarField":
        return cls(grid, np.full(grid.shape, float(value)))

    @classmethod
    def from_function(cls, grid: Grid, fn) -> "ScalarField":
        X, Y = grid.mesh()
        return cls(grid, fn(X, Y))


@dataclass(frozen=True)
class VectorField:
    grid: Grid
    vx: np.ndarray
    vy: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "vx", _frozen_array(self.vx, self.grid.shape))
        object.__setattr__(self, "vy", _frozen_array(self.vy, self.grid.shape))

    @classmethod
    def zero(cls, grid: Grid) -> "VectorField":
        z = np.zeros(grid.shape)
        return cls(grid, z, z)

    def max_norm(self) -> float:
        return max(np.abs(self.vx).max(), np.abs(self.vy).max())


@dataclass(frozen=True)
class Density:
    """Nonnegative intensity I with total mass integrate(I) = vol(M).

    ``strict`` asserts I > 0 everywhere (interior of the density space);
    strict=False admits zeros (the closure, used by the gradient flow).
    """

    grid: Grid
    intensity: ScalarField
    strict: bool = True

    def __post_init__(self):
        if self.intensity.grid != self.grid:
            raise ValueError("intensity lives on a different grid")
        vals = self.intensity.values
        lo = vals.min()
        if self.strict:
            if lo <= 0:
                raise ValueError("strict density must be positive everywhere")
        elif lo < 0:
            raise ValueError("density intensity must be nonnegative")
        mass = integrate(self.intensity)
        vol = self.grid.total_volume
        if abs(mass - vol) > MASS_RTOL * vol:
            raise ValueError(
                f"density mass {mass!r} differs from vol(M) {vol!r} "
                f"beyond {MASS_RTOL} relative"
            )


def integrate(f: ScalarField) -> float:
    """Midpoint quadrature; exact for band-limited periodic fields."""
    return float(f.values.sum() * f.grid.cell_volume)


def normalize_density(raw: ScalarField, strict: bool = True) -> Density:
    """Rescale a nonnegative field so its total mass equals vol(M)."""
    vals = raw.values
    lo = vals.min()
    if lo < 0:
        raise ValueError("raw density values must be nonnegative")
    if strict and lo <= 0:
        raise ValueError("strict density requested but zeros are present")
    total = integrate(raw)
    if total <= 0:
        raise ValueError("raw density has no mass")
    vol = raw.grid.total_volume
    # Skip the rescale when the mass is already exact so that normalizing
    # an already-normalized field is the identity, bit for bit.
    if abs(total - vol) <= 1e-14 * vol:
        intensity = raw
    else:
        intensity = ScalarField(raw.grid, vals * (vol / total))
    return Density(raw.grid, intensity, strict=strict)


def uniform_density(grid: Grid) -> Density:
    return Density(grid, ScalarField.constant(grid, 1.0), strict=True)
