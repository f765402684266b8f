"""Fourier-diagonalized operators on the flat torus.

Gradient, divergence and Laplacian are exact for band-limited fields.  The
Poisson solve inverts the zero-mean Laplacian; the mean of the right-hand
side is projected away (and reported on request) because discretization
breaks the exact solvability condition that holds in the continuum.

Sign conventions: the Laplacian is div grad (nonpositive spectrum).  The
inertia operator of the information metric acts on a vector field u as

    A u = lap(u) + lam * harmonic_mean_part(u),

where on the flat torus the harmonic fields are the constants and
harmonic_mean_part is the componentwise average.  Nyquist modes are zeroed
in first derivatives so gradients of real fields stay real.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .grid import Grid, ScalarField, VectorField, integrate

__all__ = [
    "SpectralPlan",
    "InertiaConfig",
    "plan_for",
    "gradient",
    "divergence",
    "laplacian",
    "solve_poisson",
    "harmonic_mean_part",
    "inertia_apply",
    "inertia_inverse",
]


class SpectralPlan:
    """Cached wavenumber tables for one grid (rfft2 layout)."""

    def __init__(self, grid: Grid):
        self.grid = grid
        nx, ny = grid.nx, grid.ny
        kx = 2 * np.pi * np.fft.fftfreq(nx, d=grid.dx)
        ky = 2 * np.pi * np.fft.rfftfreq(ny, d=grid.dy)
        self.kx = kx[:, None]
        self.ky = ky[None, :]
        # First-derivative symbols: zero the Nyquist mode (odd derivative of a
        # real field would otherwise pick up a spurious imaginary part).
        kx_d = kx.copy()
        kx_d[nx // 2] = 0.0
        ky_d = ky.copy()
        ky_d[-1] = 0.0
        self.ikx = 1j * kx_d[:, None]
        self.iky = 1j * ky_d[None, :]
        self.lap = -(self.kx**2 + self.ky**2)
        inv = np.zeros_like(self.lap)
        nonzero = self.lap != 0
        inv[nonzero] = 1.0 / self.lap[nonzero]
        self.inv_lap = inv

    def fft(self, values):
        return np.fft.rfft2(values)

    def ifft(self, coeffs):
        return np.fft.irfft2(coeffs, s=self.grid.shape)


@lru_cache(maxsize=32)
def plan_for(grid: Grid) -> SpectralPlan:
    return SpectralPlan(grid)


def gradient(f: ScalarField) -> VectorField:
    p = plan_for(f.grid)
    fh = p.fft(f.values)
    return VectorField(f.grid, p.ifft(p.ikx * fh), p.ifft(p.iky * fh))


def divergence(v: VectorField) -> ScalarField:
    p = plan_for(v.grid)
    out = p.ifft(p.ikx * p.fft(v.vx)) + p.ifft(p.iky * p.fft(v.vy))
    return ScalarField(v.grid, out)


def laplacian(f: ScalarField) -> ScalarField:
    p = plan_for(f.grid)
    return ScalarField(f.grid, p.ifft(p.lap * p.fft(f.values)))


def solve_poisson(rhs: ScalarField, return_mean: bool = False):
    """Solve lap(f) = rhs - mean(rhs) with mean(f) = 0.

    With ``return_mean=True`` also returns the discarded mean of ``rhs``.
    """
    p = plan_for(rhs.grid)
    fh = p.fft(rhs.values)
    mean = fh[0, 0].real / (rhs.grid.nx * rhs.grid.ny)
    f = ScalarField(rhs.grid, p.ifft(fh * p.inv_lap))
    if return_mean:
        return f, float(mean)
    return f


def harmonic_mean_part(v: VectorField) -> VectorField:
    """L2-orthogonal projection onto the harmonic (constant) fields."""
    g = v.grid
    return VectorField(
        g,
        np.full(g.shape, v.vx.mean()),
        np.full(g.shape, v.vy.mean()),
    )


@dataclass(frozen=True)
class InertiaConfig:
    """Weight of the harmonic part in the information-metric inertia operator."""

    lam: float = 1.0

    def __post_init__(self):
        if not self.lam > 0:
            raise ValueError("inertia weight lam must be positive")


def inertia_apply(u: VectorField, cfg: InertiaConfig) -> VectorField:
    p = plan_for(u.grid)
    ax = p.ifft(p.lap * p.fft(u.vx)) + cfg.lam * u.vx.mean()
    ay = p.ifft(p.lap * p.fft(u.vy)) + cfg.lam * u.vy.mean()
    return VectorField(u.grid, ax, ay)


def inertia_inverse(m: VectorField, cfg: InertiaConfig) -> VectorField:
    p = plan_for(m.grid)
    mx, my = m.vx.mean(), m.vy.mean()
    wx = p.ifft(p.fft(m.vx) * p.inv_lap)
    wy = p.ifft(p.fft(m.vy) * p.inv_lap)
    return VectorField(m.grid, wx + mx / cfg.lam, wy + my / cfg.lam)
