"""
    Transverse grid and sampled fields
"""

import math
from dataclasses import dataclass, replace

import numpy as np

from ..exceptions import ConfigError

DEFAULT_POINTS = 4096
DEFAULT_SPACING = 0.35e-6


@dataclass(frozen=True)
class TransverseGrid:
    """ Centred periodic grid, x_j = (j - N/2) dx """

    points: int = DEFAULT_POINTS
    spacing: float = DEFAULT_SPACING

    def __post_init__(self):
        points = int(self.points)
        if points < 16 or points & (points - 1):
            raise ConfigError("grid size {} is not a power of two".format(self.points))
        if not self.spacing > 0:
            raise ConfigError("grid spacing must be positive")

    @property
    def start(self):
        return -(self.points // 2) * self.spacing

    @property
    def width(self):
        return self.points * self.spacing

    @property
    def x(self):
        return (np.arange(self.points) - self.points // 2) * self.spacing

    @property
    def wavenumbers(self):
        return 2 * math.pi * np.fft.fftfreq(self.points, self.spacing)

    @property
    def real_wavenumbers(self):
        return 2 * math.pi * np.fft.rfftfreq(self.points, self.spacing)

    def reflect(self, values):
        """ values(-x) on the same grid """
        return np.roll(values[::-1], 1)

    def shift(self, values, distance):
        """ values(x - distance) by spectral interpolation """
        if distance == 0:
            return values
        spectrum = np.fft.fft(values) * np.exp(-1j * self.wavenumbers * distance)
        return np.fft.ifft(spectrum)


@dataclass(frozen=True, eq=False)
class SampledField:
    grid_start: float
    grid_spacing_dx: float
    amplitudes: np.ndarray
    z_position: float
    wavelength: float

    @classmethod
    def on_grid(cls, grid, amplitudes, z_position, wavelength):
        return cls(
            grid.start,
            grid.spacing,
            np.asarray(amplitudes, dtype=complex),
            float(z_position),
            float(wavelength),
        )

    @property
    def grid(self):
        return TransverseGrid(self.amplitudes.size, self.grid_spacing_dx)

    @property
    def x(self):
        return self.grid_start + self.grid_spacing_dx * np.arange(self.amplitudes.size)

    @property
    def intensity(self):
        return np.abs(self.amplitudes) ** 2

    @property
    def power(self):
        return float(np.sum(self.intensity) * self.grid_spacing_dx)

    def normalized(self):
        power = self.power
        if power <= 0:
            return self
        return replace(self, amplitudes=self.amplitudes / math.sqrt(power))

    def at(self, amplitudes, z_position):
        return replace(self, amplitudes=amplitudes, z_position=float(z_position))
