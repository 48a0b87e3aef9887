# -*- coding: utf-8 -*-
#
# This file is part of dynloc.
#
# dynloc is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.


"""
    Array and bending-profile model.

    Lengths are SI metres. Every function taking `z` accepts a scalar
    or a numpy array and returns the same shape.
"""

import enum
import math
from dataclasses import dataclass, field, replace
from functools import lru_cache

import numpy as np
from scipy.interpolate import CubicSpline

from .exceptions import DomainError, UnsupportedProfileError

# Relative slack on the upper end of [0, L] for accumulated step rounding
LENGTH_SLACK = 1e-9


@dataclass(frozen=True)
class ArraySpec:
    """
        The physical lattice.

        Site n sits at x = n * site_period_a, n in `site_indices`.
    """

    site_period_a: float
    site_count: int
    sample_length_L: float
    substrate_index_ns: float
    wavelength_lambda: float
    well_depth_dn: float = 2.5e-3
    well_width_w: float = 3.5e-6

    def __post_init__(self):
        if not self.site_period_a > 0:
            raise DomainError("site period must be positive")
        if int(self.site_count) != self.site_count or self.site_count < 1:
            raise DomainError("site count must be a positive integer")
        if not self.sample_length_L > 0:
            raise DomainError("sample length must be positive")
        if not self.wavelength_lambda > 0:
            raise DomainError("wavelength must be positive")
        if not self.substrate_index_ns > 1:
            raise DomainError("substrate index must exceed 1")
        if not self.well_depth_dn > 0:
            raise DomainError("well depth must be positive")
        if not 0 < self.well_width_w < self.site_period_a:
            raise DomainError("well width must be positive and below the site period")

    @property
    def reduced_wavelength(self):
        return self.wavelength_lambda / (2 * math.pi)

    @property
    def site_indices(self):
        half = self.site_count // 2
        return np.arange(-half, self.site_count - half)

    @property
    def site_positions(self):
        return self.site_indices * self.site_period_a


class ProfileKind(enum.Enum):
    STRAIGHT = "straight"
    SINUSOIDAL = "sinusoidal"
    ZIGZAG = "zigzag"
    CIRCULAR = "circular"
    SAMPLED = "sampled"


PERIODIC_KINDS = (ProfileKind.STRAIGHT, ProfileKind.SINUSOIDAL, ProfileKind.ZIGZAG)


@dataclass(frozen=True)
class BendingProfile:
    """
        Axis trajectory x0(z) of the array.

        For ZIGZAG the amplitude is derived from the tilt and the period.
        For CIRCULAR the period is a length scale: x0 = A (z / period)^2.
        `samples` is a tuple of (z, x0) pairs for SAMPLED profiles.
    """

    kind: ProfileKind
    amplitude_A: float = 0.0
    period_Lambda: float = None
    phase_phi0: float = 0.0
    samples: tuple = field(default=None, repr=False)
    zigzag_tilt: float = 0.0

    def __post_init__(self):
        if self.amplitude_A < 0:
            raise DomainError("amplitude must be non-negative")
        needs_period = self.kind in (
            ProfileKind.SINUSOIDAL,
            ProfileKind.ZIGZAG,
            ProfileKind.CIRCULAR,
        )
        if self.period_Lambda is None:
            if needs_period:
                raise DomainError("{} profile needs a period".format(self.kind.value))
        elif not self.period_Lambda > 0:
            raise DomainError("period must be positive")

        if self.kind == ProfileKind.ZIGZAG:
            if self.zigzag_tilt < 0:
                raise DomainError("zigzag tilt must be non-negative")
            object.__setattr__(
                self, "amplitude_A", self.zigzag_tilt * self.period_Lambda / 4
            )

        if self.kind == ProfileKind.SAMPLED:
            if not self.samples or len(self.samples) < 4:
                raise DomainError("sampled profile needs at least 4 samples")
            z_values = np.array([pair[0] for pair in self.samples], dtype=float)
            if np.any(np.diff(z_values) <= 0):
                raise DomainError("sampled profile z-grid must be strictly increasing")
            if z_values[0] != 0:
                raise DomainError("sampled profile must start at z = 0")

    @classmethod
    def straight(cls, period_Lambda=None):
        return cls(ProfileKind.STRAIGHT, period_Lambda=period_Lambda)

    @classmethod
    def sinusoidal(cls, amplitude_A, period_Lambda, phase_phi0=0.0):
        return cls(
            ProfileKind.SINUSOIDAL,
            amplitude_A=amplitude_A,
            period_Lambda=period_Lambda,
            phase_phi0=phase_phi0,
        )

    @classmethod
    def zigzag(cls, zigzag_tilt, period_Lambda):
        return cls(
            ProfileKind.ZIGZAG, period_Lambda=period_Lambda, zigzag_tilt=zigzag_tilt
        )

    @classmethod
    def circular(cls, amplitude_A, period_Lambda):
        return cls(
            ProfileKind.CIRCULAR, amplitude_A=amplitude_A, period_Lambda=period_Lambda
        )

    @classmethod
    def sampled(cls, z_values, x0_values, period_Lambda=None):
        samples = tuple(
            (float(z_value), float(x0_value))
            for z_value, x0_value in zip(z_values, x0_values)
        )
        return cls(ProfileKind.SAMPLED, samples=samples, period_Lambda=period_Lambda)

    @property
    def is_periodic(self):
        return self.kind in PERIODIC_KINDS and self.period_Lambda is not None

    @property
    def sample_range(self):
        if self.kind != ProfileKind.SAMPLED:
            return None
        return self.samples[0][0], self.samples[-1][0]


@lru_cache(maxsize=32)
def _spline(samples):
    z_values, x0_values = zip(*samples)
    return CubicSpline(np.array(z_values), np.array(x0_values))


def _as_z(profile, z):
    z = np.asarray(z, dtype=float)
    if np.any(z < 0):
        raise DomainError("z must be non-negative, got {}".format(np.min(z)))
    if profile.kind == ProfileKind.SAMPLED:
        z_min, z_max = profile.sample_range
        if np.any(z > z_max * (1 + LENGTH_SLACK)):
            raise DomainError(
                "z = {} beyond sampled range [{}, {}]".format(np.max(z), z_min, z_max)
            )
    return z


def _shaped(z, values):
    values = np.broadcast_to(values, z.shape)
    if values.ndim == 0:
        return float(values)
    return np.array(values, dtype=float)


def _zigzag_phase(profile, z):
    return np.mod(z, profile.period_Lambda) < profile.period_Lambda / 2


def _derivative(profile, z, order):
    kind = profile.kind
    if kind == ProfileKind.STRAIGHT:
        return np.zeros_like(z)

    if kind == ProfileKind.SINUSOIDAL:
        wavenumber = 2 * math.pi / profile.period_Lambda
        arg = wavenumber * z + profile.phase_phi0
        amplitude = profile.amplitude_A
        if order == 0:
            return amplitude * (np.sin(arg) - math.sin(profile.phase_phi0))
        if order == 1:
            return amplitude * wavenumber * np.cos(arg)
        return -amplitude * wavenumber ** 2 * np.sin(arg)

    if kind == ProfileKind.ZIGZAG:
        rising = _zigzag_phase(profile, z)
        tilt = profile.zigzag_tilt
        if order == 0:
            local = np.mod(z, profile.period_Lambda)
            return np.where(rising, tilt * local, tilt * (profile.period_Lambda - local))
        if order == 1:
            return np.where(rising, tilt, -tilt)
        return np.zeros_like(z)

    if kind == ProfileKind.CIRCULAR:
        scale = profile.amplitude_A / profile.period_Lambda ** 2
        if order == 0:
            return scale * z ** 2
        if order == 1:
            return 2 * scale * z
        return np.full_like(z, 2 * scale)

    return _spline(profile.samples)(z, order)


def displacement(profile, z):
    """
        Axis displacement x0(z), with x0(0) = 0

        :raises `dynloc.exceptions.DomainError`
    """
    z = _as_z(profile, z)
    return _shaped(z, _derivative(profile, z, 0))


def slope(profile, z):
    """
        dx0/dz. Zigzag slopes are right-continuous at the kinks.
    """
    z = _as_z(profile, z)
    return _shaped(z, _derivative(profile, z, 1))


def curvature(profile, z):
    """
        d2x0/dz2. Zigzag curvature is zero between kinks; see `kinks`.
    """
    z = _as_z(profile, z)
    return _shaped(z, _derivative(profile, z, 2))


def kinks(profile, z_max):
    """
        Slope discontinuities of a zigzag profile in (0, z_max]

        :rtype: tuple
    """
    if profile.kind != ProfileKind.ZIGZAG:
        return ()
    half = profile.period_Lambda / 2
    count = int(math.floor(z_max / half * (1 + LENGTH_SLACK)))
    return tuple(m * half for m in range(1, count + 1))


def phase_scale(spec):
    """ n_s a / reduced wavelength, the slope-to-phase conversion """
    return spec.substrate_index_ns * spec.site_period_a / spec.reduced_wavelength


def gamma_unchecked(spec, profile, z):
    """
        gamma(z) without the sample-length check, for quadratures over a
        full period of arrays shorter than one period
    """
    z = _as_z(profile, z)
    initial = _derivative(profile, np.zeros(1), 1)[0]
    return _shaped(z, phase_scale(spec) * (_derivative(profile, z, 1) - initial))


def gamma_phase(spec, profile, z):
    """
        Accumulated gauge phase gamma(z) = (n_s a / lambda_bar) (x0'(z) - x0'(0))

        :param `ArraySpec` spec: the array
        :param `BendingProfile` profile: the bending profile
        :param z: propagation distance(s) in [0, L]
        :raises `dynloc.exceptions.DomainError`
    """
    z_array = np.asarray(z, dtype=float)
    if np.any(z_array > spec.sample_length_L * (1 + LENGTH_SLACK)):
        raise DomainError(
            "z = {} beyond sample length {}".format(
                np.max(z_array), spec.sample_length_L
            )
        )
    return gamma_unchecked(spec, profile, z)


def big_gamma(spec, profile):
    """
        Dimensionless drive strength 4 pi^2 n_s a A / (Lambda lambda)

        :raises `dynloc.exceptions.UnsupportedProfileError`: not sinusoidal
    """
    if profile.kind != ProfileKind.SINUSOIDAL:
        raise UnsupportedProfileError(
            "Gamma is defined for sinusoidal profiles only, got {}".format(
                profile.kind.value
            )
        )
    return (
        4
        * math.pi ** 2
        * spec.substrate_index_ns
        * spec.site_period_a
        * profile.amplitude_A
        / (profile.period_Lambda * spec.wavelength_lambda)
    )


def amplitude_for_gamma(spec, profile, gamma):
    """ Sinusoid amplitude giving the drive strength `gamma` """
    if profile.kind != ProfileKind.SINUSOIDAL:
        raise UnsupportedProfileError("amplitude_for_gamma needs a sinusoidal profile")
    return (
        abs(gamma)
        * profile.period_Lambda
        * spec.wavelength_lambda
        / (4 * math.pi ** 2 * spec.substrate_index_ns * spec.site_period_a)
    )


def bloch_period(spec, profile):
    """
        Revival length 2 pi / omega_B of a circular arc,
        omega_B = (n_s a / lambda_bar) |x0''|
    """
    if profile.kind != ProfileKind.CIRCULAR:
        raise UnsupportedProfileError("Bloch period needs a circular profile")
    if profile.amplitude_A == 0:
        raise DomainError("Bloch period diverges for a zero-curvature arc")
    omega = phase_scale(spec) * 2 * profile.amplitude_A / profile.period_Lambda ** 2
    return 2 * math.pi / omega


def zigzag_dl_tilt(spec):
    """ Zigzag tilt giving a pi phase jump per half period: lambda / (4 n_s a) """
    return spec.wavelength_lambda / (4 * spec.substrate_index_ns * spec.site_period_a)


def with_length(spec, sample_length_L):
    return replace(spec, sample_length_L=sample_length_L)


def max_gamma_rate(spec, profile, z_max):
    """ Upper estimate of |dgamma/dz| over [0, z_max] """
    if profile.kind in (ProfileKind.STRAIGHT, ProfileKind.ZIGZAG):
        return 0.0
    if profile.kind == ProfileKind.SINUSOIDAL:
        return phase_scale(spec) * profile.amplitude_A * (
            2 * math.pi / profile.period_Lambda
        ) ** 2
    if profile.kind == ProfileKind.CIRCULAR:
        return phase_scale(spec) * 2 * profile.amplitude_A / profile.period_Lambda ** 2
    z_samples = np.linspace(0, min(z_max, profile.sample_range[1]), 4097)
    return phase_scale(spec) * float(np.max(np.abs(_derivative(profile, z_samples, 2))))
