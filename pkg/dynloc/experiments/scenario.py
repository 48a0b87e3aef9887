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
    Declarative scenario description
"""

import enum
from dataclasses import dataclass, field, replace

import numpy as np

from .. import geometry
from ..analytics import FreeParameter, with_parameter
from ..exceptions import ConfigError, ValidationError
from .dispersion import delta_of_lambda, is_extrapolated


class Engine(enum.Enum):
    TIGHT_BINDING = "tight_binding"
    CONTINUUM = "continuum"
    BOTH = "both"

    @property
    def uses_tight_binding(self):
        return self in (Engine.TIGHT_BINDING, Engine.BOTH)

    @property
    def uses_continuum(self):
        return self in (Engine.CONTINUUM, Engine.BOTH)


class Observable(enum.Enum):
    SITE_POWERS = "site_powers"
    CROSS_SECTION = "cross_section"
    MSD = "msd"
    RETURN_PROBABILITY = "return_probability"
    DL_DIAGNOSTICS = "dl_diagnostics"


class SweepAxis(enum.Enum):
    WAVELENGTH = "wavelength"
    PERIOD = "period"
    AMPLITUDE = "amplitude"
    GAMMA = "Gamma"


# CSV header of the swept column
AXIS_COLUMNS = {
    SweepAxis.WAVELENGTH: ("lambda", "m"),
    SweepAxis.PERIOD: ("Lambda", "m"),
    SweepAxis.AMPLITUDE: ("A", "m"),
    SweepAxis.GAMMA: ("Gamma_set", "1"),
}


@dataclass(frozen=True)
class SingleSite:
    site: int = 0


@dataclass(frozen=True)
class GaussianBeam:
    width_wx: float
    center: float = 0.0
    tilt: float = 0.0

    def __post_init__(self):
        if not self.width_wx > 0:
            raise ConfigError("Gaussian beam width must be positive")

    def site_amplitudes(self, spec, indices):
        """ The beam sampled at the sites, unit norm """
        positions = np.asarray(indices) * spec.site_period_a
        values = np.exp(-((positions - self.center) ** 2) / self.width_wx ** 2).astype(complex)
        if self.tilt:
            values *= np.exp(
                1j * spec.substrate_index_ns * self.tilt * positions / spec.reduced_wavelength
            )
        return values / np.linalg.norm(values)


@dataclass(frozen=True)
class Sweep:
    axis: SweepAxis
    values: tuple

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.size > 1:
            steps = np.diff(values)
            if not (np.all(steps > 0) or np.all(steps < 0)):
                raise ValidationError("sweep values must be strictly monotone")


@dataclass(frozen=True)
class Numerics:
    tolerance: float = 1e-10
    z_points: int = 201
    n_half: int = None
    grid_points: int = 4096
    grid_spacing: float = 0.35e-6
    step_dz: float = None
    record_every: int = 64
    absorber_width: float = None

    def __post_init__(self):
        if not 1e-12 <= self.tolerance <= 1e-6:
            raise ConfigError("tolerance {} outside [1e-12, 1e-6]".format(self.tolerance))
        if self.z_points < 2:
            raise ConfigError("at least two z points are needed")


@dataclass(frozen=True)
class ScenarioConfig:
    """
        One simulation or sweep.

        `coupling_delta` of None means Delta(lambda) from the measured
        dispersion model.
    """

    name: str
    engine: Engine
    spec: geometry.ArraySpec
    profile: geometry.BendingProfile
    excitation: object = field(default_factory=SingleSite)
    coupling_delta: float = None
    sweep: Sweep = None
    outputs: tuple = (Observable.SITE_POWERS, Observable.MSD)
    numerics: Numerics = field(default_factory=Numerics)
    schema_version: int = 1

    def coupling(self, spec=None):
        """
            :return: (Delta, extrapolated flag)
        """
        spec = spec or self.spec
        if self.coupling_delta is not None:
            return self.coupling_delta, False
        wavelength = spec.wavelength_lambda
        return delta_of_lambda(wavelength), is_extrapolated(wavelength)

    def at_point(self, value):
        """ The scenario with its sweep parameter set to `value` and no sweep """
        if self.sweep is None:
            raise ConfigError("scenario {} has no sweep".format(self.name))
        axis = self.sweep.axis
        if axis == SweepAxis.GAMMA:
            amplitude = geometry.amplitude_for_gamma(self.spec, self.profile, value)
            spec, profile = with_parameter(
                self.spec, self.profile, FreeParameter.AMPLITUDE, amplitude
            )
        else:
            free = {
                SweepAxis.WAVELENGTH: FreeParameter.WAVELENGTH,
                SweepAxis.PERIOD: FreeParameter.PERIOD,
                SweepAxis.AMPLITUDE: FreeParameter.AMPLITUDE,
            }[axis]
            spec, profile = with_parameter(self.spec, self.profile, free, value)
        return replace(self, spec=spec, profile=profile, sweep=None)
