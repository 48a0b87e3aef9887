"""
    Split-step spectral beam propagation.

    i dpsi/dz = -(lambda_bar / 2 n_s) d2psi/dx2 + (V / lambda_bar) psi,
    advanced with Strang steps: half kinetic, full potential, half kinetic.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from .. import geometry
from ..exceptions import ConfigError, UnsupportedProfileError
from ..geometry import ProfileKind

logger = logging.getLogger(__name__)

STRAIGHT_STEP = 2e-6
CURVED_STEPS_PER_PERIOD = 2048
MIN_CURVED_STEPS_PER_PERIOD = 512
MAX_STEP_PHASE = math.pi / 4
MAX_ABSORBER_FRACTION = 0.15


@dataclass(frozen=True)
class BpmConfig:
    step_dz: float = STRAIGHT_STEP
    absorber_width: float = None
    absorber_strength: float = 5e-3
    record_every: int = 64

    @classmethod
    def default_for(cls, profile, grid, **overrides):
        """ 2 um steps, at most Lambda / 2048 on curved profiles; 60 dx absorber """
        step = STRAIGHT_STEP
        if profile.kind != ProfileKind.STRAIGHT and profile.period_Lambda:
            step = min(step, profile.period_Lambda / CURVED_STEPS_PER_PERIOD)
        settings = {"step_dz": step, "absorber_width": 60 * grid.spacing}
        settings.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**settings)


@dataclass(frozen=True, eq=False)
class FieldTrajectory:
    fields: tuple
    step_count: int
    absorbed_power: float

    @property
    def final(self):
        return self.fields[-1]

    @property
    def z_grid(self):
        return np.array([field.z_position for field in self.fields])


def absorber_profile(grid, width, strength):
    """ Super-Gaussian imaginary index rising to `strength` at the window edges """
    if not width or not strength:
        return np.zeros(grid.points)
    if width >= MAX_ABSORBER_FRACTION * grid.width:
        raise ConfigError(
            "absorber width {:.3g} m exceeds {:.0%} of the window".format(
                width, MAX_ABSORBER_FRACTION
            )
        )
    distance = grid.width / 2 - np.abs(grid.x)
    return strength * np.exp(-((distance / (width / 2)) ** 4))


def _check_config(config, profile, grid):
    if not config.step_dz > 0:
        raise ConfigError("step must be positive")
    if config.record_every < 1:
        raise ConfigError("record_every must be at least 1")
    curved = profile.kind != ProfileKind.STRAIGHT and profile.period_Lambda
    if curved and config.step_dz > profile.period_Lambda / MIN_CURVED_STEPS_PER_PERIOD:
        raise ConfigError(
            "step {:.3g} m above Lambda / {} on a curved profile".format(
                config.step_dz, MIN_CURVED_STEPS_PER_PERIOD
            )
        )
    return absorber_profile(grid, config.absorber_width, config.absorber_strength)


def _check_coverage(potential, profile, length, margin):
    if profile.kind == ProfileKind.STRAIGHT:
        return
    z_samples = np.linspace(0.0, length, 2049)
    excursion = float(np.max(np.abs(geometry.displacement(profile, z_samples))))
    if potential.extent + excursion + margin > potential.grid.width / 2:
        raise ConfigError(
            "array bent by {:.3g} m leaves the {:.3g} m window; reduce site_count "
            "or enlarge the grid".format(excursion, potential.grid.width)
        )


def _check_phase(largest, step, wavelength):
    phase = largest * step * 2 * math.pi / wavelength
    if phase > MAX_STEP_PHASE:
        raise ConfigError(
            "potential phase {:.3f} rad per step exceeds pi/4; reduce step_dz".format(phase)
        )


def _run(field, potential, profile, config, length, potential_at):
    """
        Strang loop shared by both frames. `potential_at(z_mid)` returns
        the real potential samples for the step centred on z_mid.
    """
    grid = potential.grid
    if field.amplitudes.size != grid.points:
        raise ConfigError("field and potential grids differ")

    absorber = _check_config(config, profile, grid)
    distance = length - field.z_position
    if distance < 0:
        raise ConfigError("field already beyond the propagation length")

    count = int(math.ceil(distance / config.step_dz - 1e-9)) if distance > 0 else 0
    step = distance / count if count else 0.0
    lam_bar = field.wavelength / (2 * math.pi)
    half_kinetic = np.exp(
        -1j * lam_bar * grid.wavenumbers ** 2 * step / (4 * potential.substrate_index)
    )
    damping = np.exp(-absorber * step / lam_bar)

    values = field.amplitudes.copy()
    start_power = field.power
    fields = [field]
    for index in range(count):
        z_mid = field.z_position + (index + 0.5) * step
        samples = potential_at(z_mid)
        values = np.fft.ifft(half_kinetic * np.fft.fft(values))
        values = values * np.exp(-1j * samples * step / lam_bar) * damping
        values = np.fft.ifft(half_kinetic * np.fft.fft(values))
        if (index + 1) % config.record_every == 0 or index + 1 == count:
            fields.append(field.at(values, field.z_position + (index + 1) * step))

    absorbed = start_power - fields[-1].power
    logger.debug(
        "propagated {:.4g} m in {} steps, absorbed power {:.3e}".format(
            distance, count, absorbed
        )
    )
    return FieldTrajectory(tuple(fields), count, absorbed)


def propagate(field, potential, profile, config, length):
    """
        Lab frame: potential V(x - x0(z)) shifted spectrally every step

        :param `SampledField` field: input at field.z_position
        :param `PotentialProfile` potential: straight-array potential
        :param `BendingProfile` profile: axis trajectory
        :param `BpmConfig` config: numerics
        :param float length: end of propagation (usually L)
        :rtype: `FieldTrajectory`
        :raises `dynloc.exceptions.ConfigError`
    """
    grid = potential.grid
    _check_coverage(potential, profile, length, config.absorber_width or 0.0)
    _check_phase(float(np.max(np.abs(potential.samples))), config.step_dz, field.wavelength)

    if profile.kind == ProfileKind.STRAIGHT:
        return _run(field, potential, profile, config, length, lambda z_mid: potential.samples)

    spectrum = np.fft.rfft(potential.samples)
    wavenumbers = grid.real_wavenumbers

    def shifted(z_mid):
        offset = geometry.displacement(profile, z_mid)
        return np.fft.irfft(spectrum * np.exp(-1j * wavenumbers * offset), n=grid.points)

    return _run(field, potential, profile, config, length, shifted)


def propagate_transformed(field, potential, profile, config, length):
    """
        Co-moving frame: straight potential plus the inertial term
        n_s x0''(z) x'

        :raises `dynloc.exceptions.UnsupportedProfileError`: zigzag profiles
    """
    if profile.kind == ProfileKind.ZIGZAG:
        raise UnsupportedProfileError(
            "zigzag curvature is impulsive; use the lab frame or the tight-binding engine"
        )
    grid = potential.grid
    x = grid.x
    index = potential.substrate_index

    largest = float(np.max(np.abs(potential.samples)))
    if profile.kind != ProfileKind.STRAIGHT:
        z_samples = np.linspace(field.z_position, max(length, field.z_position), 2049)
        bend = float(np.max(np.abs(geometry.curvature(profile, z_samples))))
        largest += index * bend * grid.width / 2
    _check_phase(largest, config.step_dz, field.wavelength)

    if profile.kind == ProfileKind.STRAIGHT:
        return _run(field, potential, profile, config, length, lambda z_mid: potential.samples)

    def inertial(z_mid):
        return potential.samples + index * geometry.curvature(profile, z_mid) * x

    return _run(field, potential, profile, config, length, inertial)
