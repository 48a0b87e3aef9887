"""
    Projections of continuum fields onto lattice sites, widths and inputs
"""

import math

import numpy as np

from .. import tightbinding
from ..exceptions import ConfigError, UndefinedObservableError
from .gauge import kh_map
from .grid import SampledField
from .modes import fundamental_mode

MIN_POWER = 1e-12


def site_powers(field, spec, profile=None, mode=None):
    """
        P_n = |<mode centred at n a | psi>|^2 for n in spec.site_indices

        With a profile the field is first mapped to the co-moving frame,
        so curved arrays project onto their local guided modes.

        :rtype: numpy.ndarray
    """
    if profile is not None:
        field = kh_map(field, profile, spec)
    grid = field.grid
    if mode is None:
        mode, _ = fundamental_mode(spec, field.wavelength, grid)

    spectrum = np.conj(np.fft.fft(mode.amplitudes)) * np.fft.fft(field.amplitudes)
    phases = np.exp(1j * np.outer(spec.site_positions, grid.wavenumbers))
    overlaps = grid.spacing / grid.points * (phases @ spectrum)
    return np.abs(overlaps) ** 2


def site_width(powers, spec):
    """ Second-moment width of site powers, in metres """
    return tightbinding.second_moment_width(powers, spec.site_indices) * spec.site_period_a


def continuum_msd(field, spec, center=0.0):
    """
        integral (x / a)^2 |psi|^2 / integral |psi|^2

        :raises `dynloc.exceptions.UndefinedObservableError`
    """
    intensity = field.intensity
    power = float(np.sum(intensity) * field.grid_spacing_dx)
    if power < MIN_POWER:
        raise UndefinedObservableError(
            "field power {:.3g} too small for <n^2>".format(power)
        )
    scaled = ((field.x - center) / spec.site_period_a) ** 2
    return float(np.sum(scaled * intensity) * field.grid_spacing_dx) / power


def gaussian_input(w_x, center, tilt, grid, spec):
    """
        exp(-(x - c)^2 / w_x^2) exp(i n_s tilt x / lambda_bar), unit power

        :raises `dynloc.exceptions.ConfigError`: w_x not above dx
    """
    if not w_x > grid.spacing:
        raise ConfigError("beam width {:.3g} m must exceed dx".format(w_x))
    x = grid.x
    lam_bar = spec.reduced_wavelength
    values = np.exp(-((x - center) ** 2) / w_x ** 2).astype(complex)
    if tilt:
        values = values * np.exp(1j * spec.substrate_index_ns * tilt * x / lam_bar)
    field = SampledField.on_grid(grid, values, 0.0, spec.wavelength_lambda)
    return field.normalized()


def mode_input(spec, grid, site=0):
    """ Fundamental mode launched in one site, unit power """
    mode, _ = fundamental_mode(spec, spec.wavelength_lambda, grid)
    values = grid.shift(mode.amplitudes, site * spec.site_period_a)
    return SampledField.on_grid(grid, values, 0.0, spec.wavelength_lambda).normalized()


def cross_section(field):
    """ (x, |psi|^2) with unit total power """
    power = field.power
    if power < MIN_POWER:
        raise UndefinedObservableError("field carries no power")
    return field.x, field.intensity / power


def guided_fraction(powers, field):
    return float(np.sum(powers)) / max(field.power, math.ulp(0.0))
