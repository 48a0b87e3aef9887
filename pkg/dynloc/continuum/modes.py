"""
    Guided modes by imaginary-distance relaxation
"""

import logging
import math
from dataclasses import replace
from functools import lru_cache

import numpy as np

from ..exceptions import ModelError
from .grid import SampledField, TransverseGrid
from .potential import single_well, well_pair

logger = logging.getLogger(__name__)

COARSE_STEP = 2e-5
FINE_STEP = 2e-6
MAX_STEPS = 20000
CHECK_EVERY = 10
RAYLEIGH_TOLERANCE = 1e-12
SUPERMODE_GRID = TransverseGrid(1024, 0.35e-6)

EVEN = "even"
ODD = "odd"


def _project(values, grid, parity):
    mirror = grid.reflect(values)
    if parity == EVEN:
        return (values + mirror) / 2
    return (values - mirror) / 2


def rayleigh_quotient(values, potential, wavelength):
    """ mu = <psi|H|psi> / <psi|psi> with H = -(lambda_bar / 2 n_s) d2/dx2 + V / lambda_bar """
    grid = potential.grid
    lam_bar = wavelength / (2 * math.pi)
    spectrum = np.fft.fft(values)
    kinetic = lam_bar / (2 * potential.substrate_index) * grid.wavenumbers ** 2
    norm = float(np.sum(np.abs(values) ** 2))
    kinetic_part = float(np.sum(kinetic * np.abs(spectrum) ** 2)) / grid.points
    potential_part = float(np.sum(potential.samples * np.abs(values) ** 2)) / lam_bar
    return (kinetic_part + potential_part) / norm


def _relax(values, potential, wavelength, parity, step):
    grid = potential.grid
    lam_bar = wavelength / (2 * math.pi)
    kinetic = np.exp(
        -lam_bar / (2 * potential.substrate_index) * grid.wavenumbers ** 2 * step / 2
    )
    attraction = np.exp(-potential.samples / lam_bar * step)

    previous = None
    for count in range(1, MAX_STEPS + 1):
        values = np.fft.ifft(kinetic * np.fft.fft(values))
        values = values * attraction
        values = np.fft.ifft(kinetic * np.fft.fft(values))
        values = _project(values, grid, parity)
        values /= math.sqrt(float(np.sum(np.abs(values) ** 2)) * grid.spacing)

        if count % CHECK_EVERY == 0:
            current = rayleigh_quotient(values, potential, wavelength)
            if previous is not None and abs(current - previous) <= RAYLEIGH_TOLERANCE * abs(
                current
            ):
                return values, current, count
            previous = current

    logger.warning(
        "{} mode relaxation stopped after {} steps of {:.1e} m".format(
            parity, MAX_STEPS, step
        )
    )
    return values, rayleigh_quotient(values, potential, wavelength), MAX_STEPS


def bound_threshold(potential, wavelength):
    """ mu below -(lambda_bar / 2 n_s)(8 pi / W)^2 counts as bound """
    lam_bar = wavelength / (2 * math.pi)
    return -lam_bar / (2 * potential.substrate_index) * (
        8 * math.pi / potential.grid.width
    ) ** 2


def find_bound_mode(potential, wavelength, parity=EVEN):
    """
        Lowest mode of the given parity about x = 0

        :rtype: tuple
        :return: (normalised `SampledField`, mu in 1/m, bound flag)
    """
    grid = potential.grid
    x = grid.x
    scale = max(potential.well_width, 4 * grid.spacing)
    centers = potential.centers if potential.centers.size else np.zeros(1)
    envelope = sum(np.exp(-((x - center) ** 2) / (2 * scale ** 2)) for center in centers)
    guess = envelope.astype(complex)
    if parity == ODD:
        guess = guess * x / scale

    values, mu, coarse_steps = _relax(guess, potential, wavelength, parity, COARSE_STEP)
    values, mu, fine_steps = _relax(values, potential, wavelength, parity, FINE_STEP)
    logger.debug(
        "{} mode: mu = {!r} 1/m after {} + {} steps".format(
            parity, mu, coarse_steps, fine_steps
        )
    )

    mode = SampledField.on_grid(grid, values, 0.0, wavelength)
    return mode, mu, mu < bound_threshold(potential, wavelength)


@lru_cache(maxsize=32)
def _cached_fundamental(spec, grid):
    potential = single_well(spec, grid)
    mode, mu, bound = find_bound_mode(potential, spec.wavelength_lambda, EVEN)
    if not bound:
        raise ModelError(
            "well (dn = {:.3g}, w = {:.3g} m) guides no mode at {:.4g} m; "
            "run `calibrate` to refit the potential".format(
                spec.well_depth_dn, spec.well_width_w, spec.wavelength_lambda
            )
        )
    effective_index = spec.substrate_index_ns - spec.wavelength_lambda / (2 * math.pi) * mu
    return mode, effective_index


def fundamental_mode(spec, wavelength=None, grid=None):
    """
        Even bound mode of one isolated well and its effective index

        :raises `dynloc.exceptions.ModelError`: the well guides nothing
    """
    grid = grid or TransverseGrid()
    key = replace(
        spec,
        wavelength_lambda=wavelength or spec.wavelength_lambda,
        site_count=1,
        sample_length_L=1.0,
    )
    return _cached_fundamental(key, grid)


def supermode_coupling(spec, well_depth, well_width, wavelength, grid=SUPERMODE_GRID):
    """
        Coupling of two wells at +-a/2 from their supermode splitting,
        Delta = (mu_odd - mu_even) / 2

        :raises `dynloc.exceptions.ModelError`
    """
    potential = well_pair(spec, grid, well_depth, well_width)
    _, mu_even, even_bound = find_bound_mode(potential, wavelength, EVEN)
    _, mu_odd, odd_bound = find_bound_mode(potential, wavelength, ODD)
    if not (even_bound and odd_bound):
        raise ModelError(
            "well pair (dn = {:.3g}, w = {:.3g} m) has no bound supermodes at "
            "{:.4g} m".format(well_depth, well_width, wavelength)
        )
    return (mu_odd - mu_even) / 2
