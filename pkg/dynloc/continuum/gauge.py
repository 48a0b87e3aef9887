"""
    Map between the lab frame and the frame moving with the bent axis.

    phi(x', z) = psi(x' + x0, z) exp(-i (n_s / lambda_bar) x0' x' - i theta(z)),
    theta(z) = (n_s / 2 lambda_bar) integral of x0'^2.
"""

import math

import numpy as np
from scipy.integrate import quad

from .. import geometry
from ..geometry import ProfileKind


def accumulated_phase(profile, substrate_index, wavelength, z):
    """ theta(z) = (n_s / 2 lambda_bar) integral_0^z x0'(t)^2 dt """
    if profile.kind == ProfileKind.STRAIGHT or z == 0:
        return 0.0
    points = [kink for kink in geometry.kinks(profile, z) if kink < z]
    value, _ = quad(
        lambda t: geometry.slope(profile, t) ** 2,
        0.0,
        z,
        points=points or None,
        limit=400,
        epsabs=0.0,
        epsrel=1e-12,
    )
    return substrate_index * math.pi / wavelength * value


def _frame_phase(field, profile, substrate_index, x):
    lam_bar = field.wavelength / (2 * math.pi)
    tilt = geometry.slope(profile, field.z_position)
    theta = accumulated_phase(profile, substrate_index, field.wavelength, field.z_position)
    return np.exp(-1j * (substrate_index / lam_bar * tilt * x + theta))


def kh_map(field, profile, spec):
    """
        Lab-frame field to the co-moving frame at field.z_position

        :rtype: `SampledField`
    """
    if profile.kind == ProfileKind.STRAIGHT:
        return field
    grid = field.grid
    offset = geometry.displacement(profile, field.z_position)
    shifted = grid.shift(field.amplitudes, -offset)
    phase = _frame_phase(field, profile, spec.substrate_index_ns, grid.x)
    return field.at(shifted * phase, field.z_position)


def kh_map_inverse(field, profile, spec):
    """ Co-moving-frame field back to the lab frame """
    if profile.kind == ProfileKind.STRAIGHT:
        return field
    grid = field.grid
    offset = geometry.displacement(profile, field.z_position)
    phase = _frame_phase(field, profile, spec.substrate_index_ns, grid.x)
    restored = grid.shift(field.amplitudes / phase, offset)
    return field.at(restored, field.z_position)
