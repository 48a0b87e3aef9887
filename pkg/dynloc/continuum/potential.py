"""
    Gaussian-well index profile of the array
"""

import math
from dataclasses import dataclass

import numpy as np

from ..exceptions import ConfigError

# wells closer than this many widths to the absorber are rejected
EDGE_CLEARANCE_WIDTHS = 3


@dataclass(frozen=True, eq=False)
class PotentialProfile:
    """
        V(x) = -dn sum_j exp(-(x - x_j)^2 / w^2) sampled on `grid`,
        index units, V ~ n_s - n(x)
    """

    samples: np.ndarray
    grid: object
    centers: np.ndarray
    well_depth: float
    well_width: float
    substrate_index: float

    @property
    def extent(self):
        """ Largest |x| reached by a well, with its Gaussian skirt """
        if self.centers.size == 0:
            return 0.0
        return float(np.max(np.abs(self.centers))) + EDGE_CLEARANCE_WIDTHS * self.well_width


def gaussian_wells(grid, centers, well_depth, well_width, substrate_index):
    x = grid.x
    samples = np.zeros(grid.points)
    for center in centers:
        samples -= well_depth * np.exp(-((x - center) ** 2) / well_width ** 2)
    return PotentialProfile(
        samples,
        grid,
        np.asarray(centers, dtype=float),
        well_depth,
        well_width,
        substrate_index,
    )


def flat_potential(grid, substrate_index):
    return PotentialProfile(
        np.zeros(grid.points), grid, np.zeros(0), 0.0, 0.0, substrate_index
    )


def build_potential(spec, grid, margin=0.0):
    """
        Potential of every site of `spec`, site n at x = n a

        :param float margin: extra room required on each side (absorber,
            bending excursion)
        :raises `dynloc.exceptions.ConfigError`: wells do not fit
    """
    potential = gaussian_wells(
        grid,
        spec.site_positions,
        spec.well_depth_dn,
        spec.well_width_w,
        spec.substrate_index_ns,
    )
    if potential.extent + margin > grid.width / 2:
        raise ConfigError(
            "grid half-width {:.4g} m cannot hold wells up to {:.4g} m plus {:.4g} m "
            "margin; use more points or fewer sites".format(
                grid.width / 2, potential.extent, margin
            )
        )
    return potential


def single_well(spec, grid):
    return gaussian_wells(
        grid, [0.0], spec.well_depth_dn, spec.well_width_w, spec.substrate_index_ns
    )


def well_pair(spec, grid, well_depth, well_width):
    half = spec.site_period_a / 2
    if half + EDGE_CLEARANCE_WIDTHS * well_width > grid.width / 2:
        raise ConfigError("supermode grid too small for the well pair")
    return gaussian_wells(
        grid, [-half, half], well_depth, well_width, spec.substrate_index_ns
    )


def step_phase(samples, step, wavelength):
    """ Largest potential phase per step, |V| dz / lambda_bar """
    return float(np.max(np.abs(samples))) * step * 2 * math.pi / wavelength
