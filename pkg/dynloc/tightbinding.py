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
    Nearest-neighbour coupled-mode engine.

    Integrates db_n/dz = i Delta (exp(i gamma) b_{n+1} + exp(-i gamma) b_{n-1})
    with fixed-step RK4, plus the exact impulse-response oracles.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from . import analytics, geometry
from .exceptions import (
    ConfigError,
    DomainError,
    LatticeTruncationError,
    UndefinedObservableError,
)
from .geometry import ProfileKind
from .special import bessel_j, bessel_j_signed

logger = logging.getLogger(__name__)

EDGE_ERROR_LEVEL = 1e-6
EDGE_WARNING_LEVEL = 1e-8
MIN_STEPS_PER_SCALE = 200
MAX_REGROWTHS = 3
LATTICE_MARGIN = 15
# keeps zigzag stage points off the kinks
KINK_OFFSET = 1e-9


@dataclass(frozen=True, eq=False)
class SiteState:
    """ Amplitudes on sites n = -n_half .. n_half """

    amplitudes: np.ndarray
    z_position: float = 0.0

    def __post_init__(self):
        amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if amplitudes.ndim != 1 or amplitudes.size % 2 != 1:
            raise DomainError("site state needs an odd number of amplitudes")
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def single_site(cls, n_half, site=0):
        amplitudes = np.zeros(2 * n_half + 1, dtype=complex)
        if abs(site) > n_half:
            raise DomainError("site {} outside lattice +-{}".format(site, n_half))
        amplitudes[site + n_half] = 1.0
        return cls(amplitudes)

    @property
    def n_half(self):
        return (self.amplitudes.size - 1) // 2

    @property
    def indices(self):
        return np.arange(-self.n_half, self.n_half + 1)

    @property
    def powers(self):
        return np.abs(self.amplitudes) ** 2


@dataclass(frozen=True, eq=False)
class SiteTrajectory:
    z_grid: np.ndarray
    amplitudes: np.ndarray
    coupling_delta: float
    norm_drift: float = 0.0
    edge_power: float = 0.0
    step_count: int = 0

    @property
    def n_half(self):
        return (self.amplitudes.shape[1] - 1) // 2

    @property
    def indices(self):
        return np.arange(-self.n_half, self.n_half + 1)

    @property
    def states(self):
        return [
            SiteState(row, float(z_value))
            for z_value, row in zip(self.z_grid, self.amplitudes)
        ]

    @property
    def final_state(self):
        return SiteState(self.amplitudes[-1], float(self.z_grid[-1]))

    def site_powers(self):
        return np.abs(self.amplitudes) ** 2

    def msd_series(self):
        powers = self.site_powers()
        return (powers @ self.indices ** 2) / powers.sum(axis=1)


def default_half_width(delta, spec, profile):
    """ ceil(2 Delta L max(1, |J0(Gamma)|)) + 15 """
    scale = 1.0
    if profile.kind == ProfileKind.SINUSOIDAL:
        scale = max(1.0, abs(bessel_j(0, geometry.big_gamma(spec, profile))))
    return int(math.ceil(2 * delta * spec.sample_length_L * scale)) + LATTICE_MARGIN


def _step_size(delta, spec, profile, z_end, tol):
    scales = [1.0 / delta]
    if profile.period_Lambda is not None:
        scales.append(profile.period_Lambda)
    rate = geometry.max_gamma_rate(spec, profile, z_end)
    if rate > 0:
        scales.append(1.0 / rate)

    frequency = 2 * delta + rate
    accuracy = (120 * tol / (max(z_end, 1e-300) * frequency ** 5)) ** 0.25
    return min(min(scales) / MIN_STEPS_PER_SCALE, accuracy)


def _breakpoints(profile, z_grid):
    points = [z_grid]
    kink_list = [
        z for z in geometry.kinks(profile, z_grid[-1]) if z_grid[0] < z < z_grid[-1]
    ]
    points.append(np.array(kink_list))
    return np.unique(np.concatenate(points))


def _rhs(amplitudes, delta, forward, backward):
    shifted = np.zeros_like(amplitudes)
    shifted[:-1] += forward * amplitudes[1:]
    shifted[1:] += backward * amplitudes[:-1]
    return 1j * delta * shifted


def _integrate_interval(amplitudes, delta, spec, profile, low, high, step, offset):
    count = max(1, int(math.ceil((high - low) / step)))
    width = (high - low) / count
    starts = low + width * np.arange(count)

    stages = (0.0, 0.5, 1.0)
    if profile.kind == ProfileKind.ZIGZAG:
        stages = (KINK_OFFSET, 0.5, 1.0 - KINK_OFFSET)
    phases = [
        np.exp(1j * (geometry.gamma_unchecked(spec, profile, starts + c * width) + offset))
        for c in stages
    ]

    edge_power = 0.0
    for index in range(count):
        head, middle, tail = phases[0][index], phases[1][index], phases[2][index]
        k1 = _rhs(amplitudes, delta, head, np.conj(head))
        k2 = _rhs(amplitudes + 0.5 * width * k1, delta, middle, np.conj(middle))
        k3 = _rhs(amplitudes + 0.5 * width * k2, delta, middle, np.conj(middle))
        k4 = _rhs(amplitudes + width * k3, delta, tail, np.conj(tail))
        amplitudes = amplitudes + width * (k1 + 2 * k2 + 2 * k3 + k4) / 6
        edge_power = max(edge_power, abs(amplitudes[0]) ** 2 + abs(amplitudes[-1]) ** 2)
    return amplitudes, count, edge_power


def _check_grid(initial, spec, z_grid):
    z_grid = np.asarray(z_grid, dtype=float)
    if z_grid.ndim != 1 or z_grid.size == 0:
        raise ConfigError("z grid must be a non-empty sequence")
    if np.any(np.diff(z_grid) <= 0):
        raise ConfigError("z grid must be strictly increasing")
    if z_grid[0] < initial.z_position:
        raise ConfigError("z grid starts before the initial state")
    if z_grid[-1] > spec.sample_length_L * (1 + geometry.LENGTH_SLACK):
        raise DomainError(
            "z grid ends at {} beyond L = {}".format(z_grid[-1], spec.sample_length_L)
        )
    return z_grid


def evolve(initial, delta, spec, profile, z_grid, tol=1e-10, gamma_offset=0.0):
    """
        Integrate the coupled-mode equations and record the state on z_grid

        :param `SiteState` initial: state at initial.z_position
        :param float delta: coupling constant (1/m)
        :param z_grid: increasing distances in [initial.z_position, L]
        :param float tol: integrator tolerance in [1e-12, 1e-6]
        :param float gamma_offset: constant added to gamma (gauge check)
        :rtype: `SiteTrajectory`
        :raises `dynloc.exceptions.LatticeTruncationError`
        :raises `dynloc.exceptions.ConfigError`
    """
    if not 1e-12 <= tol <= 1e-6:
        raise ConfigError("tolerance {} outside [1e-12, 1e-6]".format(tol))
    if delta < 0:
        raise DomainError("coupling must be non-negative")
    z_grid = _check_grid(initial, spec, z_grid)

    amplitudes = initial.amplitudes.copy()
    start_power = float(np.sum(np.abs(amplitudes) ** 2))
    records = np.zeros((z_grid.size, amplitudes.size), dtype=complex)
    steps = 0
    # largest edge power over every RK4 step, not only the recorded rows
    step_edge_power = 0.0

    if delta == 0:
        records[:] = amplitudes
    else:
        step = _step_size(delta, spec, profile, z_grid[-1], tol)
        position = initial.z_position
        record_index = 0
        for point in _breakpoints(profile, np.concatenate(([position], z_grid))):
            if point > position:
                amplitudes, count, interval_edge = _integrate_interval(
                    amplitudes, delta, spec, profile, position, point, step, gamma_offset
                )
                steps += count
                step_edge_power = max(step_edge_power, interval_edge)
                position = point
            while record_index < z_grid.size and z_grid[record_index] <= position:
                records[record_index] = amplitudes
                record_index += 1

    powers = np.abs(records) ** 2
    norm_drift = float(np.max(np.abs(powers.sum(axis=1) - start_power)))
    edge_power = max(float(np.max(powers[:, 0] + powers[:, -1])), step_edge_power)
    n_half = initial.n_half

    logger.debug(
        "evolve: {} RK4 steps, lattice +-{}, norm drift {:.2e}, edge power {:.2e}".format(
            steps, n_half, norm_drift, edge_power
        )
    )
    if edge_power > EDGE_ERROR_LEVEL:
        raise LatticeTruncationError(
            "edge power {:.2e} on lattice +-{}; use at least +-{} sites".format(
                edge_power, n_half, int(n_half * 1.5) + LATTICE_MARGIN
            ),
            required_half_width=int(n_half * 1.5) + LATTICE_MARGIN,
        )
    if edge_power > EDGE_WARNING_LEVEL:
        logger.warning(
            "edge power {:.2e} on lattice +-{} is above {:.0e}".format(
                edge_power, n_half, EDGE_WARNING_LEVEL
            )
        )

    return SiteTrajectory(z_grid, records, delta, norm_drift, edge_power, steps)


def impulse_response(delta, spec, profile, z_grid, tol=1e-10, n_half=None):
    """
        `evolve` from a single excited site 0, regrowing the lattice when
        power reaches its edges

        :rtype: `SiteTrajectory`
    """
    n_half = n_half or default_half_width(delta, spec, profile)
    for attempt in range(MAX_REGROWTHS + 1):
        try:
            return evolve(SiteState.single_site(n_half), delta, spec, profile, z_grid, tol)
        except LatticeTruncationError as ex:
            if attempt == MAX_REGROWTHS:
                raise
            logger.warning(
                "regrowing lattice from +-{} to +-{}".format(
                    n_half, ex.required_half_width
                )
            )
            n_half = ex.required_half_width


def dk_oracle(n, z, delta, spec, profile):
    """ Exact impulse-response power J_n(2 Delta |w(z)|)^2 """
    argument = 2 * delta * abs(analytics.w_function(spec, profile, z))
    return bessel_j(n, argument) ** 2


def dk_site_powers(n_half, z, delta, spec, profile):
    """
        `dk_oracle` over n = -n_half .. n_half

        :param z: scalar, or array giving one row per distance
        :rtype: numpy.ndarray
    """
    indices = np.arange(-n_half, n_half + 1)
    w_values = np.atleast_1d(analytics.w_function(spec, profile, z))
    rows = np.array(
        [bessel_j_signed(indices, 2 * delta * abs(value)) ** 2 for value in w_values]
    )
    if np.ndim(z) == 0:
        return rows[0]
    return rows


def _normalised_powers(state):
    powers = state.powers
    total = float(np.sum(powers))
    if total <= 0 or not math.isfinite(total):
        raise UndefinedObservableError("state carries no power")
    if abs(total - 1) > 1e-12:
        logger.debug("renormalising state by {!r}".format(1 / total))
    return powers / total


def mean_square_site(state):
    """
        <n^2> of a state, after renormalisation

        :raises `dynloc.exceptions.UndefinedObservableError`
    """
    powers = _normalised_powers(state)
    return float(np.sum(state.indices ** 2 * powers))


def second_moment_width(powers, indices):
    """ sqrt(sum (n - mean)^2 P_n / sum P_n) """
    powers = np.asarray(powers, dtype=float)
    indices = np.asarray(indices, dtype=float)
    total = float(np.sum(powers))
    if total <= 0:
        raise UndefinedObservableError("no power to measure a width")
    mean = float(np.sum(indices * powers)) / total
    return math.sqrt(float(np.sum((indices - mean) ** 2 * powers)) / total)


def return_probability(trajectory):
    """ (z_grid, |c_0|^2) """
    return trajectory.z_grid, np.abs(trajectory.amplitudes[:, trajectory.n_half]) ** 2


def effective_approximation(n, z, delta, Gamma):
    """ Cycle-averaged power J_n(2 Delta J0(Gamma) z)^2 """
    argument = 2 * delta * bessel_j(0, Gamma) * np.asarray(z, dtype=float)
    if np.ndim(argument) == 0:
        return bessel_j(n, float(argument)) ** 2
    return np.array([bessel_j(n, value) ** 2 for value in argument])
