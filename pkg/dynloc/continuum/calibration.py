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
    Gaussian-well calibration.

    The well depth and width are fitted so that the coupling of two
    neighbouring wells reproduces measured Delta(lambda) values, then the
    fit is checked by a straight-array beam propagation read back through
    `fit_coupling`.
"""

import codecs
import logging
import math
import os
from dataclasses import dataclass, replace

import numpy as np
import yaml
from scipy.optimize import least_squares
from voluptuous import All, Invalid, Length, Range, Required, Schema

from ..exceptions import CalibrationError, CalibrationMissingError, ModelError
from ..geometry import BendingProfile
from .fitting import fit_coupling
from .grid import TransverseGrid
from .modes import SUPERMODE_GRID, supermode_coupling
from .observables import mode_input, site_powers
from .potential import build_potential
from .propagation import BpmConfig, propagate

logger = logging.getLogger(__name__)

# (wavelength [m], Delta [1/m])
DEFAULT_TARGETS = ((1440e-9, 175.0), (1610e-9, 300.0))

START = (2.5, 3.5)  # dn * 1e3, w * 1e6
LOWER = (0.5, 1.5)
UPPER = (20.0, 6.0)
DEPTH_SCALE = 1e-3
WIDTH_SCALE = 1e-6
MODEL_FAILURE_RESIDUAL = 10.0

CLOSURE_LENGTH = 0.028
CLOSURE_SITES = 80
CLOSURE_CORRECTION_LEVEL = 0.02
ACCEPTED_RESIDUAL = 0.05

_STRAIGHT = BendingProfile.straight()

_POINT = Schema({Required("wavelength"): float, Required("delta"): float})
CALIBRATION_SCHEMA = Schema(
    {
        Required("well_depth_dn"): All(float, Range(min=0, min_included=False)),
        Required("well_width_w"): All(float, Range(min=0, min_included=False)),
        Required("targets"): All([_POINT], Length(min=1)),
        Required("achieved"): [_POINT],
        Required("residual"): All(float, Range(min=0)),
    }
)


@dataclass(frozen=True)
class Calibration:
    well_depth_dn: float
    well_width_w: float
    targets: tuple
    achieved: tuple
    residual: float

    def as_dict(self):
        return {
            "well_depth_dn": float(self.well_depth_dn),
            "well_width_w": float(self.well_width_w),
            "targets": [
                {"wavelength": float(wl), "delta": float(delta)} for wl, delta in self.targets
            ],
            "achieved": [
                {"wavelength": float(wl), "delta": float(delta)} for wl, delta in self.achieved
            ],
            "residual": float(self.residual),
        }


def apply_calibration(spec, calibration):
    """ `spec` with the calibrated well depth and width """
    return replace(
        spec,
        well_depth_dn=calibration.well_depth_dn,
        well_width_w=calibration.well_width_w,
    )


def _upper_bounds(spec):
    width_cap = 0.9 * spec.site_period_a / WIDTH_SCALE
    return UPPER[0], min(UPPER[1], width_cap)


def _solve_wells(spec, targets, grid):
    """ Least squares on log(Delta_model / Delta_target), parameters in (1e-3, um) units """

    def residuals(params):
        depth, width = params[0] * DEPTH_SCALE, params[1] * WIDTH_SCALE
        values = []
        for wavelength, target in targets:
            try:
                delta = supermode_coupling(spec, depth, width, wavelength, grid)
            except ModelError:
                values.append(MODEL_FAILURE_RESIDUAL)
                continue
            if delta <= 0:
                values.append(MODEL_FAILURE_RESIDUAL)
                continue
            values.append(math.log(delta / target))
        logger.debug(
            "calibration trial dn = {:.4g}, w = {:.4g} m: {}".format(
                depth, width, ["{:.3g}".format(value) for value in values]
            )
        )
        return np.array(values)

    upper = _upper_bounds(spec)
    start = [min(max(START[0], LOWER[0]), upper[0]), min(max(START[1], LOWER[1]), upper[1])]
    result = least_squares(residuals, start, bounds=(LOWER, upper), xtol=1e-10, ftol=1e-12)
    depth, width = result.x[0] * DEPTH_SCALE, result.x[1] * WIDTH_SCALE
    logger.info(
        "supermode fit: dn = {:.5g}, w = {:.5g} m, cost {:.3g}".format(depth, width, result.cost)
    )
    return depth, width


def closure_delta(spec, wavelength, grid=None, length=CLOSURE_LENGTH, site_count=CLOSURE_SITES):
    """
        Delta read back from a straight-array propagation launched in site 0

        :rtype: float
    """
    grid = grid or TransverseGrid()
    straight = replace(
        spec,
        wavelength_lambda=wavelength,
        site_count=site_count,
        sample_length_L=length,
    )
    config = BpmConfig.default_for(_STRAIGHT, grid)
    potential = build_potential(straight, grid, margin=config.absorber_width)
    field = mode_input(straight, grid)
    trajectory = propagate(field, potential, _STRAIGHT, config, length)
    powers = site_powers(trajectory.final, straight)
    return fit_coupling(powers, length, straight.site_indices).delta


def _closure(spec, targets, grid, length, site_count):
    achieved = []
    for wavelength, _ in targets:
        achieved.append((wavelength, closure_delta(spec, wavelength, grid, length, site_count)))
    if any(delta <= 0 for _, delta in achieved):
        raise CalibrationError("propagation closure found no coupling: {}".format(achieved))
    misses = [abs(delta / target - 1) for (_, delta), (_, target) in zip(achieved, targets)]
    return tuple(achieved), max(misses)


def calibrate_potential(
    spec,
    targets=None,
    supermode_grid=SUPERMODE_GRID,
    closure_grid=None,
    closure_length=CLOSURE_LENGTH,
    closure_sites=CLOSURE_SITES,
):
    """
        Fit (dn, w) to Delta(lambda) targets and verify by propagation

        :param `ArraySpec` spec: array whose period and substrate index are used
        :param targets: sequence of (wavelength, Delta) pairs
        :rtype: `Calibration`
        :raises `dynloc.exceptions.CalibrationError`: closure misses by more than 5%
    """
    targets = tuple((float(wl), float(delta)) for wl, delta in (DEFAULT_TARGETS if targets is None else targets))
    if not targets:
        raise CalibrationError("no calibration targets")
    logger.info("calibrating wells against {} target(s)".format(len(targets)))

    depth, width = _solve_wells(spec, targets, supermode_grid)
    trial = replace(spec, well_depth_dn=depth, well_width_w=width)
    achieved, miss = _closure(trial, targets, closure_grid, closure_length, closure_sites)

    if miss > CLOSURE_CORRECTION_LEVEL:
        logger.info(
            "propagation closure misses by {:.1%}; correcting targets once".format(miss)
        )
        corrected = tuple(
            (wl, target * target / delta) for (wl, target), (_, delta) in zip(targets, achieved)
        )
        depth, width = _solve_wells(spec, corrected, supermode_grid)
        trial = replace(spec, well_depth_dn=depth, well_width_w=width)
        achieved, miss = _closure(trial, targets, closure_grid, closure_length, closure_sites)

    calibration = Calibration(depth, width, targets, achieved, miss)
    if miss > ACCEPTED_RESIDUAL:
        raise CalibrationError(
            "calibration closure residual {:.1%} above {:.0%} (dn = {:.4g}, w = {:.4g} m)".format(
                miss, ACCEPTED_RESIDUAL, depth, width
            )
        )
    logger.info(
        "calibrated dn = {:.5g}, w = {:.5g} m, closure residual {:.2%}".format(depth, width, miss)
    )
    return calibration


def write_calibration(calibration, path):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with codecs.open(path, "w", "utf8") as handle:
        yaml.safe_dump(calibration.as_dict(), handle, default_flow_style=False, sort_keys=True)
    logger.info("calibration written to {}".format(path))
    return path


def read_calibration(path):
    """
        :raises `dynloc.exceptions.CalibrationMissingError`: no file at `path`
        :raises `dynloc.exceptions.CalibrationError`: the file is malformed
    """
    if not os.path.exists(path):
        raise CalibrationMissingError(
            "no calibration at {}; run `python main.py calibrate` first".format(path)
        )
    try:
        with codecs.open(path, "r", "utf8") as handle:
            data = CALIBRATION_SCHEMA(yaml.safe_load(handle))
    except (yaml.YAMLError, Invalid) as exc:
        raise CalibrationError("malformed calibration file {}: {}".format(path, exc))
    return Calibration(
        data["well_depth_dn"],
        data["well_width_w"],
        tuple((point["wavelength"], point["delta"]) for point in data["targets"]),
        tuple((point["wavelength"], point["delta"]) for point in data["achieved"]),
        data["residual"],
    )
