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
    Subcommand dispatch; the one place where exceptions become exit codes
"""

import codecs
import csv
import logging
import sys
from dataclasses import dataclass, field, replace

from . import create_app
from .analytics import FreeParameter, solve_dl_parameter
from .continuum import calibrate_potential, fit_coupling, read_calibration, write_calibration
from .exceptions import CalibrationMissingError, DynlocError, SettingsError, ValidationError
from .experiments import Engine, Numerics, evaluate, reproduce_figure, sweep
from .experiments import presets
from .output import emit_dataset
from .parsers import load_scenario
from .services.storage.base import StorageServiceException
from .utils.units import DIMENSIONLESS, INVERSE_LENGTH, LENGTH, UnitError, parse_quantity

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_ENVIRONMENT = 2

SUBCOMMANDS = ("simulate", "sweep", "fit-coupling", "design", "reproduce", "calibrate")

FIT_COLUMNS = ("n[1]", "power[1]")

DISPLAY_UNITS = {
    FreeParameter.WAVELENGTH: (1e-9, "nm"),
    FreeParameter.PERIOD: (1e-3, "mm"),
    FreeParameter.AMPLITUDE: (1e-6, "um"),
}


@dataclass
class CliInvocation:
    """
        One command line, already split by click.

        `options` carries the subcommand specific arguments (figure id,
        design bracket, fit table ...).
    """

    subcommand: str
    config_path: str = None
    output_dir: str = None
    overrides: tuple = ()
    plots: bool = False
    engine: str = None
    tolerance: float = None
    jobs: int = None
    settings: str = None
    environment: str = "default"
    options: dict = field(default_factory=dict)


def _numerics(numerics, invocation):
    if invocation.tolerance is None:
        return numerics
    return replace(numerics, tolerance=invocation.tolerance)


def _scenario(invocation):
    config = load_scenario(invocation.config_path, invocation.overrides)
    changes = {"numerics": _numerics(config.numerics, invocation)}
    if invocation.engine:
        changes["engine"] = Engine(invocation.engine)
    return replace(config, **changes)


def _calibration(app, engine, required=True):
    """ Calibration of the settings file, None when `engine` does not need it """
    if engine is not None and not Engine(engine).uses_continuum:
        return None
    try:
        return read_calibration(app.config["CALIBRATION"]["file"])
    except CalibrationMissingError:
        if required:
            raise
        return None


def _emit(dataset, invocation):
    written = emit_dataset(dataset, invocation.output_dir, invocation.plots)
    print("{}: {} file(s) written".format(dataset.name, len(written)))
    for note in dataset.provenance.get("notes", ()):
        print("  note: {}".format(note))


def do_simulate(app, invocation):

    config = _scenario(invocation)
    calibration = _calibration(app, config.engine)
    if config.sweep is not None:
        dataset = sweep(config, calibration, jobs=invocation.jobs)
    else:
        dataset = evaluate(config, calibration)
    _emit(dataset, invocation)


def do_sweep(app, invocation):

    config = _scenario(invocation)
    if config.sweep is None:
        raise ValidationError("scenario {} has no sweep section".format(config.name))
    dataset = sweep(config, _calibration(app, config.engine), jobs=invocation.jobs)
    _emit(dataset, invocation)


def do_reproduce(app, invocation):

    figure = invocation.options["figure"]
    numerics = None
    if invocation.tolerance is not None:
        numerics = Numerics(tolerance=invocation.tolerance)
    # presets without a continuum run need no calibration; the others raise
    calibration = _calibration(app, invocation.engine, required=False)
    dataset = reproduce_figure(
        figure,
        engine=invocation.engine,
        calibration=calibration,
        numerics=numerics,
        jobs=invocation.jobs,
    )
    _emit(dataset, invocation)


def read_fit_table(path):
    """
        Site powers of a CSV table with `n[1]` and `power[1]` columns

        :rtype: tuple
        :return: (indices, powers)
        :raises `dynloc.exceptions.ValidationError`
    """
    with codecs.open(path, "r", "utf8") as handle:
        reader = csv.DictReader(handle)
        missing = [name for name in FIT_COLUMNS if name not in (reader.fieldnames or ())]
        if missing:
            raise ValidationError(
                "{}: missing column(s) {}".format(path, ", ".join(missing))
            )
        indices, powers = [], []
        for line, row in enumerate(reader, start=2):
            try:
                indices.append(int(row["n[1]"]))
                powers.append(float(row["power[1]"]))
            except (TypeError, ValueError):
                raise ValidationError("{}: unreadable row".format(path), line, 1)
    return indices, powers


def do_fit_coupling(app, invocation):

    try:
        length = parse_quantity(invocation.options["length"], LENGTH)
    except UnitError as ex:
        raise ValidationError("length {!r}: {}".format(invocation.options["length"], ex))
    indices, powers = read_fit_table(invocation.options["table"])
    fit = fit_coupling(powers, length, indices)
    print(
        "Delta = {:.6g} 1/m ({:.6g} 1/cm), residual {:.3g}{}".format(
            fit.delta, fit.delta / 100, fit.residual, " (poor fit)" if fit.poor_fit else ""
        )
    )


def _design_pair(invocation):
    if invocation.config_path:
        config = _scenario(invocation)
        return config.spec, config.profile
    wavelength = presets.FIGURE_WAVELENGTHS[0]
    return presets.array_spec(wavelength), presets.short_period_profile()


def parse_bracket(text, free):
    """ `1.4um:1.7um` as a (low, high) pair in SI units """
    dimension = DIMENSIONLESS if free == FreeParameter.TILT else LENGTH
    parts = text.split(":")
    if len(parts) != 2:
        raise ValidationError("bracket {!r} is not of the form low:high".format(text))
    try:
        return tuple(parse_quantity(part, dimension) for part in parts)
    except UnitError as ex:
        raise ValidationError("bracket {!r}: {}".format(text, ex))


def do_design(app, invocation):

    free = FreeParameter(invocation.options["free"])
    bracket = parse_bracket(invocation.options["bracket"], free)
    spec, profile = _design_pair(invocation)
    value = solve_dl_parameter(spec, profile, free, bracket)
    if free in DISPLAY_UNITS:
        scale, unit = DISPLAY_UNITS[free]
        print("{} = {:.6g} {}".format(free.value, value / scale, unit))
    else:
        print("{} = {:.6g}".format(free.value, value))


def parse_target(text):
    """ `1610nm:3percm` as a (wavelength, Delta) pair """
    parts = text.split(":")
    if len(parts) != 2:
        raise ValidationError("target {!r} is not of the form lambda:delta".format(text))
    try:
        return parse_quantity(parts[0], LENGTH), parse_quantity(parts[1], INVERSE_LENGTH)
    except UnitError as ex:
        raise ValidationError("target {!r}: {}".format(text, ex))


def do_calibrate(app, invocation):

    targets = [parse_target(text) for text in invocation.options.get("targets", ())]
    if invocation.config_path:
        spec = _scenario(invocation).spec
    else:
        spec = presets.array_spec(presets.FIGURE_WAVELENGTHS[0])
    calibration = calibrate_potential(spec, targets or None)
    path = invocation.options.get("file") or app.config["CALIBRATION"]["file"]
    write_calibration(calibration, path)
    print(
        "dn = {:.6g}, w = {:.6g} um, closure residual {:.2%} -> {}".format(
            calibration.well_depth_dn, calibration.well_width_w * 1e6, calibration.residual, path
        )
    )


HANDLERS = {
    "simulate": do_simulate,
    "sweep": do_sweep,
    "fit-coupling": do_fit_coupling,
    "design": do_design,
    "reproduce": do_reproduce,
    "calibrate": do_calibrate,
}


def _fail(code, ex):
    logger.error("{}: {}".format(ex.__class__.__name__, ex))
    sys.stderr.write("error: {}\n".format(ex))
    return code


def run(invocation):
    """
        Execute a subcommand

        :param `CliInvocation` invocation: parsed command line
        :rtype: int
        :return: 0 on success, 1 on physics or validation failures,
            2 on environment and I/O errors
    """
    handler = HANDLERS.get(invocation.subcommand)
    if handler is None:
        return _fail(EXIT_FAILURE, ValueError("unknown subcommand {}".format(invocation.subcommand)))

    try:
        app = create_app(invocation.settings, invocation.environment)
        if invocation.jobs is None:
            invocation = replace(invocation, jobs=app.config["NUMERICS"]["jobs"])
        handler(app, invocation)
    except DynlocError as ex:
        return _fail(EXIT_FAILURE, ex)
    except (SettingsError, OSError, StorageServiceException) as ex:
        return _fail(EXIT_ENVIRONMENT, ex)
    return EXIT_OK
