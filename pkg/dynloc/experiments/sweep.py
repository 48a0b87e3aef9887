"""
    Parameter sweeps: one scenario evaluation per value, rows in value order
"""

import logging
import math

import numpy as np

from .. import analytics, continuum, geometry, tasks
from ..exceptions import DynlocError, UnsupportedProfileError
from ..geometry import ProfileKind
from .dataset import Dataset, Plot, Table, base_provenance
from .evaluate import calibrated_spec, run_continuum, run_lattice
from .scenario import AXIS_COLUMNS, GaussianBeam

logger = logging.getLogger(__name__)

LATTICE_COLUMNS = (
    ("Gamma", "1"),
    ("delta", "1/m"),
    ("delta_eff", "1/m"),
    ("dl_integral_abs", "m"),
    ("msd_ode", "1"),
    ("msd_closed", "1"),
    ("sqrt_msd", "1"),
    ("return_probability", "1"),
)
CONTINUUM_COLUMNS = (
    ("bpm_msd", "1"),
    ("bpm_return_probability", "1"),
    ("bpm_width", "m"),
)
ERROR_COLUMN = ("error", "text")


def sweep_columns(config):
    columns = [AXIS_COLUMNS[config.sweep.axis]]
    columns.extend(LATTICE_COLUMNS)
    if config.engine.uses_continuum:
        columns.extend(CONTINUUM_COLUMNS)
    columns.append(ERROR_COLUMN)
    return tuple(columns)


def _drive(point, delta):
    profile = point.profile
    gamma = float("nan")
    if profile.kind == ProfileKind.SINUSOIDAL:
        gamma = geometry.big_gamma(point.spec, profile)
    elif profile.kind == ProfileKind.STRAIGHT:
        gamma = 0.0
    try:
        diagnostics = analytics.dl_diagnostics(point.spec, profile, delta)
    except UnsupportedProfileError:
        return gamma, float("nan"), float("nan")
    return gamma, diagnostics.effective_delta, abs(diagnostics.dl_integral_value)


def _reference_column(indices, config):
    site = 0 if isinstance(config.excitation, GaussianBeam) else config.excitation.site
    return int(np.searchsorted(indices, site))


def _lattice_values(point, delta):
    gamma, delta_eff, dl_abs = _drive(point, delta)
    length = point.spec.sample_length_L
    msd = closed = returned = float("nan")
    if point.engine.uses_tight_binding:
        trajectory = run_lattice(point, delta, z_grid=np.array([0.0, length]))
        msd = float(trajectory.msd_series()[-1])
        returned = float(
            trajectory.site_powers()[-1][_reference_column(trajectory.indices, point)]
        )
        if not isinstance(point.excitation, GaussianBeam) and point.excitation.site == 0:
            try:
                closed = analytics.msd_closed_form(length, delta, point.spec, point.profile)
            except UnsupportedProfileError:
                pass
    sqrt_msd = math.sqrt(msd) if msd >= 0 else float("nan")
    return (gamma, delta, delta_eff, dl_abs, msd, closed, sqrt_msd, returned)


def _continuum_values(point, calibration):
    spec = calibrated_spec(point, calibration)
    trajectory = run_continuum(point, spec)
    powers = continuum.site_powers(trajectory.final, spec, point.profile)
    indices = spec.site_indices
    total = float(np.sum(powers))
    msd = float(np.sum(indices ** 2 * powers)) / total
    returned = float(powers[_reference_column(indices, point)]) / total
    return (msd, returned, continuum.site_width(powers, spec))


def point_row(config, value, calibration=None):
    """
        One sweep row; failures of the physics layer give a row of nan
        carrying the error message

        :rtype: tuple
    """
    columns = sweep_columns(config)
    try:
        point = config.at_point(value)
        delta, _ = point.coupling()
        values = _lattice_values(point, delta)
        if config.engine.uses_continuum:
            values += _continuum_values(point, calibration)
    except DynlocError as ex:
        logger.warning("sweep point {} = {!r} failed: {}".format(config.sweep.axis.value, value, ex))
        return (float(value),) + (float("nan"),) * (len(columns) - 2) + (str(ex),)
    return (float(value),) + tuple(float(item) for item in values) + ("",)


def sweep(config, calibration=None, jobs=None, table_name="sweep"):
    """
        Evaluate `config` at every value of its sweep axis

        :param int jobs: worker processes, default from the queue settings
        :rtype: `Dataset`
    """
    values = tuple(float(value) for value in config.sweep.values)
    logger.info(
        "sweeping {} over {} value(s)".format(config.sweep.axis.value, len(values))
    )
    calibrated_spec(config, calibration)

    payloads = [(config, value, index, calibration) for index, value in enumerate(values)]
    results = tasks.map_ordered("sweep.evaluate_point", payloads, jobs)

    columns = sweep_columns(config)
    table = Table(table_name, columns)
    for (_, value, _, _), result in zip(payloads, results):
        if result is None:
            row = (value,) + (float("nan"),) * (len(columns) - 2) + ("worker job failed",)
        else:
            _, row = result
        table.add_row(*row)

    dataset = Dataset(config.name, base_provenance(config, config.numerics.tolerance))
    dataset.provenance["sweep_axis"] = config.sweep.axis.value
    dataset.provenance["delta_extrapolated"] = any(
        _extrapolated(config, value) for value in values
    )
    if calibration is not None and config.engine.uses_continuum:
        dataset.provenance["calibration"] = calibration.as_dict()
    dataset.add_table(table)
    axis = columns[0][0]
    dataset.plots.append(
        Plot(table_name, table_name, "line", axis, ("sqrt_msd", "return_probability"), config.name)
    )
    failures = sum(1 for row in table.rows if row[-1])
    if failures:
        dataset.note("{} of {} sweep point(s) failed".format(failures, len(values)))
    return dataset


def _extrapolated(config, value):
    try:
        return config.at_point(value).coupling()[1]
    except DynlocError:
        return False
