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
    Evaluation of a single scenario with one or both engines
"""

import logging
from dataclasses import dataclass

import numpy as np

from .. import analytics, tightbinding
from .. import continuum
from ..exceptions import (
    CalibrationMissingError,
    LatticeTruncationError,
    UnsupportedProfileError,
)
from ..geometry import ProfileKind
from .dataset import Dataset, Plot, Table, base_provenance, finite_or_none
from .scenario import GaussianBeam, Observable

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EngineRuns:
    delta: float
    lattice: object = None
    fields: object = None
    spec: object = None


def _initial_state(excitation, n_half, spec):
    if isinstance(excitation, GaussianBeam):
        indices = np.arange(-n_half, n_half + 1)
        return tightbinding.SiteState(excitation.site_amplitudes(spec, indices))
    return tightbinding.SiteState.single_site(n_half, excitation.site)


def _lattice_half_width(config, delta, spec):
    if config.numerics.n_half:
        return config.numerics.n_half
    half = tightbinding.default_half_width(delta, spec, config.profile)
    excitation = config.excitation
    if isinstance(excitation, GaussianBeam):
        reach = (abs(excitation.center) + 3 * excitation.width_wx) / spec.site_period_a
        half += int(np.ceil(reach))
    else:
        half += abs(excitation.site)
    return half


def run_lattice(config, delta, spec=None, z_grid=None):
    """
        Tight-binding evolution of the scenario's excitation, regrowing the
        lattice on truncation

        :rtype: `dynloc.tightbinding.SiteTrajectory`
    """
    spec = spec or config.spec
    if z_grid is None:
        z_grid = np.linspace(0.0, spec.sample_length_L, config.numerics.z_points)
    n_half = _lattice_half_width(config, delta, spec)
    for attempt in range(tightbinding.MAX_REGROWTHS + 1):
        initial = _initial_state(config.excitation, n_half, spec)
        try:
            return tightbinding.evolve(
                initial, delta, spec, config.profile, z_grid, config.numerics.tolerance
            )
        except LatticeTruncationError as ex:
            if attempt == tightbinding.MAX_REGROWTHS:
                raise
            logger.warning(
                "regrowing lattice from +-{} to +-{}".format(n_half, ex.required_half_width)
            )
            n_half = ex.required_half_width


def continuum_setup(config, spec):
    """ (grid, potential, input field, BpmConfig) for a calibrated spec """
    numerics = config.numerics
    grid = continuum.TransverseGrid(numerics.grid_points, numerics.grid_spacing)
    bpm = continuum.BpmConfig.default_for(
        config.profile,
        grid,
        step_dz=numerics.step_dz,
        record_every=numerics.record_every,
        absorber_width=numerics.absorber_width,
    )
    potential = continuum.build_potential(spec, grid, margin=bpm.absorber_width or 0.0)
    excitation = config.excitation
    if isinstance(excitation, GaussianBeam):
        field = continuum.gaussian_input(
            excitation.width_wx, excitation.center, excitation.tilt, grid, spec
        )
    else:
        field = continuum.mode_input(spec, grid, excitation.site)
    return grid, potential, field, bpm


def run_continuum(config, spec):
    """ Lab-frame propagation to the sample end """
    _, potential, field, bpm = continuum_setup(config, spec)
    return continuum.propagate(field, potential, config.profile, bpm, spec.sample_length_L)


def calibrated_spec(config, calibration):
    if not config.engine.uses_continuum:
        return config.spec
    if calibration is None:
        raise CalibrationMissingError(
            "the {} engine needs a calibrated potential; run `python main.py calibrate`".format(
                config.engine.value
            )
        )
    return continuum.apply_calibration(config.spec, calibration)


def run_engines(config, calibration=None):
    delta, _ = config.coupling()
    spec = calibrated_spec(config, calibration)
    lattice = fields = None
    if config.engine.uses_tight_binding:
        lattice = run_lattice(config, delta)
    if config.engine.uses_continuum:
        fields = run_continuum(config, spec)
    return EngineRuns(delta, lattice, fields, spec)


def _reference_site(config):
    excitation = config.excitation
    return 0 if isinstance(excitation, GaussianBeam) else excitation.site


def _lattice_tables(dataset, config, runs):
    trajectory = runs.lattice
    outputs = config.outputs
    powers = trajectory.site_powers()
    indices = trajectory.indices

    if Observable.SITE_POWERS in outputs:
        final = dataset.add_table(Table("site_powers", (("n", "1"), ("power", "1"))))
        for n, power in zip(indices, powers[-1]):
            final.add_row(int(n), float(power))
        rows = dataset.add_table(
            Table("trajectory", (("z", "m"), ("n", "1"), ("power", "1")))
        )
        for z_value, row in zip(trajectory.z_grid, powers):
            for n, power in zip(indices, row):
                rows.add_row(float(z_value), int(n), float(power))
        dataset.plots.append(
            Plot("trajectory", "trajectory", "heatmap", "z", ("n", "power"), "site powers")
        )

    if Observable.MSD in outputs:
        closed = _closed_form_msd(config, runs.delta, trajectory.z_grid)
        columns = [("z", "m"), ("msd", "1")]
        if closed is not None:
            columns.append(("msd_closed", "1"))
        table = dataset.add_table(Table("msd", tuple(columns)))
        for index, (z_value, value) in enumerate(zip(trajectory.z_grid, trajectory.msd_series())):
            row = [float(z_value), float(value)]
            if closed is not None:
                row.append(float(closed[index]))
            table.add_row(*row)
        dataset.plots.append(
            Plot("msd", "msd", "line", "z", tuple(name for name, _ in columns[1:]), "<n^2>")
        )

    if Observable.RETURN_PROBABILITY in outputs:
        column = int(np.searchsorted(indices, _reference_site(config)))
        table = dataset.add_table(
            Table("return_probability", (("z", "m"), ("return_probability", "1")))
        )
        for z_value, row in zip(trajectory.z_grid, powers):
            table.add_row(float(z_value), float(row[column]))
        dataset.plots.append(
            Plot(
                "return_probability",
                "return_probability",
                "line",
                "z",
                ("return_probability",),
                "|c_0|^2",
            )
        )

    dataset.provenance["tight_binding"] = {
        "n_half": int(trajectory.n_half),
        "norm_drift": float(trajectory.norm_drift),
        "edge_power": float(trajectory.edge_power),
        "steps": int(trajectory.step_count),
    }


def _closed_form_msd(config, delta, z_grid):
    excitation = config.excitation
    if isinstance(excitation, GaussianBeam) or excitation.site != 0:
        return None
    try:
        return np.array(
            [analytics.msd_closed_form(z, delta, config.spec, config.profile) for z in z_grid]
        )
    except UnsupportedProfileError:
        return None


def _continuum_tables(dataset, config, runs):
    fields = runs.fields
    spec = runs.spec
    profile = config.profile
    outputs = config.outputs
    indices = spec.site_indices

    if Observable.SITE_POWERS in outputs or Observable.RETURN_PROBABILITY in outputs:
        series = [continuum.site_powers(field, spec, profile) for field in fields.fields]
        if Observable.SITE_POWERS in outputs:
            final = dataset.add_table(Table("bpm_site_powers", (("n", "1"), ("power", "1"))))
            for n, power in zip(indices, series[-1]):
                final.add_row(int(n), float(power))
            rows = dataset.add_table(
                Table("bpm_trajectory", (("z", "m"), ("n", "1"), ("power", "1")))
            )
            for field, powers in zip(fields.fields, series):
                for n, power in zip(indices, powers):
                    rows.add_row(field.z_position, int(n), float(power))
            dataset.plots.append(
                Plot(
                    "bpm_trajectory",
                    "bpm_trajectory",
                    "heatmap",
                    "z",
                    ("n", "power"),
                    "guided power per site",
                )
            )
        if Observable.RETURN_PROBABILITY in outputs:
            column = int(np.searchsorted(indices, _reference_site(config)))
            table = dataset.add_table(
                Table("bpm_return_probability", (("z", "m"), ("return_probability", "1")))
            )
            for field, powers in zip(fields.fields, series):
                table.add_row(field.z_position, float(powers[column] / max(np.sum(powers), 1e-300)))

    if Observable.CROSS_SECTION in outputs:
        x, intensity = continuum.cross_section(fields.final)
        table = dataset.add_table(Table("xsection", (("x", "m"), ("intensity", "1/m"))))
        for position, value in zip(x, intensity):
            table.add_row(float(position), float(value))
        dataset.plots.append(
            Plot("xsection", "xsection", "line", "x", ("intensity",), "output cross-section")
        )

    if Observable.MSD in outputs:
        table = dataset.add_table(Table("bpm_msd", (("z", "m"), ("msd", "1"))))
        for field in fields.fields:
            table.add_row(field.z_position, continuum.continuum_msd(field, spec))

    dataset.provenance["continuum"] = {
        "well_depth_dn": spec.well_depth_dn,
        "well_width_w": spec.well_width_w,
        "steps": int(fields.step_count),
        "absorbed_power": float(fields.absorbed_power),
    }


def _comparison_table(dataset, config, runs):
    lattice = runs.lattice
    indices = runs.spec.site_indices
    bpm = continuum.site_powers(runs.fields.final, runs.spec, config.profile)
    table = dataset.add_table(
        Table(
            "engine_comparison",
            (("n", "1"), ("tight_binding", "1"), ("continuum", "1"), ("difference", "1")),
        )
    )
    final = dict(zip(lattice.indices.tolist(), lattice.site_powers()[-1]))
    for n, power in zip(indices, bpm):
        reference = float(final.get(int(n), 0.0))
        table.add_row(int(n), reference, float(power), float(power) - reference)


def _diagnostics_table(dataset, config, delta):
    table = dataset.add_table(
        Table(
            "dl_diagnostics",
            (
                ("Gamma", "1"),
                ("dl_integral_re", "m"),
                ("dl_integral_im", "m"),
                ("delta_eff", "1/m"),
                ("localized", "1"),
            ),
        )
    )
    try:
        diagnostics = analytics.dl_diagnostics(config.spec, config.profile, delta)
    except UnsupportedProfileError as ex:
        dataset.note("dl_diagnostics unavailable: {}".format(ex))
        table.add_row(float("nan"), float("nan"), float("nan"), float("nan"), 0)
        return
    table.add_row(
        diagnostics.Gamma,
        diagnostics.dl_integral_value.real,
        diagnostics.dl_integral_value.imag,
        diagnostics.effective_delta,
        int(diagnostics.is_localized),
    )
    dataset.provenance["dl_diagnostics"] = {
        "Gamma": finite_or_none(diagnostics.Gamma),
        "delta_eff": finite_or_none(diagnostics.effective_delta),
        "is_localized": bool(diagnostics.is_localized),
    }


def evaluate(config, calibration=None):
    """
        Run a scenario without sweep and collect its requested observables

        :param `ScenarioConfig` config: the scenario
        :param `dynloc.continuum.Calibration` calibration: required by
            continuum engines
        :rtype: `Dataset`
    """
    logger.info("evaluating scenario {} ({})".format(config.name, config.engine.value))
    delta, extrapolated = config.coupling()
    runs = run_engines(config, calibration)

    dataset = Dataset(config.name, base_provenance(config, config.numerics.tolerance))
    dataset.provenance["coupling_delta"] = delta
    dataset.provenance["delta_extrapolated"] = extrapolated
    if calibration is not None and config.engine.uses_continuum:
        dataset.provenance["calibration"] = calibration.as_dict()

    if runs.lattice is not None:
        _lattice_tables(dataset, config, runs)
    if runs.fields is not None:
        _continuum_tables(dataset, config, runs)
    if runs.lattice is not None and runs.fields is not None:
        _comparison_table(dataset, config, runs)
    if Observable.DL_DIAGNOSTICS in config.outputs:
        _diagnostics_table(dataset, config, delta)
    if Observable.CROSS_SECTION in config.outputs and runs.fields is None:
        dataset.note("cross_section needs the continuum engine")
    if config.profile.kind != ProfileKind.STRAIGHT:
        dataset.note("n_s is a single scalar per run; substrate dispersion is ignored")

    logger.info("scenario {} done: {} table(s)".format(config.name, len(dataset.tables)))
    return dataset
