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
    Figure presets.

    The wavelengths of the curved-array panels and the interior periods of
    the localization sweep are representative points of the measured
    ranges, not exact published values.
"""

import logging
import math
from dataclasses import replace

import numpy as np

from .. import analytics, continuum, geometry, tightbinding
from ..analytics import FreeParameter
from ..exceptions import DesignInfeasibleError, DynlocError
from ..geometry import ArraySpec, BendingProfile
from ..special import bessel_j_signed
from .dataset import Dataset, Plot, Table, base_provenance
from .evaluate import calibrated_spec, continuum_setup, evaluate, run_lattice
from .scenario import (
    Engine,
    GaussianBeam,
    Numerics,
    Observable,
    ScenarioConfig,
    SingleSite,
    Sweep,
    SweepAxis,
)
from .sweep import sweep

logger = logging.getLogger(__name__)

SITE_PERIOD = 14e-6
SUBSTRATE_INDEX = 2.1556
SAMPLE_LENGTH = 0.028
SITE_COUNT = 80
SEMI_CYCLE_SITE_COUNT = 60

FIGURE_WAVELENGTHS = (1610e-9, 1560e-9, 1510e-9, 1440e-9)
FIG6_PERIODS = (2.8e-3, 4e-3, 5.2e-3, 7e-3, 9e-3, 11e-3, 14e-3)
FIG5_WIDTHS = (24.7e-6, 37.4e-6)
DETUNED_WAVELENGTH = 1525e-9
DESIGN_BRACKET = (1.3e-6, 1.8e-6)
BLOCH_REVIVALS = 4

ALL_OUTPUTS = (
    Observable.SITE_POWERS,
    Observable.MSD,
    Observable.RETURN_PROBABILITY,
    Observable.DL_DIAGNOSTICS,
)


def array_spec(wavelength, length=SAMPLE_LENGTH, site_count=SITE_COUNT):
    return ArraySpec(SITE_PERIOD, site_count, length, SUBSTRATE_INDEX, wavelength)


def short_period_profile():
    """ Lambda = 4 mm, A = 13 um """
    return BendingProfile.sinusoidal(13e-6, 4e-3)


def semi_cycle_profile(phase_phi0=0.0):
    """ Lambda = 56 mm, A = 164 um, sampled over half a period """
    return BendingProfile.sinusoidal(164e-6, 56e-3, phase_phi0)


def tuned_wavelength(spec, profile):
    """ Wavelength of the J0 zero for (spec, profile), or None """
    try:
        return analytics.solve_dl_parameter(
            spec, profile, FreeParameter.WAVELENGTH, DESIGN_BRACKET
        )
    except DesignInfeasibleError as ex:
        logger.warning("no DL wavelength in {}: {}".format(DESIGN_BRACKET, ex))
        return None


def _merge(target, source, prefix):
    for name, table in source.tables.items():
        renamed = "{}_{}".format(prefix, name)
        target.add_table(Table(renamed, table.columns, table.rows))
    for plot in source.plots:
        target.plots.append(
            replace(plot, name="{}_{}".format(prefix, plot.name), table="{}_{}".format(prefix, plot.table))
        )
    for note in source.provenance.get("notes", []):
        target.note("{}: {}".format(prefix, note))


def _tag(wavelength):
    return "{:.0f}nm".format(wavelength * 1e9)


def _last(dataset, name, column, default=float("nan")):
    if name not in dataset.tables or not len(dataset.tables[name]):
        return default
    return float(dataset.tables[name].column(column)[-1])


def _final_site_power(dataset, name, site=0):
    if name not in dataset.tables:
        return float("nan")
    table = dataset.tables[name]
    indices = table.column("n")
    powers = table.column("power")
    total = float(np.sum(powers))
    matches = np.nonzero(indices == site)[0]
    if not matches.size or total <= 0:
        return float("nan")
    return float(powers[matches[0]]) / total


def fig2(engine=Engine.BOTH, calibration=None, numerics=None, jobs=None):
    """ Discrete diffraction in the straight array at 1610 nm """
    outputs = ALL_OUTPUTS
    if engine.uses_continuum:
        outputs = outputs + (Observable.CROSS_SECTION,)
    config = ScenarioConfig(
        "fig2",
        engine,
        array_spec(1610e-9),
        BendingProfile.straight(),
        SingleSite(0),
        outputs=outputs,
        numerics=numerics or Numerics(),
    )
    dataset = evaluate(config, calibration)
    delta = dataset.provenance["coupling_delta"]

    columns = [("n", "1"), ("bessel", "1")]
    if "site_powers" in dataset.tables:
        columns.append(("tight_binding", "1"))
    if "bpm_site_powers" in dataset.tables:
        columns.append(("continuum", "1"))
    overlay = Table("fig2_overlay", tuple(columns))
    indices = config.spec.site_indices
    bessel = bessel_j_signed(indices, 2 * delta * config.spec.sample_length_L) ** 2
    lattice = _powers_by_site(dataset, "site_powers")
    bpm = _powers_by_site(dataset, "bpm_site_powers")
    for n, reference in zip(indices, bessel):
        row = [int(n), float(reference)]
        if lattice is not None:
            row.append(lattice.get(int(n), 0.0))
        if bpm is not None:
            row.append(bpm.get(int(n), 0.0))
        overlay.add_row(*row)
    dataset.add_table(overlay)
    if "msd" in dataset.tables:
        dataset.provenance["sqrt_msd"] = math.sqrt(_last(dataset, "msd", "msd"))
    return dataset


def _powers_by_site(dataset, name):
    if name not in dataset.tables:
        return None
    table = dataset.tables[name]
    return {int(n): float(p) for n, p in zip(table.column("n"), table.column("power"))}


def _wavelength_panels(name, profile_for, length, site_count, engine, calibration, numerics):
    base_spec = array_spec(FIGURE_WAVELENGTHS[0], length, site_count)
    profile = profile_for()
    tuned = tuned_wavelength(base_spec, profile)
    wavelengths = list(FIGURE_WAVELENGTHS)
    if tuned is not None:
        wavelengths.append(tuned)

    dataset = Dataset(name)
    summary = Table(
        "{}_summary".format(name),
        (
            ("lambda", "m"),
            ("Gamma", "1"),
            ("delta", "1/m"),
            ("return_probability", "1"),
            ("sqrt_msd", "1"),
            ("bpm_return_probability", "1"),
            ("tuned", "1"),
        ),
    )
    for position, wavelength in enumerate(wavelengths):
        is_tuned = position == len(FIGURE_WAVELENGTHS)
        tag = "tuned" if is_tuned else _tag(wavelength)
        config = ScenarioConfig(
            "{}_{}".format(name, tag),
            engine,
            array_spec(wavelength, length, site_count),
            profile,
            SingleSite(0),
            outputs=ALL_OUTPUTS,
            numerics=numerics or Numerics(),
        )
        panel = evaluate(config, calibration)
        if not dataset.provenance:
            dataset.provenance.update(base_provenance(config, config.numerics.tolerance))
        _merge(dataset, panel, "{}_{}".format(name, tag))
        msd = _last(panel, "msd", "msd")
        summary.add_row(
            wavelength,
            geometry.big_gamma(config.spec, profile),
            panel.provenance["coupling_delta"],
            _last(panel, "return_probability", "return_probability"),
            math.sqrt(msd) if msd >= 0 else float("nan"),
            _final_site_power(panel, "bpm_site_powers"),
            int(is_tuned),
        )
    dataset.add_table(summary)
    dataset.provenance["tuned_wavelength"] = tuned
    dataset.provenance["wavelengths"] = wavelengths
    dataset.note("panel wavelengths are representative points of the tuning range")
    return dataset


def fig3(engine=Engine.BOTH, calibration=None, numerics=None, jobs=None):
    """ Single-site excitation of the short-period array over the tuning range """
    return _wavelength_panels(
        "fig3", short_period_profile, SAMPLE_LENGTH, SITE_COUNT, engine, calibration, numerics
    )


def fig4(engine=Engine.BOTH, calibration=None, numerics=None, jobs=None):
    """ The semi-cycle array, L = Lambda / 2 """
    profile = semi_cycle_profile()
    return _wavelength_panels(
        "fig4",
        semi_cycle_profile,
        profile.period_Lambda / 2,
        SEMI_CYCLE_SITE_COUNT,
        engine,
        calibration,
        numerics,
    )


def _beam_widths(config, calibration):
    """ (input width, output width, final field or None), widths of site-projected powers in metres """
    if config.engine.uses_continuum:
        spec = calibrated_spec(config, calibration)
        _, potential, field, bpm = continuum_setup(config, spec)
        trajectory = continuum.propagate(
            field, potential, config.profile, bpm, spec.sample_length_L
        )
        before = continuum.site_powers(field, spec, config.profile)
        after = continuum.site_powers(trajectory.final, spec, config.profile)
        return (
            continuum.site_width(before, spec),
            continuum.site_width(after, spec),
            trajectory.final,
        )
    delta, _ = config.coupling()
    trajectory = run_lattice(config, delta)
    powers = trajectory.site_powers()
    scale = config.spec.site_period_a
    return (
        tightbinding.second_moment_width(powers[0], trajectory.indices) * scale,
        tightbinding.second_moment_width(powers[-1], trajectory.indices) * scale,
        None,
    )


def fig5(engine=Engine.CONTINUUM, calibration=None, numerics=None, jobs=None):
    """
        Broad Gaussian beams through the semi-cycle array at its DL point,
        with a straight-array control at a detuned wavelength
    """
    if engine == Engine.BOTH:
        engine = Engine.CONTINUUM
    profile = semi_cycle_profile()
    length = profile.period_Lambda / 2
    tuned = tuned_wavelength(array_spec(1440e-9, length), profile)
    if tuned is None:
        raise DynlocError("the semi-cycle array has no DL wavelength in the design bracket")

    runs = []
    for width in FIG5_WIDTHS:
        runs.append(("curved", width, tuned, profile))
        runs.append(("straight", width, DETUNED_WAVELENGTH, BendingProfile.straight()))

    dataset = Dataset("fig5")
    widths = Table(
        "fig5_widths",
        (
            ("w_x", "m"),
            ("lambda", "m"),
            ("curved", "1"),
            ("input_width", "m"),
            ("output_width", "m"),
            ("ratio", "1"),
        ),
    )
    for label, width, wavelength, run_profile in runs:
        config = ScenarioConfig(
            "fig5_{}_{:.1f}um".format(label, width * 1e6),
            engine,
            array_spec(wavelength, length, SEMI_CYCLE_SITE_COUNT),
            run_profile,
            GaussianBeam(width),
            outputs=(Observable.SITE_POWERS,),
            numerics=numerics or Numerics(),
        )
        if not dataset.provenance:
            dataset.provenance.update(base_provenance(config, config.numerics.tolerance))
        before, after, final = _beam_widths(config, calibration)
        widths.add_row(width, wavelength, int(label == "curved"), before, after, after / before)
        if final is not None:
            x, intensity = continuum.cross_section(final)
            table = dataset.add_table(
                Table(
                    "fig5_xsection_{}_{:.1f}um".format(label, width * 1e6),
                    (("x", "m"), ("intensity", "1/m")),
                )
            )
            for position, value in zip(x, intensity):
                table.add_row(float(position), float(value))
    dataset.add_table(widths)
    dataset.provenance["tuned_wavelength"] = tuned
    dataset.provenance["detuned_wavelength"] = DETUNED_WAVELENGTH
    if calibration is not None and engine.uses_continuum:
        dataset.provenance["calibration"] = calibration.as_dict()
    dataset.note("the detuned control is the straight array at the detuned wavelength")
    return dataset


FIG6_COLUMNS = (
    ("Lambda", "m"),
    ("Gamma", "1"),
    ("msd_ode", "1"),
    ("msd_closed", "1"),
    ("sqrt_msd", "1"),
    ("delta_eff", "1/m"),
)


def fig6(engine=Engine.TIGHT_BINDING, calibration=None, numerics=None, jobs=None):
    """ sqrt<n^2> at the sample end against Gamma for seven periods """
    config = ScenarioConfig(
        "fig6",
        engine,
        array_spec(1610e-9),
        short_period_profile(),
        SingleSite(0),
        sweep=Sweep(SweepAxis.PERIOD, FIG6_PERIODS),
        outputs=(Observable.MSD,),
        numerics=numerics or Numerics(),
    )
    dataset = sweep(config, calibration, jobs)
    source = dataset.tables.pop("sweep")
    dataset.plots = []
    names = [column[0] for column in source.columns]
    picks = [names.index(column[0]) for column in FIG6_COLUMNS]
    table = dataset.add_table(Table("fig6_sweep", FIG6_COLUMNS))
    for row in source.rows:
        table.add_row(*(row[index] for index in picks))
    if len(source.columns) > len(FIG6_COLUMNS):
        dataset.add_table(Table("fig6_points", source.columns, source.rows))

    dataset.plots.append(Plot("fig6_sweep", "fig6_sweep", "line", "Gamma", ("sqrt_msd",), "fig6"))
    sqrt_msd = table.column("sqrt_msd")
    if np.any(np.isfinite(sqrt_msd)):
        best = int(np.nanargmin(sqrt_msd))
        dataset.provenance["minimum"] = {
            "Gamma": float(table.column("Gamma")[best]),
            "sqrt_msd": float(sqrt_msd[best]),
        }
    dataset.note("interior periods are representative points between 2.8 mm and 14 mm")
    return dataset


def zigzag(engine=Engine.TIGHT_BINDING, calibration=None, numerics=None, jobs=None):
    """ Diffraction management: piecewise-straight array at the cancelling tilt """
    spec = array_spec(1610e-9)
    profile = BendingProfile.zigzag(geometry.zigzag_dl_tilt(spec), 4e-3)
    config = ScenarioConfig(
        "zigzag",
        Engine.TIGHT_BINDING,
        spec,
        profile,
        SingleSite(0),
        outputs=ALL_OUTPUTS,
        numerics=numerics or Numerics(),
    )
    return evaluate(config, calibration)


def bloch_profile(spec, revivals=BLOCH_REVIVALS):
    """ Circular arc whose Bloch period is L / revivals """
    scale = spec.sample_length_L
    omega = 2 * math.pi * revivals / spec.sample_length_L
    amplitude = omega * scale ** 2 / (2 * geometry.phase_scale(spec))
    return BendingProfile.circular(amplitude, scale)


def bloch(engine=Engine.TIGHT_BINDING, calibration=None, numerics=None, jobs=None):
    """ Constant curvature: revivals at multiples of the Bloch period """
    spec = array_spec(1610e-9)
    profile = bloch_profile(spec)
    config = ScenarioConfig(
        "bloch",
        Engine.TIGHT_BINDING,
        spec,
        profile,
        SingleSite(0),
        outputs=(Observable.SITE_POWERS, Observable.MSD, Observable.RETURN_PROBABILITY),
        numerics=numerics or Numerics(),
    )
    dataset = evaluate(config, calibration)
    dataset.provenance["bloch_period"] = geometry.bloch_period(spec, profile)
    return dataset


PRESETS = {
    "fig2": fig2,
    "fig3": fig3,
    "fig4": fig4,
    "fig5": fig5,
    "fig6": fig6,
    "zigzag": zigzag,
    "bloch": bloch,
}


def reproduce_figure(figure_id, engine=None, calibration=None, numerics=None, jobs=None):
    """
        Dataset of a figure preset

        :param str figure_id: one of `PRESETS`
        :param `Engine` engine: overrides the preset's engine
        :raises `dynloc.exceptions.CalibrationMissingError`: a continuum
            preset without calibration
    """
    try:
        preset = PRESETS[figure_id.lower()]
    except KeyError:
        raise DynlocError(
            "unknown figure {}; choose from {}".format(figure_id, ", ".join(sorted(PRESETS)))
        )
    logger.info("reproducing {}".format(figure_id))
    kwargs = {"calibration": calibration, "numerics": numerics, "jobs": jobs}
    if engine is not None:
        kwargs["engine"] = Engine(engine)
    dataset = preset(**kwargs)
    dataset.name = figure_id.lower()
    dataset.provenance.setdefault("figure", figure_id.lower())
    dataset.provenance["n_s_caveat"] = (
        "substrate index fixed at {} for every wavelength".format(SUBSTRATE_INDEX)
    )
    return dataset
