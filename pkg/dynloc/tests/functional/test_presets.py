"""
    Functional tests of the figure presets and sweeps (tight-binding engine)
"""

import math
import unittest

import numpy as np

from ..setup import array2_profile, array_spec
from ...exceptions import CalibrationMissingError, DynlocError
from ...experiments import (
    Engine,
    Numerics,
    ScenarioConfig,
    SingleSite,
    Sweep,
    SweepAxis,
    reproduce_figure,
    sweep,
)
from ...experiments.presets import FIG6_COLUMNS
from ...special import first_j0_zero

FAST = Numerics(z_points=29)


class TestSweeps(unittest.TestCase):
    def test_gamma_axis(self):

        config = ScenarioConfig(
            "gamma",
            Engine.TIGHT_BINDING,
            array_spec(site_count=60),
            array2_profile(),
            SingleSite(0),
            coupling_delta=300.0,
            sweep=Sweep(SweepAxis.GAMMA, (1.0, first_j0_zero(), 3.5)),
        )
        dataset = sweep(config)
        table = dataset.table("sweep")
        self.assertEqual("Gamma_set[1]", table.headers[0])
        self.assertEqual("error[text]", table.headers[-1])
        self.assertEqual(config.sweep.values, tuple(table.column("Gamma_set")))
        sqrt_msd = table.column("sqrt_msd")
        self.assertEqual(1, int(np.argmin(sqrt_msd)))
        self.assertLess(sqrt_msd[1], 1e-2)
        for ode, closed in zip(table.column("msd_ode"), table.column("msd_closed")):
            self.assertLess(abs(ode - closed), 1e-3 * closed + 1e-6)
        self.assertEqual("Gamma", dataset.provenance["sweep_axis"])

    def test_failed_point_keeps_row(self):

        config = ScenarioConfig(
            "failing",
            Engine.TIGHT_BINDING,
            array_spec(site_count=60),
            array2_profile(),
            SingleSite(0),
            sweep=Sweep(SweepAxis.WAVELENGTH, (500e-9, 1610e-9)),
        )
        with self.assertLogs("dynloc.experiments.sweep", level="WARNING"):
            dataset = sweep(config)
        first, second = dataset.table("sweep").rows
        self.assertIn("not positive", first[-1])
        self.assertTrue(math.isnan(first[1]))
        self.assertEqual("", second[-1])
        self.assertEqual(["1 of 2 sweep point(s) failed"], dataset.provenance["notes"])


class TestPresets(unittest.TestCase):
    def test_localization_sweep(self):

        dataset = reproduce_figure("fig6", numerics=FAST)
        table = dataset.table("fig6_sweep")
        self.assertEqual(
            ["Lambda[m]", "Gamma[1]", "msd_ode[1]", "msd_closed[1]", "sqrt_msd[1]", "delta_eff[1/m]"],
            table.headers,
        )
        self.assertEqual(len(FIG6_COLUMNS), len(table.columns))
        self.assertEqual(7, len(table))
        self.assertAlmostEqual(2.405, dataset.provenance["minimum"]["Gamma"], delta=0.05)
        for ode, closed in zip(table.column("msd_ode"), table.column("msd_closed")):
            self.assertLess(abs(ode - closed), 1e-3 * closed + 1e-6)

    def test_straight_array(self):

        dataset = reproduce_figure("fig2", engine="tight_binding", numerics=FAST)
        overlay = dataset.table("fig2_overlay")
        difference = np.abs(overlay.column("bessel") - overlay.column("tight_binding"))
        self.assertLess(np.max(difference), 1e-6)
        self.assertAlmostEqual(math.sqrt(141.12), dataset.provenance["sqrt_msd"], delta=0.02)
        self.assertEqual("fig2", dataset.provenance["figure"])

    def test_tuned_panel(self):

        dataset = reproduce_figure("fig3", engine="tight_binding", numerics=FAST)
        summary = dataset.table("fig3_summary")
        tuned = summary.column("tuned")
        returned = summary.column("return_probability")
        self.assertEqual(1, int(np.sum(tuned)))
        self.assertGreaterEqual(returned[tuned == 1][0], 0.9999)
        self.assertAlmostEqual(1610.07e-9, dataset.provenance["tuned_wavelength"], delta=0.05e-9)

    def test_zigzag_and_bloch(self):

        zigzag = reproduce_figure("zigzag", numerics=FAST)
        returned = zigzag.table("return_probability").column("return_probability")
        self.assertGreaterEqual(returned[-1], 0.9999)

        bloch = reproduce_figure("bloch", numerics=FAST)
        returned = bloch.table("return_probability").column("return_probability")
        self.assertGreaterEqual(returned[-1], 0.9999)
        self.assertAlmostEqual(0.007, bloch.provenance["bloch_period"], delta=1e-9)

    def test_continuum_needs_calibration(self):

        with self.assertRaises(CalibrationMissingError):
            reproduce_figure("fig5")
        with self.assertRaises(DynlocError):
            reproduce_figure("fig9")
