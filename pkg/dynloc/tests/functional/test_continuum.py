"""
    Functional tests of the split-step engine on reduced grids
"""

import math
import os
import unittest
from dataclasses import replace

import numpy as np

from ..setup import array2_profile, array_spec, straight_profile
from ... import continuum, geometry
from ...continuum import BpmConfig, TransverseGrid
from ...continuum.calibration import closure_delta
from ...continuum.modes import ODD
from ...continuum.potential import flat_potential, single_well
from ...exceptions import UndefinedObservableError
from ...experiments import reproduce_figure
from ...special import bessel_j_signed

GRID = TransverseGrid(1024, 0.35e-6)


def small_array(wavelength=1610e-9, length=1e-3):

    return array_spec(wavelength=wavelength, length=length, site_count=9)


def beam(spec, width=5e-6):

    return continuum.gaussian_input(width, 0.0, 0.0, GRID, spec)


def distance(first, second):

    return math.sqrt(np.sum(np.abs(first.amplitudes - second.amplitudes) ** 2) * first.grid_spacing_dx)


def straight_run(spec, step, length):

    potential = continuum.build_potential(spec, GRID)
    config = BpmConfig(step_dz=step, absorber_width=None, record_every=10 ** 6)
    return continuum.propagate(beam(spec), potential, straight_profile(), config, length).final


class TestSplitStep(unittest.TestCase):
    def test_unitary_without_absorber(self):

        spec = small_array()
        potential = continuum.build_potential(spec, GRID)
        config = BpmConfig(step_dz=2e-6, absorber_width=None, record_every=100)
        trajectory = continuum.propagate(beam(spec), potential, straight_profile(), config, 2e-3)

        self.assertEqual(1000, trajectory.step_count)
        self.assertEqual(11, len(trajectory.fields))
        for field in trajectory.fields:
            self.assertAlmostEqual(1.0, field.power, delta=1e-10)

    def test_second_order(self):

        spec = small_array()
        length = 0.5e-3
        reference = straight_run(spec, 0.3125e-6, length)
        coarse = distance(straight_run(spec, 5e-6, length), reference)
        fine = distance(straight_run(spec, 2.5e-6, length), reference)
        order = math.log2(coarse / fine)
        self.assertAlmostEqual(2.0, order, delta=0.2)

    def test_free_space_spreading(self):

        # a Gaussian in a flat index spreads as exp(-x^2 / q) / sqrt(q / w^2), q = w^2 + 4iDz
        spec = small_array()
        width = 10e-6
        length = 1e-3
        field = continuum.gaussian_input(width, 0.0, 0.0, GRID, spec)
        config = BpmConfig(step_dz=10e-6, absorber_width=None, record_every=10 ** 6)
        final = continuum.propagate(
            field, flat_potential(GRID, spec.substrate_index_ns), straight_profile(), config, length
        ).final

        diffusion = spec.wavelength_lambda / (2 * math.pi) / (2 * spec.substrate_index_ns)
        q = width ** 2 + 4j * diffusion * length
        expected = np.sqrt(width ** 2 / q) * np.exp(-GRID.x ** 2 / q) * field.amplitudes[GRID.points // 2]
        error = np.sqrt(np.sum(np.abs(final.amplitudes - expected) ** 2) / np.sum(np.abs(expected) ** 2))
        self.assertLess(error, 1e-8)

    def test_absorber_takes_power(self):

        spec = small_array()
        potential = continuum.build_potential(spec, GRID, margin=60 * GRID.spacing)
        field = continuum.gaussian_input(2e-6, 0.0, 0.0, GRID, spec)
        config = BpmConfig.default_for(straight_profile(), GRID)
        trajectory = continuum.propagate(field, potential, straight_profile(), config, 2e-3)
        self.assertGreater(trajectory.absorbed_power, -1e-12)
        self.assertLessEqual(trajectory.final.power, 1.0 + 1e-12)


class TestGauge(unittest.TestCase):
    def test_round_trip(self):

        spec = small_array()
        profile = array2_profile()
        field = beam(spec).at(beam(spec).amplitudes, 1.3e-3)
        restored = continuum.kh_map_inverse(continuum.kh_map(field, profile, spec), profile, spec)
        self.assertLess(distance(field, restored), 1e-10)

    def frames_fields(self, spec, steps_per_period):
        """ (lab field, co-moving field mapped back) after one period """
        profile = array2_profile()
        period = profile.period_Lambda
        config = BpmConfig(step_dz=period / steps_per_period, absorber_width=None, record_every=10 ** 6)
        potential = continuum.build_potential(spec, GRID)
        # the guided mode keeps the window edges dark in both frames
        field = continuum.mode_input(spec, GRID)
        lab = continuum.propagate(field, potential, profile, config, period).final
        moving = continuum.propagate_transformed(
            continuum.kh_map(field, profile, spec), potential, profile, config, period
        ).final
        return lab, continuum.kh_map_inverse(moving, profile, spec)

    def test_frames_converge_at_second_order(self):

        for wavelength in (1610e-9, 1525e-9):
            spec = small_array(wavelength, length=4e-3)
            coarse = distance(*self.frames_fields(spec, 1024))
            fine = distance(*self.frames_fields(spec, 2048))
            self.assertLess(fine, coarse)
            self.assertGreater(coarse / fine, 2.5)
            self.assertLess(fine, 1e-2)

    def test_frames_agree(self):

        # both frames carry an even-power error series in dz
        for wavelength in (1610e-9, 1525e-9):
            spec = small_array(wavelength, length=4e-3)
            lab_coarse, moving_coarse = self.frames_fields(spec, 8192)
            lab_fine, moving_fine = self.frames_fields(spec, 16384)
            lab = lab_fine.at((4 * lab_fine.amplitudes - lab_coarse.amplitudes) / 3, lab_fine.z_position)
            moving = moving_fine.at(
                (4 * moving_fine.amplitudes - moving_coarse.amplitudes) / 3, moving_fine.z_position
            )
            self.assertLess(distance(lab, moving), 1e-6)


class TestModes(unittest.TestCase):
    def test_fundamental_mode(self):

        spec = small_array()
        mode, effective_index = continuum.fundamental_mode(spec, grid=GRID)
        self.assertAlmostEqual(1.0, mode.power, delta=1e-9)
        self.assertLess(np.max(np.abs(mode.amplitudes - GRID.reflect(mode.amplitudes))), 1e-9)
        self.assertGreater(effective_index, spec.substrate_index_ns)
        self.assertLess(effective_index, spec.substrate_index_ns + spec.well_depth_dn)
        self.assertIs(mode, continuum.fundamental_mode(spec, grid=GRID)[0])

    def test_single_mode_well(self):

        spec = small_array()
        _, _, bound = continuum.find_bound_mode(single_well(spec, GRID), spec.wavelength_lambda, ODD)
        self.assertFalse(bound)

    def test_gaussian_launch_overlap(self):

        spec = small_array()
        mode, _ = continuum.fundamental_mode(spec, grid=GRID)
        launch = continuum.gaussian_input(3.5e-6, 0.0, 0.0, GRID, spec)
        overlap = abs(np.sum(np.conj(mode.amplitudes) * launch.amplitudes) * GRID.spacing) ** 2
        self.assertGreaterEqual(overlap, 0.7)

    def test_supermode_coupling_grows_with_wavelength(self):

        spec = small_array()
        couplings = [
            continuum.supermode_coupling(
                spec, spec.well_depth_dn, spec.well_width_w, wavelength, grid=GRID
            )
            for wavelength in (1440e-9, 1610e-9)
        ]
        self.assertGreater(couplings[0], 0.0)
        self.assertGreater(couplings[1], couplings[0])

    def test_widths(self):

        spec = small_array()
        powers = np.zeros(spec.site_count)
        powers[list(spec.site_indices).index(-1)] = 0.5
        powers[list(spec.site_indices).index(1)] = 0.5
        self.assertAlmostEqual(spec.site_period_a, continuum.site_width(powers, spec), delta=1e-18)

        # |psi|^2 ~ exp(-2 x^2 / w^2) has <x^2> = w^2 / 4
        expected = (5e-6 / 2 / spec.site_period_a) ** 2
        self.assertAlmostEqual(expected, continuum.continuum_msd(beam(spec), spec), delta=1e-9)
        shifted = continuum.gaussian_input(5e-6, spec.site_period_a, 0.0, GRID, spec)
        self.assertAlmostEqual(
            expected, continuum.continuum_msd(shifted, spec, center=spec.site_period_a), delta=1e-9
        )

        empty = beam(spec).at(np.zeros(GRID.points, dtype=complex), 0.0)
        with self.assertRaises(UndefinedObservableError):
            continuum.continuum_msd(empty, spec)


class TestCouplingFit(unittest.TestCase):
    def test_synthetic_pattern(self):

        indices = np.arange(-30, 31)
        for delta in (175.0, 250.0, 300.0):
            powers = bessel_j_signed(indices, 2 * delta * 0.02) ** 2
            fit = continuum.fit_coupling(powers, 0.02, indices)
            self.assertAlmostEqual(delta, fit.delta, delta=0.01 * delta)
            self.assertFalse(fit.poor_fit)

    def test_poor_fit(self):

        indices = np.arange(-10, 11)
        powers = np.where(np.abs(indices) == 7, 1.0, 0.0)
        with self.assertLogs("dynloc.continuum.fitting", level="WARNING"):
            fit = continuum.fit_coupling(powers, 0.02, indices)
        self.assertTrue(fit.poor_fit)


@unittest.skipUnless(os.getenv("DYNLOC_LONG_TESTS"), "set DYNLOC_LONG_TESTS to run")
class TestCalibrationClosure(unittest.TestCase):
    @classmethod
    def setUpClass(cls):

        cls.calibration = continuum.calibrate_potential(array_spec())
        cls.spec = continuum.apply_calibration(array_spec(), cls.calibration)

    def test_measured_couplings(self):

        self.assertAlmostEqual(300.0, closure_delta(self.spec, 1610e-9), delta=15.0)
        self.assertAlmostEqual(175.0, closure_delta(self.spec, 1440e-9), delta=15.0)

    def test_single_mode_over_tuning_range(self):

        for wavelength in (1440e-9, 1610e-9):
            spec = replace(self.spec, wavelength_lambda=wavelength)
            grid = TransverseGrid()
            _, _, bound = continuum.find_bound_mode(single_well(spec, grid), wavelength, ODD)
            self.assertFalse(bound)

            mode, _ = continuum.fundamental_mode(spec, grid=grid)
            launch = continuum.gaussian_input(3.5e-6, 0.0, 0.0, grid, spec)
            overlap = abs(np.sum(np.conj(mode.amplitudes) * launch.amplitudes) * grid.spacing) ** 2
            self.assertGreaterEqual(overlap, 0.7)

    def test_straight_array_bessel_pattern(self):

        profile = straight_profile()
        grid = TransverseGrid()
        config = BpmConfig.default_for(profile, grid)
        potential = continuum.build_potential(self.spec, grid, margin=config.absorber_width)
        field = continuum.mode_input(self.spec, grid)
        final = continuum.propagate(field, potential, profile, config, 0.028).final
        powers = continuum.site_powers(final, self.spec)
        expected = bessel_j_signed(np.asarray(self.spec.site_indices), 16.8) ** 2
        self.assertLess(np.max(np.abs(powers - expected)), 0.05)

    def test_continuum_revival(self):

        profile = array2_profile()
        grid = TransverseGrid()
        config = BpmConfig.default_for(profile, grid)
        potential = continuum.build_potential(self.spec, grid, margin=config.absorber_width)
        field = continuum.mode_input(self.spec, grid)
        final = continuum.propagate(field, potential, profile, config, self.spec.sample_length_L).final
        powers = continuum.site_powers(final, self.spec, profile)
        self.assertGreaterEqual(powers[list(self.spec.site_indices).index(0)] / np.sum(powers), 0.8)
        self.assertAlmostEqual(2.405, geometry.big_gamma(self.spec, profile), delta=0.005)

    def test_engines_agree_on_wavelength_panels(self):

        for figure in ("fig3", "fig4"):
            dataset = reproduce_figure(figure, engine="both", calibration=self.calibration)
            comparisons = [
                table for name, table in dataset.tables.items() if name.endswith("_engine_comparison")
            ]
            self.assertEqual(5, len(comparisons), figure)
            for table in comparisons:
                self.assertLessEqual(np.max(np.abs(table.column("difference"))), 0.1, table.name)

    def test_broad_beams(self):

        dataset = reproduce_figure("fig5", calibration=self.calibration)
        widths = dataset.table("fig5_widths")
        for curved, ratio in zip(widths.column("curved"), widths.column("ratio")):
            if curved:
                self.assertAlmostEqual(1.0, ratio, delta=0.1)
            else:
                self.assertGreater(ratio, 1.5)
