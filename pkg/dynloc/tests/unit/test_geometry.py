"""
    Unit tests for array geometry and bending profiles
"""

import math
import unittest

import numpy as np

from ... import geometry
from ...exceptions import DomainError, UnsupportedProfileError
from ...geometry import ArraySpec, BendingProfile
from ...tests.setup import array2_profile, array3_profile, array_spec


class TestArraySpec(unittest.TestCase):
    def test_site_indices(self):

        self.assertEqual([-2, -1, 0, 1, 2], list(array_spec(site_count=5).site_indices))
        indices = array_spec(site_count=80).site_indices
        self.assertEqual(-40, indices[0])
        self.assertEqual(39, indices[-1])
        self.assertAlmostEqual(14e-6, array_spec().site_positions[41], delta=1e-18)

    def test_invalid_specs(self):

        with self.assertRaises(DomainError):
            ArraySpec(0.0, 10, 0.028, 2.1556, 1610e-9)
        with self.assertRaises(DomainError):
            ArraySpec(14e-6, 10, -1.0, 2.1556, 1610e-9)
        with self.assertRaises(DomainError):
            ArraySpec(14e-6, 10, 0.028, 2.1556, 1610e-9, well_width_w=20e-6)


class TestProfiles(unittest.TestCase):
    def test_sinusoid(self):

        profile = BendingProfile.sinusoidal(13e-6, 4e-3, math.pi / 3)
        self.assertAlmostEqual(0.0, geometry.displacement(profile, 0.0), delta=1e-20)
        z = np.linspace(0, 4e-3, 9)
        expected = 13e-6 * (np.sin(2 * math.pi * z / 4e-3 + math.pi / 3) - math.sin(math.pi / 3))
        self.assertLess(np.max(np.abs(geometry.displacement(profile, z) - expected)), 1e-18)
        self.assertAlmostEqual(
            13e-6 * (2 * math.pi / 4e-3) * 0.5, geometry.slope(profile, 0.0), delta=1e-15
        )

    def test_negative_amplitude(self):

        with self.assertRaises(DomainError):
            BendingProfile.sinusoidal(-1e-6, 4e-3)
        with self.assertRaises(DomainError):
            BendingProfile.sinusoidal(1e-6, 0.0)

    def test_zigzag(self):

        tilt = 2e-3
        profile = BendingProfile.zigzag(tilt, 4e-3)
        self.assertAlmostEqual(tilt * 1e-3, profile.amplitude_A, delta=1e-18)
        self.assertAlmostEqual(tilt * 1e-3, geometry.displacement(profile, 1e-3), delta=1e-15)
        self.assertAlmostEqual(tilt * 2e-3, geometry.displacement(profile, 2e-3), delta=1e-15)
        self.assertAlmostEqual(0.0, geometry.displacement(profile, 4e-3), delta=1e-15)
        self.assertEqual(tilt, geometry.slope(profile, 1e-3))
        self.assertEqual(-tilt, geometry.slope(profile, 3e-3))
        self.assertEqual(0.0, geometry.curvature(profile, 1e-3))

        kinks = geometry.kinks(profile, 9e-3)
        self.assertEqual(4, len(kinks))
        for m, kink in enumerate(kinks, start=1):
            self.assertAlmostEqual(m * 2e-3, kink, delta=1e-15)
        self.assertEqual((), geometry.kinks(array2_profile(), 9e-3))

    def test_circular(self):

        profile = BendingProfile.circular(10e-6, 1e-2)
        self.assertAlmostEqual(2.5e-6, geometry.displacement(profile, 5e-3), delta=1e-18)
        self.assertAlmostEqual(2 * 10e-6 / 1e-4, geometry.curvature(profile, 7e-3), delta=1e-12)

    def test_sampled(self):

        z = np.linspace(0, 1e-2, 11)
        profile = BendingProfile.sampled(z, 3e-6 * (z / 1e-2) ** 2)
        self.assertAlmostEqual(0.75e-6, geometry.displacement(profile, 5e-3), delta=1e-12)
        with self.assertRaises(DomainError):
            geometry.displacement(profile, 2e-2)
        with self.assertRaises(DomainError):
            BendingProfile.sampled(z + 1e-3, z)
        with self.assertRaises(DomainError):
            BendingProfile.sampled(z[::-1], z)


class TestGauge(unittest.TestCase):
    def test_big_gamma_of_short_period_array(self):

        gamma = geometry.big_gamma(array_spec(), array2_profile())
        self.assertAlmostEqual(2.405, gamma, delta=0.005)

    def test_amplitude_for_gamma_inverts(self):

        spec = array_spec(1500e-9)
        profile = array3_profile()
        amplitude = geometry.amplitude_for_gamma(spec, profile, 1.7)
        tuned = BendingProfile.sinusoidal(amplitude, profile.period_Lambda)
        self.assertAlmostEqual(1.7, geometry.big_gamma(spec, tuned), delta=1e-12)

    def test_gamma_phase(self):

        spec = array_spec()
        profile = array2_profile()
        gamma = geometry.big_gamma(spec, profile)
        self.assertEqual(0.0, geometry.gamma_phase(spec, profile, 0.0))
        self.assertAlmostEqual(-2 * gamma, geometry.gamma_phase(spec, profile, 2e-3), delta=1e-10)
        self.assertAlmostEqual(0.0, geometry.gamma_phase(spec, profile, 4e-3), delta=1e-10)
        with self.assertRaises(DomainError):
            geometry.gamma_phase(spec, profile, 0.03)
        with self.assertRaises(DomainError):
            geometry.gamma_phase(spec, profile, -1e-3)

    def test_gamma_needs_sinusoid(self):

        with self.assertRaises(UnsupportedProfileError):
            geometry.big_gamma(array_spec(), BendingProfile.zigzag(1e-3, 4e-3))

    def test_zigzag_tilt(self):

        spec = array_spec()
        tilt = geometry.zigzag_dl_tilt(spec)
        self.assertAlmostEqual(1610e-9 / (4 * 2.1556 * 14e-6), tilt, delta=1e-15)
        profile = BendingProfile.zigzag(tilt, 4e-3)
        # phase jump of pi across each half period
        self.assertAlmostEqual(
            -2 * math.pi / 2, geometry.gamma_phase(spec, profile, 3e-3), delta=1e-9
        )

    def test_bloch_period(self):

        spec = array_spec()
        profile = BendingProfile.circular(20e-6, 1e-2)
        omega = geometry.phase_scale(spec) * 2 * 20e-6 / 1e-4
        self.assertAlmostEqual(2 * math.pi / omega, geometry.bloch_period(spec, profile))
        with self.assertRaises(UnsupportedProfileError):
            geometry.bloch_period(spec, array2_profile())
