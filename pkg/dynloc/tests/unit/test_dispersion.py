"""
    Unit tests for the measured coupling dispersion
"""

import unittest

from ...exceptions import DomainError
from ...experiments import delta_of_lambda, is_extrapolated


class TestDispersion(unittest.TestCase):
    def test_anchors(self):

        self.assertAlmostEqual(300.0, delta_of_lambda(1610e-9))
        self.assertAlmostEqual(175.0, delta_of_lambda(1440e-9))
        self.assertAlmostEqual(237.5, delta_of_lambda(1525e-9))

    def test_extrapolation(self):

        self.assertFalse(is_extrapolated(1550e-9))
        self.assertTrue(is_extrapolated(1700e-9))
        with self.assertLogs("dynloc.experiments.dispersion", level="WARNING"):
            self.assertGreater(delta_of_lambda(1700e-9), 300.0)

    def test_domain(self):

        with self.assertRaises(DomainError):
            delta_of_lambda(0.0)
        with self.assertRaises(DomainError):
            delta_of_lambda(1000e-9)
