"""
    Unit tests for bracketed searches
"""

import math
import unittest

from ...utils.optimize import scan_minimum


class TestSearches(unittest.TestCase):
    def test_parabola(self):

        x_min, f_min, _ = scan_minimum(lambda x: (x - 1.3) ** 2, 0.0, 4.0, 9)
        self.assertAlmostEqual(1.3, x_min, delta=1e-7)
        self.assertLess(f_min, 1e-14)

    def test_minimum_on_bracket_edge(self):

        x_min, f_min, _ = scan_minimum(lambda x: x, 2.0, 5.0, 10)
        self.assertEqual(2.0, x_min)
        self.assertEqual(2.0, f_min)

    def test_scan_picks_global_minimum(self):

        # two local minima, the deeper one near x = 4.71
        x_min, f_min, scanned = scan_minimum(math.sin, 0.0, 7.0, 50)
        self.assertAlmostEqual(3 * math.pi / 2, x_min, delta=1e-6)
        self.assertAlmostEqual(-1.0, f_min, delta=1e-12)
        self.assertEqual(50, len(scanned))
