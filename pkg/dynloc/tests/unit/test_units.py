"""
    Unit tests for unit-suffixed literals
"""

import math
import unittest

from ...utils.units import (
    ANGLE,
    DIMENSIONLESS,
    INVERSE_LENGTH,
    LENGTH,
    UnitError,
    format_quantity,
    parse_quantity,
)


class TestQuantities(unittest.TestCase):
    def test_suffixes(self):

        self.assertAlmostEqual(14e-6, parse_quantity("14um", LENGTH), delta=1e-20)
        self.assertAlmostEqual(4e-3, parse_quantity("4mm", LENGTH), delta=1e-18)
        self.assertAlmostEqual(1610e-9, parse_quantity("1610nm", LENGTH), delta=1e-20)
        self.assertAlmostEqual(2.8e-2, parse_quantity("2.8cm", LENGTH), delta=1e-16)
        self.assertAlmostEqual(300.0, parse_quantity("3percm", INVERSE_LENGTH))
        self.assertAlmostEqual(math.pi / 2, parse_quantity("90deg", ANGLE))
        self.assertEqual(1e-10, parse_quantity("1e-10", DIMENSIONLESS))

    def test_bare_numbers(self):

        self.assertEqual(1.5, parse_quantity(1.5, ANGLE))
        self.assertEqual(2.0, parse_quantity("2", DIMENSIONLESS))
        with self.assertRaises(UnitError):
            parse_quantity(14, LENGTH)
        with self.assertRaises(UnitError):
            parse_quantity("14", LENGTH)

    def test_bad_literals(self):

        with self.assertRaises(UnitError):
            parse_quantity("14furlong", LENGTH)
        with self.assertRaises(UnitError):
            parse_quantity("3percm", LENGTH)
        with self.assertRaises(UnitError):
            parse_quantity("fourteen um", LENGTH)
        with self.assertRaises(UnitError):
            parse_quantity(True, DIMENSIONLESS)
        with self.assertRaises(UnitError):
            parse_quantity("2um", DIMENSIONLESS)

    def test_format_is_lossless(self):

        for value, dimension in (
            (1.61e-6, LENGTH),
            (1 / 3.0, LENGTH),
            (300.0, INVERSE_LENGTH),
            (math.pi / 7, ANGLE),
        ):
            text = format_quantity(value, dimension)
            self.assertEqual(value, parse_quantity(text, dimension))
