"""
    Unit tests for Bessel functions of the first kind
"""

import unittest

import numpy as np
from scipy import special as scipy_special

from ...exceptions import DomainError
from ...special import bessel_j, bessel_j_orders, bessel_j_signed, first_j0_zero


class TestBessel(unittest.TestCase):
    def test_first_zero(self):

        self.assertAlmostEqual(scipy_special.jn_zeros(0, 1)[0], first_j0_zero(), delta=1e-12)
        self.assertLess(abs(bessel_j(0, first_j0_zero())), 1e-12)

    def test_against_scipy(self):

        arguments = list(np.linspace(0.01, 40.0, 97)) + [0.0, 100.3, 999.7, 5000.1, 9999.9]
        for x in arguments:
            orders = bessel_j_orders(80, x)
            expected = scipy_special.jv(np.arange(81), x)
            self.assertLess(np.max(np.abs(orders - expected)), 1e-12, x)

    def test_recurrence(self):

        x = 16.8
        values = bessel_j_orders(40, x)
        for n in range(1, 40):
            residual = values[n - 1] + values[n + 1] - 2 * n / x * values[n]
            self.assertLess(abs(residual), 1e-10)

    def test_sum_of_squares(self):

        for x in (0.5, 16.8, 60.0):
            n_max = int(x) + 40
            values = bessel_j_orders(n_max, x)
            total = values[0] ** 2 + 2 * np.sum(values[1:] ** 2)
            self.assertAlmostEqual(1.0, total, delta=1e-10)

    def test_negative_orders_and_arguments(self):

        self.assertAlmostEqual(-bessel_j(3, 5.0), bessel_j(-3, 5.0), delta=1e-15)
        self.assertAlmostEqual(bessel_j(4, 5.0), bessel_j(-4, 5.0), delta=1e-15)
        self.assertAlmostEqual(-bessel_j(1, 2.5), bessel_j(1, -2.5), delta=1e-15)
        signed = bessel_j_signed([-2, -1, 0, 1, 2], 3.0)
        expected = scipy_special.jv([-2, -1, 0, 1, 2], 3.0)
        self.assertLess(np.max(np.abs(signed - expected)), 1e-12)

    def test_domain(self):

        with self.assertRaises(DomainError):
            bessel_j(0, 1e5)
        with self.assertRaises(DomainError):
            bessel_j(0, float("nan"))
        with self.assertRaises(DomainError):
            bessel_j_orders(500, 1.0)
