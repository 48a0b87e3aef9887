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
    Bessel functions of the first kind, integer order.

    Small arguments use the power series, everything else a single
    backward (Miller) recurrence normalised with J0 + 2 sum J2k = 1.
"""

import math
from functools import lru_cache

import numpy as np

from .exceptions import DomainError

MAX_ARGUMENT = 1e4
MAX_ORDER = 200
SERIES_LIMIT = 2.0
RESCALE_AT = 1e250


def _check(n_max, x):
    if not math.isfinite(x) or abs(x) > MAX_ARGUMENT:
        raise DomainError("Bessel argument {} outside |x| <= {}".format(x, MAX_ARGUMENT))
    if abs(n_max) > MAX_ORDER:
        raise DomainError("Bessel order {} above {}".format(n_max, MAX_ORDER))


def _series(n_max, x):
    half = x / 2
    quarter_sq = half * half
    values = np.zeros(n_max + 1)
    for order in range(n_max + 1):
        log_lead = order * math.log(half) - math.lgamma(order + 1)
        if log_lead < -745:
            break
        term = math.exp(log_lead)
        total = term
        k = 0
        while abs(term) > 1e-17 * abs(total) or k < 2:
            k += 1
            term *= -quarter_sq / (k * (order + k))
            total += term
        values[order] = total
    return values


def _miller_start(n_max, x):
    top = max(n_max, x)
    start = int(top + 30 + math.sqrt(160.0 * max(top, 1.0)))
    return start + (start % 2)


def _miller(n_max, x):
    start = _miller_start(n_max, x)
    values = np.zeros(n_max + 1)
    following, current = 0.0, 1e-30
    norm = 0.0
    for order in range(start, 0, -1):
        previous = 2 * order / x * current - following
        following, current = current, previous
        if abs(current) > RESCALE_AT:
            current /= RESCALE_AT
            following /= RESCALE_AT
            values /= RESCALE_AT
            norm /= RESCALE_AT
        # `current` now holds the unnormalised J_{order-1}
        if order - 1 <= n_max:
            values[order - 1] = current
        if (order - 1) % 2 == 0 and order - 1 > 0:
            norm += 2 * current
    norm += current
    return values / norm


def bessel_j_orders(n_max, x):
    """
        J_0(x) .. J_{n_max}(x) from one recurrence pass

        :param int n_max: highest order, 0 <= n_max <= 200
        :param float x: argument, |x| <= 1e4
        :rtype: numpy.ndarray
        :raises `dynloc.exceptions.DomainError`
    """
    n_max = int(n_max)
    x = float(x)
    _check(n_max, x)
    if n_max < 0:
        raise DomainError("n_max must be non-negative")

    magnitude = abs(x)
    if magnitude == 0:
        values = np.zeros(n_max + 1)
        values[0] = 1.0
    elif magnitude <= SERIES_LIMIT:
        values = _series(n_max, magnitude)
    else:
        values = _miller(n_max, magnitude)

    if x < 0:
        values[1::2] *= -1
    return values


def bessel_j(n, x):
    """
        J_n(x) for integer n, with J_{-n} = (-1)^n J_n

        :raises `dynloc.exceptions.DomainError`
    """
    n = int(n)
    _check(n, float(x))
    value = bessel_j_orders(abs(n), x)[abs(n)]
    if n < 0 and n % 2:
        return float(-value)
    return float(value)


def bessel_j_signed(n_values, x):
    """
        J_n(x) over an integer array of possibly negative orders

        :rtype: numpy.ndarray
    """
    n_values = np.asarray(n_values, dtype=int)
    if n_values.size == 0:
        return np.zeros(0)
    orders = np.abs(n_values)
    table = bessel_j_orders(int(np.max(orders)), x)
    signs = np.where((n_values < 0) & (orders % 2 == 1), -1.0, 1.0)
    return signs * table[orders]


@lru_cache(maxsize=1)
def first_j0_zero():
    """
        First positive zero of J0, by bisection on [2, 3] polished
        with Newton steps (J0' = -J1)
    """
    low, high = 2.0, 3.0
    while high - low > 1e-6:
        middle = (low + high) / 2
        if bessel_j(0, low) * bessel_j(0, middle) <= 0:
            high = middle
        else:
            low = middle

    root = (low + high) / 2
    for _ in range(20):
        values = bessel_j_orders(1, root)
        step = values[0] / values[1]
        root += step
        if abs(step) < 1e-15:
            break
    return root
