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
    DL condition integral, running DL integral w(z), closed-form mean
    square displacement, effective coupling and inverse design.
"""

import enum
import logging
import math
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from . import geometry
from .exceptions import (
    DesignInfeasibleError,
    DomainError,
    QuadratureError,
    UnsupportedProfileError,
)
from .geometry import ProfileKind
from .special import bessel_j, bessel_j_orders
from .utils.optimize import scan_minimum

logger = logging.getLogger(__name__)

QUAD_EPSREL = 1e-10
QUAD_EPSABS = 1e-13
QUAD_LIMIT = 400

GAUSS_NODES, GAUSS_WEIGHTS = np.polynomial.legendre.leggauss(20)

DESIGN_SCAN_POINTS = 64
# |dl_integral| / Lambda below this counts as a root for general profiles
GENERAL_ROOT_LEVEL = 1e-6


class FreeParameter(enum.Enum):
    AMPLITUDE = "amplitude"
    PERIOD = "period"
    WAVELENGTH = "wavelength"
    TILT = "tilt"


@dataclass(frozen=True)
class DlDiagnostics:
    Gamma: float
    dl_integral_value: complex
    effective_delta: float
    is_localized: bool
    localization_tolerance: float = 1e-3


def _complex_quad(func, low, high, points=None):
    """ Adaptive Gauss-Kronrod on real and imaginary parts """
    parts = []
    for projection in (np.real, np.imag):
        result = quad(
            lambda s: float(projection(func(s))),
            low,
            high,
            points=points or None,
            limit=QUAD_LIMIT,
            epsabs=QUAD_EPSABS,
            epsrel=QUAD_EPSREL,
            full_output=1,
        )
        value, error = result[0], result[1]
        # a fourth element is quadpack's warning message
        if len(result) > 3 and error > 10 * max(QUAD_EPSABS, QUAD_EPSREL * abs(value)):
            raise QuadratureError(
                "quadrature did not converge: {}".format(result[3].splitlines()[0]),
                achieved=error,
            )
        parts.append(value)
    return complex(parts[0], parts[1])


def _require_period(profile):
    if not profile.is_periodic:
        raise UnsupportedProfileError(
            "DL integral needs a periodic profile with a period, got {}".format(
                profile.kind.value
            )
        )


def dl_integral(spec, profile):
    """
        Integral of exp(-i gamma) over one period

        :rtype: complex
        :raises `dynloc.exceptions.UnsupportedProfileError`: aperiodic profile
        :raises `dynloc.exceptions.QuadratureError`
    """
    _require_period(profile)
    period = profile.period_Lambda

    def integrand(s):
        return np.exp(-1j * geometry.gamma_unchecked(spec, profile, s * period))

    points = [z / period for z in geometry.kinks(profile, period) if z < period]
    return period * _complex_quad(integrand, 0.0, 1.0, points)


class RunningIntegral(object):
    """
        w(z) = integral of exp(-i gamma) from 0 to z, on panels aligned to
        the zigzag kinks and sampled knots, each panel integrated with a
        20-point Gauss-Legendre rule.
    """

    def __init__(self, spec, profile):
        self.spec = spec
        self.profile = profile
        self.nodes = self._panel_nodes()
        panels = self._gauss(self.nodes[:-1], self.nodes[1:])
        self.cumulative = np.concatenate(([0j], np.cumsum(panels)))

    def _panel_nodes(self):
        length = self.spec.sample_length_L
        width = length / 256
        if self.profile.period_Lambda is not None and self.profile.is_periodic:
            width = min(width, self.profile.period_Lambda / 64)
        rate = geometry.max_gamma_rate(self.spec, self.profile, length)
        if rate > 0:
            width = min(width, 0.5 / rate)

        count = int(math.ceil(length / width))
        nodes = [np.linspace(0.0, length, count + 1)]
        nodes.append(np.array(geometry.kinks(self.profile, length)))
        if self.profile.kind == ProfileKind.SAMPLED:
            knots = np.array([pair[0] for pair in self.profile.samples])
            nodes.append(knots[knots < length])
        nodes = np.unique(np.concatenate(nodes))
        return nodes[nodes <= length]

    def _gauss(self, low, high):
        low = np.atleast_1d(low)
        high = np.atleast_1d(high)
        middle = (low + high) / 2
        half = (high - low) / 2
        points = middle[:, None] + half[:, None] * GAUSS_NODES[None, :]
        phase = geometry.gamma_unchecked(self.spec, self.profile, points)
        return half * (np.exp(-1j * phase) @ GAUSS_WEIGHTS)

    def __call__(self, z):
        z = np.asarray(z, dtype=float)
        flat = np.clip(z.ravel(), 0.0, self.nodes[-1])
        index = np.clip(np.searchsorted(self.nodes, flat, side="right") - 1, 0, None)
        index = np.minimum(index, len(self.nodes) - 1)
        values = self.cumulative[index] + self._gauss(self.nodes[index], flat)
        values = values.reshape(z.shape)
        if values.ndim == 0:
            return complex(values)
        return values


@lru_cache(maxsize=64)
def running_integral(spec, profile):
    return RunningIntegral(spec, profile)


def w_function(spec, profile, z):
    """
        Running DL integral w(z); |b_n(z)|^2 = J_n(2 Delta |w(z)|)^2

        :param z: scalar or array in [0, L]
        :raises `dynloc.exceptions.DomainError`
    """
    z_array = np.asarray(z, dtype=float)
    if np.any(z_array < 0) or np.any(
        z_array > spec.sample_length_L * (1 + geometry.LENGTH_SLACK)
    ):
        raise DomainError("z outside [0, {}]".format(spec.sample_length_L))
    return running_integral(spec, profile)(z)


def _sinusoid_gamma(spec, profile):
    if profile.kind == ProfileKind.STRAIGHT:
        return 0.0
    if profile.kind != ProfileKind.SINUSOIDAL or profile.phase_phi0 != 0:
        raise UnsupportedProfileError(
            "closed form holds for sine-phased sinusoids only (phi0 = 0)"
        )
    return geometry.big_gamma(spec, profile)


def uv_functions(z, spec, profile):
    """
        u(z) and v(z), integrals of cos and sin of Gamma (1 - cos(2 pi t / Lambda))

        Each half period contributes the same amount, so only the
        remainder needs a fresh quadrature.
    """
    gamma = _sinusoid_gamma(spec, profile)
    z_array = np.atleast_1d(np.asarray(z, dtype=float))
    if gamma == 0:
        u_values = z_array.copy()
        return u_values, np.zeros_like(z_array)

    period = profile.period_Lambda

    def integrand(s):
        return np.exp(1j * gamma * (1 - math.cos(2 * math.pi * s)))

    half_period = period * _complex_quad(integrand, 0.0, 0.5)
    results = np.zeros(z_array.shape, dtype=complex)
    for position, z_value in enumerate(z_array):
        halves = int(math.floor(z_value / (period / 2)))
        remainder = z_value - halves * period / 2
        start = 0.5 * (halves % 2)
        tail = 0j
        if remainder > 0:
            tail = period * _complex_quad(integrand, start, start + remainder / period)
        results[position] = halves * half_period + tail
    return results.real, results.imag


def msd_closed_form(z, delta, spec, profile):
    """
        Mean square displacement 2 Delta^2 (u^2 + v^2)

        :param z: scalar or array
        :param float delta: coupling constant (1/m)
        :raises `dynloc.exceptions.UnsupportedProfileError`
    """
    u_values, v_values = uv_functions(z, spec, profile)
    msd = 2 * delta ** 2 * (u_values ** 2 + v_values ** 2)
    if np.ndim(z) == 0:
        return float(msd[0])
    return msd


def effective_coupling(delta, Gamma):
    if delta < 0:
        raise DomainError("coupling must be non-negative")
    return delta * abs(bessel_j(0, Gamma))


def dl_diagnostics(spec, profile, delta, tolerance=1e-3):
    """
        Gamma (nan unless sinusoidal), DL integral, Delta_eff and verdict

        :rtype: `DlDiagnostics`
    """
    gamma = float("nan")
    if profile.kind == ProfileKind.SINUSOIDAL:
        gamma = geometry.big_gamma(spec, profile)
    elif profile.kind == ProfileKind.STRAIGHT:
        gamma = 0.0

    if profile.kind == ProfileKind.STRAIGHT and profile.period_Lambda is None:
        return DlDiagnostics(gamma, complex("nan"), delta, False, tolerance)

    value = dl_integral(spec, profile)
    ratio = abs(value) / profile.period_Lambda
    return DlDiagnostics(gamma, value, delta * ratio, ratio < tolerance, tolerance)


def with_parameter(spec, profile, free, value):
    """
        Copy of (spec, profile) with one design parameter replaced

        :rtype: tuple
    """
    free = FreeParameter(free)
    if free == FreeParameter.WAVELENGTH:
        return replace(spec, wavelength_lambda=value), profile
    if free == FreeParameter.PERIOD:
        return spec, replace(profile, period_Lambda=value)
    if free == FreeParameter.AMPLITUDE:
        if profile.kind not in (ProfileKind.SINUSOIDAL, ProfileKind.CIRCULAR):
            raise UnsupportedProfileError(
                "amplitude is not a free parameter of {} profiles".format(
                    profile.kind.value
                )
            )
        return spec, replace(profile, amplitude_A=value)
    if profile.kind != ProfileKind.ZIGZAG:
        raise UnsupportedProfileError("tilt is a zigzag parameter")
    return spec, replace(profile, zigzag_tilt=value)


def _solve_sinusoid(spec, profile, free, bracket):
    if free == FreeParameter.TILT:
        raise UnsupportedProfileError("tilt is a zigzag parameter")

    def objective(value):
        pair = with_parameter(spec, profile, free, value)
        return bessel_j_orders(0, geometry.big_gamma(*pair))[0]

    grid = np.linspace(bracket[0], bracket[1], DESIGN_SCAN_POINTS)
    values = [objective(value) for value in grid]
    for index in range(len(grid) - 1):
        if values[index] * values[index + 1] <= 0:
            low, high = grid[index], grid[index + 1]
            return brentq(
                objective, low, high, xtol=abs(low) * 1e-14 + 1e-300, rtol=1e-13
            )

    raise DesignInfeasibleError(
        "J0(Gamma) keeps its sign over [{}, {}]".format(*bracket),
        scanned=[(float(x), float(f)) for x, f in zip(grid, values)],
    )


def _solve_general(spec, profile, free, bracket):
    def objective(value):
        pair = with_parameter(spec, profile, free, value)
        return abs(dl_integral(*pair)) / pair[1].period_Lambda

    x_min, f_min, scanned = scan_minimum(
        objective, bracket[0], bracket[1], DESIGN_SCAN_POINTS
    )
    logger.debug("general DL design minimum {} at {}".format(f_min, x_min))
    if f_min >= GENERAL_ROOT_LEVEL:
        raise DesignInfeasibleError(
            "smallest |dl_integral| / Lambda over [{}, {}] is {:.3g}".format(
                bracket[0], bracket[1], f_min
            ),
            scanned=scanned,
        )
    return x_min


def solve_dl_parameter(spec, profile, free, bracket):
    """
        Value of the free parameter achieving dynamic localization

        :param free: a `FreeParameter` or its value string
        :param tuple bracket: (low, high) in SI units
        :raises `dynloc.exceptions.DesignInfeasibleError`
    """
    free = FreeParameter(free)
    low, high = sorted(float(bound) for bound in bracket)
    if not low > 0:
        raise DomainError("design bracket must be positive")
    if profile.kind == ProfileKind.SINUSOIDAL:
        value = _solve_sinusoid(spec, profile, free, (low, high))
    elif profile.kind in (ProfileKind.ZIGZAG, ProfileKind.STRAIGHT):
        value = _solve_general(spec, profile, free, (low, high))
    else:
        raise UnsupportedProfileError(
            "no DL design for aperiodic {} profiles".format(profile.kind.value)
        )
    logger.info("DL design: {} = {!r}".format(free.value, value))
    return float(value)
