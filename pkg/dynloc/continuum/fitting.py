"""
    Coupling constant from a single-site diffraction pattern
"""

import logging
from dataclasses import dataclass

import numpy as np

from ..exceptions import DomainError, UndefinedObservableError
from ..special import bessel_j_signed
from ..utils.optimize import scan_minimum

logger = logging.getLogger(__name__)

SCAN_POINTS = 400
POOR_FIT_RESIDUAL = 0.1
SIGNIFICANT_POWER = 1e-3


@dataclass(frozen=True)
class CouplingFit:
    delta: float
    residual: float
    poor_fit: bool


def fit_coupling(powers, length, indices=None):
    """
        Least squares of sum_n (P_n - J_n(2 Delta L)^2)^2 over Delta

        :param powers: site powers, normalised here
        :param float length: propagation length L
        :param indices: site index of each power, default centred on 0
        :rtype: `CouplingFit`
    """
    powers = np.asarray(powers, dtype=float)
    if not length > 0:
        raise DomainError("fit length must be positive")
    if indices is None:
        half = powers.size // 2
        indices = np.arange(-half, powers.size - half)
    indices = np.asarray(indices, dtype=int)
    total = float(np.sum(powers))
    if total <= 0:
        raise UndefinedObservableError("no power to fit")
    powers = powers / total

    occupied = np.abs(indices[powers > SIGNIFICANT_POWER])
    extent = int(np.max(occupied)) if occupied.size else 0

    def residual(argument):
        model = bessel_j_signed(indices, argument) ** 2
        return float(np.sum((powers - model) ** 2))

    argument, best, _ = scan_minimum(residual, 0.0, float(extent + 10), SCAN_POINTS)
    delta = argument / (2 * length)
    poor = best > POOR_FIT_RESIDUAL
    if poor:
        logger.warning(
            "poor coupling fit: residual {:.3g} at Delta = {:.4g} 1/m".format(best, delta)
        )
    else:
        logger.debug("coupling fit Delta = {!r} 1/m, residual {:.3g}".format(delta, best))
    return CouplingFit(delta, best, poor)
