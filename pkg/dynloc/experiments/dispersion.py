"""
    Measured coupling dispersion Delta(lambda)
"""

import logging

from ..exceptions import DomainError

logger = logging.getLogger(__name__)

# (wavelength [m], Delta [1/m]) anchors of the straight-array measurement
ANCHORS = ((1440e-9, 175.0), (1610e-9, 300.0))


def is_extrapolated(wavelength):
    return not ANCHORS[0][0] <= wavelength <= ANCHORS[-1][0]


def delta_of_lambda(wavelength):
    """
        Linear interpolation of Delta between the measured anchors.
        Wavelengths outside them are extrapolated with a warning.

        :param float wavelength: metres
        :rtype: float
    """
    if not wavelength > 0:
        raise DomainError("wavelength must be positive")
    (low, delta_low), (high, delta_high) = ANCHORS
    delta = delta_low + (delta_high - delta_low) * (wavelength - low) / (high - low)
    if is_extrapolated(wavelength):
        logger.warning(
            "Delta({:.1f} nm) = {:.4g} 1/m extrapolated outside the measured range".format(
                wavelength * 1e9, delta
            )
        )
    if delta <= 0:
        raise DomainError(
            "extrapolated coupling at {:.1f} nm is not positive".format(wavelength * 1e9)
        )
    return delta
