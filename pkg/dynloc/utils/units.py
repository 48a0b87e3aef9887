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
    Unit-suffixed literals: `14um`, `4mm`, `1610nm`, `3percm`, `90deg`
"""

import math
import re

LENGTH = "length"
INVERSE_LENGTH = "inverse_length"
ANGLE = "angle"
DIMENSIONLESS = "dimensionless"

UNITS = {
    "m": (LENGTH, 1.0),
    "cm": (LENGTH, 1e-2),
    "mm": (LENGTH, 1e-3),
    "um": (LENGTH, 1e-6),
    "nm": (LENGTH, 1e-9),
    "perm": (INVERSE_LENGTH, 1.0),
    "percm": (INVERSE_LENGTH, 1e2),
    "permm": (INVERSE_LENGTH, 1e3),
    "rad": (ANGLE, 1.0),
    "deg": (ANGLE, math.pi / 180),
}

LITERAL_RE = re.compile(
    r"^\s*(?P<value>[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*(?P<unit>[a-z]*)\s*$"
)


class UnitError(ValueError):
    """ Literal with a missing, unknown or mismatched unit suffix

        .. py:class:: UnitError
    """

    def __init__(self, message):
        super(UnitError, self).__init__(message)


def parse_quantity(literal, dimension):
    """
        Convert a literal to SI.

        Lengths, inverse lengths and angles need a suffix; angles also
        accept a bare number (radians). Dimensionless values must be bare.

        :param literal: str, int or float
        :param str dimension: one of LENGTH, INVERSE_LENGTH, ANGLE, DIMENSIONLESS
        :rtype: float
        :raises `UnitError`
    """
    if isinstance(literal, bool):
        raise UnitError("expected a number, got {}".format(literal))

    if isinstance(literal, (int, float)):
        if dimension in (DIMENSIONLESS, ANGLE):
            return float(literal)
        raise UnitError(
            "{} needs a unit suffix ({})".format(literal, ", ".join(_suffixes(dimension)))
        )

    if not isinstance(literal, str):
        raise UnitError("expected a quantity, got {!r}".format(literal))

    match = LITERAL_RE.match(literal)
    if not match:
        raise UnitError("malformed quantity {!r}".format(literal))

    value, unit = float(match.group("value")), match.group("unit")
    if not unit:
        if dimension in (DIMENSIONLESS, ANGLE):
            return value
        raise UnitError(
            "{!r} needs a unit suffix ({})".format(literal, ", ".join(_suffixes(dimension)))
        )

    if unit not in UNITS:
        raise UnitError("unknown unit suffix {!r} in {!r}".format(unit, literal))

    unit_dimension, factor = UNITS[unit]
    if unit_dimension != dimension:
        raise UnitError(
            "{!r} is a {}, expected a {}".format(
                literal, unit_dimension.replace("_", " "), dimension.replace("_", " ")
            )
        )
    return value * factor


def format_quantity(value, dimension):
    """ Inverse of `parse_quantity` in base SI units, lossless """
    if dimension == LENGTH:
        return "{!r}m".format(float(value))
    if dimension == INVERSE_LENGTH:
        return "{!r}perm".format(float(value))
    if dimension == ANGLE:
        return "{!r}rad".format(float(value))
    return float(value)


def _suffixes(dimension):
    return [unit for unit, (kind, _) in UNITS.items() if kind == dimension]
