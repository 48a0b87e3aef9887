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
    Exceptions raised by dynloc
"""


class DynlocError(Exception):
    """ Base class of every physics/validation failure.

        .. py:class:: DynlocError
    """

    def __init__(self, message):
        super(DynlocError, self).__init__(message)


class DomainError(DynlocError):
    """ Argument outside the domain of a function (z, Bessel argument ...)

        .. py:class:: DomainError
    """


class UnsupportedProfileError(DynlocError):
    """ Operation not defined for the given bending profile kind

        .. py:class:: UnsupportedProfileError
    """


class ConfigError(DynlocError):
    """ Numerical configuration is inconsistent (grid, step, tolerance)

        .. py:class:: ConfigError
    """


class ValidationError(DynlocError):
    """ Scenario config does not follow the schema

        .. py:class:: ValidationError
    """

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = "line {}, column {}: {}".format(line, column, message)
        super(ValidationError, self).__init__(message)
        self.line = line
        self.column = column


class LatticeTruncationError(DynlocError):
    """ Power reached the edges of the truncated lattice

        .. py:class:: LatticeTruncationError
    """

    def __init__(self, message, required_half_width=None):
        super(LatticeTruncationError, self).__init__(message)
        self.required_half_width = required_half_width


class UndefinedObservableError(DynlocError):
    """ Observable requested on a state without power

        .. py:class:: UndefinedObservableError
    """


class QuadratureError(DynlocError):
    """ Adaptive quadrature did not reach the requested tolerance

        .. py:class:: QuadratureError
    """

    def __init__(self, message, achieved=None):
        super(QuadratureError, self).__init__(message)
        self.achieved = achieved


class DesignInfeasibleError(DynlocError):
    """ No parameter value in the bracket achieves dynamic localization

        .. py:class:: DesignInfeasibleError
    """

    def __init__(self, message, scanned=None):
        super(DesignInfeasibleError, self).__init__(message)
        self.scanned = scanned or []


class ModelError(DynlocError):
    """ Waveguide model has no guided mode

        .. py:class:: ModelError
    """


class CalibrationError(DynlocError):
    """ Potential calibration did not reproduce the coupling targets

        .. py:class:: CalibrationError
    """


class CalibrationMissingError(DynlocError):
    """ A continuum scenario needs a calibration file that does not exist

        .. py:class:: CalibrationMissingError
    """


class SettingsError(Exception):
    """ Application settings file is missing or malformed

        .. py:class:: SettingsError
    """

    def __init__(self, message):
        super(SettingsError, self).__init__(message)
