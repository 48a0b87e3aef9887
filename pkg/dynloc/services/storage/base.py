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
    Define Storage Service abstract Class
"""

import abc


class StorageServiceException(Exception):
    """ Exception that must be raised by StorageService implementations.

        .. py:class:: StorageServiceException
    """

    def __init__(self, message):
        super(StorageServiceException, self).__init__(message)


class StorageServiceBase(abc.ABC):
    """
        Interface of the service receiving dataset artifacts
        (CSV tables, provenance, SVG plots, calibration files).

        Object names are relative paths such as `fig6/fig6_sweep.csv`.

        ..py:exception:: StorageServiceException
    """

    @abc.abstractmethod
    def read(self, object_name):
        """
            Read an existing object.

            :param str object_name: Unique object name to be read
            :rtype: str
            :return:  Content of the object
            :raises `dynloc.services.storage.base.StorageServiceException`
        """

    @abc.abstractmethod
    def write(self, object_name, data):
        """
            Write a new object, replacing any previous content.

            :param str object_name: Unique object name to be pushed
            :param str data: Text content
            :rtype: str
            :return: location of the written object
            :raises `dynloc.services.storage.base.StorageServiceException`
        """

    @abc.abstractmethod
    def delete(self, object_name):
        """
            Triggered when an object must be removed.

            :param str object_name: Unique object name that must be removed
            :raises `dynloc.services.storage.base.StorageServiceException`
        """

    @abc.abstractmethod
    def list(self, prefix=""):
        """
            List stored object names starting with `prefix`, sorted.

            :param str prefix: object name prefix
            :rtype: list
        """
