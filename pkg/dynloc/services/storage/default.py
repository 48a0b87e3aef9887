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
    Default Storage Service impl
"""

import codecs
import os

from .base import StorageServiceBase, StorageServiceException


class FilesystemStorageService(StorageServiceBase):
    """
        Implementation of the StorageServiceBase
        to provide a storage service using the host filesystem.
    """

    def __init__(self, config, logger=None):
        """
            Constructor

            :param dict config: `directory` is the root where files are stored
            :raises `dynloc.services.storage.base.StorageServiceException`
        """
        self._root_dir = config["directory"]
        self._logger = logger

        # Check path exists else create it
        try:
            if self._root_dir and not os.path.exists(self._root_dir):
                os.makedirs(self._root_dir)
        except OSError as ex:
            raise StorageServiceException(
                "Unable to create {}: {}".format(self._root_dir, ex)
            )

    @property
    def root_dir(self):
        return self._root_dir

    def _target(self, filename):
        target = os.path.normpath(os.path.join(self._root_dir, filename))
        root = os.path.normpath(self._root_dir)
        if os.path.commonpath([os.path.abspath(root), os.path.abspath(target)]) != (
            os.path.abspath(root)
        ):
            raise StorageServiceException(
                "Object name {} escapes the storage root".format(filename)
            )
        return target

    def read(self, filename):
        """
            Read an existing file.

            :param str filename: file to read
            :rtype: str
            :return:  Content of the file
            :raises `dynloc.services.storage.base.StorageServiceException`
        """
        target = self._target(filename)

        if not os.path.exists(target):
            raise StorageServiceException("File {} does not exist.".format(filename))

        try:
            with codecs.open(target, "r", "utf8") as fd:
                return fd.read()
        except (OSError, UnicodeDecodeError) as ex:
            raise StorageServiceException(ex)

    def write(self, filename, data):
        """
            Write a brand new file.

            :param str filename: Filename of the file to be written
            :param str data: Text content
            :rtype: str
            :return: path of the written file
            :raises `dynloc.services.storage.base.StorageServiceException`
        """
        target = self._target(filename)
        try:
            # Check whether submitted path exists else, create it.
            dirname = os.path.dirname(target)
            if dirname and not os.path.exists(dirname):
                os.makedirs(dirname)

            # newline="" keeps the CRLF record separators of CSV tables
            with open(target, "w", encoding="utf8", newline="") as fd:
                fd.write(data)
        except OSError as ex:
            raise StorageServiceException(
                "Unable to write {}: {}".format(target, ex)
            )

        if self._logger:
            self._logger.debug("wrote {}".format(target))
        return target

    def delete(self, filename):
        """
            Remove an existing file.

            :param str filename: Name of the file to remove
            :raises `dynloc.services.storage.base.StorageServiceException`
        """
        target = self._target(filename)

        if not os.path.exists(target):
            raise StorageServiceException("File {} not found.".format(filename))

        try:
            os.remove(target)
        except OSError as ex:
            raise StorageServiceException(ex)

    def list(self, prefix=""):
        """
            List files below the root whose relative name starts with `prefix`

            :param str prefix: name prefix
            :rtype: list
        """
        names = []
        for dirpath, _, filenames in os.walk(self._root_dir):
            for filename in filenames:
                name = os.path.relpath(os.path.join(dirpath, filename), self._root_dir)
                name = name.replace(os.sep, "/")
                if name.startswith(prefix):
                    names.append(name)
        return sorted(names)
