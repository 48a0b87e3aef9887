"""
    Unit tests for the filesystem storage service
"""

import os
import tempfile

from ..setup import DynlocTest
from ...services.helpers import InvalidFormatError, get_implementation_class
from ...services.helpers import WrongImplementationException
from ...services.storage import StorageService
from ...services.storage.base import StorageServiceException


class TestStorage(DynlocTest):
    def test_write_read_delete(self):

        location = StorageService.write("fig6/sweep.csv", "a[1]\r\n1.0\r\n")
        self.assertEqual(os.path.join(self.output_dir, "fig6", "sweep.csv"), location)
        self.assertEqual("a[1]\r\n1.0\r\n", StorageService.read("fig6/sweep.csv"))
        with open(location, "rb") as handle:
            self.assertIn(b"\r\n", handle.read())

        self.assertIn("fig6/sweep.csv", StorageService.list("fig6/"))
        StorageService.delete("fig6/sweep.csv")
        self.assertNotIn("fig6/sweep.csv", StorageService.list())

    def test_missing_objects(self):

        with self.assertRaises(StorageServiceException):
            StorageService.read("missing.csv")
        with self.assertRaises(StorageServiceException):
            StorageService.delete("missing.csv")

    def test_escape_root(self):

        with self.assertRaises(StorageServiceException):
            StorageService.write("../outside.csv", "")

    def test_relocate(self):

        directory = os.path.join(tempfile.mkdtemp(prefix="dynloc_relocate_"), "nested")
        try:
            StorageService.relocate(directory)
            self.assertTrue(os.path.isdir(directory))
            location = StorageService.write("provenance.json", "{}\n")
            self.assertTrue(location.startswith(directory))
        finally:
            StorageService.relocate(self.output_dir)

    def test_response_schema(self):

        instance = StorageService.instance
        try:
            StorageService.instance = type(
                "Broken", (), {"write": lambda self, name, data: 12}
            )()
            with self.assertRaises(InvalidFormatError):
                StorageService.write("x.csv", "")
        finally:
            StorageService.instance = instance

    def test_implementation_class(self):

        with self.assertRaises(WrongImplementationException):
            get_implementation_class("StorageServiceBase", "dynloc.tasks.Queues")
