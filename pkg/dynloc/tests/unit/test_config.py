"""
    Unit tests for application settings
"""

import logging
import os
import shutil
import tempfile
import unittest

from mock import Mock

from ...config import load_config, read_config_from_file
from ...exceptions import SettingsError
from ...logs import JobLoggerAdapter, get_handlers_from_config


class TestSettings(unittest.TestCase):
    def setUp(self):

        self.directory = tempfile.mkdtemp()

    def tearDown(self):

        shutil.rmtree(self.directory)

    def write(self, text):

        path = os.path.join(self.directory, "settings.yml")
        with open(path, "w") as handle:
            handle.write(text)
        return path

    def test_defaults(self):

        config = load_config()
        self.assertEqual(1e-10, config["NUMERICS"]["tolerance"])
        self.assertEqual(1, config["NUMERICS"]["jobs"])
        self.assertIsNone(config["REDIS"])
        self.assertEqual("calibration.yml", config["CALIBRATION"]["file"])

    def test_file_overrides_defaults(self):

        config = load_config(self.write("NUMERICS:\n  tolerance: 1e-9\n  jobs: 4\n"))
        self.assertEqual(1e-9, config["NUMERICS"]["tolerance"])
        self.assertEqual(4, config["NUMERICS"]["jobs"])

    def test_invalid(self):

        with self.assertRaises(SettingsError):
            load_config(os.path.join(self.directory, "missing.yml"))
        with self.assertRaises(SettingsError):
            load_config(self.write("UNKNOWN: 1\n"))
        with self.assertRaises(SettingsError):
            load_config(self.write("NUMERICS:\n  tolerance: 0.1\n"))
        with self.assertRaises(SettingsError):
            read_config_from_file(self.write("- a\n- b\n"))
        with self.assertRaises(SettingsError):
            load_config(environment="staging")

    def test_handlers(self):

        handlers = get_handlers_from_config(
            {"stdout": {"level": "info"}, "unknown": {"level": "debug"}}
        )
        self.assertEqual(1, len(handlers))
        self.assertEqual(logging.INFO, handlers[0].level)

    def test_job_logger_prefix(self):

        adapter = JobLoggerAdapter(logging.getLogger("rq.worker"), dict())
        msg, kwargs = adapter.process("lambda = 1.61e-06", {"job": Mock(id="abc"), "point": 3})
        self.assertEqual("[job abc, point 3] lambda = 1.61e-06", msg)
        self.assertEqual(3, kwargs["extra"]["sweep_point"])

        msg, kwargs = adapter.process("inline", {})
        self.assertEqual("inline", msg)
        self.assertIsNone(kwargs["extra"]["job_id"])

    def test_partial_numerics_keeps_defaults(self):

        config = load_config(self.write("NUMERICS:\n  jobs: 2\n"))
        self.assertEqual(2, config["NUMERICS"]["jobs"])
        self.assertEqual(1e-10, config["NUMERICS"]["tolerance"])
