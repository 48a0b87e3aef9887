"""
    Functional tests of the command line
"""

import csv
import os
import re
import shutil
import tempfile
import unittest

from click.testing import CliRunner

from main import app

from ..setup import settings_file
from ...special import bessel_j_signed

SCENARIO = """
schema_version: {version}
name: straight
array:
  a: 14um
  sites: 41
  L: 28mm
  lambda: 1610nm
coupling:
  delta: {delta}
excitation:
  single_site: 0
numerics:
  z_points: 11
{extra}
"""


class TestCli(unittest.TestCase):
    def setUp(self):

        self.directory = tempfile.mkdtemp(prefix="dynloc_cli_")
        self.runner = CliRunner()

    def tearDown(self):

        shutil.rmtree(self.directory, ignore_errors=True)

    def invoke(self, *args, settings=None):

        arguments = ["--settings", settings or settings_file(), "--environment", "test"]
        return self.runner.invoke(app, arguments + list(args))

    def scenario(self, version=1, delta="3percm", extra=""):

        path = os.path.join(self.directory, "scenario.yml")
        with open(path, "w") as handle:
            handle.write(SCENARIO.format(version=version, delta=delta, extra=extra))
        return path

    def test_design(self):

        result = self.invoke("design", "--free", "wavelength", "--bracket", "1.4um:1.7um")
        self.assertEqual(0, result.exit_code, result.output)
        self.assertIn("wavelength = 1610.07 nm", result.output)

    def test_design_infeasible(self):

        result = self.invoke("design", "--free", "wavelength", "--bracket", "1.0um:1.2um")
        self.assertEqual(1, result.exit_code)
        self.assertIn("error:", result.output)

    def test_fit_coupling(self):

        path = os.path.join(self.directory, "powers.csv")
        with open(path, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["n[1]", "power[1]"])
            for n in range(-40, 41):
                writer.writerow([n, repr(float(bessel_j_signed([n], 16.8)[0] ** 2))])

        result = self.invoke("fit-coupling", path, "--length", "28mm")
        self.assertEqual(0, result.exit_code, result.output)
        delta = float(re.search(r"Delta = (\S+) 1/m", result.output).group(1))
        self.assertAlmostEqual(300.0, delta, delta=3.0)

    def test_fit_coupling_bad_length(self):

        path = os.path.join(self.directory, "powers.csv")
        with open(path, "w", newline="") as handle:
            handle.write("n[1],power[1]\r\n0,1.0\r\n")

        for length in ("28", "2.8furlong"):
            result = self.invoke("fit-coupling", path, "--length", length)
            self.assertEqual(1, result.exit_code, result.output)
            self.assertIn("error:", result.output)
            self.assertIn("length", result.output)
            self.assertNotIsInstance(result.exception, ValueError)

    def test_simulate(self):

        output = os.path.join(self.directory, "out")
        result = self.invoke("simulate", "--config", self.scenario(), "--output", output, "--plots")
        self.assertEqual(0, result.exit_code, result.output)
        for name in ("site_powers.csv", "trajectory.csv", "msd.csv", "provenance.json", "msd.svg"):
            self.assertTrue(os.path.isfile(os.path.join(output, name)), name)
        with open(os.path.join(output, "site_powers.csv"), newline="") as handle:
            self.assertEqual("n[1],power[1]\r\n", handle.readline())

    def test_override_and_engine(self):

        output = os.path.join(self.directory, "out")
        result = self.invoke(
            "simulate",
            "--config",
            self.scenario(),
            "--set",
            "array.L=10mm",
            "--engine",
            "tight_binding",
            "--output",
            output,
        )
        self.assertEqual(0, result.exit_code, result.output)
        with open(os.path.join(output, "msd.csv"), newline="") as handle:
            last = list(csv.reader(handle))[-1]
        self.assertAlmostEqual(0.01, float(last[0]), delta=1e-12)

    def test_unsupported_version(self):

        result = self.invoke("simulate", "--config", self.scenario(version=99))
        self.assertEqual(1, result.exit_code)
        self.assertIn("schema_version", result.output)

    def test_lattice_too_small(self):

        result = self.invoke(
            "simulate", "--config", self.scenario(delta="30percm", extra="  n_half: 1")
        )
        self.assertEqual(1, result.exit_code)

    def test_sweep_needs_section(self):

        result = self.invoke("sweep", "--config", self.scenario())
        self.assertEqual(1, result.exit_code)

    def test_missing_settings(self):

        result = self.invoke(
            "design",
            "--free",
            "wavelength",
            "--bracket",
            "1.4um:1.7um",
            settings=os.path.join(self.directory, "missing.yml"),
        )
        self.assertEqual(2, result.exit_code)

    def test_commands_discovered(self):

        result = self.runner.invoke(app, ["--help"])
        for name in ("simulate", "sweep", "fit-coupling", "design", "reproduce", "calibrate"):
            self.assertIn(name, result.output)
