"""
    Unit tests for scenario file parsing
"""

import math
import unittest

import yaml

from ...exceptions import ValidationError
from ...experiments import Engine, GaussianBeam, Observable, SweepAxis
from ...geometry import ProfileKind
from ...parsers import parse_config, serialize

MINIMAL = """
schema_version: 1
array:
  a: 14um
  L: 28mm
  lambda: 1610nm
coupling:
  delta: 3percm
excitation:
  single_site: 0
"""

CURVED = """
schema_version: 1
name: short-period
engine: tight_binding
array:
  a: 14um
  sites: 41
  L: 2.8cm
  n_s: 2.1556
  lambda: 1610nm
profile:
  kind: sinusoidal
  A: 13um
  Lambda: 4mm
  phi0: 90deg
excitation:
  gaussian:
    w_x: 24.7um
    center: 0um
    tilt: 0
sweep:
  axis: period
  range:
    start: 2.8mm
    stop: 14mm
    step: 2.8mm
outputs: [site_powers, msd, dl_diagnostics]
numerics:
  tolerance: 1e-9
  z_points: 11
"""


class TestParseConfig(unittest.TestCase):
    def test_minimal(self):

        config = parse_config(MINIMAL)
        self.assertEqual(Engine.TIGHT_BINDING, config.engine)
        self.assertAlmostEqual(14e-6, config.spec.site_period_a, delta=1e-20)
        self.assertAlmostEqual(0.028, config.spec.sample_length_L, delta=1e-16)
        self.assertAlmostEqual(1610e-9, config.spec.wavelength_lambda, delta=1e-20)
        self.assertAlmostEqual(300.0, config.coupling_delta)
        self.assertEqual(80, config.spec.site_count)
        self.assertEqual(ProfileKind.STRAIGHT, config.profile.kind)
        self.assertEqual(0, config.excitation.site)
        self.assertEqual((Observable.SITE_POWERS, Observable.MSD), config.outputs)
        self.assertEqual(1e-10, config.numerics.tolerance)

    def test_full(self):

        config = parse_config(CURVED)
        self.assertEqual("short-period", config.name)
        self.assertEqual(ProfileKind.SINUSOIDAL, config.profile.kind)
        self.assertAlmostEqual(math.pi / 2, config.profile.phase_phi0)
        self.assertIsInstance(config.excitation, GaussianBeam)
        self.assertEqual(SweepAxis.PERIOD, config.sweep.axis)
        self.assertEqual(5, len(config.sweep.values))
        self.assertAlmostEqual(14e-3, config.sweep.values[-1], delta=1e-15)
        self.assertEqual(1e-9, config.numerics.tolerance)
        self.assertIsNone(config.coupling_delta)

    def test_overrides(self):

        config = parse_config(MINIMAL, ["array.lambda=1440nm", "coupling.delta=1.75percm"])
        self.assertAlmostEqual(1440e-9, config.spec.wavelength_lambda, delta=1e-20)
        self.assertAlmostEqual(175.0, config.coupling_delta)

    def test_round_trip(self):

        for text in (MINIMAL, CURVED):
            config = parse_config(text)
            again = parse_config(yaml.safe_dump(serialize(config)))
            self.assertEqual(config, again)


class TestParseErrors(unittest.TestCase):
    def assertFails(self, text, line=None):

        with self.assertRaises(ValidationError) as context:
            parse_config(text)
        if line is not None:
            self.assertEqual(line, context.exception.line)
            self.assertIsNotNone(context.exception.column)
        return context.exception

    def test_negative_amplitude(self):

        text = MINIMAL + "profile:\n  kind: sinusoidal\n  A: -1um\n  Lambda: 4mm\n"
        error = self.assertFails(text)
        self.assertIn("profile", str(error))

    def test_unsupported_version(self):

        error = self.assertFails(MINIMAL.replace("schema_version: 1", "schema_version: 99"), 2)
        self.assertIn("99", str(error))

    def test_unknown_key(self):

        self.assertFails(MINIMAL.replace("  a: 14um", "  a: 14um\n  pitch: 14um"), 5)

    def test_missing_field(self):

        self.assertFails(MINIMAL.replace("  L: 28mm\n", ""))

    def test_bad_unit(self):

        error = self.assertFails(MINIMAL.replace("28mm", "28furlong"), 5)
        self.assertIn("furlong", str(error))

    def test_non_monotone_sweep(self):

        text = MINIMAL + "sweep:\n  axis: wavelength\n  values: [1500nm, 1610nm, 1550nm]\n"
        self.assertFails(text)

    def test_malformed_yaml(self):

        self.assertFails("array: [14um\n")

    def test_bad_override(self):

        with self.assertRaises(ValidationError):
            parse_config(MINIMAL, ["array.lambda"])
