"""
    Unit tests for dataset serialisation
"""

import json
import unittest

import numpy as np

from ...experiments import Dataset, Plot, Table
from ...output import format_cell, provenance_to_json, render_svg, table_to_csv


def sample_dataset():

    dataset = Dataset("sample", {"code_version": "1.0.0", "bad": float("nan")})
    table = dataset.add_table(Table("trajectory", (("z", "m"), ("n", "1"), ("power", "1"))))
    for z_value in (0.0, 0.5e-3, 1e-3):
        for n in (-1, 0, 1):
            table.add_row(z_value, n, 1.0 / 3 if n else 0.1)
    line = dataset.add_table(Table("msd", (("z", "m"), ("msd", "1"))))
    line.add_row(0.0, 0.0)
    line.add_row(1e-3, 0.18)
    dataset.plots.append(Plot("trajectory", "trajectory", "heatmap", "z", ("n", "power")))
    dataset.plots.append(Plot("msd", "msd", "line", "z", ("msd",), "<n^2>"))
    return dataset


class TestCsv(unittest.TestCase):
    def test_cells(self):

        self.assertEqual("0.1", format_cell(0.1))
        self.assertEqual("0.3333333333333333", format_cell(1.0 / 3))
        self.assertEqual("-4", format_cell(np.int64(-4)))
        self.assertEqual("1", format_cell(True))
        self.assertEqual("nan", format_cell(float("nan")))
        self.assertEqual("a, b", format_cell("a, b"))

    def test_table(self):

        text = table_to_csv(sample_dataset().table("trajectory"))
        lines = text.split("\r\n")
        self.assertEqual("z[m],n[1],power[1]", lines[0])
        self.assertEqual("0.0,-1,0.3333333333333333", lines[1])
        self.assertEqual(11, len(lines))
        self.assertEqual("", lines[-1])

    def test_quoting(self):

        table = Table("errors", (("Gamma", "1"), ("error", "text")))
        table.add_row(2.0, 'edge power, "large"')
        self.assertIn('"edge power, ""large"""', table_to_csv(table))

    def test_row_width(self):

        with self.assertRaises(ValueError):
            Table("t", (("a", "1"),)).add_row(1, 2)


class TestProvenance(unittest.TestCase):
    def test_json(self):

        document = json.loads(provenance_to_json(sample_dataset()))
        self.assertIsNone(document["bad"])
        self.assertEqual("sample", document["dataset"])
        self.assertEqual(9, document["tables"]["trajectory"]["rows"])
        self.assertEqual(["z[m]", "msd[1]"], document["tables"]["msd"]["columns"])


class TestSvg(unittest.TestCase):
    def test_reproducible(self):

        dataset = sample_dataset()
        for plot in dataset.plots:
            first = render_svg(dataset, plot)
            self.assertTrue(first.lstrip().startswith("<?xml"))
            self.assertIn("<svg", first)
            self.assertEqual(first, render_svg(dataset, plot))
