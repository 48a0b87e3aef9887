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
    Dataset emission: CSV tables, provenance and SVG plots, all written
    through the storage service
"""

import csv
import io
import json
import logging
import math

import matplotlib

matplotlib.use("Agg")

import numpy as np  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402

from .services import StorageService  # noqa: E402

logger = logging.getLogger(__name__)

PROVENANCE_FILE = "provenance.json"
SVG_HASH_SALT = "dynloc"


def format_cell(value):
    """ Shortest round-trip text of a cell """
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def table_to_csv(table):
    """ RFC-4180 text, header row `name[unit]` """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(table.headers)
    for row in table.rows:
        writer.writerow([format_cell(value) for value in row])
    return buffer.getvalue()


def _plain(value):
    """ JSON-safe copy: non-finite floats become null, tuples become lists """
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    if isinstance(value, complex):
        return {"re": _plain(value.real), "im": _plain(value.imag)}
    return value


def provenance_to_json(dataset):
    document = dict(_plain(dataset.provenance))
    document["dataset"] = dataset.name
    document["tables"] = {
        name: {"file": "{}.csv".format(name), "columns": table.headers, "rows": len(table)}
        for name, table in dataset.tables.items()
    }
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def _line_plot(axes, table, plot):
    x = table.column(plot.x)
    for name in plot.ys:
        if name in [column[0] for column in table.columns]:
            axes.plot(x, table.column(name), label=name)
    axes.set_xlabel(table.headers[[column[0] for column in table.columns].index(plot.x)])
    if plot.log_scale:
        axes.set_yscale("log")
    axes.legend()


def _heatmap(figure, axes, table, plot):
    y_name, value_name = plot.ys
    x = table.column(plot.x)
    y = table.column(y_name)
    values = table.column(value_name)
    x_axis = np.unique(x)
    y_axis = np.unique(y)
    grid = np.full((y_axis.size, x_axis.size), np.nan)
    grid[np.searchsorted(y_axis, y), np.searchsorted(x_axis, x)] = values
    mesh = axes.pcolormesh(x_axis, y_axis, grid, shading="nearest")
    figure.colorbar(mesh, ax=axes, label=value_name)
    axes.set_xlabel(plot.x)
    axes.set_ylabel(y_name)


def render_svg(dataset, plot):
    """ SVG text of one plot; no date and a fixed id salt, so output is reproducible """
    table = dataset.tables[plot.table]
    with matplotlib.rc_context({"svg.hashsalt": SVG_HASH_SALT}):
        figure = Figure(figsize=(6.4, 4.8))
        axes = figure.add_subplot(1, 1, 1)
        if len(table):
            if plot.kind == "heatmap":
                _heatmap(figure, axes, table, plot)
            else:
                _line_plot(axes, table, plot)
        axes.set_title(plot.title or plot.name)
        buffer = io.StringIO()
        figure.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def emit_dataset(dataset, output_dir=None, plots=False):
    """
        Write every table, the provenance file and, with `plots`, the SVG
        renderings through `StorageService`

        :param `dynloc.experiments.Dataset` dataset: results
        :param str output_dir: re-roots the storage service before writing
        :param bool plots: also render SVG plots
        :rtype: list
        :return: locations of the written files
        :raises `dynloc.services.storage.base.StorageServiceException`
    """
    if output_dir:
        StorageService.relocate(output_dir)

    written = []
    for name, table in dataset.tables.items():
        written.append(StorageService.write("{}.csv".format(name), table_to_csv(table)))
    written.append(StorageService.write(PROVENANCE_FILE, provenance_to_json(dataset)))
    if plots:
        for plot in dataset.plots:
            if plot.table not in dataset.tables:
                continue
            written.append(
                StorageService.write("{}.svg".format(plot.name), render_svg(dataset, plot))
            )
    logger.info("dataset {}: {} file(s) written".format(dataset.name, len(written)))
    return written
