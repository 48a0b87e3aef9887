"""
    Tabular results with provenance
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .. import __version__


@dataclass
class Table:
    """
        Named columns, each a (name, unit) pair; the first column is the
        independent variable of every row.
    """

    name: str
    columns: tuple
    rows: list = field(default_factory=list)

    @property
    def headers(self):
        return ["{}[{}]".format(name, unit) for name, unit in self.columns]

    def add_row(self, *values):
        if len(values) != len(self.columns):
            raise ValueError(
                "table {} expects {} values, got {}".format(
                    self.name, len(self.columns), len(values)
                )
            )
        self.rows.append(tuple(values))

    def column(self, name):
        names = [column[0] for column in self.columns]
        index = names.index(name)
        return np.array([row[index] for row in self.rows], dtype=float)

    def __len__(self):
        return len(self.rows)


@dataclass
class Plot:
    """ `kind` is "line" (x against each of ys) or "heatmap" (x, y, value) """

    name: str
    table: str
    kind: str
    x: str
    ys: tuple
    title: str = ""
    log_scale: bool = False


@dataclass
class Dataset:
    name: str
    provenance: dict = field(default_factory=dict)
    tables: dict = field(default_factory=dict)
    plots: list = field(default_factory=list)

    def add_table(self, table):
        self.tables[table.name] = table
        return table

    def table(self, name):
        return self.tables[name]

    def note(self, message):
        self.provenance.setdefault("notes", []).append(message)


def base_provenance(config, tolerance):
    from ..parsers.scenario import serialize

    return {
        "code_version": __version__,
        "scenario": serialize(config),
        "engine": config.engine.value,
        "tolerances": {"ode": tolerance},
    }


def finite_or_none(value):
    try:
        value = float(value)
    except (TypeError, ValueError):
        return value
    return value if math.isfinite(value) else None
