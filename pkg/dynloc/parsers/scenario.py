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
    Scenario file parser.

    Scenario files are YAML with unit-suffixed literals (see
    docs/formats.md). Every value is converted to SI while validating, and
    errors point at the line and column of the offending node.
"""

import codecs

import numpy as np
import yaml
from voluptuous import (
    All,
    Coerce,
    Exclusive,
    In,
    Invalid,
    Length,
    MultipleInvalid,
    Optional,
    Range,
    Required,
    Schema,
)

from ..exceptions import DynlocError, ValidationError
from ..experiments.scenario import (
    Engine,
    GaussianBeam,
    Numerics,
    Observable,
    ScenarioConfig,
    SingleSite,
    Sweep,
    SweepAxis,
)
from ..geometry import ArraySpec, BendingProfile, ProfileKind
from ..utils import units
from ..utils.units import ANGLE, DIMENSIONLESS, INVERSE_LENGTH, LENGTH, UnitError

SCHEMA_VERSION = 1
DEFAULT_SITE_COUNT = 80
DEFAULT_SUBSTRATE_INDEX = 2.1556

AXIS_DIMENSIONS = {
    SweepAxis.WAVELENGTH: LENGTH,
    SweepAxis.PERIOD: LENGTH,
    SweepAxis.AMPLITUDE: LENGTH,
    SweepAxis.GAMMA: DIMENSIONLESS,
}


def Quantity(dimension):
    """ voluptuous validator converting a unit literal to SI """

    def convert(value):
        try:
            return units.parse_quantity(value, dimension)
        except UnitError as ex:
            raise Invalid(str(ex))

    return convert


def Version(value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise Invalid("schema_version must be an integer")
    if value != SCHEMA_VERSION:
        raise Invalid(
            "unsupported schema_version {} (this release reads {})".format(
                value, SCHEMA_VERSION
            )
        )
    return value


def Integer(value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise Invalid("expected an integer")
    return value


def SweepSection(section):
    """ Sweep values converted with the dimension of their axis """
    axis = SweepAxis(section["axis"])
    dimension = AXIS_DIMENSIONS[axis]
    if "values" in section:
        values = []
        for index, value in enumerate(section["values"]):
            try:
                values.append(units.parse_quantity(value, dimension))
            except UnitError as ex:
                raise Invalid(str(ex), path=["values", index])
    elif "range" in section:
        spec = section["range"]
        try:
            start = units.parse_quantity(spec["start"], dimension)
            stop = units.parse_quantity(spec["stop"], dimension)
            step = units.parse_quantity(spec["step"], dimension)
        except UnitError as ex:
            raise Invalid(str(ex), path=["range"])
        if step <= 0 or stop < start:
            raise Invalid("range needs start <= stop and a positive step", path=["range"])
        count = int(round((stop - start) / step)) + 1
        values = list(start + step * np.arange(count))
    else:
        raise Invalid("sweep needs values or a range")
    return {"axis": axis, "values": tuple(float(value) for value in values)}


ARRAY_SCHEMA = Schema(
    {
        Required("a"): Quantity(LENGTH),
        Optional("sites", default=DEFAULT_SITE_COUNT): All(Integer, Range(min=1)),
        Required("L"): Quantity(LENGTH),
        Optional("n_s", default=DEFAULT_SUBSTRATE_INDEX): Quantity(DIMENSIONLESS),
        Required("lambda"): Quantity(LENGTH),
        Optional("dn"): Quantity(DIMENSIONLESS),
        Optional("w"): Quantity(LENGTH),
    }
)

PROFILE_SCHEMA = Schema(
    {
        Optional("kind", default="straight"): In([kind.value for kind in ProfileKind]),
        Optional("A"): Quantity(LENGTH),
        Optional("Lambda"): Quantity(LENGTH),
        Optional("phi0"): Quantity(ANGLE),
        Optional("tilt"): Quantity(DIMENSIONLESS),
        Optional("samples"): All(
            [All([Quantity(LENGTH)], Length(min=2, max=2))], Length(min=4)
        ),
    }
)

GAUSSIAN_SCHEMA = Schema(
    {
        Required("w_x"): Quantity(LENGTH),
        Optional("center", default=0.0): Quantity(LENGTH),
        Optional("tilt", default=0.0): Quantity(DIMENSIONLESS),
    }
)

EXCITATION_SCHEMA = Schema(
    {
        Exclusive("single_site", "excitation"): Integer,
        Exclusive("gaussian", "excitation"): GAUSSIAN_SCHEMA,
    }
)

SWEEP_SCHEMA = All(
    Schema(
        {
            Required("axis"): In([axis.value for axis in SweepAxis]),
            Exclusive("values", "points"): list,
            Exclusive("range", "points"): {
                Required("start"): object,
                Required("stop"): object,
                Required("step"): object,
            },
        }
    ),
    SweepSection,
)

NUMERICS_SCHEMA = Schema(
    {
        Optional("tolerance"): All(Quantity(DIMENSIONLESS), Range(min=1e-12, max=1e-6)),
        Optional("z_points"): All(Integer, Range(min=2)),
        Optional("n_half"): All(Integer, Range(min=1)),
        Optional("grid_points"): All(Integer, Range(min=16)),
        Optional("grid_spacing"): Quantity(LENGTH),
        Optional("step"): Quantity(LENGTH),
        Optional("record_every"): All(Integer, Range(min=1)),
        Optional("absorber_width"): Quantity(LENGTH),
    }
)

SCENARIO_SCHEMA = Schema(
    {
        Required("schema_version"): Version,
        Optional("name", default="scenario"): All(Coerce(str), Length(min=1)),
        Optional("engine", default=Engine.TIGHT_BINDING.value): In(
            [engine.value for engine in Engine]
        ),
        Required("array"): ARRAY_SCHEMA,
        Optional("profile", default={}): PROFILE_SCHEMA,
        Optional("excitation", default={}): EXCITATION_SCHEMA,
        Optional("coupling", default={}): {Optional("delta"): Quantity(INVERSE_LENGTH)},
        Optional("sweep"): SWEEP_SCHEMA,
        Optional("outputs", default=["site_powers", "msd"]): [
            In([observable.value for observable in Observable])
        ],
        Optional("numerics", default={}): NUMERICS_SCHEMA,
    }
)


def _locate(root, path):
    """ (line, column), 1-based, of the node at `path` or its closest parent """
    if root is None:
        return None, None
    node, mark = root, root.start_mark
    for key in path:
        found = None
        if isinstance(node, yaml.MappingNode):
            for key_node, value_node in node.value:
                if key_node.value == str(key):
                    found = value_node
                    break
        elif isinstance(node, yaml.SequenceNode) and isinstance(key, int):
            if 0 <= key < len(node.value):
                found = node.value[key]
        if found is None:
            break
        node, mark = found, found.start_mark
    return mark.line + 1, mark.column + 1


def _set_path(data, dotted, value):
    keys = dotted.split(".")
    target = data
    for key in keys[:-1]:
        nested = target.setdefault(key, {})
        if not isinstance(nested, dict):
            raise ValidationError("override {}: {} is not a table".format(dotted, key))
        target = nested
    target[keys[-1]] = value


def apply_overrides(data, overrides):
    """
        Apply `key.path=value` strings to a raw scenario tree; values are
        read as YAML scalars or flow collections
    """
    for override in overrides or ():
        dotted, sep, raw = override.partition("=")
        if not sep or not dotted.strip():
            raise ValidationError("override {!r} is not key.path=value".format(override))
        try:
            value = yaml.safe_load(raw)
        except yaml.YAMLError as ex:
            raise ValidationError("override {!r}: {}".format(override, ex))
        _set_path(data, dotted.strip(), value)
    return data


def _build_profile(section):
    kind = ProfileKind(section["kind"])
    if kind == ProfileKind.STRAIGHT:
        return BendingProfile.straight(section.get("Lambda"))
    if kind == ProfileKind.SINUSOIDAL:
        return BendingProfile.sinusoidal(
            section.get("A", 0.0), section.get("Lambda"), section.get("phi0", 0.0)
        )
    if kind == ProfileKind.ZIGZAG:
        return BendingProfile.zigzag(section.get("tilt", 0.0), section.get("Lambda"))
    if kind == ProfileKind.CIRCULAR:
        return BendingProfile.circular(section.get("A", 0.0), section.get("Lambda"))
    samples = section.get("samples") or ()
    return BendingProfile.sampled(
        [pair[0] for pair in samples], [pair[1] for pair in samples], section.get("Lambda")
    )


def _build_array(section):
    extras = {}
    if "dn" in section:
        extras["well_depth_dn"] = section["dn"]
    if "w" in section:
        extras["well_width_w"] = section["w"]
    return ArraySpec(
        section["a"], section["sites"], section["L"], section["n_s"], section["lambda"], **extras
    )


def _build_excitation(section):
    if "gaussian" in section:
        beam = section["gaussian"]
        return GaussianBeam(beam["w_x"], beam["center"], beam["tilt"])
    return SingleSite(section.get("single_site", 0))


def _build_numerics(section):
    renamed = dict(section)
    if "step" in renamed:
        renamed["step_dz"] = renamed.pop("step")
    return Numerics(**renamed)


def _build(data, root):
    """ ScenarioConfig from validated data; model errors point at their section """
    parts = {}
    builders = (
        ("array", _build_array),
        ("profile", _build_profile),
        ("excitation", _build_excitation),
        ("numerics", _build_numerics),
    )
    for key, builder in builders:
        try:
            parts[key] = builder(data[key])
        except DynlocError as ex:
            raise ValidationError("{}: {}".format(key, _plain(ex)), *_locate(root, [key]))

    sweep = None
    if data.get("sweep"):
        try:
            sweep = Sweep(data["sweep"]["axis"], data["sweep"]["values"])
        except DynlocError as ex:
            raise ValidationError(
                "sweep: {}".format(_plain(ex)), *_locate(root, ["sweep", "values"])
            )

    return ScenarioConfig(
        name=data["name"],
        engine=Engine(data["engine"]),
        spec=parts["array"],
        profile=parts["profile"],
        excitation=parts["excitation"],
        coupling_delta=data["coupling"].get("delta"),
        sweep=sweep,
        outputs=tuple(Observable(value) for value in data["outputs"]),
        numerics=parts["numerics"],
        schema_version=data["schema_version"],
    )


def _plain(ex):
    if isinstance(ex, ValidationError) and ex.line is not None:
        return str(ex).split(": ", 1)[-1]
    return str(ex)


def parse_config(text, overrides=()):
    """
        Parse and validate scenario text

        :param str text: YAML document
        :param overrides: iterable of `key.path=value` strings, applied
            before validation
        :rtype: `ScenarioConfig`
        :raises `dynloc.exceptions.ValidationError`
    """
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
        data = yaml.safe_load(text)
    except yaml.MarkedYAMLError as ex:
        mark = ex.problem_mark
        raise ValidationError(
            ex.problem or str(ex),
            mark.line + 1 if mark else None,
            mark.column + 1 if mark else None,
        )

    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ValidationError("a scenario is a table of sections", *_locate(root, []))
    apply_overrides(data, overrides)

    try:
        validated = SCENARIO_SCHEMA(data)
    except MultipleInvalid as ex:
        error = ex.errors[0]
        path = ".".join(str(part) for part in error.path) or "<root>"
        raise ValidationError("{}: {}".format(path, error.msg), *_locate(root, error.path))
    return _build(validated, root)


def load_scenario(path, overrides=()):
    """ `parse_config` on a UTF-8 file """
    with codecs.open(path, "r", "utf8") as handle:
        return parse_config(handle.read(), overrides)


def _length(value):
    return units.format_quantity(value, LENGTH)


def serialize(config):
    """
        Plain tree for `config` that `parse_config` reads back to an equal
        config; lengths are written in metres

        :rtype: dict
    """
    spec = config.spec
    data = {
        "schema_version": config.schema_version,
        "name": config.name,
        "engine": config.engine.value,
        "array": {
            "a": _length(spec.site_period_a),
            "sites": int(spec.site_count),
            "L": _length(spec.sample_length_L),
            "n_s": float(spec.substrate_index_ns),
            "lambda": _length(spec.wavelength_lambda),
            "dn": float(spec.well_depth_dn),
            "w": _length(spec.well_width_w),
        },
        "profile": _serialize_profile(config.profile),
        "outputs": [observable.value for observable in config.outputs],
        "coupling": {},
        "numerics": _serialize_numerics(config.numerics),
    }
    if config.coupling_delta is not None:
        data["coupling"]["delta"] = units.format_quantity(config.coupling_delta, INVERSE_LENGTH)

    excitation = config.excitation
    if isinstance(excitation, GaussianBeam):
        data["excitation"] = {
            "gaussian": {
                "w_x": _length(excitation.width_wx),
                "center": _length(excitation.center),
                "tilt": float(excitation.tilt),
            }
        }
    else:
        data["excitation"] = {"single_site": int(excitation.site)}

    if config.sweep is not None:
        dimension = AXIS_DIMENSIONS[config.sweep.axis]
        data["sweep"] = {
            "axis": config.sweep.axis.value,
            "values": [units.format_quantity(value, dimension) for value in config.sweep.values],
        }
    return data


def _serialize_profile(profile):
    data = {"kind": profile.kind.value}
    if profile.period_Lambda is not None:
        data["Lambda"] = _length(profile.period_Lambda)
    if profile.kind in (ProfileKind.SINUSOIDAL, ProfileKind.CIRCULAR):
        data["A"] = _length(profile.amplitude_A)
    if profile.kind == ProfileKind.SINUSOIDAL:
        data["phi0"] = units.format_quantity(profile.phase_phi0, ANGLE)
    if profile.kind == ProfileKind.ZIGZAG:
        data["tilt"] = float(profile.zigzag_tilt)
    if profile.kind == ProfileKind.SAMPLED:
        data["samples"] = [[_length(z_value), _length(x0)] for z_value, x0 in profile.samples]
    return data


def _serialize_numerics(numerics):
    data = {
        "tolerance": float(numerics.tolerance),
        "z_points": int(numerics.z_points),
        "grid_points": int(numerics.grid_points),
        "grid_spacing": _length(numerics.grid_spacing),
        "record_every": int(numerics.record_every),
    }
    if numerics.n_half is not None:
        data["n_half"] = int(numerics.n_half)
    if numerics.step_dz is not None:
        data["step"] = _length(numerics.step_dz)
    if numerics.absorber_width is not None:
        data["absorber_width"] = _length(numerics.absorber_width)
    return data
