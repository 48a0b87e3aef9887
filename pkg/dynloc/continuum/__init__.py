"""
    Continuum (paraxial) engine
"""

from .calibration import (
    Calibration,
    apply_calibration,
    calibrate_potential,
    read_calibration,
    write_calibration,
)
from .fitting import CouplingFit, fit_coupling
from .gauge import kh_map, kh_map_inverse
from .grid import SampledField, TransverseGrid
from .modes import find_bound_mode, fundamental_mode, supermode_coupling
from .observables import (
    continuum_msd,
    cross_section,
    gaussian_input,
    mode_input,
    site_powers,
    site_width,
)
from .potential import PotentialProfile, build_potential
from .propagation import BpmConfig, FieldTrajectory, propagate, propagate_transformed

__all__ = [
    "BpmConfig",
    "Calibration",
    "CouplingFit",
    "FieldTrajectory",
    "PotentialProfile",
    "SampledField",
    "TransverseGrid",
    "apply_calibration",
    "build_potential",
    "calibrate_potential",
    "continuum_msd",
    "cross_section",
    "find_bound_mode",
    "fit_coupling",
    "fundamental_mode",
    "gaussian_input",
    "kh_map",
    "kh_map_inverse",
    "mode_input",
    "propagate",
    "propagate_transformed",
    "read_calibration",
    "site_powers",
    "site_width",
    "supermode_coupling",
    "write_calibration",
]
