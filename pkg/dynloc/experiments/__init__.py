"""
    Scenarios, figure presets and sweeps
"""

from .dataset import Dataset, Plot, Table
from .dispersion import delta_of_lambda, is_extrapolated
from .evaluate import evaluate
from .presets import PRESETS, reproduce_figure
from .scenario import (
    Engine,
    GaussianBeam,
    Numerics,
    Observable,
    ScenarioConfig,
    SingleSite,
    Sweep,
    SweepAxis,
)
from .sweep import sweep

__all__ = [
    "PRESETS",
    "Dataset",
    "Engine",
    "GaussianBeam",
    "Numerics",
    "Observable",
    "Plot",
    "ScenarioConfig",
    "SingleSite",
    "Sweep",
    "SweepAxis",
    "Table",
    "delta_of_lambda",
    "evaluate",
    "is_extrapolated",
    "reproduce_figure",
    "sweep",
]
