"""
    Scenario file parsing
"""

from .scenario import apply_overrides, load_scenario, parse_config, serialize

__all__ = ["apply_overrides", "load_scenario", "parse_config", "serialize"]
