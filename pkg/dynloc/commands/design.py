"""
    Dynamic localization design
"""

import click

from ..analytics import FreeParameter
from ._options import invoke


@click.command("design", short_help="Solves for the parameter giving DL.")
@click.option("--free", required=True, type=click.Choice([free.value for free in FreeParameter]))
@click.option("--bracket", required=True, help="Search interval, e.g. 1.4um:1.7um.")
@click.option("config_path", "--config", "-c", help="Scenario YAML file (default: 4 mm array).")
@click.option("overrides", "--set", "-s", multiple=True, help="key.path=value override.")
@click.pass_context
def run_design(ctx, free, bracket, config_path, overrides):

    invoke(
        ctx,
        "design",
        config_path=config_path,
        overrides=tuple(overrides),
        options={"free": free, "bracket": bracket},
    )
