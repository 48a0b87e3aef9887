"""
    Options shared by the scenario driven commands
"""

import sys

import click

from ..experiments import Engine
from ..runner import CliInvocation, run

ENGINES = [engine.value for engine in Engine]


def scenario_options(func):

    decorators = (
        click.option("config_path", "--config", "-c", required=True, help="Scenario YAML file."),
        click.option("overrides", "--set", "-s", multiple=True, help="key.path=value override."),
        click.option("output_dir", "--output", "-o", help="Output directory."),
        click.option("--plots", is_flag=True, help="Also write SVG plots."),
        click.option("--engine", type=click.Choice(ENGINES)),
        click.option("--tolerance", type=float, help="ODE tolerance."),
        click.option("--jobs", type=click.IntRange(min=1), help="Parallel sweep points."),
    )
    for decorator in reversed(decorators):
        func = decorator(func)
    return func


def invoke(ctx, subcommand, **kwargs):
    """ Build the invocation from the group context and exit with its code """
    obj = ctx.obj or {}
    invocation = CliInvocation(
        subcommand,
        settings=obj.get("settings"),
        environment=obj.get("environment", "default"),
        **kwargs
    )
    sys.exit(run(invocation))
