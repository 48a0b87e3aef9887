"""
    Single scenario run
"""

import click

from ._options import invoke, scenario_options


@click.command("simulate", short_help="Runs a scenario file.")
@scenario_options
@click.pass_context
def simulate(ctx, config_path, overrides, output_dir, plots, engine, tolerance, jobs):

    invoke(
        ctx,
        "simulate",
        config_path=config_path,
        overrides=tuple(overrides),
        output_dir=output_dir,
        plots=plots,
        engine=engine,
        tolerance=tolerance,
        jobs=jobs,
    )
