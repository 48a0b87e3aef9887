"""
    Parameter sweep of a scenario file
"""

import click

from ._options import invoke, scenario_options


@click.command("sweep", short_help="Runs the sweep section of a scenario file.")
@scenario_options
@click.pass_context
def run_sweep(ctx, config_path, overrides, output_dir, plots, engine, tolerance, jobs):

    invoke(
        ctx,
        "sweep",
        config_path=config_path,
        overrides=tuple(overrides),
        output_dir=output_dir,
        plots=plots,
        engine=engine,
        tolerance=tolerance,
        jobs=jobs,
    )
