"""
    Figure presets
"""

import click

from ..experiments import PRESETS
from ._options import ENGINES, invoke


@click.command("reproduce", short_help="Builds the dataset of a figure preset.")
@click.argument("figure", type=click.Choice(sorted(PRESETS)))
@click.option("output_dir", "--output", "-o", help="Output directory.")
@click.option("--plots", is_flag=True, help="Also write SVG plots.")
@click.option("--engine", type=click.Choice(ENGINES))
@click.option("--tolerance", type=float, help="ODE tolerance.")
@click.option("--jobs", type=click.IntRange(min=1), help="Parallel sweep points.")
@click.pass_context
def run_reproduce(ctx, figure, output_dir, plots, engine, tolerance, jobs):

    invoke(
        ctx,
        "reproduce",
        output_dir=output_dir,
        plots=plots,
        engine=engine,
        tolerance=tolerance,
        jobs=jobs,
        options={"figure": figure},
    )
