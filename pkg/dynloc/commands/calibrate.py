"""
    Continuum potential calibration
"""

import click

from ._options import invoke


@click.command("calibrate", short_help="Calibrates the waveguide potential.")
@click.option(
    "targets",
    "--target",
    "-t",
    multiple=True,
    help="lambda:Delta pair, e.g. 1610nm:3percm (default: measured dispersion).",
)
@click.option("config_path", "--config", "-c", help="Scenario YAML file giving the array.")
@click.option("--file", "-f", help="Calibration file (default: settings CALIBRATION.file).")
@click.pass_context
def run_calibrate(ctx, targets, config_path, file):

    invoke(
        ctx,
        "calibrate",
        config_path=config_path,
        options={"targets": tuple(targets), "file": file},
    )
