"""
    Coupling constant of measured or simulated site powers
"""

import click

from ._options import invoke


@click.command("fit-coupling", short_help="Fits Delta to a site-power table.")
@click.argument("table", type=click.Path(dir_okay=False))
@click.option("--length", "-l", required=True, help="Propagation length, e.g. 28mm.")
@click.pass_context
def run_fit_coupling(ctx, table, length):

    invoke(ctx, "fit-coupling", options={"table": table, "length": length})
