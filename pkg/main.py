#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# This file is part of dynloc.
#
# dynloc is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""
    Main for dynloc
"""

import importlib

import click

import dynloc.commands
from dynloc.config import env_config


@click.group()
@click.option("--settings", help="Application settings YAML file.")
@click.option(
    "--environment", type=click.Choice(sorted(env_config)), default="default", show_default=True
)
@click.version_option(version=dynloc.__version__, message="%(version)s")
@click.pass_context
def app(ctx, settings, environment):
    """ dynloc CLI """
    ctx.obj = {"settings": settings, "environment": environment}


# commands auto-discovery
#
for m in dynloc.commands.__all__:
    module = importlib.import_module("dynloc.commands.%s" % m)
    for func_name in dir(module):
        func = module.__dict__.get(func_name)
        if isinstance(func, click.core.Command) and not isinstance(func, click.core.Group):
            app.add_command(func)


if __name__ == "__main__":
    app()
