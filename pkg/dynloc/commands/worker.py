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
    Worker for distributed sweeps
"""

import sys

import click

from redis import Redis
from rq import Queue, Worker

from .. import create_app
from ..exceptions import SettingsError


@click.command("run-worker", short_help="Runs a dynloc sweep worker.")
@click.option("queues", "--queues", default="default")
@click.option("--burst", is_flag=True, help="Exit once the queues are empty.")
@click.pass_context
def run_worker(ctx, queues, burst):

    obj = ctx.obj or {}
    try:
        app = create_app(obj.get("settings"), obj.get("environment", "default"))
    except SettingsError as ex:
        sys.stderr.write("error: {}\n".format(ex))
        sys.exit(2)

    config = app.config.get("REDIS")
    if not config:
        sys.stderr.write("error: no REDIS section in the settings\n")
        sys.exit(2)

    connection = Redis(config["host"], config["port"], password=config.get("password"))
    _queues = [name for name in queues.split(",") if name]
    qs = [Queue(name, connection=connection) for name in _queues] or [
        Queue(connection=connection)
    ]
    worker = Worker(qs, connection=connection)
    worker.work(burst=burst)
