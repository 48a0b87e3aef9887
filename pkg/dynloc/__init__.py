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
    Init dynloc App
"""

import logging

from .config import env_config, load_config

__version__ = "1.0.0"


class DynlocApp(object):
    """
        Holds the merged settings and the application logger
    """

    def __init__(self, name, config, environment):
        self.name = name
        self.config = config
        self.environment = environment
        self.logger = logging.getLogger(name)


def create_app(settings=None, environment="default"):
    """
        Initialize application

        :param str settings: path of the YAML settings file
        :param str environment: `dev`, `test`, `prod` or `default`
        :rtype: `DynlocApp`
    """
    config = load_config(settings, environment)

    app = DynlocApp(__name__, config, environment)
    app.config["DEBUG"] = env_config[environment].DEBUG

    # Init app environment
    env_config[environment].init_app(app)

    return app
