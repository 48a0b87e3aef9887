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
    Tests for dynloc
"""

import os
import sys
import unittest

import click


@click.command("test", short_help="Runs tests.")
@click.option("--settings")
@click.option("--pattern")
@click.option("--xml", "xml_dir", help="Write JUnit XML reports to this directory.")
def run_tests(settings, pattern, xml_dir):

    if settings:
        os.environ["DYNLOC_TEST_SETTINGS"] = settings
    pattern = pattern or "test*.py"

    top_level = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
    suite = unittest.TestLoader().discover("dynloc.tests", pattern=pattern, top_level_dir=top_level)

    if xml_dir:
        import xmlrunner

        runner = xmlrunner.XMLTestRunner(output=xml_dir)
    else:
        runner = unittest.TextTestRunner(verbosity=2)

    result = runner.run(suite)
    sys.exit(0 if result.wasSuccessful() else 1)
