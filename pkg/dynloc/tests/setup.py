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
    Init for tests
"""

import os
import shutil
import tempfile
import unittest

from mock import Mock

from .. import create_app
from ..continuum import Calibration
from ..geometry import ArraySpec, BendingProfile
from ..services.storage import StorageService
from ..tasks import Queues

SETTINGS_FILE = os.path.join(os.path.dirname(__file__), "settings-test.yml")

SITE_PERIOD = 14e-6
SUBSTRATE_INDEX = 2.1556
SAMPLE_LENGTH = 0.028
DL_WAVELENGTH = 1610e-9

# wells guiding one mode at 1.4-1.7 um; not a fitted calibration
TEST_CALIBRATION = Calibration(
    2.5e-3,
    3.5e-6,
    ((1440e-9, 175.0), (1610e-9, 300.0)),
    ((1440e-9, 175.0), (1610e-9, 300.0)),
    0.0,
)


def settings_file():

    return os.getenv("DYNLOC_TEST_SETTINGS") or SETTINGS_FILE


def array_spec(wavelength=DL_WAVELENGTH, length=SAMPLE_LENGTH, site_count=80):

    return ArraySpec(SITE_PERIOD, site_count, length, SUBSTRATE_INDEX, wavelength)


def array2_profile():
    """ Lambda = 4 mm, A = 13 um """
    return BendingProfile.sinusoidal(13e-6, 4e-3)


def array3_profile(phase_phi0=0.0):
    """ Lambda = 56 mm, A = 164 um """
    return BendingProfile.sinusoidal(164e-6, 56e-3, phase_phi0)


def straight_profile():

    return BendingProfile.straight()


class FakeJob(object):
    """
        Fake rq job for mock
    """

    def __init__(self, result=True):
        self.id = 42
        self.func_name = "dynloc.tasks.sweep.evaluate_point"
        self.args = ()
        self.is_finished = True
        self.is_failed = False
        self.result = result


class DynlocTest(unittest.TestCase):
    """
        Test application with its storage rooted in a scratch directory
    """

    @classmethod
    def setUpClass(cls):

        cls.app = create_app(settings_file(), environment="test")
        cls.output_dir = tempfile.mkdtemp(prefix="dynloc_test_")
        StorageService.relocate(cls.output_dir)

        cls.patch_enqueue = ["rq.Queue.enqueue", Mock(return_value=FakeJob())]
        cls.patch_current_job = ["rq.job.get_current_job", Mock(return_value=FakeJob())]

    @classmethod
    def tearDownClass(cls):

        Queues.default = None
        shutil.rmtree(cls.output_dir, ignore_errors=True)
