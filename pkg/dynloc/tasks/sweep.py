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
    Sweep functions for worker
"""

import logging

from rq.job import get_current_job

from ..logs import JobLoggerAdapter

logger = JobLoggerAdapter(logging.getLogger("rq.worker"), dict())


def evaluate_point(config, value, index, calibration=None):
    """
        Evaluate one sweep point

        :param `ScenarioConfig` config: the swept scenario
        :param float value: the axis value
        :param int index: position of the point in the sweep
        :return: (index, row)
    """
    from ..experiments.sweep import point_row

    job = get_current_job()
    logger.info("{} = {!r}".format(config.sweep.axis.value, value), job=job, point=index)
    return index, point_row(config, value, calibration)
