
import importlib
import logging
import time
from concurrent.futures import ProcessPoolExecutor

from redis import Redis
from rq import Queue

from ..logs import JobLoggerAdapter

MODULE_PATH = "dynloc.tasks"
POLL_INTERVAL = 0.5

logger = JobLoggerAdapter(logging.getLogger("rq.worker"), dict())


class Queues(object):

    default = None
    jobs = 1
    timeout = 3600

    @classmethod
    def set_up(cls, config):

        cls.jobs = int(config.get("NUMERICS", {}).get("jobs", 1))
        cls.default = None

        redis_config = config.get("REDIS")
        if not redis_config:
            return

        connection = Redis(
            host=redis_config["host"],
            port=int(redis_config["port"]),
            password=redis_config.get("password"),
        )
        queue_config = dict((redis_config.get("queues") or {}).get("default") or {})
        cls.default = Queue(connection=connection, **queue_config)
        cls.timeout = int(redis_config.get("timeout", cls.timeout))

    @classmethod
    def enqueue(cls, func_name, *args, **kwargs):

        return cls.default.enqueue(func_name, *args, **kwargs)


def resolve(func_name):

    module_name, _, attribute = "{}.{}".format(MODULE_PATH, func_name).rpartition(".")
    return getattr(importlib.import_module(module_name), attribute)


def enqueue(func_name, *args, **kwargs):

    return Queues.enqueue("{}.{}".format(MODULE_PATH, func_name), *args, **kwargs)


def _wait(jobs):

    deadline = time.time() + Queues.timeout
    results = [None] * len(jobs)
    pending = set(range(len(jobs)))
    while pending:
        for index in sorted(pending):
            job = jobs[index]
            if job.is_finished:
                results[index] = job.result
                pending.discard(index)
            elif job.is_failed:
                logger.error('Job "{}" failed'.format(job.id), job=job)
                pending.discard(index)
        if pending:
            if time.time() > deadline:
                logger.error("{} job(s) still pending after timeout".format(len(pending)))
                break
            time.sleep(POLL_INTERVAL)
    return results


def map_ordered(func_name, payloads, jobs=None):
    """
        Run `func_name(*payload)` for every payload and return the results
        in payload order.

        Uses the rq queue when one is configured, otherwise `jobs` local
        processes; a single job runs inline.
    """
    func = resolve(func_name)
    payloads = list(payloads)
    jobs = jobs or Queues.jobs

    if Queues.default is not None:
        queued = [enqueue(func_name, *payload) for payload in payloads]
        logger.info("{} job(s) enqueued on {}".format(len(queued), Queues.default.name))
        return _wait(queued)

    if jobs <= 1 or len(payloads) <= 1:
        return [func(*payload) for payload in payloads]

    with ProcessPoolExecutor(max_workers=jobs) as executor:
        futures = [executor.submit(func, *payload) for payload in payloads]
        return [future.result() for future in futures]
