"""
    Logging setup driven by the LOGGERS settings section
"""

import logging
import sys
from logging.handlers import RotatingFileHandler, SysLogHandler
from socket import SOCK_DGRAM, SOCK_STREAM

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# Loggers owned by the application: its own tree and the rq worker output
MANAGED_LOGGERS = ("dynloc", "rq.worker")


def setup_loggers(app):
    """
        Route the application loggers to the configured handlers

        :param app: the `dynloc.DynlocApp`
    """
    handlers = get_handlers_from_config(app.config.get("LOGGERS") or {})
    level = min([handler.level for handler in handlers] or [logging.WARNING])

    for name in MANAGED_LOGGERS:
        logger = logging.getLogger(name)
        logger.setLevel(level)
        logger.handlers = list(handlers)
        logger.propagate = False


def get_handlers_from_config(config):
    """
        Build one handler per known entry of `config`, unknown entries are skipped

        :param dict config: the LOGGERS settings section
        :rtype: list
    """
    handlers = []
    for handler_type, handler_config in config.items():
        factory = _HANDLER_FACTORIES.get(handler_type)
        if not factory:
            continue
        handler = factory(handler_config)
        handler.setLevel(logging.getLevelName(handler_config["level"].upper()))
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handlers.append(handler)
    return handlers


def _syslog_handler(handler_config):

    # A local device wins over a remote host
    if handler_config.get("device"):
        return SysLogHandler(address=handler_config["device"])
    socktype = SOCK_DGRAM if handler_config.get("transport") == "UDP" else SOCK_STREAM
    return SysLogHandler(
        address=(handler_config["host"], handler_config["port"]),
        socktype=socktype,
        facility=SysLogHandler.LOG_USER,
    )


def _stdout_handler(handler_config):

    return logging.StreamHandler(stream=sys.stdout)


def _file_handler(handler_config):

    return RotatingFileHandler(
        filename=handler_config["file_name"],
        maxBytes=handler_config.get("max_bytes", 10485760),
        backupCount=handler_config.get("backups", 3),
    )


_HANDLER_FACTORIES = {
    "stdout": _stdout_handler,
    "file": _file_handler,
    "syslog": _syslog_handler,
}


class JobLoggerAdapter(logging.LoggerAdapter):
    """
        Prefixes records with the sweep point being evaluated

        Accepts `job=` (an rq job or None) and `point=` (the sweep index)
        keyword arguments on every logging call.
    """

    def process(self, msg, kwargs):

        job = kwargs.pop("job", None)
        point = kwargs.pop("point", None)

        extra = kwargs.setdefault("extra", {})
        extra.setdefault("job_id", getattr(job, "id", None))
        extra.setdefault("sweep_point", point)

        prefix = []
        if job is not None:
            prefix.append("job {}".format(getattr(job, "id", "?")))
        if point is not None:
            prefix.append("point {}".format(point))
        if prefix:
            msg = "[{}] {}".format(", ".join(prefix), msg)
        return msg, kwargs
