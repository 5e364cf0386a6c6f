# pylint: disable=invalid-name, missing-docstring

import sys
import time
import logging

from . import jsonformatter


LOGGING_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"
LOGGING_DATEFORMAT = "%Y-%m-%dT%H:%M:%S.0Z"
ROOT_LOGGER = "pseudou"


def configure_logging(level="WARNING", stream=None) -> logging.Logger:
    logger = logging.getLogger(ROOT_LOGGER)
    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setLevel(level)
    formatter = jsonformatter.JsonFormatter(
        fmt=LOGGING_FORMAT, datefmt=LOGGING_DATEFORMAT
    )
    formatter.converter = time.gmtime
    handler.setFormatter(formatter)
    for old in list(logger.handlers):
        logger.removeHandler(old)
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger


class TimeIt:
    """Logs the wall time of a named block at DEBUG; nested names join with dots."""

    names = []

    def __init__(self, name: str, logger: logging.Logger = None, **kwargs):
        self._name = name
        self._logger = logger or logging.getLogger(ROOT_LOGGER)
        self._kwargs = kwargs
        self._start = None
        self.time_ms = None

    def __enter__(self):
        self.names.append(self._name)
        self._start = time.time()
        return self

    def __exit__(self, *args):
        self.time_ms = (time.time() - self._start) * 1000
        self._logger.debug(
            "%s took %.2fms",
            ".".join(self.names),
            self.time_ms,
            extra={"block": ".".join(self.names), "time_ms": self.time_ms, **self._kwargs},
        )
        self.names.pop()
