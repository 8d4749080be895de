"""Logging setup with a per-job tag carried in a context variable."""

import contextvars
import logging
from typing import Optional

# Job tag for logging, e.g. "n=3 seed=7 method=sat"
job_id_context: contextvars.ContextVar[Optional[str]] = contextvars.ContextVar("job_id", default=None)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(job_id)s%(message)s"


class JobContextFormatter(logging.Formatter):
    """Custom formatter that includes the current job tag in log messages."""

    def format(self, record: logging.LogRecord) -> str:
        """Format log record with job tag context."""
        job_id = job_id_context.get()
        if job_id:
            record.job_id = f"[{job_id}] "
        else:
            record.job_id = ""
        return super().format(record)


def configure_logging(verbosity: int = 0) -> logging.Logger:
    """Install a stderr handler on the package logger once.

    Args:
        verbosity: 0 for WARNING, 1 for INFO, 2 or more for DEBUG.

    Returns:
        The ``clifford_sat`` package logger.
    """
    logger = logging.getLogger("clifford_sat")
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(JobContextFormatter(LOG_FORMAT))
        logger.addHandler(handler)
    levels = {0: logging.WARNING, 1: logging.INFO}
    logger.setLevel(levels.get(verbosity, logging.DEBUG))
    return logger
