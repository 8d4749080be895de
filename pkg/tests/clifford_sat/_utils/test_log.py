"""Tests for logging setup and the job tag formatter."""

import logging

from clifford_sat._utils.log import LOG_FORMAT, JobContextFormatter, configure_logging, job_id_context


def _record(message: str) -> logging.LogRecord:
    return logging.LogRecord("clifford_sat.test", logging.INFO, __file__, 1, message, (), None)


class TestJobContextFormatter:
    """Test JobContextFormatter."""

    def test_without_job_tag(self):
        """Test that no prefix is added outside a job."""
        formatter = JobContextFormatter("%(job_id)s%(message)s")
        assert formatter.format(_record("hello")) == "hello"

    def test_with_job_tag(self):
        """Test that the current job tag prefixes the message."""
        formatter = JobContextFormatter("%(job_id)s%(message)s")
        token = job_id_context.set("n=3 seed=7 method=sat")
        try:
            assert formatter.format(_record("hello")) == "[n=3 seed=7 method=sat] hello"
        finally:
            job_id_context.reset(token)
        assert formatter.format(_record("hello")) == "hello"

    def test_full_format(self):
        """Test the package format string end to end."""
        formatter = JobContextFormatter(LOG_FORMAT)
        token = job_id_context.set("synth")
        try:
            text = formatter.format(_record("done"))
        finally:
            job_id_context.reset(token)
        assert text.endswith("clifford_sat.test - INFO - [synth] done")


class TestConfigureLogging:
    """Test configure_logging."""

    def test_levels_and_single_handler(self):
        """Test verbosity levels and that the handler is installed once."""
        logger = logging.getLogger("clifford_sat")
        try:
            assert configure_logging(0).level == logging.WARNING
            assert configure_logging(1).level == logging.INFO
            assert configure_logging(2).level == logging.DEBUG
            assert configure_logging(5).level == logging.DEBUG
            assert len(logger.handlers) == 1
            assert isinstance(logger.handlers[0].formatter, JobContextFormatter)
        finally:
            logger.setLevel(logging.NOTSET)
