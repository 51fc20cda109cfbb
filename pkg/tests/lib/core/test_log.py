#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Test suite for the Logger class which utilizes the singleton pattern for application-wide logging.
The tests ensure that the Logger class is a singleton with the library defaults, that it
can be reconfigured from application settings and that levels can be changed at run time.
"""

import os
import logging
from unittest.mock import patch, MagicMock
import pytest
from src.lib.core.log import Logger


@pytest.fixture(autouse=True)
def reset_singleton():
    """Fixture to reset the singleton instance before each test."""
    Logger._instances.clear()  # pylint: disable=W0212
    yield
    Logger._instances.clear()  # pylint: disable=W0212


def test_logger_singleton():
    """
    Test that the Logger class follows the singleton pattern.
    """
    assert Logger() is Logger()
    assert Logger().get_logger().logger is Logger().get_logger().logger


def test_logger_defaults():
    """
    Test the default name and level and that no file handler is attached without a log file.
    """
    logger_instance = Logger()
    assert logger_instance.config.name == "POSTLIE"
    assert logger_instance.config.level == "INFO"
    adapter = logger_instance.get_logger()
    assert adapter.extra['component_name'] == "POSTLIE"
    assert not any(isinstance(handler, logging.FileHandler)
                   for handler in adapter.logger.handlers)


def test_logger_configuration_with_file():
    """
    Test that configure attaches a rotating file handler with the configured rotation.
    """
    config = {
        "name": "PostLieTest",
        "log_file": "logs/test.log",
        "level": "DEBUG",
        "max_bytes": 1024,
        "backup_count": 3
    }
    handler_class = logging.handlers.RotatingFileHandler
    with patch('logging.handlers.RotatingFileHandler') as mock_file_handler:
        mock_file_handler.return_value = MagicMock(spec=handler_class)
        adapter = Logger().configure(config).get_logger()
        assert adapter.extra['component_name'] == "PostLieTest"
        mock_file_handler.assert_called_once_with(
            'logs/test.log',
            maxBytes=1024,
            backupCount=3
        )


def test_configure_keeps_unspecified_settings():
    """
    Test that a partial configuration keeps the previous values.
    """
    logger_instance = Logger({"name": "PostLiePartial", "backup_count": 7})
    logger_instance.configure({"level": "WARNING"})
    assert logger_instance.config.backup_count == 7
    assert logger_instance.config.name == "PostLiePartial"
    assert logger_instance.logger.level == logging.WARNING


def test_set_level_updates_handlers():
    """
    Test that set_level changes the logger and all of its handlers.
    """
    logger_instance = Logger({"name": "PostLieLevels"})
    logger_instance.set_level("debug")
    assert logger_instance.config.level == "DEBUG"
    assert logger_instance.logger.level == logging.DEBUG
    assert all(handler.level == logging.DEBUG for handler in logger_instance.logger.handlers)


def test_console_stream_selection():
    """
    Test that the console handler writes to stderr unless stdout is requested.
    """
    with patch('sys.stdout') as fake_stdout:
        logger_instance = Logger({"name": "PostLieStdout", "stream": "stdout"})
        streams = [handler.stream for handler in logger_instance.logger.handlers
                   if type(handler) is logging.StreamHandler]  # pylint: disable=C0123
        assert streams == [fake_stdout]


if __name__ == "__main__":
    current_file = os.path.abspath(__file__)
    pytest.main([current_file, '-vv'])
