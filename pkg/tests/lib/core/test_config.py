#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Test suite for the Config class which handles reading and processing
configuration settings from a YAML file.
"""

import os
from unittest.mock import mock_open, patch
import yaml
import pytest
from src.lib.core.config import Config


YAML_CONTENT_PLACEHOLDERS = """
logger:
  name: POSTLIE
  log_file: $ENV{POSTLIE_TEST_LOG}
verify:
  max_degree: 3
  suites: [kmap, magnus]
"""
os.environ['POSTLIE_TEST_LOG'] = 'postlie.log'


def test_load_yaml_success():
    """
    Test loading a valid YAML configuration file and check environment variable substitution.
    """
    with patch("builtins.open", mock_open(read_data=YAML_CONTENT_PLACEHOLDERS)):
        config = Config("dummy_path.yaml")
        assert config.settings['logger']['log_file'] == 'postlie.log'
        assert config.settings['verify']['max_degree'] == 3
        assert config.settings['_file_path'] == 'dummy_path.yaml'


def test_load_yaml_file_not_found():
    """
    Test the response of the Config class when the specified YAML file does not exist.
    """
    with patch("builtins.open", side_effect=FileNotFoundError()):
        config = Config("nonexistent.yaml")
        assert config.settings == {}


def test_load_yaml_parse_error():
    """
    Test the behavior when the YAML file is malformed.
    """
    with patch("builtins.open", mock_open(read_data=":")):
        with patch("yaml.safe_load", side_effect=yaml.YAMLError("error")):
            config = Config("invalid.yaml")
            assert config.settings == {}


def test_section_returns_copy_and_default():
    """
    Test that sections are returned as copies and missing sections fall back to the default.
    """
    with patch("builtins.open", mock_open(read_data=YAML_CONTENT_PLACEHOLDERS)):
        config = Config("dummy_path.yaml")
    verify = config.section("verify")
    verify["max_degree"] = 8
    assert config.settings["verify"]["max_degree"] == 3
    assert config.section("geom", {"seed": 1}) == {"seed": 1}
    assert config.section("geom") == {}


@pytest.mark.parametrize("value,expected", [
    ("$ENV{POSTLIE_TEST_LOG}", "postlie.log"),
    ("static_value", "static_value"),
    ("$ENV{POSTLIE_NONEXISTENT_VAR}", "$ENV{POSTLIE_NONEXISTENT_VAR}"),
    ("$PROMPT{name}", "$PROMPT{name}"),
])
def test_replace_placeholder_variables(value, expected):
    """
    Test that only $ENV placeholders are replaced and unknown variables are kept.
    """
    config = Config()
    assert config._replace_placeholders_in_data(value) == expected  # pylint: disable=W0212


def test_placeholders_kept_when_disabled():
    """
    Test that replacement can be switched off.
    """
    with patch("builtins.open", mock_open(read_data=YAML_CONTENT_PLACEHOLDERS)):
        config = Config("dummy_path.yaml", replace_placeholders=False)
        assert config.settings['logger']['log_file'] == '$ENV{POSTLIE_TEST_LOG}'


def test_calculus_config_file_loads():
    """
    Test that the shipped application configuration has every section.
    """
    root = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "..")
    config = Config(os.path.join(root, "src", "platform", "calculus", "config.yaml"))
    for name in ("logger", "expand", "verify", "geom", "templates"):
        assert config.section(name)
    assert config.section("expand")["max_orders"]["qstar"] == 5


if __name__ == "__main__":
    current_file = os.path.abspath(__file__)
    pytest.main([current_file, '-vv'])
