#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
This module defines the Config class, which loads the YAML settings of an
application.

Placeholders of the form $ENV{NAME} are replaced by environment values,
read from the process environment and a .env file next to this module.
Sections are returned as plain dictionaries so that components can be
created from them through their factories.
"""

import os
from os.path import join, dirname
from typing import Any, Dict, Optional
from dotenv import load_dotenv
import yaml
from src.lib.core.log import Logger


dotenv_path = join(dirname(__file__), '.env')
load_dotenv(dotenv_path)
logger = Logger().get_logger()


class Config:
    """
    A class used to represent and manage configuration settings for an application.
    """

    def __init__(self, config_file: str = "", replace_placeholders: bool = True):
        """
        Initialize the Config class.

        :param config_file: Path to the YAML configuration file.
        :param replace_placeholders: Whether to replace $ENV placeholders.
        """
        self.config_file = config_file
        self.replace_placeholders = replace_placeholders
        self.settings = self.load_yaml()

    def load_yaml(self) -> dict:
        """
        Load the configuration file and return the settings dictionary.

        :return: Dictionary containing configuration settings, empty on error.
        """
        try:
            with open(self.config_file, 'r', encoding='utf-8') as file:
                file_data = yaml.safe_load(file.read()) or {}
            settings = self._replace_placeholders_in_data(file_data)
            if settings:
                settings["_file_path"] = self.config_file
            return settings
        except FileNotFoundError:
            logger.error(f"YAML configuration file not found: {self.config_file}")
        except yaml.YAMLError as e:
            logger.error(f"Error parsing the YAML file: {e}")
        return {}

    def _replace_placeholders_in_data(self, data: Any) -> Any:
        """
        Recursively replace placeholders with environment variable values in a nested structure.

        :param data: The data structure containing placeholders.
        :return: Data with placeholders replaced.
        """
        if self.replace_placeholders:
            if isinstance(data, dict):
                return {
                    key: self._replace_placeholders_in_data(value) for key, value in data.items()
                }
            if isinstance(data, list):
                return [self._replace_placeholders_in_data(item) for item in data]
            if isinstance(data, str):
                return self._replace_placeholder(data)
        return data

    @staticmethod
    def _replace_placeholder(value: str) -> str:
        """
        Replace an $ENV{NAME} placeholder; unknown names keep the placeholder.

        :param value: The string containing the placeholder.
        :return: The string with the placeholder replaced.
        """
        if value.startswith("$ENV{") and value.endswith("}"):
            env_var = value[5:-1]
            return os.getenv(env_var, value)
        return value

    def section(self, name: str, default: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """
        Return one top-level section.

        :param name: Section name.
        :param default: Returned when the section is missing.
        :return: A copy of the section.
        """
        value = self.settings.get(name)
        if value is None:
            return dict(default or {})
        return dict(value)
