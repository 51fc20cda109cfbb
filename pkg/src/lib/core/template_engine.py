#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Class to handle template files

Text reports are rendered with Jinja2 from template files or strings.
Extra filters registered on the engine are available in every template.
"""

from typing import Callable, Dict, Optional
from jinja2 import Environment, FileSystemLoader, StrictUndefined
from src.lib.core.log import Logger


logger = Logger().get_logger()


class TemplateEngine:
    """
    Template Engine class to manage templates.
    """

    def __init__(self, filters: Optional[Dict[str, Callable]] = None):
        """
        :param filters: Extra Jinja2 filters, by name.
        """
        self.filters = dict(filters or {})

    def _environment(self, env_path: Optional[str] = None) -> Environment:
        loader = FileSystemLoader(env_path) if env_path else None
        environment = Environment(
            loader=loader, undefined=StrictUndefined, trim_blocks=True, lstrip_blocks=True)
        environment.filters.update(self.filters)
        return environment

    def render(self, template_string: str, **params) -> str:
        """
        Render a template string.

        :param template_string: The template string.
        :param params: Additional parameters for rendering the template.
        :return: Generated content.
        """
        template = self._environment().from_string(template_string)
        logger.debug(f"Template generated from string with params {sorted(params)}")
        return template.render(params)

    def load(self, env_path: str, file_name: str, **params) -> str:
        """
        Render a template file located in a specified environment.

        :param env_path: Environment path.
        :param file_name: The name of the file template to load.
        :param params: Additional parameters for rendering the template.
        :return: Generated content.
        """
        template = self._environment(env_path).get_template(file_name)
        logger.debug(f"Template generated from {env_path}/{file_name} with params {sorted(params)}")
        return template.render(params)
