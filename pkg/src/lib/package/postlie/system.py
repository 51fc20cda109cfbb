#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
This module re-exports the configuration, logging and template services
shared by the applications built on the lib package.
"""

from src.lib.core.config import Config
from src.lib.core.log import Logger
from src.lib.core.template_engine import TemplateEngine


__all__ = [
    'Config',
    'Logger',
    'TemplateEngine'
]
