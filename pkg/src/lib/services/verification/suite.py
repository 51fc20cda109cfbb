#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Verification Suite Module

This module defines the VerificationSuite factory returning the invariant
suite selected by its 'type'.
"""

from typing import Any, Dict, List, Type
from src.lib.services.verification.suites.dalgebra import DAlgebraSuite
from src.lib.services.verification.suites.framed import FramedSuite
from src.lib.services.verification.suites.kmap import KMapSuite
from src.lib.services.verification.suites.magnus import MagnusSuite


class VerificationSuite:  # pylint: disable=R0903
    """
    A verification suite class that uses a factory pattern to return
    the selected suite
    """

    _suites: Dict[str, Type] = {
        'dalgebra': DAlgebraSuite,
        'kmap': KMapSuite,
        'magnus': MagnusSuite,
        'framed': FramedSuite,
    }

    @staticmethod
    def names() -> List[str]:
        """Registered suite types in run order."""
        return list(VerificationSuite._suites)

    @staticmethod
    def create(config: Dict[str, Any]) -> object:
        """
        Return the suite.

        :param config: Configuration dictionary containing the type of suite.
        :return: An instance of the selected suite.
        :raises ValueError: If 'type' is not in config or an unsupported type is provided.
        """
        suite_type = config.get('type')
        if not suite_type:
            raise ValueError("Configuration must include 'type'.")
        suite_class = VerificationSuite._suites.get(suite_type)
        if not suite_class:
            raise ValueError(f"Unsupported suite type: {suite_type}")
        return suite_class(config)
