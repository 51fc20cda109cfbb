#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Geometry Experiment Module

This module defines the GeometryExperiment factory returning the
experiment selected by its 'type'.
"""

from typing import Any, Dict, Type
from src.lib.services.geometry.experiments.bianchi import BianchiExperiment
from src.lib.services.geometry.experiments.curvature_element import (
    CurvatureElementExperiment)
from src.lib.services.geometry.experiments.double_exp import DoubleExpExperiment
from src.lib.services.geometry.experiments.kernel import KernelExperiment
from src.lib.services.geometry.experiments.special_tensors import (
    SpecialTensorsExperiment)


class GeometryExperiment:  # pylint: disable=R0903
    """
    A geometry experiment class that uses a factory pattern to return
    the selected experiment
    """

    _experiments: Dict[str, Type] = {
        'bianchi': BianchiExperiment,
        'kernel': KernelExperiment,
        'curvature-element': CurvatureElementExperiment,
        'special-tensors': SpecialTensorsExperiment,
        'double-exp': DoubleExpExperiment,
    }

    @staticmethod
    def create(config: Dict[str, Any]) -> object:
        """
        Return the experiment.

        :param config: Configuration dictionary containing the type of experiment.
        :return: An instance of the selected experiment.
        :raises ValueError: If 'type' is not in config or an unsupported type is provided.
        """
        experiment_type = config.get('type')
        if not experiment_type:
            raise ValueError("Configuration must include 'type'.")
        experiment_class = GeometryExperiment._experiments.get(experiment_type)
        if not experiment_class:
            raise ValueError(f"Unsupported experiment type: {experiment_type}")
        return experiment_class(config)
