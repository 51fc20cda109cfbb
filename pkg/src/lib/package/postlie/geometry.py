#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
This module re-exports the geometric side of the library: connection
models, evaluation of series as vector fields, torsion and curvature,
geodesic flows and the experiments.
"""

from src.lib.services.geometry.connection_model import ConnectionModel, load_model, model_from_dict
from src.lib.services.geometry.connection_models.base import ModelError, VectorField
from src.lib.services.geometry.curvature import curvature, torsion
from src.lib.services.geometry.evaluation import EvalContext, evaluate_series
from src.lib.services.geometry.experiment import GeometryExperiment
from src.lib.services.geometry.flows import composed_geodesics, geodesic_flow, parallel_transport


__all__ = [
    'ConnectionModel',
    'load_model',
    'model_from_dict',
    'ModelError',
    'VectorField',
    'curvature',
    'torsion',
    'EvalContext',
    'evaluate_series',
    'GeometryExperiment',
    'composed_geodesics',
    'geodesic_flow',
    'parallel_transport'
]
