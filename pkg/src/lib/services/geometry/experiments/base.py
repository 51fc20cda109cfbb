#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Base Experiment

Shared configuration, report and residual bookkeeping of the geometry
experiments.
"""

import abc
from typing import Any, Dict, List, Optional
import numpy as np
from pydantic import BaseModel, Field
from src.lib.services.geometry.connection_models.base import (
    BaseConnectionModel, VectorField)
from src.lib.services.geometry.evaluation import EvalContext


class BaseGeometryExperiment(abc.ABC):
    """
    Abstract base class for experiments run against a connection model.
    """

    class Config(BaseModel):
        """
        Configuration for the experiment.
        """
        type: str = Field(
            ...,
            description="Type of the experiment."
        )
        seed: int = Field(
            default=0,
            description="Seed of the random fields and points."
        )
        points: int = Field(
            default=20,
            gt=0,
            description="Number of random evaluation points on chart models."
        )
        tolerance: float = Field(
            default=1e-8,
            gt=0,
            description="Largest accepted residual norm."
        )

    class Result(BaseModel):
        """
        Result of the experiment.
        """
        status: str = Field(
            default="success",
            description="Status of the operation, e.g., 'success' or 'failure'."
        )
        error_message: Optional[str] = Field(
            default=None,
            description="Detailed error message if the operation failed."
        )
        error_type: Optional[str] = Field(
            default=None,
            description="Exception class behind a failure."
        )
        experiment: Optional[str] = Field(
            default=None,
            description="Type of the experiment."
        )
        model: Optional[str] = Field(
            default=None,
            description="Name of the connection model."
        )
        passed: Optional[bool] = Field(
            default=None,
            description="True when every residual is within tolerance."
        )
        residuals: Dict[str, float] = Field(
            default_factory=dict,
            description="Largest residual norm per check."
        )
        exact: Dict[str, bool] = Field(
            default_factory=dict,
            description="Exact zero test per check on polynomial models."
        )
        details: Dict[str, Any] = Field(
            default_factory=dict,
            description="Additional experiment output."
        )

    def __init__(self, config: Dict[str, Any]):
        self.config = self.Config(**config)
        self.result = self.Result(experiment=self.config.type)
        self.rng = np.random.default_rng(self.config.seed)

    @abc.abstractmethod
    def run(self, connection: BaseConnectionModel) -> 'BaseGeometryExperiment.Result':
        """
        Run the experiment.

        :param connection: Connection model.
        :return: The report.
        """

    def _start(self, connection: BaseConnectionModel):
        self.rng = np.random.default_rng(self.config.seed)
        self.result = self.Result(experiment=self.config.type, model=connection.name)

    def random_context(self, connection: BaseConnectionModel, *labels: str) -> EvalContext:
        """
        Context binding each label to a random field.

        :param connection: Connection model.
        :param labels: Generators to bind.
        :return: The context.
        """
        fields = {label: connection.random_field(self.rng) for label in labels}
        return EvalContext(connection=connection, assignment=fields)

    def sample_points(self, connection: BaseConnectionModel) -> List[np.ndarray]:
        """Random points on chart models, the origin for frame fields."""
        if not connection.supports_functions:
            return [np.zeros(connection.dim)]
        return [connection.random_point(self.rng) for _ in range(self.config.points)]

    def record(self, connection: BaseConnectionModel, name: str, field: VectorField,
               points: List[np.ndarray]):
        """
        Store the residual of one check.

        :param connection: Connection model.
        :param name: Check name.
        :param field: Residual field.
        :param points: Evaluation points.
        """
        self.result.residuals[name] = connection.field_norm(field, points)
        if connection.exact:
            self.result.exact[name] = connection.is_zero(field)

    def conclude(self):
        """Set passed from the recorded residuals."""
        self.result.passed = all(
            self.result.exact.get(name, False) or value < self.config.tolerance
            for name, value in self.result.residuals.items())
