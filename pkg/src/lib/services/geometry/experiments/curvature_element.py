#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Curvature Element Experiment

s(a.b) acts on fields as the curvature r(a,b) and annihilates functions.
"""

from pydantic import Field
from src.lib.core.log import Logger
from src.lib.services.geometry.connection_models.base import BaseConnectionModel
from src.lib.services.geometry.connection_models.chart import parse_component
from src.lib.services.geometry.curvature import curvature_element_check
from src.lib.services.geometry.experiments.base import BaseGeometryExperiment
from src.lib.services.geometry.experiments.error_handler import experiment_error_handler


logger = Logger().get_logger()


class CurvatureElementExperiment(BaseGeometryExperiment):
    """
    Residuals of s(a.b) |> z = r(a,b)z and s(a.b) |> f = 0.
    """

    class Config(BaseGeometryExperiment.Config):
        """
        Configuration for the curvature element experiment.
        """
        function: str = Field(
            default="x1*x2",
            description="Function annihilated by s(a.b), used on chart models."
        )

    @experiment_error_handler("Error running curvature-element experiment")
    def run(self, connection: BaseConnectionModel) -> BaseGeometryExperiment.Result:
        """
        Compute the residuals at random points.

        :param connection: Connection model.
        :return: Report with 'action' and, on chart models, 'function'.
        """
        self._start(connection)
        points = self.sample_points(connection)
        ctx = self.random_context(connection, "a", "b", "z")
        function = None
        if connection.supports_functions:
            function = parse_component(self.config.function, connection.coordinates)
        residuals = curvature_element_check(ctx, "a", "b", ctx.field("z"), function)
        for name, field in residuals.items():
            self.record(connection, name, field, points)
        self.conclude()
        logger.info(
            f"Curvature element experiment on {connection.name}: passed={self.result.passed}")
        return self.result
