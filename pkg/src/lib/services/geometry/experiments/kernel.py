#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Kernel Experiment

The Bianchi element of degree three annihilates every field; the
Grossman-Larson commutator with s(b.c) reproduces the derivatives of the
curvature.
"""

from src.lib.core.log import Logger
from src.lib.services.geometry.connection_models.base import BaseConnectionModel
from src.lib.services.geometry.curvature import kernel_element_check
from src.lib.services.geometry.experiments.base import BaseGeometryExperiment
from src.lib.services.geometry.experiments.error_handler import experiment_error_handler


logger = Logger().get_logger()


class KernelExperiment(BaseGeometryExperiment):
    """
    Residuals of the Bianchi element and the curvature derivative identities.
    """

    @experiment_error_handler("Error running kernel experiment")
    def run(self, connection: BaseConnectionModel) -> BaseGeometryExperiment.Result:
        """
        Compute the residuals at random points.

        :param connection: Connection model.
        :return: Report with 'kernel', 'commutator' and 'derivative'.
        """
        self._start(connection)
        points = self.sample_points(connection)
        ctx = self.random_context(connection, "a", "b", "c", "d", "u")
        residuals = kernel_element_check(ctx, "a", "b", "c", ctx.field("d"), "u")
        for name, field in residuals.items():
            self.record(connection, name, field, points)
        self.conclude()
        logger.info(f"Kernel experiment on {connection.name}: passed={self.result.passed}")
        return self.result
