#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Bianchi Experiment

Both Bianchi identities, torsion skew-symmetry and the tensoriality of
torsion and curvature on random fields.
"""

from pydantic import Field
from src.lib.core.log import Logger
from src.lib.services.geometry.connection_models.base import BaseConnectionModel
from src.lib.services.geometry.curvature import (
    bianchi_residuals, curvature, torsion)
from src.lib.services.geometry.experiments.base import BaseGeometryExperiment
from src.lib.services.geometry.experiments.error_handler import experiment_error_handler


logger = Logger().get_logger()


class BianchiExperiment(BaseGeometryExperiment):
    """
    Residuals of the Bianchi identities with torsion.
    """

    class Config(BaseGeometryExperiment.Config):
        """
        Configuration for the Bianchi experiment.
        """
        samples: int = Field(
            default=1,
            gt=0,
            description="Number of random field quadruples."
        )
        tensoriality: bool = Field(
            default=True,
            description="Also check C-infinity linearity of t and r on chart models."
        )

    @experiment_error_handler("Error running bianchi experiment")
    def run(self, connection: BaseConnectionModel) -> BaseGeometryExperiment.Result:
        """
        Compute the residuals at random points.

        :param connection: Connection model.
        :return: Report with 'first', 'second', 'skew' and, on chart
                 models, 'torsion_linear' and 'curvature_linear'.
        """
        self._start(connection)
        points = self.sample_points(connection)
        for sample in range(self.config.samples):
            ctx = self.random_context(connection, "x", "y", "z", "w")
            x, y, z, w = (ctx.field(label) for label in "xyzw")
            first, second = bianchi_residuals(connection, x, y, z, w)
            suffix = f"_{sample}" if self.config.samples > 1 else ""
            self.record(connection, f"first{suffix}", first, points)
            self.record(connection, f"second{suffix}", second, points)
            self.record(connection, f"skew{suffix}",
                        torsion(connection, x, y) + torsion(connection, y, x), points)
            if self.config.tensoriality and connection.supports_functions:
                f = connection.coordinates[0] ** 2 + 1
                self.record(connection, f"torsion_linear{suffix}",
                            torsion(connection, f * x, y) - f * torsion(connection, x, y), points)
                self.record(connection, f"curvature_linear{suffix}",
                            curvature(connection, f * x, y, z) - f * curvature(connection, x, y, z),
                            points)
        self.conclude()
        logger.info(f"Bianchi experiment on {connection.name}: passed={self.result.passed}")
        return self.result
