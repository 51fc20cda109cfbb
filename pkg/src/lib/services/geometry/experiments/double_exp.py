#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Double Exponential Experiment

Two geodesic steps, the second along the parallel transport of w,
compared with a single geodesic along the truncated double exponential
q*(hv, hw). The endpoint error of the order-N truncation decays like
h^(N+1).
"""

from typing import List, Optional
import numpy as np
from pydantic import Field
from src.lib.core.log import Logger
from src.lib.services.algebra.beta import MAX_DOUBLE_EXP_ORDER, double_exp
from src.lib.services.geometry.connection_models.base import BaseConnectionModel, ModelError
from src.lib.services.geometry.evaluation import EvalContext, series_fields
from src.lib.services.geometry.experiments.base import BaseGeometryExperiment
from src.lib.services.geometry.experiments.error_handler import experiment_error_handler
from src.lib.services.geometry.flows import (
    DEFAULT_STEPS_MIN, DEFAULT_STEPS_PER_UNIT, composed_geodesics, geodesic_flow, step_count)


logger = Logger().get_logger()


def fit_slope(steps: List[float], errors: List[float]) -> float:
    """
    Least-squares slope of log(error) against log(h).

    :param steps: Step sizes h.
    :param errors: Positive errors.
    :return: The slope.
    """
    return float(np.polyfit(np.log(steps), np.log(errors), 1)[0])


class DoubleExpExperiment(BaseGeometryExperiment):
    """
    Convergence of the truncated double exponential.
    """

    class Config(BaseGeometryExperiment.Config):
        """
        Configuration for the double exponential experiment.
        """
        order: int = Field(
            default=2,
            ge=1,
            le=MAX_DOUBLE_EXP_ORDER,
            description="Truncation order N of q*."
        )
        h_list: List[float] = Field(
            default_factory=lambda: [0.4, 0.2, 0.1, 0.05],
            min_length=2,
            description="Step sizes h, used for both t and s."
        )
        x0: Optional[List[float]] = Field(
            default=None,
            description="Base point; 0.1, 0.2, ... when absent."
        )
        v: Optional[List[float]] = Field(
            default=None,
            description="First direction; (1, 0.5, 0, ...) when absent."
        )
        w: Optional[List[float]] = Field(
            default=None,
            description="Second direction; (-0.5, 1, 0, ...) when absent."
        )
        steps_per_unit: int = Field(
            default=DEFAULT_STEPS_PER_UNIT,
            gt=0,
            description="RK4 steps per unit of flow time."
        )
        steps_min: int = Field(
            default=DEFAULT_STEPS_MIN,
            gt=0,
            description="Smallest RK4 step count."
        )
        slope_margin: float = Field(
            default=0.3,
            ge=0,
            description="Accepted shortfall of the fitted slope below N+1."
        )

    class Result(BaseGeometryExperiment.Result):
        """
        Result of the double exponential experiment.
        """
        order: Optional[int] = Field(
            default=None,
            description="Truncation order N."
        )
        h_list: List[float] = Field(
            default_factory=list,
            description="Step sizes."
        )
        errors: List[float] = Field(
            default_factory=list,
            description="Endpoint errors per step size."
        )
        slope: Optional[float] = Field(
            default=None,
            description="Fitted convergence slope, absent when every error is within tolerance."
        )

    def _vectors(self, dim: int):
        def pad(values):
            return (values + [0.0] * dim)[:dim]
        x0 = self.config.x0 or [0.1 * (i + 1) for i in range(dim)]
        v = self.config.v or pad([1.0, 0.5])
        w = self.config.w or pad([-0.5, 1.0])
        for name, values in (("x0", x0), ("v", v), ("w", w)):
            if len(values) != dim:
                raise ModelError(f"{name} must have {dim} components")
        return x0, v, w

    @experiment_error_handler("Error running double-exp experiment")
    def run(self, connection: BaseConnectionModel) -> 'DoubleExpExperiment.Result':
        """
        Compare the two-step endpoint with the truncated double exponential.

        :param connection: Chart model.
        :return: Report with errors per h and the fitted slope.
        """
        self._start(connection)
        if not connection.supports_functions:
            raise ModelError("The double exponential experiment requires a chart model")
        x0, v, w = self._vectors(connection.dim)
        ctx = EvalContext(connection=connection, point=list(x0), assignment={
            "v": connection.constant_field(v), "w": connection.constant_field(w)})
        series = double_exp("v", "w", self.config.order)
        coefficients = {key: connection.evaluate(field, x0)
                        for key, field in series_fields(ctx, series).items()}
        errors = []
        for h in self.config.h_list:
            q = sum(((h ** (i + j)) * value for (i, j), value in coefficients.items()),
                    np.zeros(connection.dim))
            approximate = geodesic_flow(
                connection, x0, q, 1.0,
                step_count(1.0, self.config.steps_per_unit, self.config.steps_min))
            reference = composed_geodesics(connection, x0, v, w, h, h,
                                           self.config.steps_per_unit, self.config.steps_min)
            errors.append(float(np.linalg.norm(reference - approximate)))
        self.result.order = self.config.order
        self.result.h_list = list(self.config.h_list)
        self.result.errors = errors
        self.result.residuals["max_error"] = max(errors)
        if max(errors) < self.config.tolerance:
            self.result.passed = True
        else:
            self.result.slope = fit_slope(self.config.h_list, errors)
            self.result.passed = self.result.slope >= self.config.order + 1 - self.config.slope_margin
        logger.info(f"Double exponential on {connection.name}, order {self.config.order}: "
                    f"slope={self.result.slope}, passed={self.result.passed}")
        return self.result
