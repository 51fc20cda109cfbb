#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Chart Connection Model

Affine connection on a single coordinate chart given by Christoffel
symbols gamma[k][i][j] = Gamma^k_ij, rational functions of x1..xd.
"""

from tokenize import TokenError
from typing import Any, Dict, List, Union
import numpy as np
import sympy
from sympy.parsing.sympy_parser import (
    convert_xor, parse_expr, standard_transformations)
from pydantic import Field, model_validator
from src.lib.core.log import Logger
from src.lib.services.geometry.connection_models.base import (
    BaseConnectionModel, ModelError, VectorField)


logger = Logger().get_logger()

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def parse_component(text: Union[str, int, float], coordinates: tuple) -> sympy.Expr:
    """
    Parse a rational function of the coordinates.

    :param text: Expression such as '-2*x1/(1+x1^2+x2^2)'.
    :param coordinates: The coordinate symbols.
    :return: The sympy expression.
    :raises ValueError: On syntax errors, unknown symbols or non-rational functions.
    """
    local = {str(symbol): symbol for symbol in coordinates}
    try:
        expr = parse_expr(str(text), local_dict=local, transformations=_TRANSFORMATIONS)
    except (SyntaxError, TypeError, TokenError) as e:
        raise ValueError(f"Cannot parse expression '{text}': {e}") from e
    if not isinstance(expr, sympy.Expr):
        raise ValueError(f"Not an expression: '{text}'")
    unknown = expr.free_symbols - set(coordinates)
    if unknown:
        names = ", ".join(sorted(str(symbol) for symbol in unknown))
        raise ValueError(f"Unknown symbols in '{text}': {names}")
    if not expr.is_rational_function(*coordinates):
        raise ValueError(f"Only rational functions of the coordinates are supported: '{text}'")
    return expr


class ChartConnectionModel(BaseConnectionModel):
    """
    Connection nabla_X Y = X^i d_i Y^k + Gamma^k_ij X^i Y^j on R^d.
    """

    class Config(BaseConnectionModel.Config):
        """
        Configuration for the chart model.
        """
        gamma: List[List[List[Union[str, int, float]]]] = Field(
            ...,
            description="Christoffel symbols indexed [k][i][j]."
        )

        @model_validator(mode="after")
        def check_shape(self):
            """Gamma must be a dim x dim x dim array."""
            dim = self.dim
            if len(self.gamma) != dim or any(
                    len(row) != dim or any(len(entry) != dim for entry in row)
                    for row in self.gamma):
                raise ValueError(f"gamma must have shape {dim}x{dim}x{dim}")
            return self

    def __init__(self, config: Dict[str, Any]):
        super().__init__(config)
        self.gamma = []
        for k, plane in enumerate(self.config.gamma):
            rows = []
            for i, row in enumerate(plane):
                entries = []
                for j, text in enumerate(row):
                    try:
                        entries.append(parse_component(text, self.coordinates))
                    except ValueError as e:
                        raise ModelError(str(e), path=f"gamma.{k}.{i}.{j}") from e
                rows.append(entries)
            self.gamma.append(rows)
        self._polynomial = all(
            entry.is_polynomial(*self.coordinates)
            for plane in self.gamma for row in plane for entry in row)
        self._gamma_numeric = sympy.lambdify(self.coordinates, self.gamma, "numpy")
        logger.debug(f"Loaded chart model of dimension {self.dim}")

    @property
    def supports_functions(self) -> bool:
        return True

    @property
    def exact(self) -> bool:
        return self._polynomial

    def apply(self, x: VectorField, function: sympy.Expr) -> sympy.Expr:
        return sum((x.components[i] * sympy.diff(function, symbol)
                    for i, symbol in enumerate(self.coordinates)), sympy.Integer(0))

    def covariant_derivative(self, x: VectorField, y: VectorField) -> VectorField:
        self._check_dim(x, y)
        components = []
        for k in range(self.dim):
            value = self.apply(x, y.components[k])
            for i in range(self.dim):
                for j in range(self.dim):
                    if self.gamma[k][i][j] != 0:
                        value += self.gamma[k][i][j] * x.components[i] * y.components[j]
            components.append(value)
        return self.simplify(VectorField(tuple(components)))

    def jacobi_bracket(self, x: VectorField, y: VectorField) -> VectorField:
        self._check_dim(x, y)
        return self.simplify(VectorField(tuple(
            self.apply(x, y.components[k]) - self.apply(y, x.components[k])
            for k in range(self.dim))))

    def christoffel(self, point) -> np.ndarray:
        """
        Numeric Christoffel symbols at a point.

        :param point: Coordinates.
        :return: Array indexed [k, i, j].
        """
        return np.array(self._gamma_numeric(*point), dtype=float).reshape(
            (self.dim, self.dim, self.dim))

    def random_field(self, rng: np.random.Generator) -> VectorField:
        monomials = [sympy.Integer(1)] + list(self.coordinates) + [
            a * b for n, a in enumerate(self.coordinates) for b in self.coordinates[n:]]
        return VectorField(tuple(
            sum((int(c) * m for c, m in zip(rng.integers(-2, 3, len(monomials)), monomials)),
                sympy.Integer(0))
            for _ in range(self.dim)))

    def _check_dim(self, x: VectorField, y: VectorField):
        if x.dim != self.dim or y.dim != self.dim:
            raise ModelError(f"Dimension mismatch: model has dimension {self.dim}")
