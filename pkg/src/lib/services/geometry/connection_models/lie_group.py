#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Lie Group Connection Model

Left-invariant connection on a Lie group, acting on frame fields with
constant coefficients: [e_i, e_j] = c^k_ij e_k and
nabla_{e_i} e_j = lambda^k_ij e_k, both tables indexed [k][i][j].
"""

from itertools import product
from typing import Any, Dict, List, Optional, Union
import numpy as np
import sympy
from pydantic import ConfigDict, Field, model_validator
from src.lib.core.log import Logger
from src.lib.services.geometry.connection_models.base import (
    BaseConnectionModel, ModelError, VectorField)


logger = Logger().get_logger()

Table = List[List[List[Union[str, int, float]]]]


def _rational_table(table: Table) -> list:
    return [[[sympy.Rational(str(value)) for value in row] for row in plane] for plane in table]


def _check_shape(name: str, table: Table, dim: int):
    if len(table) != dim or any(
            len(row) != dim or any(len(entry) != dim for entry in row) for row in table):
        raise ValueError(f"{name} must have shape {dim}x{dim}x{dim}")


class LieGroupConnectionModel(BaseConnectionModel):
    """
    Connection on left-invariant frame fields.
    """

    class Config(BaseConnectionModel.Config):
        """
        Configuration for the Lie group model.
        """
        model_config = ConfigDict(populate_by_name=True)

        structure: Table = Field(
            ...,
            description="Structure constants c^k_ij indexed [k][i][j]."
        )
        connection: Optional[Table] = Field(
            default=None,
            alias="lambda",
            description="Connection coefficients lambda^k_ij indexed [k][i][j]; zero when absent."
        )

        @model_validator(mode="after")
        def check_tables(self):
            """Shapes, antisymmetry and the Jacobi identity."""
            dim = self.dim
            _check_shape("structure", self.structure, dim)
            if self.connection is not None:
                _check_shape("lambda", self.connection, dim)
            c = _rational_table(self.structure)
            for k, i, j in product(range(dim), repeat=3):
                if c[k][i][j] != -c[k][j][i]:
                    raise ValueError(
                        f"structure constants are not antisymmetric at [{k}][{i}][{j}]")
            for i, j, l, k in product(range(dim), repeat=4):
                total = sum(c[m][i][j] * c[k][m][l] + c[m][j][l] * c[k][m][i]
                            + c[m][l][i] * c[k][m][j] for m in range(dim))
                if total != 0:
                    raise ValueError(
                        f"structure constants violate the Jacobi identity at ({i},{j},{l})")
            return self

    def __init__(self, config: Dict[str, Any]):
        super().__init__(config)
        self.structure = _rational_table(self.config.structure)
        if self.config.connection is None:
            self.connection = [[[sympy.Integer(0)] * self.dim for _ in range(self.dim)]
                               for _ in range(self.dim)]
        else:
            self.connection = _rational_table(self.config.connection)
        logger.debug(f"Loaded Lie group model of dimension {self.dim}")

    def _bilinear(self, table: list, x: VectorField, y: VectorField) -> VectorField:
        for field in (x, y):
            if field.dim != self.dim:
                raise ModelError(f"Dimension mismatch: model has dimension {self.dim}")
            if any(sympy.sympify(component).free_symbols for component in field.components):
                raise ModelError("Frame fields must have constant coefficients")
        return VectorField(tuple(
            sympy.expand(sum((table[k][i][j] * x.components[i] * y.components[j]
                              for i in range(self.dim) for j in range(self.dim)),
                             sympy.Integer(0)))
            for k in range(self.dim)))

    def covariant_derivative(self, x: VectorField, y: VectorField) -> VectorField:
        return self._bilinear(self.connection, x, y)

    def jacobi_bracket(self, x: VectorField, y: VectorField) -> VectorField:
        return self._bilinear(self.structure, x, y)

    def frame(self, index: int) -> VectorField:
        """
        The frame field e_index, counted from 1.

        :param index: Frame index.
        :return: The field.
        """
        values = [0] * self.dim
        values[index - 1] = 1
        return self.constant_field(values)

    def random_field(self, rng: np.random.Generator) -> VectorField:
        return VectorField(tuple(sympy.Integer(int(c)) for c in rng.integers(-3, 4, self.dim)))
