#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Base Connection Model

Vector fields and the interface shared by concrete affine connections.
"""

from __future__ import annotations
import abc
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple
import numpy as np
import sympy
from pydantic import BaseModel, Field


class ModelError(ValueError):
    """
    Connection model that cannot be parsed, validated or used for the
    requested evaluation. Carries the JSON line or the field path when known.
    """

    def __init__(self, message: str, line: Optional[int] = None, path: Optional[str] = None):
        super().__init__(message)
        self.line = line
        self.path = path


@dataclass(frozen=True)
class VectorField:
    """
    Vector field given by its components: functions of the chart
    coordinates, or constant coefficients in a left-invariant frame.
    """
    components: Tuple[sympy.Expr, ...]

    @classmethod
    def of(cls, values: Sequence[Any]) -> VectorField:
        """Field from numbers, strings or sympy expressions."""
        return cls(tuple(sympy.sympify(value) for value in values))

    @property
    def dim(self) -> int:
        """Number of components."""
        return len(self.components)

    def _check(self, other: VectorField):
        if self.dim != other.dim:
            raise ModelError(f"Dimension mismatch: {self.dim} != {other.dim}")

    def __add__(self, other: VectorField) -> VectorField:
        self._check(other)
        return VectorField(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: VectorField) -> VectorField:
        self._check(other)
        return VectorField(tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> VectorField:
        return VectorField(tuple(-a for a in self.components))

    def __mul__(self, factor: Any) -> VectorField:
        factor = sympy.sympify(factor)
        return VectorField(tuple(factor * a for a in self.components))

    __rmul__ = __mul__

    def expand(self) -> VectorField:
        """Componentwise sympy expand."""
        return VectorField(tuple(sympy.expand(a) for a in self.components))


class BaseConnectionModel(abc.ABC):
    """
    Abstract affine connection on vector fields.
    """

    class Config(BaseModel):
        """
        Configuration shared by connection models.
        """
        type: str = Field(
            ...,
            description="Kind of model, 'chart' or 'lie-group'."
        )
        dim: int = Field(
            ...,
            gt=0,
            description="Dimension of the manifold."
        )
        name: Optional[str] = Field(
            default=None,
            description="Display name of the model."
        )

    def __init__(self, config: Dict[str, Any]):
        self.config = self.Config(**config)
        self.dim = self.config.dim
        self.coordinates = sympy.symbols(f"x1:{self.dim + 1}")
        self._numeric: Dict[VectorField, Any] = {}

    @property
    def name(self) -> str:
        """Configured name or the model type."""
        return self.config.name or self.config.type

    @property
    def supports_functions(self) -> bool:
        """True when fields can act on functions of the coordinates."""
        return False

    @property
    def exact(self) -> bool:
        """True when symbolic residuals can be decided by expansion."""
        return True

    @abc.abstractmethod
    def covariant_derivative(self, x: VectorField, y: VectorField) -> VectorField:
        """
        The covariant derivative of y along x.

        :param x: Direction.
        :param y: Differentiated field.
        :return: The field nabla_x y.
        """

    @abc.abstractmethod
    def jacobi_bracket(self, x: VectorField, y: VectorField) -> VectorField:
        """
        The Jacobi-Lie bracket of vector fields.

        :param x: Left field.
        :param y: Right field.
        :return: The field [x, y].
        """

    def apply(self, x: VectorField, function: sympy.Expr) -> sympy.Expr:
        """
        The derivative x(f) of a function.

        :param x: Vector field.
        :param function: Function of the coordinates.
        :return: x(f).
        :raises ModelError: On models without functions.
        """
        raise ModelError("Function-valued evaluation requires a chart model")

    @abc.abstractmethod
    def random_field(self, rng: np.random.Generator) -> VectorField:
        """
        A random field suitable for numeric checks.

        :param rng: Seeded generator.
        :return: Field with small integer coefficients.
        """

    def random_point(self, rng: np.random.Generator) -> np.ndarray:
        """A random point in the unit box around the origin."""
        return rng.uniform(-0.5, 0.5, self.dim)

    def zero_field(self) -> VectorField:
        """The zero field."""
        return VectorField((sympy.Integer(0),) * self.dim)

    def constant_field(self, values: Sequence[Any]) -> VectorField:
        """
        A field with constant components.

        :param values: Numbers or rational strings.
        :return: The field.
        :raises ModelError: On a dimension mismatch.
        """
        if len(values) != self.dim:
            raise ModelError(f"Expected {self.dim} components, got {len(values)}")
        return VectorField(tuple(sympy.Rational(str(value)) for value in values))

    def simplify(self, field: VectorField) -> VectorField:
        """Normal form used to keep nested derivatives small."""
        return field.expand() if self.exact else field

    def is_zero(self, field: VectorField) -> bool:
        """
        Exact zero test; only decisive on exact models.

        :param field: Field.
        :return: True when every component expands to zero.
        """
        return all(sympy.expand(component) == 0 for component in field.components)

    def evaluate(self, field: VectorField, point: Sequence[float]) -> np.ndarray:
        """
        Numeric value of a field at a point.

        :param field: Field.
        :param point: Coordinates.
        :return: Component vector.
        """
        function = self._numeric.get(field)
        if function is None:
            function = sympy.lambdify(self.coordinates, list(field.components), "numpy")
            self._numeric[field] = function
        return np.array(function(*point), dtype=float)

    def field_norm(self, field: VectorField, points: Sequence[Sequence[float]]) -> float:
        """Largest Euclidean norm of a field over the given points."""
        return max((float(np.linalg.norm(self.evaluate(field, point))) for point in points),
                   default=0.0)
