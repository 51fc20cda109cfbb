#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Evaluation of free-algebra elements on vector fields

Generators are sent to vector fields, the triangle product to the
covariant derivative and the bold bracket to the Jacobi bracket. Words of
fields act on fields and functions as higher covariant derivatives
(x.U) |> Y = x |> (U |> Y) - (x |> U) |> Y.
"""

from __future__ import annotations
from typing import Any, Dict, List, Optional, Sequence, Union
import numpy as np
import sympy
from pydantic import BaseModel, ConfigDict, Field
from src.lib.core.log import Logger
from src.lib.services.algebra.framed import FramedAtom, trees_to_magma
from src.lib.services.algebra.lie import LieMonomial, lie_to_tensor
from src.lib.services.algebra.scalars import BiSeries, GradedCombo
from src.lib.services.algebra.trees import Forest, PlanarTree
from src.lib.services.geometry.connection_models.base import (
    BaseConnectionModel, ModelError, VectorField)


logger = Logger().get_logger()

Target = Union[VectorField, sympy.Expr]


class EvalContext(BaseModel):
    """
    Connection, evaluation point and the fields bound to free generators.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    connection: Any = Field(
        ...,
        description="Connection model."
    )
    point: Optional[List[float]] = Field(
        default=None,
        description="Evaluation point for numeric values."
    )
    assignment: Dict[str, Any] = Field(
        default_factory=dict,
        description="Vector fields of the free generators."
    )

    def bind(self, **fields: VectorField) -> EvalContext:
        """A copy with extra generators bound."""
        return self.model_copy(update={"assignment": {**self.assignment, **fields}})

    def field(self, label: str) -> VectorField:
        """
        The field of a generator.

        :param label: Generator.
        :return: Its field.
        :raises ValueError: For an unassigned generator.
        """
        if label not in self.assignment:
            raise ValueError(f"Unassigned generator: {label}")
        return self.assignment[label]


def _scale(value: Target, coeff: Any) -> Target:
    return value * sympy.Rational(coeff.numerator, coeff.denominator)


def _act(connection: BaseConnectionModel, x: VectorField, target: Target) -> Target:
    if isinstance(target, VectorField):
        return connection.covariant_derivative(x, target)
    return connection.apply(x, target)


def _zero_like(connection: BaseConnectionModel, target: Target) -> Target:
    return connection.zero_field() if isinstance(target, VectorField) else sympy.Integer(0)


def rho_word(connection: BaseConnectionModel, fields: Sequence[VectorField],
             target: Target) -> Target:
    """
    Higher covariant derivative of a word of fields.

    :param connection: Connection model.
    :param fields: Fields x1..xn of the word.
    :param target: Vector field, or a function on chart models.
    :return: (x1...xn) |> target.
    """
    fields = tuple(fields)
    if not fields:
        return target
    head, rest = fields[0], fields[1:]
    value = _act(connection, head, rho_word(connection, rest, target))
    for index, field in enumerate(rest):
        moved = rest[:index] + (connection.covariant_derivative(head, field),) + rest[index + 1:]
        value = value - rho_word(connection, moved, target)
    return connection.simplify(value) if isinstance(value, VectorField) else value


def framed_field(ctx: EvalContext, element: GradedCombo) -> VectorField:
    """
    Vector field of a framed element: triangle atoms become covariant
    derivatives and bold brackets Jacobi brackets.

    :param ctx: Evaluation context.
    :param element: Framed element.
    :return: The field.
    :raises ValueError: For an unassigned generator.
    """
    connection = ctx.connection
    atoms: Dict[FramedAtom, VectorField] = {}
    monomials: Dict[LieMonomial, VectorField] = {}

    def atom_field(atom: FramedAtom) -> VectorField:
        if atom not in atoms:
            if atom.is_generator:
                atoms[atom] = ctx.field(atom.label)
            else:
                atoms[atom] = connection.covariant_derivative(
                    monomial_field(atom.left), monomial_field(atom.right))
        return atoms[atom]

    def monomial_field(monomial: LieMonomial) -> VectorField:
        if monomial not in monomials:
            if monomial.is_letter:
                monomials[monomial] = atom_field(monomial.letters[0])
            else:
                left, right = monomial.factors
                monomials[monomial] = connection.jacobi_bracket(
                    monomial_field(left), monomial_field(right))
        return monomials[monomial]

    result = connection.zero_field()
    for monomial, coeff in element.items():
        result = result + _scale(monomial_field(monomial), coeff)
    return connection.simplify(result)


def tree_field(ctx: EvalContext, tree: PlanarTree) -> VectorField:
    """Field of a tree letter: its magmatic monomial evaluated."""
    return framed_field(ctx, trees_to_magma(tree))


def rho_eval(ctx: EvalContext, element: GradedCombo, target: Target) -> Target:
    """
    Action of a tensor element over trees on a field or function.

    :param ctx: Evaluation context.
    :param element: Tensor element.
    :param target: Vector field, or a function on chart models.
    :return: element |> target.
    """
    connection = ctx.connection
    trees: Dict[PlanarTree, VectorField] = {}
    result = _zero_like(connection, target)
    for forest, coeff in element.items():
        fields = []
        for tree in forest:
            if tree not in trees:
                trees[tree] = tree_field(ctx, tree)
            fields.append(trees[tree])
        result = result + _scale(rho_word(connection, fields, target), coeff)
    return connection.simplify(result) if isinstance(result, VectorField) else result


def tensor_field(ctx: EvalContext, element: GradedCombo) -> VectorField:
    """
    The vector field U |-> (U |> x^k)_k of an element acting as a
    derivation on functions; only defined on chart models.

    :param ctx: Evaluation context.
    :param element: Tensor element, primitive for a meaningful result.
    :return: The field.
    :raises ModelError: On models without functions.
    """
    connection = ctx.connection
    if not connection.supports_functions:
        raise ModelError("Function-valued evaluation requires a chart model")
    return connection.simplify(VectorField(tuple(
        sympy.sympify(rho_eval(ctx, element, coordinate))
        for coordinate in connection.coordinates)))


def lie_field(ctx: EvalContext, element: GradedCombo) -> VectorField:
    """Field of a Lie element over trees, through its tensor form."""
    return tensor_field(ctx, lie_to_tensor(element))


def coefficient_field(ctx: EvalContext, coefficient: GradedCombo) -> VectorField:
    """
    Field of a series coefficient: framed elements directly, Lie elements
    and tensors over trees through their action on coordinates.

    :param ctx: Evaluation context.
    :param coefficient: Framed element, Lie element over trees or tensor.
    :return: The field.
    """
    if not coefficient:
        return ctx.connection.zero_field()
    basis = next(iter(coefficient.items()))[0]
    if isinstance(basis, Forest):
        return tensor_field(ctx, coefficient)
    if isinstance(basis.letters[0], FramedAtom):
        return framed_field(ctx, coefficient)
    return lie_field(ctx, coefficient)


def series_fields(ctx: EvalContext, series: BiSeries) -> Dict[tuple, VectorField]:
    """
    Field of each coefficient of a series.

    :param ctx: Evaluation context.
    :param series: Series with framed, Lie or tensor coefficients.
    :return: Map from (i, j) to the field of the t^i s^j coefficient.
    """
    return {key: coefficient_field(ctx, coefficient) for key, coefficient in series.items()}


def evaluate_series(ctx: EvalContext, series: BiSeries, t: float, s: float = 0.0) -> np.ndarray:
    """
    Tangent vector of a series at the context point.

    :param ctx: Evaluation context with a point.
    :param series: Series in t and s.
    :param t: Value of t.
    :param s: Value of s.
    :return: Sum of t^i s^j times the coefficient fields at the point.
    :raises ValueError: Without a point or for an unassigned generator.
    """
    if ctx.point is None:
        raise ValueError("Series evaluation requires a point")
    total = np.zeros(ctx.connection.dim)
    for (i, j), field in series_fields(ctx, series).items():
        total = total + (t ** i) * (s ** j) * ctx.connection.evaluate(field, ctx.point)
    return total


def flow_fields(ctx: EvalContext, label: str, order: int) -> List[VectorField]:
    """
    Coefficients of the solution of a' = -(a |> a), a(0) = y, computed with
    nested covariant derivatives.

    :param ctx: Evaluation context.
    :param label: Generator y.
    :param order: Number of coefficients after the first.
    :return: Fields a_0..a_order.
    """
    connection = ctx.connection
    fields = [ctx.field(label)]
    for k in range(order):
        total = connection.zero_field()
        for i in range(k + 1):
            total = total + connection.covariant_derivative(fields[i], fields[k - i])
        fields.append(connection.simplify(total * sympy.Rational(-1, k + 1)))
    return fields
