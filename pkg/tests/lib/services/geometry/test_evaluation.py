#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Test suite for the evaluation of free-algebra elements on vector fields.
"""

import os
import numpy as np
import pytest
import sympy
from src.lib.services.algebra.framed import parse_framed
from src.lib.services.algebra.lie import lie_letter
from src.lib.services.algebra.magnus import alpha
from src.lib.services.algebra.scalars import BiSeries, GradedCombo
from src.lib.services.algebra.tensor import from_text, letter, word
from src.lib.services.algebra.trees import parse_tree, vertex
from src.lib.services.geometry.connection_model import model_from_dict
from src.lib.services.geometry.connection_models.base import ModelError, VectorField
from src.lib.services.geometry.evaluation import (
    EvalContext, coefficient_field, evaluate_series, flow_fields, framed_field, lie_field,
    rho_eval, rho_word, series_fields, tensor_field, tree_field)


@pytest.fixture
def chart():
    """
    Polynomial chart model with torsion and curvature.
    """
    return model_from_dict({
        "kind": "chart", "dim": 2,
        "gamma": [[["0", "x2"], ["x1", "0"]], [["0", "0"], ["x2^2", "1"]]]})


@pytest.fixture
def context(chart):
    """
    Context binding a, b, y and z to fixed polynomial fields.
    """
    x1, x2 = chart.coordinates
    return EvalContext(connection=chart, assignment={
        "a": VectorField.of([1, x2]),
        "b": VectorField.of([x1 * x2, 2]),
        "y": VectorField.of([x1, 1 - x2]),
        "z": VectorField.of([x2 ** 2, x1]),
    })


def test_context_binding(context):
    """
    Test field lookup and binding copies.
    """
    extended = context.bind(c=VectorField.of([0, 1]))
    assert extended.field("c") == VectorField.of([0, 1])
    with pytest.raises(ValueError, match="Unassigned generator"):
        context.field("c")


def test_rho_word_two_letters(context):
    """
    Test (a.b) |> z = nabla_a nabla_b z - nabla_(nabla_a b) z.
    """
    chart = context.connection
    a, b, z = (context.field(label) for label in "abz")
    nabla = chart.covariant_derivative
    expected = nabla(a, nabla(b, z)) - nabla(nabla(a, b), z)
    assert chart.is_zero(rho_word(chart, [a, b], z) - expected)
    assert rho_word(chart, [], z) == z


def test_rho_on_functions(context):
    """
    Test that words act on functions through the same recursion.
    """
    chart = context.connection
    x1, x2 = chart.coordinates
    a, b = context.field("a"), context.field("b")
    f = x1 ** 2 * x2
    expected = chart.apply(a, chart.apply(b, f)) - chart.apply(chart.covariant_derivative(a, b), f)
    assert sympy.expand(rho_word(chart, [a, b], f) - expected) == 0


def test_framed_field(context):
    """
    Test that the triangle is the covariant derivative and B the Jacobi bracket.
    """
    chart = context.connection
    a, b = context.field("a"), context.field("b")
    assert chart.is_zero(framed_field(context, parse_framed("T(a,b)"))
                         - chart.covariant_derivative(a, b))
    assert chart.is_zero(framed_field(context, parse_framed("B(a,b)"))
                         - chart.jacobi_bracket(a, b))
    with pytest.raises(ValueError):
        framed_field(context, parse_framed("q"))


def test_tree_field(context):
    """
    Test that a tree letter evaluates through its magmatic monomial.
    """
    chart = context.connection
    y = context.field("y")
    assert chart.is_zero(tree_field(context, parse_tree("y[y]"))
                         - chart.covariant_derivative(y, y))


def test_letters_act_as_fields(context):
    """
    Test that a one-letter element acts on coordinates as its field.
    """
    chart = context.connection
    assert chart.is_zero(tensor_field(context, letter("y")) - context.field("y"))
    assert chart.is_zero(lie_field(context, lie_letter(vertex("y"))) - context.field("y"))


def test_rho_eval_linear(context):
    """
    Test linearity of the action over tensor elements.
    """
    chart = context.connection
    z = context.field("z")
    element = word("a", "b") * 2 - from_text("b[a]")
    expected = (rho_word(chart, [context.field("a"), context.field("b")], z) * 2
                - chart.covariant_derivative(tree_field(context, parse_tree("b[a]")), z))
    assert chart.is_zero(rho_eval(context, element, z) - expected)


def test_coefficient_field_dispatch(context):
    """
    Test framed, Lie and tensor coefficients.
    """
    chart = context.connection
    y = context.field("y")
    assert chart.is_zero(coefficient_field(context, parse_framed("y")) - y)
    assert chart.is_zero(coefficient_field(context, lie_letter(vertex("y"))) - y)
    assert chart.is_zero(coefficient_field(context, letter("y")) - y)
    assert chart.is_zero(coefficient_field(context, GradedCombo.zero()))


def test_tensor_field_requires_chart():
    """
    Test that frame models reject function-valued evaluation.
    """
    group = model_from_dict({"kind": "lie-group", "dim": 2,
                             "structure": [[[0, 1], [-1, 0]], [[0, 0], [0, 0]]]})
    ctx = EvalContext(connection=group, assignment={"y": group.frame(1)})
    with pytest.raises(ModelError):
        tensor_field(ctx, letter("y"))
    assert framed_field(ctx, parse_framed("B(y,y)")) == group.zero_field()


def test_flow_fields_match_alpha(context):
    """
    Test that the flow coefficients are the fields of alpha.
    """
    chart = context.connection
    order = 3
    fields = flow_fields(context, "y", order)
    expected = series_fields(context, alpha("y", order))
    for k in range(order + 1):
        assert chart.is_zero(fields[k] - expected[(k, 0)])


def test_evaluate_series(context):
    """
    Test numeric series evaluation at a point.
    """
    series = BiSeries({(1, 0): parse_framed("a"), (0, 1): parse_framed("b")}, 2)
    point = [0.5, -1.0]
    ctx = context.model_copy(update={"point": point})
    value = evaluate_series(ctx, series, 2.0, 3.0)
    np.testing.assert_allclose(value, [2.0 * 1 + 3.0 * (-0.5), 2.0 * (-1.0) + 3.0 * 2])
    with pytest.raises(ValueError, match="requires a point"):
        evaluate_series(context, series, 1.0)


if __name__ == "__main__":
    current_file = os.path.abspath(__file__)
    pytest.main([current_file, '-vv'])
