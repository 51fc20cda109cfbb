#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Test suite for the connection models and the model file loader.
"""

import os
import json
import numpy as np
import pytest
import sympy
from src.lib.services.geometry.connection_model import (
    ConnectionModel, load_model, model_from_dict)
from src.lib.services.geometry.connection_models.base import ModelError, VectorField
from src.lib.services.geometry.connection_models.chart import (
    ChartConnectionModel, parse_component)
from src.lib.services.geometry.connection_models.lie_group import LieGroupConnectionModel


SO3_STRUCTURE = [
    [[0, 0, 0], [0, 0, 1], [0, -1, 0]],
    [[0, 0, -1], [0, 0, 0], [1, 0, 0]],
    [[0, 1, 0], [-1, 0, 0], [0, 0, 0]],
]


@pytest.fixture
def torsion2d():
    """
    Chart model with Gamma^1_12 = x2.
    """
    return model_from_dict({
        "kind": "chart", "dim": 2,
        "gamma": [[["0", "x2"], ["0", "0"]], [["0", "0"], ["0", "0"]]]})


@pytest.fixture
def so3():
    """
    Lie group model with lambda = c/2.
    """
    half = [[[str(sympy.Rational(value, 2)) for value in row] for row in plane]
            for plane in SO3_STRUCTURE]
    return model_from_dict({"kind": "lie-group", "dim": 3,
                            "structure": SO3_STRUCTURE, "lambda": half})


def test_factory_creates_models(torsion2d, so3):
    """
    Test that both kinds are created through the factory.
    """
    assert isinstance(torsion2d, ChartConnectionModel)
    assert isinstance(so3, LieGroupConnectionModel)
    assert torsion2d.name == "chart"
    assert torsion2d.exact


def test_factory_errors():
    """
    Test missing and unsupported types.
    """
    with pytest.raises(ValueError, match="must include 'type'"):
        ConnectionModel.create({})
    with pytest.raises(ValueError, match="Unsupported connection model type"):
        ConnectionModel.create({"type": "riemann", "dim": 2})


@pytest.mark.parametrize("data,path", [
    ({"dim": 2}, "kind"),
    ({"kind": "riemann", "dim": 2}, "kind"),
    ({"kind": "chart", "dim": 2, "gamma": [[["0"]]]}, None),
    ({"kind": "chart", "dim": 1, "gamma": [[["x3"]]]}, "gamma.0.0.0"),
    ({"kind": "chart", "dim": 1, "gamma": [[["sin(x1)"]]]}, "gamma.0.0.0"),
    ({"kind": "chart", "dim": 1, "gamma": [[["x1 +* 2"]]]}, "gamma.0.0.0"),
])
def test_model_errors(data, path):
    """
    Test that invalid models raise ModelError with the field path.
    """
    with pytest.raises(ModelError) as exc:
        model_from_dict(data)
    if path:
        assert exc.value.path == path


def test_structure_validation():
    """
    Test antisymmetry and Jacobi checks of the structure constants.
    """
    skewless = [[[0, 1], [0, 0]], [[0, 0], [0, 0]]]
    with pytest.raises(ModelError, match="antisymmetric"):
        model_from_dict({"kind": "lie-group", "dim": 2, "structure": skewless})
    broken = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    broken[2][0][1], broken[2][1][0] = 1, -1
    broken[0][0][2], broken[0][2][0] = 1, -1
    with pytest.raises(ModelError, match="Jacobi"):
        model_from_dict({"kind": "lie-group", "dim": 3, "structure": broken})


def test_load_model(tmp_path):
    """
    Test reading a model file and the JSON syntax error line.
    """
    path = tmp_path / "flat.json"
    path.write_text(json.dumps({"kind": "chart", "dim": 1, "gamma": [[["0"]]]}))
    assert load_model(str(path)).dim == 1
    broken = tmp_path / "broken.json"
    broken.write_text('{\n  "kind": "chart",\n  "dim": \n}')
    with pytest.raises(ModelError) as exc:
        load_model(str(broken))
    assert exc.value.line == 4
    with pytest.raises(ModelError):
        load_model(str(tmp_path / "missing.json"))


def test_parse_component():
    """
    Test the rational function parser with caret powers.
    """
    x1, x2 = sympy.symbols("x1:3")
    assert parse_component("x1^2 + 1/2", (x1, x2)) == x1 ** 2 + sympy.Rational(1, 2)
    assert parse_component(3, (x1, x2)) == 3
    with pytest.raises(ValueError):
        parse_component("exp(x1)", (x1, x2))


def test_chart_derivatives(torsion2d):
    """
    Test the covariant derivative and the Jacobi bracket on a chart.
    """
    x1, x2 = torsion2d.coordinates
    e1, e2 = VectorField.of([1, 0]), VectorField.of([0, 1])
    assert torsion2d.covariant_derivative(e1, e2) == VectorField.of([x2, 0])
    assert torsion2d.covariant_derivative(e2, e1) == VectorField.of([0, 0])
    radial = VectorField.of([x1, x2])
    assert torsion2d.jacobi_bracket(e1, radial) == VectorField.of([1, 0])
    assert torsion2d.apply(e2, x1 * x2) == x1
    gamma = torsion2d.christoffel([0.3, 0.7])
    assert gamma.shape == (2, 2, 2)
    assert gamma[0, 0, 1] == pytest.approx(0.7)


def test_chart_dimension_mismatch(torsion2d):
    """
    Test that fields of the wrong dimension are rejected.
    """
    with pytest.raises(ModelError):
        torsion2d.covariant_derivative(VectorField.of([1]), VectorField.of([0, 1]))


def test_lie_group_frames(so3):
    """
    Test frame brackets and connection coefficients.
    """
    e1, e2, e3 = (so3.frame(i) for i in (1, 2, 3))
    assert so3.jacobi_bracket(e1, e2) == e3
    assert so3.covariant_derivative(e1, e2) == e3 * sympy.Rational(1, 2)
    assert not so3.supports_functions
    with pytest.raises(ModelError):
        so3.apply(e1, sympy.Integer(1))
    x1 = so3.coordinates[0]
    with pytest.raises(ModelError, match="constant coefficients"):
        so3.jacobi_bracket(VectorField.of([x1, 0, 0]), e2)


def test_lie_group_default_connection():
    """
    Test that a missing lambda gives the zero connection.
    """
    model = model_from_dict({"kind": "lie-group", "dim": 3, "structure": SO3_STRUCTURE})
    assert model.is_zero(model.covariant_derivative(model.frame(1), model.frame(2)))


def test_numeric_evaluation(torsion2d):
    """
    Test field evaluation and the largest norm over points.
    """
    x1, x2 = torsion2d.coordinates
    field = VectorField.of([x1, x2 ** 2])
    np.testing.assert_allclose(torsion2d.evaluate(field, [0.5, 2.0]), [0.5, 4.0])
    assert torsion2d.field_norm(field, [[0.0, 0.0], [3.0, 2.0]]) == pytest.approx(5.0)
    assert torsion2d.field_norm(field, []) == 0.0


def test_random_fields_are_seeded(torsion2d, so3):
    """
    Test that random fields depend only on the seed.
    """
    for model in (torsion2d, so3):
        first = model.random_field(np.random.default_rng(3))
        second = model.random_field(np.random.default_rng(3))
        assert first == second
        assert first.dim == model.dim


def test_constant_field(so3):
    """
    Test rational string components and the dimension check.
    """
    assert so3.constant_field(["1/2", 0, "2"]).components[0] == sympy.Rational(1, 2)
    with pytest.raises(ModelError):
        so3.constant_field([1, 2])


if __name__ == "__main__":
    current_file = os.path.abspath(__file__)
    pytest.main([current_file, '-vv'])
