#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Test suite for geodesic integration and parallel transport.
"""

import os
import numpy as np
import pytest
from src.lib.services.geometry.connection_model import model_from_dict
from src.lib.services.geometry.connection_models.base import ModelError
from src.lib.services.geometry.flows import (
    composed_geodesics, geodesic_flow, parallel_transport, step_count,
    transport_along_geodesic)


SPHERE_GAMMA = [
    [["-2*x1/(1+x1^2+x2^2)", "-2*x2/(1+x1^2+x2^2)"],
     ["-2*x2/(1+x1^2+x2^2)", "2*x1/(1+x1^2+x2^2)"]],
    [["2*x2/(1+x1^2+x2^2)", "-2*x1/(1+x1^2+x2^2)"],
     ["-2*x1/(1+x1^2+x2^2)", "-2*x2/(1+x1^2+x2^2)"]],
]


@pytest.fixture
def flat2d():
    """
    Flat chart model.
    """
    return model_from_dict({"kind": "chart", "dim": 2, "gamma": [[["0"] * 2] * 2] * 2})


@pytest.fixture
def sphere():
    """
    Round sphere in stereographic coordinates.
    """
    return model_from_dict({"kind": "chart", "dim": 2, "gamma": SPHERE_GAMMA})


def metric_norm(point, vector):
    """Squared length for the metric 4/(1+|x|^2)^2 times the Euclidean one."""
    factor = 4.0 / (1.0 + float(np.dot(point, point))) ** 2
    return factor * float(np.dot(vector, vector))


@pytest.mark.parametrize("duration,steps", [(0.01, 100), (1.0, 1000), (2.5, 2500), (-0.5, 500)])
def test_step_count(duration, steps):
    """
    Test the default step rule.
    """
    assert step_count(duration) == steps


def test_flat_flows(flat2d):
    """
    Test straight geodesics and trivial transport.
    """
    x0, v0, w0 = [0.1, 0.2], [1.0, -0.5], [0.3, 0.4]
    np.testing.assert_allclose(geodesic_flow(flat2d, x0, v0, 2.0), [2.1, -0.8])
    np.testing.assert_allclose(parallel_transport(flat2d, x0, v0, w0), w0)
    np.testing.assert_allclose(
        composed_geodesics(flat2d, x0, v0, w0, 0.5, 2.0), [1.2, 0.75])


def test_sphere_transport_is_isometric(sphere):
    """
    Test that geodesic speed and transported lengths are conserved.
    """
    x0, v0, w0 = np.array([0.1, 0.2]), np.array([1.0, 0.5]), np.array([-0.5, 1.0])
    x1, velocity = transport_along_geodesic(sphere, x0, v0, v0, 1.0)
    assert metric_norm(x1, velocity) == pytest.approx(metric_norm(x0, v0), rel=1e-8)
    x2, w1 = transport_along_geodesic(sphere, x0, v0, w0, 1.0)
    np.testing.assert_allclose(x2, x1)
    assert metric_norm(x2, w1) == pytest.approx(metric_norm(x0, w0), rel=1e-8)


def test_flow_errors(flat2d):
    """
    Test frame models, bad dimensions and step counts.
    """
    group = model_from_dict({"kind": "lie-group", "dim": 2,
                             "structure": [[[0, 1], [-1, 0]], [[0, 0], [0, 0]]]})
    with pytest.raises(ModelError):
        geodesic_flow(group, [0, 0], [1, 0])
    with pytest.raises(ModelError):
        geodesic_flow(flat2d, [0, 0, 0], [1, 0, 0])
    with pytest.raises(ValueError):
        geodesic_flow(flat2d, [0, 0], [1, 0], steps=0)


if __name__ == "__main__":
    current_file = os.path.abspath(__file__)
    pytest.main([current_file, '-vv'])
