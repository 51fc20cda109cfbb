#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Geodesics and parallel transport

Classical fourth order Runge-Kutta on the joint state (x, x', w) of

    x''^k + Gamma^k_ij x'^i x'^j = 0,    w'^k + Gamma^k_ij x'^i w^j = 0.
"""

import math
from typing import Optional, Sequence, Tuple
import numpy as np
from src.lib.services.geometry.connection_models.base import (
    BaseConnectionModel, ModelError)


DEFAULT_STEPS_PER_UNIT = 1000
DEFAULT_STEPS_MIN = 100


def step_count(duration: float, steps_per_unit: int = DEFAULT_STEPS_PER_UNIT,
               steps_min: int = DEFAULT_STEPS_MIN) -> int:
    """max(steps_min, ceil(steps_per_unit * |T|))."""
    return max(steps_min, math.ceil(steps_per_unit * abs(duration)))


def _christoffel(connection: BaseConnectionModel):
    if not hasattr(connection, "christoffel"):
        raise ModelError("Geodesic integration requires a chart model")
    return connection.christoffel


def _integrate(connection: BaseConnectionModel, x0: Sequence[float], v0: Sequence[float],
               w0: Sequence[float], duration: float,
               steps: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    gamma = _christoffel(connection)
    if steps < 1:
        raise ValueError(f"Step count must be at least 1, got {steps}")
    dim = connection.dim
    state = np.concatenate([np.asarray(x0, dtype=float), np.asarray(v0, dtype=float),
                            np.asarray(w0, dtype=float)])
    if state.shape != (3 * dim,):
        raise ModelError(f"Expected vectors of dimension {dim}")

    def rhs(y: np.ndarray) -> np.ndarray:
        x, v, w = y[:dim], y[dim:2 * dim], y[2 * dim:]
        g = gamma(x)
        return np.concatenate([v, -np.einsum("kij,i,j->k", g, v, v),
                               -np.einsum("kij,i,j->k", g, v, w)])

    h = duration / steps
    for _ in range(steps):
        k1 = rhs(state)
        k2 = rhs(state + 0.5 * h * k1)
        k3 = rhs(state + 0.5 * h * k2)
        k4 = rhs(state + h * k3)
        state = state + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
    if not np.all(np.isfinite(state)):
        raise FloatingPointError("Geodesic integration diverged")
    return state[:dim], state[dim:2 * dim], state[2 * dim:]


def geodesic_flow(connection: BaseConnectionModel, x0: Sequence[float], v0: Sequence[float],
                  duration: float = 1.0, steps: Optional[int] = None) -> np.ndarray:
    """
    Endpoint of the geodesic with initial point x0 and velocity v0.

    :param connection: Chart model.
    :param x0: Initial point.
    :param v0: Initial velocity.
    :param duration: Flow time T.
    :param steps: RK4 steps, step_count(T) when omitted.
    :return: x(T).
    :raises ModelError: On models without Christoffel symbols.
    """
    steps = step_count(duration) if steps is None else steps
    x, _, _ = _integrate(connection, x0, v0, np.zeros(connection.dim), duration, steps)
    return x


def transport_along_geodesic(connection: BaseConnectionModel, x0: Sequence[float],
                             v0: Sequence[float], w0: Sequence[float], duration: float = 1.0,
                             steps: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    Follow a geodesic and parallel transport w0 along it.

    :param connection: Chart model.
    :param x0: Initial point.
    :param v0: Initial velocity.
    :param w0: Transported vector.
    :param duration: Flow time T.
    :param steps: RK4 steps, step_count(T) when omitted.
    :return: (x(T), w(T)).
    """
    steps = step_count(duration) if steps is None else steps
    x, _, w = _integrate(connection, x0, v0, w0, duration, steps)
    return x, w


def parallel_transport(connection: BaseConnectionModel, x0: Sequence[float],
                       v0: Sequence[float], w0: Sequence[float], duration: float = 1.0,
                       steps: Optional[int] = None) -> np.ndarray:
    """
    Parallel transport of w0 along the geodesic through x0 with velocity v0.

    :return: w(T).
    """
    return transport_along_geodesic(connection, x0, v0, w0, duration, steps)[1]


def composed_geodesics(connection: BaseConnectionModel, x0: Sequence[float],
                       v0: Sequence[float], w0: Sequence[float], t: float, s: float,
                       steps_per_unit: int = DEFAULT_STEPS_PER_UNIT,
                       steps_min: int = DEFAULT_STEPS_MIN) -> np.ndarray:
    """
    Follow the geodesic of v0 for time t, then the geodesic of the
    transported w0 for time s.

    :return: The endpoint.
    """
    x1, w1 = transport_along_geodesic(connection, x0, v0, w0, t,
                                      step_count(t, steps_per_unit, steps_min))
    return geodesic_flow(connection, x1, w1, s, step_count(s, steps_per_unit, steps_min))
