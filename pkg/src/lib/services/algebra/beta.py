#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
The beta map in the free framed Lie algebra

beta(ty) is the projection p of K(chi(ty)); it is computed twice, once
through K and chi and once as the Magnus series of alpha for the bold
bracket, and the two must agree. The universal series in one generator
extends to arbitrary framed series by substitution; the inverse is
solved degree by degree.
"""

from functools import lru_cache
from typing import Union
from src.lib.core.log import Logger
from src.lib.services.algebra.framed import (
    FramedElement, bold_bracket, framed_substitute, generator, project_p)
from src.lib.services.algebra.kmap import OrderError
from src.lib.services.algebra.magnus import (
    ConsistencyError, alpha, lambda_map, magnus_omega, z_map)
from src.lib.services.algebra.scalars import BiSeries
from src.lib.services.algebra.series import bch


logger = Logger().get_logger()

UNIVERSAL_LABEL = "y"
MAX_DOUBLE_EXP_ORDER = 5


@lru_cache(maxsize=None)
def _beta_universal(label: str, order: int) -> BiSeries:
    through_k = z_map(label, order).map_coefficients(project_p)
    through_magnus = magnus_omega(alpha(label, order), order, bold_bracket)
    for degree in range(1, order + 1):
        if through_k.coefficient(degree) != through_magnus.coefficient(degree):
            raise ConsistencyError(
                f"beta mismatch at degree {degree}: p(K(chi)) and the bold Magnus series disagree")
    logger.debug(f"beta confirmed up to order {order}")
    return through_magnus


def beta(label: str, order: int) -> BiSeries:
    """
    beta(ty) as a framed series.

    :param label: Generator y.
    :param order: Truncation order in t.
    :return: Framed series, beta_1 = y.
    :raises ConsistencyError: When the two computations disagree.
    """
    return _beta_universal(label, order)


def _as_series(value: Union[BiSeries, FramedElement, str], order: int) -> BiSeries:
    if isinstance(value, BiSeries):
        return value.with_order(order)
    if isinstance(value, str):
        value = generator(value)
    return BiSeries.monomial(value, (1, 0), order)


def beta_apply(value: Union[BiSeries, FramedElement, str], order: int) -> BiSeries:
    """
    beta of an arbitrary framed series: the universal homogeneous parts
    beta_n(y) with y replaced by the series.

    :param value: Framed series without constant term, or an element u
                  standing for the series tu.
    :param order: Truncation order.
    :return: beta(value).
    """
    series = _as_series(value, order)
    if series.constant():
        raise ValueError("beta requires a series without constant term")
    universal = beta(UNIVERSAL_LABEL, order)
    result = BiSeries({}, order)
    for degree in range(1, order + 1):
        part = universal.coefficient(degree)
        if part:
            result = result + framed_substitute(part, {UNIVERSAL_LABEL: series}, order)
    return result


def beta_inverse(value: BiSeries, order: int) -> BiSeries:
    """
    Solve beta(u) = value for u, one total degree at a time:
    u_d = value_d - [beta(u_<d)]_d.

    :param value: Framed series without constant term.
    :param order: Truncation order.
    :return: u.
    """
    target = value.with_order(order)
    if target.constant():
        raise ValueError("beta inverse requires a series without constant term")
    solution = BiSeries({}, order)
    for degree in range(1, order + 1):
        current = beta_apply(solution, order)
        solution = solution + target.total_degree_part(degree) - current.total_degree_part(degree)
    return solution


def framed_bch(left: BiSeries, right: BiSeries, order: int) -> BiSeries:
    """
    BCH series of two framed series for the bold bracket.

    :param left: Framed series without constant term.
    :param right: Framed series without constant term.
    :param order: Truncation order.
    :return: BCH(left, right).
    """
    universal = bch("v", "w", order)
    assignment = {"v": left.with_order(order), "w": right.with_order(order)}
    result = BiSeries({}, order)
    for _, coefficient in universal.items():
        result = result + framed_substitute(project_p(coefficient), assignment, order)
    return result


def double_exp(v: str, w: str, order: int) -> BiSeries:
    """
    The framed series whose beta-image is BCH(beta(tv), beta(s lambda(tv, w))),
    where lambda(tv, w) = exp(-t delta_v) w.

    :param v: First generator.
    :param w: Second generator.
    :param order: Total-degree truncation order, at most 5.
    :return: beta^{-1} of the BCH series.
    :raises OrderError: For orders outside 1..5.
    """
    if not 1 <= order <= MAX_DOUBLE_EXP_ORDER:
        raise OrderError(f"Double exponential order must be in [1, {MAX_DOUBLE_EXP_ORDER}], got {order}")
    first = beta_apply(BiSeries.monomial(generator(v), (1, 0), order), order)
    second = beta_apply(lambda_map(v, w, order).shift(0, 1), order)
    return beta_inverse(framed_bch(first, second, order), order)
