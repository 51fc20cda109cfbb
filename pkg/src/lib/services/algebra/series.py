#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Exponentials and logarithms of truncated series

Series exponential and logarithm with respect to a chosen product
('concat' or 'gl'), and the Baker-Campbell-Hausdorff series in two
time variables.
"""

from fractions import Fraction
from typing import Any, Callable, Union
from src.lib.core.log import Logger
from src.lib.services.algebra.lie import lie_letter, lie_to_tensor, tensor_to_lie
from src.lib.services.algebra.scalars import BiSeries, GradedCombo
from src.lib.services.algebra.tensor import concat, gl_product, letter, unit
from src.lib.services.algebra.trees import Forest, PlanarTree, parse_tree


logger = Logger().get_logger()

PRODUCTS = {
    "concat": concat,
    "gl": gl_product,
}

Product = Union[str, Callable[[GradedCombo, GradedCombo], GradedCombo]]


class SeriesError(ValueError):
    """Series with the wrong constant term for exp or log."""


def resolve_product(product: Product) -> Callable[[GradedCombo, GradedCombo], GradedCombo]:
    """
    Look up a product by name; callables are returned unchanged.

    :param product: 'concat', 'gl' or a bilinear callable.
    :return: The product.
    :raises ValueError: For an unknown name.
    """
    if callable(product):
        return product
    if product not in PRODUCTS:
        raise ValueError(f"Unsupported product type: {product}")
    return PRODUCTS[product]


def unit_series(order: int) -> BiSeries:
    """The constant series 1."""
    return BiSeries({(0, 0): unit()}, order)


def is_lie_combo(combo: GradedCombo) -> bool:
    """True when the basis elements are Lie monomials rather than forests."""
    return any(not isinstance(basis, Forest) for basis, _ in combo.items())


def as_tensor(combo: GradedCombo) -> GradedCombo:
    """A Lie element over trees as a tensor element; tensors pass through."""
    return lie_to_tensor(combo) if is_lie_combo(combo) else combo


def as_tensor_series(series: BiSeries) -> BiSeries:
    """Coefficientwise as_tensor."""
    return series.map_coefficients(as_tensor)


def time_series(value: Any, order: int, key: tuple = (1, 0)) -> BiSeries:
    """
    The series value * t (or t^i s^j for another key) with a tensor coefficient.

    :param value: Tree, tree wire form, tensor or Lie element, or an
                  already built series (returned with the new order).
    :param order: Truncation order.
    :param key: Series key of the single coefficient.
    :return: The series.
    """
    if isinstance(value, BiSeries):
        return as_tensor_series(value).with_order(order)
    if isinstance(value, str):
        value = parse_tree(value)
    if isinstance(value, PlanarTree):
        value = letter(value)
    return BiSeries.monomial(as_tensor(value), key, order)


def series_exp(series: BiSeries, product: Product = "concat", order: int = None) -> BiSeries:
    """
    exp(X) = sum_k X^k / k! for the chosen product.

    :param series: Series with zero constant term.
    :param product: 'concat', 'gl' or a bilinear callable.
    :param order: Truncation order, defaults to the series order.
    :return: The exponential.
    :raises SeriesError: When the constant term is non-zero.
    """
    order = series.order if order is None else order
    if series.constant():
        raise SeriesError("Exponential requires a series with zero constant term")
    multiply = resolve_product(product)
    series = series.with_order(order)
    result = unit_series(order)
    power = unit_series(order)
    for k in range(1, order + 1):
        power = power.multiply(series, multiply, order) * Fraction(1, k)
        if not power:
            break
        result = result + power
    return result


def series_log(series: BiSeries, product: Product = "concat", order: int = None) -> BiSeries:
    """
    log(1 + X) = sum_k (-1)^(k+1) X^k / k for the chosen product.

    :param series: Series with constant term 1.
    :param product: 'concat', 'gl' or a bilinear callable.
    :param order: Truncation order, defaults to the series order.
    :return: The logarithm.
    :raises SeriesError: When the constant term is not the unit.
    """
    order = series.order if order is None else order
    if series.constant() != unit():
        raise SeriesError("Logarithm requires a series with constant term 1")
    multiply = resolve_product(product)
    rest = series.with_order(order) - unit_series(order)
    result = BiSeries({}, order)
    power = unit_series(order)
    for k in range(1, order + 1):
        power = power.multiply(rest, multiply, order)
        if not power:
            break
        sign = 1 if k % 2 else -1
        result = result + power * Fraction(sign, k)
    return result


def _lie_input(value: Any) -> GradedCombo:
    if isinstance(value, str):
        value = parse_tree(value)
    if isinstance(value, PlanarTree):
        return lie_letter(value)
    return value if is_lie_combo(value) else tensor_to_lie(value)


def bch(v: Any, w: Any, order: int) -> BiSeries:
    """
    Baker-Campbell-Hausdorff series log(exp(tv) exp(sw)) in the Lyndon basis.

    :param v: Tree, tree wire form or Lie element.
    :param w: Tree, tree wire form or Lie element.
    :param order: Total-degree truncation order.
    :return: Series with Lie coefficients under keys (i, j).
    """
    left = BiSeries.monomial(lie_to_tensor(_lie_input(v)), (1, 0), order)
    right = BiSeries.monomial(lie_to_tensor(_lie_input(w)), (0, 1), order)
    product = series_exp(left, concat).multiply(series_exp(right, concat), concat, order)
    return series_log(product, concat).map_coefficients(tensor_to_lie)
