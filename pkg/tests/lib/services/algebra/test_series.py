#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Test suite for series exponentials, logarithms and the BCH series.
"""

import os
from fractions import Fraction
import pytest
from src.lib.services.algebra.lie import lie_bracket, lie_letter
from src.lib.services.algebra.scalars import BiSeries, GradedCombo
from src.lib.services.algebra.series import (
    SeriesError, bch, resolve_product, series_exp, series_log, time_series, unit_series)
from src.lib.services.algebra.tensor import concat, from_text, gl_product, letter, unit
from src.lib.services.algebra.trees import vertex


def tensor(*pairs):
    """Tensor element from (coefficient, forest text) pairs."""
    return GradedCombo.sum((coeff, from_text(text)) for coeff, text in pairs)


def test_resolve_product():
    """
    Test product lookup by name and pass-through of callables.
    """
    assert resolve_product("concat") is concat
    assert resolve_product("gl") is gl_product
    assert resolve_product(concat) is concat
    with pytest.raises(ValueError):
        resolve_product("shuffle")


def test_time_series_inputs():
    """
    Test that labels, trees and tensors all give the series tY.
    """
    expected = BiSeries.monomial(letter("y"), (1, 0), 3)
    assert time_series("y", 3) == expected
    assert time_series(vertex("y"), 3) == expected
    assert time_series(letter("y"), 3) == expected
    assert time_series(lie_letter(vertex("y")), 3) == expected


def test_exp_concat_and_gl():
    """
    Test the second order terms of both exponentials.
    """
    series = time_series("y", 2)
    assert series_exp(series, "concat").coefficient(2) == tensor((Fraction(1, 2), "y.y"))
    assert series_exp(series, "gl").coefficient(2) == tensor(
        (Fraction(1, 2), "y.y"), (Fraction(1, 2), "y[y]"))
    assert series_exp(series).constant() == unit()


def test_log_inverts_exp():
    """
    Test log(exp(X)) = X for both products.
    """
    series = time_series("y", 4) + BiSeries.monomial(letter("y[y]"), (2, 0), 4)
    for name in ("concat", "gl"):
        assert series_log(series_exp(series, name), name) == series


def test_exp_log_guards():
    """
    Test the constant term requirements.
    """
    with pytest.raises(SeriesError):
        series_exp(unit_series(2))
    with pytest.raises(SeriesError):
        series_log(time_series("y", 2))


def test_bch_low_orders():
    """
    Test the BCH coefficients up to total degree three.
    """
    v, w = lie_letter(vertex("v")), lie_letter(vertex("w"))
    vw = lie_bracket(v, w)
    series = bch("v", "w", 3)
    assert series.coefficient(1, 0) == v
    assert series.coefficient(0, 1) == w
    assert series.coefficient(1, 1) == vw / 2
    assert series.coefficient(1, 2) == lie_bracket(vw, w) / 12
    assert series.coefficient(2, 1) == -lie_bracket(vw, v) / 12
    assert not series.coefficient(2, 0)


if __name__ == "__main__":
    current_file = os.path.abspath(__file__)
    pytest.main([current_file, '-vv'])
