#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Test suite for the beta map, its inverse, the framed BCH series and the
double exponential.
"""

import os
from fractions import Fraction
import pytest
from src.lib.services.algebra.beta import (
    beta, beta_apply, beta_inverse, double_exp, framed_bch)
from src.lib.services.algebra.framed import generator, parse_framed
from src.lib.services.algebra.kmap import OrderError
from src.lib.services.algebra.scalars import BiSeries


def test_beta_low_orders():
    """
    Test the first three coefficients of beta(ty).
    """
    series = beta("y", 3)
    assert series.coefficient(1) == generator("y")
    assert series.coefficient(2) == -parse_framed("T(y,y)") / 2
    expected = (parse_framed("T(y,T(y,y))") / 6 + parse_framed("T(T(y,y),y)") / 6
                + parse_framed("B(T(y,y),y)") / 12)
    assert series.coefficient(3) == expected


def test_beta_apply_generator():
    """
    Test that applying beta to tv gives the universal series in v.
    """
    series = beta_apply("v", 3)
    assert series.coefficient(1) == generator("v")
    assert series.coefficient(2) == -parse_framed("T(v,v)") / 2


def test_beta_inverse():
    """
    Test that the inverse undoes beta on a two-generator series.
    """
    order = 3
    series = (BiSeries.monomial(generator("v"), (1, 0), order)
              + BiSeries.monomial(parse_framed("T(w,v)"), (1, 1), order))
    assert beta_inverse(beta_apply(series, order), order) == series
    assert beta_apply(beta_inverse(series, order), order) == series


def test_beta_rejects_constant_term():
    """
    Test the constant term guards.
    """
    constant = BiSeries.monomial(generator("y"), (0, 0), 2)
    with pytest.raises(ValueError):
        beta_apply(constant, 2)
    with pytest.raises(ValueError):
        beta_inverse(constant, 2)


def test_framed_bch():
    """
    Test the framed BCH series of two generators.
    """
    order = 2
    left = BiSeries.monomial(generator("v"), (1, 0), order)
    right = BiSeries.monomial(generator("w"), (0, 1), order)
    series = framed_bch(left, right, order)
    assert series.coefficient(1, 0) == generator("v")
    assert series.coefficient(0, 1) == generator("w")
    assert series.coefficient(1, 1) == parse_framed("B(v,w)") * Fraction(1, 2)


def test_double_exp_without_second_factor():
    """
    Test that the double exponential reduces to tv when s = 0.
    """
    series = double_exp("v", "w", 3)
    assert series.substitute_s_zero() == BiSeries.monomial(generator("v"), (1, 0), 3)
    assert series.coefficient(0, 1) == generator("w")


@pytest.mark.parametrize("order", [0, 6])
def test_double_exp_order_guard(order):
    """
    Test the double exponential order range.
    """
    with pytest.raises(OrderError):
        double_exp("v", "w", order)


if __name__ == "__main__":
    current_file = os.path.abspath(__file__)
    pytest.main([current_file, '-vv'])
