#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Test suite for the exact scalars, graded combinations and truncated
two-variable series.
"""

import os
import random
from fractions import Fraction
from math import comb
import pytest
from src.lib.services.algebra.scalars import (
    BiSeries, GradedCombo, bernoulli, bernoulli_weight, combo_linear, format_terms,
    rational_from_json, rational_to_json)
from src.lib.services.algebra.trees import enumerate_trees, parse_tree


@pytest.mark.parametrize("n,expected", [
    (0, Fraction(1)),
    (1, Fraction(1, 2)),
    (2, Fraction(1, 6)),
    (3, Fraction(0)),
    (4, Fraction(-1, 30)),
    (6, Fraction(1, 42)),
])
def test_bernoulli_values(n, expected):
    """
    Test the Bernoulli numbers with the B_1 = +1/2 convention.
    """
    assert bernoulli(n) == expected


def test_bernoulli_recursion():
    """
    Test the defining recursion with the classical sign of B_1.
    """
    for n in range(1, 13):
        classical = [bernoulli(k) * (-1 if k == 1 else 1) for k in range(n + 1)]
        assert sum(comb(n + 1, k) * classical[k] for k in range(n + 1)) == 0
        if n > 1 and n % 2:
            assert bernoulli(n) == 0


def test_bernoulli_rejects_negative():
    """
    Test that negative indices are rejected.
    """
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_bernoulli_weight():
    """
    Test the Magnus weights B_m / m!.
    """
    assert bernoulli_weight(1) == Fraction(1, 2)
    assert bernoulli_weight(2) == Fraction(1, 12)
    assert bernoulli_weight(3) == 0


def test_combo_linear_examples():
    """
    Test cancellation, merging and disjoint bases.
    """
    x, y = GradedCombo.basis(parse_tree("a")), GradedCombo.basis(parse_tree("b"))
    assert not combo_linear([(1, x), (-1, x)])
    assert combo_linear([(2, x), (3, x)]) == x * 5
    mixed = combo_linear([(Fraction(1, 2), x), (Fraction(1, 3), y)])
    assert mixed.coefficient(parse_tree("a")) == Fraction(1, 2)
    assert mixed.coefficient(parse_tree("b")) == Fraction(1, 3)


def test_combo_addition_laws():
    """
    Test associativity and commutativity of addition on random combinations.
    """
    rng = random.Random(7)
    trees = enumerate_trees(4, "ab")

    def sample():
        return GradedCombo.from_pairs(
            (rng.choice(trees), Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
            for _ in range(6))

    for _ in range(30):
        u, v, w = sample(), sample(), sample()
        assert (u + v) + w == u + (v + w)
        assert u + v == v + u


def test_combo_degree_and_terms():
    """
    Test the degree, the canonical order of terms and that zero is stored as nothing.
    """
    combo = GradedCombo.from_pairs([(parse_tree("a[b]"), 2), (parse_tree("a"), 1),
                                    (parse_tree("b"), 0)])
    assert combo.degree() == 2
    assert [tree.encode() for tree, _ in combo.terms()] == ["a", "a[b]"]
    assert GradedCombo.zero().degree() == -1
    assert len(combo) == 2


def test_rational_json():
    """
    Test the decimal string serialization of rationals.
    """
    value = Fraction(-10 ** 30, 7)
    data = rational_to_json(value)
    assert data == {"num": str(-10 ** 30), "den": "7"}
    assert rational_from_json(data) == value


def test_format_terms():
    """
    Test the text form of a combination.
    """
    assert format_terms([(1, "a"), (Fraction(-1, 2), "b"), (2, "c")]) == "a - 1/2 b + 2 c"
    assert format_terms([(-1, "a")]) == "-a"
    assert format_terms([]) == "0"


def test_series_truncation_and_product():
    """
    Test that keys beyond the order are dropped and that products truncate.
    """
    x = GradedCombo.basis(parse_tree("a"))
    series = BiSeries({(1, 0): x, (0, 1): x, (3, 0): x}, 2)
    assert series.keys() == [(1, 0), (0, 1)]
    square = series.multiply(series, lambda p, q: p * 1, 2)
    assert square.coefficient(1, 1) == x * 2
    assert square.coefficient(2, 0) == x
    assert not square.coefficient(3, 0)
    lowered = series.with_order(1)
    assert lowered.order == 1
    assert lowered.keys() == [(1, 0), (0, 1)]
    assert series.total_degree_part(1).with_order(0).keys() == []
    assert not square.with_order(1).coefficient(1, 1)


def test_series_calculus():
    """
    Test formal derivative, integral and the s = 0 restriction.
    """
    x = GradedCombo.basis(parse_tree("a"))
    series = BiSeries({(2, 0): x, (1, 1): x}, 3)
    assert series.derivative_t().coefficient(1, 0) == x * 2
    assert series.integrate_t().coefficient(3, 0) == x / 3
    assert series.substitute_s_zero().keys() == [(2, 0)]


def test_series_rejects_negative_order():
    """
    Test the order guard.
    """
    with pytest.raises(ValueError):
        BiSeries({}, -1)


if __name__ == "__main__":
    current_file = os.path.abspath(__file__)
    pytest.main([current_file, '-vv'])
