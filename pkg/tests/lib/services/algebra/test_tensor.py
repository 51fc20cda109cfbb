#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Test suite for the tensor algebra over trees: the triangle product, the
unshuffle coproduct, the Grossman-Larson product and the antipodes.
"""

import os
from itertools import product
import pytest
from src.lib.services.algebra.scalars import GradedCombo
from src.lib.services.algebra.tensor import (
    antipode, concat, concat_via_gl, coproduct, counit, from_text, gl_product, hat_l,
    is_primitive, letter, render_tensor, tensor_square, tensor_to_json, triangle, unit,
    unshuffle, word)
from src.lib.services.algebra.trees import enumerate_forests


def tensor(*pairs):
    """Tensor element from (coefficient, forest text) pairs."""
    return GradedCombo.sum((coeff, from_text(text)) for coeff, text in pairs)


def words(max_vertices, alphabet="ab"):
    """Basis words as tensor elements."""
    return [GradedCombo.basis(forest) for forest in enumerate_forests(max_vertices, alphabet)]


def test_letter_and_word():
    """
    Test the constructors and the counit.
    """
    assert letter("a") == from_text("a")
    assert word("a", "b[c]") == from_text("a.b[c]")
    assert counit(unit()) == 1
    assert counit(word("a", "b")) == 0


def test_triangle_letters():
    """
    Test the letter actions.
    """
    assert triangle(letter("y"), letter("y")) == from_text("y[y]")
    assert triangle(letter("a"), word("b", "c")) == tensor((1, "b[a].c"), (1, "b.c[a]"))


def test_triangle_unit_rules():
    """
    Test 1 |> V = V and U |> 1 = counit(U).
    """
    element = tensor((2, "a.b"), (1, "c"))
    assert triangle(unit(), element) == element
    assert triangle(word("a", "b"), unit()) == GradedCombo.zero()
    assert triangle(unit(), unit()) == unit()


def test_triangle_word_recursion():
    """
    Test (xV) |> W = x |> (V |> W) - (x |> V) |> W on a two-letter word.
    """
    x, v, w = letter("a"), letter("b"), letter("c")
    expected = triangle(x, triangle(v, w)) - triangle(triangle(x, v), w)
    assert triangle(concat(x, v), w) == expected
    assert expected == tensor((1, "c[a,b]"))


def test_coproduct_two_letters():
    """
    Test the unshuffle coproduct of a two-letter word.
    """
    element = word("a", "b")
    expected = (tensor_square(element, unit()) + tensor_square(unit(), element)
                + tensor_square(letter("a"), letter("b"))
                + tensor_square(letter("b"), letter("a")))
    assert coproduct(element) == expected
    assert len(unshuffle(element)) == 4


def test_primitives():
    """
    Test that letters and commutators are primitive and words are not.
    """
    a, b = letter("a"), letter("b[a]")
    assert is_primitive(a)
    assert is_primitive(concat(a, b) - concat(b, a))
    assert not is_primitive(concat(a, b))


def test_gl_product_letters():
    """
    Test a * b = a.b + b[a].
    """
    assert gl_product(letter("a"), letter("b")) == tensor((1, "a.b"), (1, "b[a]"))
    assert gl_product(unit(), letter("a")) == letter("a")


def test_gl_product_associative():
    """
    Test associativity of the Grossman-Larson product on small words.
    """
    basis = words(2)
    for u, v, w in product(basis, repeat=3):
        if u.degree() + v.degree() + w.degree() > 4:
            continue
        assert gl_product(gl_product(u, v), w) == gl_product(u, gl_product(v, w))


def test_concat_via_gl():
    """
    Test that concatenation can be recovered from the Grossman-Larson structure.
    """
    basis = words(2)
    for u, v in product(basis, repeat=2):
        assert concat_via_gl(u, v) == concat(u, v)


def test_antipode_values():
    """
    Test both antipodes on words of length one and two.
    """
    assert antipode(letter("x")) == -letter("x")
    assert antipode(word("a", "b")) == from_text("b.a")
    assert antipode(word("a", "b"), "gl") == tensor((1, "b.a"), (1, "b[a]"), (1, "a[b]"))
    assert antipode(letter("x"), "gl") == -letter("x")


def test_antipode_unknown():
    """
    Test that an unknown Hopf structure is rejected.
    """
    with pytest.raises(ValueError):
        antipode(letter("a"), "shuffle")


def test_hat_l_matches_triangle():
    """
    Test that the L-hat operator built from letter actions is the triangle action.
    """
    basis = words(3)
    for u, v in product(basis, repeat=2):
        if u.degree() + v.degree() > 4:
            continue
        assert hat_l(u, v) == triangle(u, v)


def test_render_and_json():
    """
    Test the text and JSON forms of a tensor element.
    """
    element = tensor((-1, "y[y]"), (1, "y.y"), (1, "1"))
    assert render_tensor(element) == "1 - y[y] + y.y"
    assert tensor_to_json(from_text("a.b[c]")) == [
        {"coeff": {"num": "1", "den": "1"}, "word": ["a", "b[c]"]}]
    assert render_tensor(GradedCombo.zero()) == "0"


if __name__ == "__main__":
    current_file = os.path.abspath(__file__)
    pytest.main([current_file, '-vv'])
