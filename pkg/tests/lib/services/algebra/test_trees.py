#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Test suite for planar trees, forests, grafting and the Psi isomorphism.
"""

import os
import pytest
from src.lib.services.algebra.scalars import GradedCombo
from src.lib.services.algebra.trees import (
    Forest, PlanarTree, TreeSyntaxError, butcher_left, decode, enumerate_forests,
    enumerate_trees, graft_left, multi_graft, parse_forest, parse_tree, psi_inverse,
    psi_iso, vertex)


def combo(*texts):
    """Sum of trees with coefficient one."""
    return GradedCombo.from_pairs((parse_tree(text), 1) for text in texts)


def test_trees_are_interned():
    """
    Test that equal trees are the same object.
    """
    assert parse_tree("c[a,b]") is PlanarTree("c", (vertex("a"), vertex("b")))
    assert parse_tree("c[a,b]") is not parse_tree("c[b,a]")


@pytest.mark.parametrize("text", ["a", "c[a,b]", "e[c,d[b[a]]]", "x1[y_2[z]]"])
def test_tree_wire_form(text):
    """
    Test that parsing and encoding agree on canonical strings.
    """
    assert parse_tree(text).encode() == text


@pytest.mark.parametrize("text", ["", "a[", "a[]", "[a]", "a[b,]", "1a", "a.b"])
def test_parse_tree_rejects_malformed(text):
    """
    Test that malformed trees raise a syntax error with a position.
    """
    with pytest.raises(TreeSyntaxError) as exc:
        parse_tree(text)
    assert exc.value.position >= 0


def test_invalid_label():
    """
    Test that constructing a tree with an invalid label fails.
    """
    with pytest.raises(ValueError):
        PlanarTree("1")


def test_forest_parsing():
    """
    Test forests, the unit and the tree/forest decoder.
    """
    forest = parse_forest("a.b[c]")
    assert [tree.encode() for tree in forest] == ["a", "b[c]"]
    assert forest.degree == 3
    assert parse_forest("1").is_unit()
    assert Forest().encode() == "1"
    assert isinstance(decode("a[b]"), PlanarTree)
    assert isinstance(decode("a.b"), Forest)


def test_tree_attributes():
    """
    Test degree, vertex paths and depth sum.
    """
    tree = parse_tree("c[a,b[d]]")
    assert tree.degree == 4
    assert list(tree.vertices()) == [(), (0,), (1,), (1, 0)]
    assert tree.depth_sum() == 4


def test_graft_left_small():
    """
    Test the products of single vertices.
    """
    y = vertex("y")
    assert graft_left(y, y) == combo("y[y]")
    assert graft_left(y, parse_tree("y[y]")) == combo("y[y,y]", "y[y[y]]")


def test_graft_left_example():
    """
    Test a product with three receiving vertices.
    """
    result = graft_left(parse_tree("b[a]"), parse_tree("e[c,d]"))
    assert result == combo("e[b[a],c,d]", "e[c[b[a]],d]", "e[c,d[b[a]]]")


def test_graft_left_term_count():
    """
    Test that grafting produces one term per receiving vertex.
    """
    for sigma in enumerate_trees(2, "ab"):
        for tau in enumerate_trees(3, "ab"):
            assert graft_left(sigma, tau).coefficient_mass() == tau.degree


def test_butcher_left():
    """
    Test the leftmost root attachment.
    """
    assert butcher_left(vertex("a"), parse_tree("b[c]")) is parse_tree("b[a,c]")


def test_multi_graft():
    """
    Test simultaneous grafting of a forest.
    """
    assert multi_graft(parse_forest("a"), parse_tree("b[c]")) == combo("b[a,c]", "b[c[a]]")
    assert multi_graft(Forest(), parse_tree("b")) == combo("b")
    two = multi_graft(parse_forest("a.b"), parse_tree("c"))
    assert two == combo("c[a,b]")


def test_multi_graft_single_tree_is_graft():
    """
    Test that a one-tree forest grafts like left grafting.
    """
    for sigma in enumerate_trees(2, "ab"):
        for tau in enumerate_trees(3, "ab"):
            assert multi_graft(Forest((sigma,)), tau) == graft_left(sigma, tau)


def test_psi_identity_on_vertices():
    """
    Test that Psi fixes single vertices and is triangular.
    """
    assert psi_iso(vertex("a")) == combo("a")
    image = psi_iso(parse_tree("c[a,b]"))
    assert image.coefficient(parse_tree("c[a,b]")) == 1


def test_psi_inverse():
    """
    Test that Psi inverse undoes Psi.
    """
    for tau in enumerate_trees(4, "ab"):
        assert psi_iso(tau).map_linear(psi_inverse) == GradedCombo.basis(tau)


@pytest.mark.parametrize("size,count", [(1, 2), (2, 6), (3, 22)])
def test_enumerate_trees_counts(size, count):
    """
    Test the number of planar trees with two decorations.
    """
    assert len(enumerate_trees(size, "ab")) == count


def test_enumerate_forests():
    """
    Test forest enumeration, the unit and canonical order.
    """
    forests = enumerate_forests(2, "a", include_unit=True)
    assert [forest.encode() for forest in forests] == ["1", "a", "a[a]", "a.a"]
    assert len(enumerate_forests(2, "a")) == 3


if __name__ == "__main__":
    current_file = os.path.abspath(__file__)
    pytest.main([current_file, '-vv'])
