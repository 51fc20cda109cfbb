#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Free D-algebra on ordered forests

Tensor elements are GradedCombo values over Forest basis elements. This
module implements the concatenation product, the extended triangle
product, the unshuffle coproduct, the Grossman-Larson product, both
antipodes and the L-hat operator.
"""

from __future__ import annotations
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Union
from src.lib.core.log import Logger
from src.lib.services.algebra.scalars import GradedCombo, format_terms, rational_to_json
from src.lib.services.algebra.trees import (
    Forest, PlanarTree, graft_left, parse_forest, parse_tree)


logger = Logger().get_logger()

TensorElement = GradedCombo

_UNIT_FOREST = Forest()


@dataclass(frozen=True)
class CoproductTerm:
    """One Sweedler pair U_(1) (x) U_(2) of an unshuffle coproduct."""
    left: TensorElement
    right: TensorElement


def unit() -> TensorElement:
    """The unit 1 (empty forest)."""
    return GradedCombo.basis(_UNIT_FOREST)


def letter(tree: Union[PlanarTree, str]) -> TensorElement:
    """
    Single-letter word.

    :param tree: Tree or tree wire form.
    :return: The tensor element of the one-tree forest.
    """
    if isinstance(tree, str):
        tree = parse_tree(tree)
    return GradedCombo.basis(Forest((tree,)))


def word(*trees: Union[PlanarTree, str]) -> TensorElement:
    """Word x1 x2 ... xn of trees (or their wire forms)."""
    resolved = [parse_tree(t) if isinstance(t, str) else t for t in trees]
    return GradedCombo.basis(Forest(resolved))


def from_text(text: str) -> TensorElement:
    """Tensor element of a forest wire form such as 'a.b[c]'."""
    return GradedCombo.basis(parse_forest(text))


def trees_to_letters(combo: GradedCombo) -> TensorElement:
    """Embed a combination of trees as a combination of one-letter words."""
    return combo.map_basis(lambda tree: Forest((tree,)))


def counit(element: TensorElement) -> int:
    """Coefficient of the unit."""
    return element.coefficient(_UNIT_FOREST)


def concat(left: TensorElement, right: TensorElement) -> TensorElement:
    """Concatenation product."""
    return left.bilinear(right, lambda f, g: GradedCombo.basis(f.concat(g)))


def _letter_action(tree: PlanarTree, forest: Forest) -> GradedCombo:
    # a letter acts on words as a derivation
    pairs = []
    trees = forest.trees
    for index, target in enumerate(trees):
        for grafted, coeff in graft_left(tree, target).items():
            pairs.append((Forest(trees[:index] + (grafted,) + trees[index + 1:]), coeff))
    return GradedCombo.from_pairs(pairs)


@lru_cache(maxsize=None)
def _triangle_forests(left: Forest, right: Forest) -> GradedCombo:
    if left.is_unit():
        return GradedCombo.basis(right)
    if right.is_unit():
        return GradedCombo.zero()
    head = left.trees[0]
    if len(left) == 1:
        return _letter_action(head, right)
    tail = left[1:]
    inner = _triangle_forests(tail, right)
    acted = inner.map_linear(lambda forest: _letter_action(head, forest))
    correction = _letter_action(head, tail).map_linear(
        lambda forest: _triangle_forests(forest, right))
    return acted - correction


def triangle(left: TensorElement, right: TensorElement) -> TensorElement:
    """
    Extended triangle product: x |> (VW) = (x |> V)W + V(x |> W),
    (xV) |> W = x |> (V |> W) - (x |> V) |> W, 1 |> V = V and
    U |> 1 = counit(U) 1.

    :param left: Acting element.
    :param right: Acted-on element.
    :return: left |> right.
    """
    return left.bilinear(right, _triangle_forests)


def unshuffle(element: TensorElement) -> List[CoproductTerm]:
    """
    Unshuffle coproduct as an explicit list of Sweedler pairs.

    :param element: Tensor element.
    :return: One term per (basis word, complementary subword pair).
    """
    terms = []
    for forest, coeff in element.terms():
        for left, right in _split(forest):
            terms.append(CoproductTerm(
                left=GradedCombo.basis(left, coeff), right=GradedCombo.basis(right)))
    return terms


@lru_cache(maxsize=None)
def _split(forest: Forest) -> tuple:
    size = len(forest)
    pairs = []
    for mask in range(1 << size):
        left = tuple(forest.trees[i] for i in range(size) if mask >> i & 1)
        right = tuple(forest.trees[i] for i in range(size) if not mask >> i & 1)
        pairs.append((Forest(left), Forest(right)))
    return tuple(pairs)


def coproduct(element: TensorElement) -> GradedCombo:
    """
    Unshuffle coproduct as a combination over (Forest, Forest) pairs.

    :param element: Tensor element.
    :return: Delta(element) in the tensor square.
    """
    return GradedCombo.from_pairs(
        (pair, coeff) for forest, coeff in element.items() for pair in _split(forest))


def tensor_square(left: TensorElement, right: TensorElement) -> GradedCombo:
    """left (x) right as a combination over pairs."""
    return GradedCombo.from_pairs(
        ((f, g), c1 * c2) for f, c1 in left.items() for g, c2 in right.items())


def square_product(left: GradedCombo, right: GradedCombo,
                   product: Callable[[TensorElement, TensorElement], TensorElement]
                   ) -> GradedCombo:
    """
    Componentwise product on the tensor square:
    (a (x) b)(c (x) d) = product(a, c) (x) product(b, d).
    """
    def pair(p, q):
        first = product(GradedCombo.basis(p[0]), GradedCombo.basis(q[0]))
        second = product(GradedCombo.basis(p[1]), GradedCombo.basis(q[1]))
        return tensor_square(first, second)
    return left.bilinear(right, pair)


def is_primitive(element: TensorElement) -> bool:
    """True when Delta(x) = x (x) 1 + 1 (x) x."""
    expected = tensor_square(element, unit()) + tensor_square(unit(), element)
    return coproduct(element) == expected


@lru_cache(maxsize=None)
def _gl_forests(left: Forest, right: Forest) -> GradedCombo:
    return GradedCombo.sum(
        (1, concat(GradedCombo.basis(first), _triangle_forests(second, right)))
        for first, second in _split(left))


def gl_product(left: TensorElement, right: TensorElement) -> TensorElement:
    """
    Grossman-Larson product U * V = U_(1) (U_(2) |> V).

    :param left: Left factor.
    :param right: Right factor.
    :return: left * right.
    """
    return left.bilinear(right, _gl_forests)


def commutator(left: TensorElement, right: TensorElement) -> TensorElement:
    """Concatenation commutator [U, V] = UV - VU."""
    return concat(left, right) - concat(right, left)


def gl_commutator(left: TensorElement, right: TensorElement) -> TensorElement:
    """Grossman-Larson commutator U * V - V * U."""
    return gl_product(left, right) - gl_product(right, left)


@lru_cache(maxsize=None)
def _gl_antipode_forest(forest: Forest) -> GradedCombo:
    if forest.is_unit():
        return unit()
    parts = []
    for first, second in _split(forest):
        if second.is_unit():
            continue
        parts.append((-1, gl_product(_gl_antipode_forest(first), GradedCombo.basis(second))))
    return GradedCombo.sum(parts)


def _concat_antipode_forest(forest: Forest) -> GradedCombo:
    sign = -1 if len(forest) % 2 else 1
    return GradedCombo.basis(Forest(tuple(reversed(forest.trees))), sign)


def antipode(element: TensorElement, which: str = "concat") -> TensorElement:
    """
    Antipode of the concatenation ('concat') or Grossman-Larson ('gl') Hopf algebra.

    :param element: Tensor element.
    :param which: 'concat' or 'gl'.
    :return: S(element).
    :raises ValueError: For an unknown Hopf structure.
    """
    if which == "concat":
        return element.map_linear(_concat_antipode_forest)
    if which == "gl":
        return element.map_linear(_gl_antipode_forest)
    raise ValueError(f"Unsupported antipode type: {which}")


def concat_via_gl(left: TensorElement, right: TensorElement) -> TensorElement:
    """
    Concatenation expressed through the GL structure:
    A . B = A_(1) * (S_*(A_(2)) |> B).

    :param left: A.
    :param right: B.
    :return: A . B computed without concatenating.
    """
    parts = []
    for forest, coeff in left.items():
        for first, second in _split(forest):
            acted = triangle(_gl_antipode_forest(second), right)
            parts.append((coeff, gl_product(GradedCombo.basis(first), acted)))
    return GradedCombo.sum(parts)


@lru_cache(maxsize=None)
def _hat_l_forests(acting: Forest, target: Forest) -> GradedCombo:
    if acting.is_unit():
        return GradedCombo.basis(target)
    head = acting.trees[0]
    tail = acting[1:]
    inner = _hat_l_forests(tail, target)
    result = inner.map_linear(lambda forest: _letter_action(head, forest))
    corrections = []
    for index, tree in enumerate(tail.trees):
        for grafted, coeff in graft_left(head, tree).items():
            replaced = Forest(tail.trees[:index] + (grafted,) + tail.trees[index + 1:])
            corrections.append((-coeff, _hat_l_forests(replaced, target)))
    return result + GradedCombo.sum(corrections)


def hat_l(acting: TensorElement, target: TensorElement) -> TensorElement:
    """
    The L-hat operator: L_(x1...xn) = L_x1 L_(x2...xn) - sum_i L_(x2...(x1|>xi)...xn),
    built from single-letter actions only.

    :param acting: Word (or combination) defining the operator.
    :param target: Element acted on.
    :return: L-hat_acting(target).
    """
    return acting.bilinear(target, _hat_l_forests)


def tensor_to_json(element: TensorElement) -> List[Dict]:
    """
    JSON term list [{'coeff': {...}, 'word': [tree, ...]}, ...].

    :param element: Tensor element.
    :return: List of JSON-ready terms.
    """
    return [
        {"coeff": rational_to_json(coeff), "word": [tree.encode() for tree in forest]}
        for forest, coeff in element.terms()]


def render_tensor(element: TensorElement,
                  letter_render: Callable[[PlanarTree], str] = None) -> str:
    """
    Text form of a tensor element, words joined by '.'.

    :param element: Tensor element.
    :param letter_render: Optional rendering of a single tree.
    :return: Text such as '1/2 y.y + y[y]'.
    """
    if not element:
        return "0"
    letter_render = letter_render or (lambda tree: tree.encode())
    return format_terms(
        (coeff, ".".join(letter_render(tree) for tree in forest) if forest.trees else "1")
        for forest, coeff in element.terms())

