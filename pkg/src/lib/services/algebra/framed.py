#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Free framed Lie algebra

Normal forms for the free algebra carrying an unconstrained product
T(u,v) (the triangle) and an independent Lie bracket B(u,v) (the bold
bracket). The Lie layer is a Lyndon basis over triangle atoms, an atom
being a generator or T(h1,h2) with h1, h2 themselves Lyndon basis
elements. Atoms are ordered by degree, then by the keys of their parts.

Elements without brackets form the free magma on the generators; this
module also maps them to planar trees in both pictures (left grafting
and right Butcher product) and back, and implements the projection p
from Lie elements over trees onto the framed algebra.
"""

from __future__ import annotations
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Mapping, Set, Union
import pyparsing as pp
from src.lib.core.log import Logger
from src.lib.services.algebra.lie import LieMonomial, lie_bracket, tensor_to_lie
from src.lib.services.algebra.scalars import (
    BiSeries, GradedCombo, format_terms, rational_to_json)
from src.lib.services.algebra.trees import (
    LABEL_PATTERN, Forest, PlanarTree, butcher_right, graft_left_combo, psi_inverse, vertex)


logger = Logger().get_logger()

FramedElement = GradedCombo


class FramedSyntaxError(ValueError):
    """Malformed framed expression."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class FramedAtom:
    """
    Interned triangle atom: a generator, or T(left, right) with both sides
    Lyndon basis monomials over atoms.
    """

    __slots__ = ("label", "left", "right", "degree", "sort_key", "_text", "__weakref__")
    _table: Dict[tuple, FramedAtom] = {}
    _lock = threading.Lock()

    def __new__(cls, label: str = None, left: LieMonomial = None, right: LieMonomial = None):
        key = (label,) if label is not None else (left, right)
        atom = cls._table.get(key)
        if atom is not None:
            return atom
        if label is None and (left is None or right is None):
            raise ValueError("A triangle atom needs both a left and a right monomial")
        with cls._lock:
            atom = cls._table.get(key)
            if atom is None:
                atom = object.__new__(cls)
                atom.label = label
                atom.left = left
                atom.right = right
                if label is not None:
                    atom.degree = 1
                    atom.sort_key = (1, 0, label)
                else:
                    atom.degree = left.degree + right.degree
                    atom.sort_key = (atom.degree, 1, left.sort_key, right.sort_key)
                atom._text = None
                cls._table[key] = atom
        return atom

    def __reduce__(self):
        return (FramedAtom, (self.label, self.left, self.right))

    @property
    def is_generator(self) -> bool:
        """True for generators."""
        return self.label is not None

    def encode(self) -> str:
        """Wire form: the label or 'T(u,v)'."""
        if self._text is None:
            if self.is_generator:
                self._text = self.label
            else:
                self._text = f"T({encode_monomial(self.left)},{encode_monomial(self.right)})"
        return self._text

    def __repr__(self) -> str:
        return f"FramedAtom({self.encode()})"

    def __str__(self) -> str:
        return self.encode()


def encode_monomial(monomial: LieMonomial) -> str:
    """Wire form of a framed monomial with 'B(u,v)' for the bold bracket."""
    return monomial.render(lambda atom: atom.encode(), ("B(", ")"))


def _text_atom(atom: FramedAtom, nested: bool) -> str:
    if atom.is_generator:
        return atom.label
    body = f"{_text_monomial(atom.left, True)} |> {_text_monomial(atom.right, True)}"
    return f"({body})" if nested else body


def _text_monomial(monomial: LieMonomial, nested: bool) -> str:
    if monomial.is_letter:
        return _text_atom(monomial.letters[0], nested)
    left, right = monomial.factors
    return f"[[{_text_monomial(left, False)},{_text_monomial(right, False)}]]"


def render_monomial(monomial: LieMonomial) -> str:
    """Text form such as 'y |> (y |> y)' or '[[y |> y,y]]'."""
    return _text_monomial(monomial, False)


def render_framed(element: FramedElement) -> str:
    """Text form of a framed element."""
    return format_terms((coeff, render_monomial(m)) for m, coeff in element.terms())


def framed_to_json(element: FramedElement) -> list:
    """JSON term list [{'coeff': {...}, 'framed': 'T(y,y)'}, ...]."""
    return [
        {"coeff": rational_to_json(coeff), "framed": encode_monomial(monomial)}
        for monomial, coeff in element.terms()]


def generator(label: str) -> FramedElement:
    """Framed element of a generator."""
    return GradedCombo.basis(LieMonomial((FramedAtom(label),)))


def _atom_element(atom: FramedAtom) -> FramedElement:
    return GradedCombo.basis(LieMonomial((atom,)))


def triangle(left: FramedElement, right: FramedElement) -> FramedElement:
    """
    Free magmatic product: each pair of monomials forms a new atom.

    :param left: Left argument.
    :param right: Right argument.
    :return: left |> right.
    """
    return left.bilinear(
        right, lambda u, v: _atom_element(FramedAtom(left=u, right=v)))


def bold_bracket(left: FramedElement, right: FramedElement) -> FramedElement:
    """Bold Lie bracket in Lyndon normal form over atoms."""
    return lie_bracket(left, right)


@dataclass(frozen=True)
class FramedExpr:
    """Unnormalized framed expression node; op is 'T' or 'B'."""
    op: str
    left: Any
    right: Any


def framed_normalize(expr: Any) -> FramedElement:
    """
    Normal form of a framed expression.

    Accepts generators (str), FramedExpr nodes, tuples ('T'|'B', u, v),
    Lie monomials and already normalized elements (returned unchanged).

    :param expr: Expression.
    :return: Normalized framed element.
    :raises ValueError: For unknown node types.
    """
    if isinstance(expr, GradedCombo):
        return expr
    if isinstance(expr, str):
        return generator(expr)
    if isinstance(expr, LieMonomial):
        return GradedCombo.basis(expr)
    if isinstance(expr, tuple) and len(expr) == 3:
        expr = FramedExpr(*expr)
    if isinstance(expr, FramedExpr):
        left = framed_normalize(expr.left)
        right = framed_normalize(expr.right)
        if expr.op == "T":
            return triangle(left, right)
        if expr.op == "B":
            return bold_bracket(left, right)
        raise ValueError(f"Unsupported framed operator: {expr.op}")
    raise ValueError(f"Unsupported framed expression: {expr!r}")


def _build_grammar() -> pp.ParserElement:
    expr = pp.Forward()
    label = pp.Regex(LABEL_PATTERN)
    args = pp.Suppress("(") + expr + pp.Suppress(",") + expr + pp.Suppress(")")
    tri = pp.Suppress(pp.Literal("T")) + args
    bra = pp.Suppress(pp.Literal("B")) + args
    tri.set_parse_action(lambda tokens: FramedExpr("T", tokens[0], tokens[1]))
    bra.set_parse_action(lambda tokens: FramedExpr("B", tokens[0], tokens[1]))
    expr <<= tri | bra | label
    return expr


_FRAMED_GRAMMAR = _build_grammar()


def parse_framed(text: str) -> FramedElement:
    """
    Parse and normalize a framed expression such as 'B(T(y,y),y)'.

    :param text: Expression in wire form.
    :return: Normalized framed element.
    :raises FramedSyntaxError: On malformed input.
    """
    try:
        expr = _FRAMED_GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseException as exc:
        raise FramedSyntaxError(
            f"Malformed framed expression {text!r} at position {exc.loc}: {exc.msg}",
            exc.loc) from exc
    return framed_normalize(expr)


def generator_labels(element: FramedElement) -> Set[str]:
    """Generators occurring in an element."""
    labels: Set[str] = set()

    def visit(atom: FramedAtom):
        if atom.is_generator:
            labels.add(atom.label)
        else:
            for side in (atom.left, atom.right):
                for inner in side.letters:
                    visit(inner)

    for monomial, _ in element.items():
        for atom in monomial.letters:
            visit(atom)
    return labels


def is_magmatic(element: FramedElement) -> bool:
    """True when no bold bracket occurs anywhere."""
    def atom_ok(atom: FramedAtom) -> bool:
        if atom.is_generator:
            return True
        return (atom.left.is_letter and atom.right.is_letter
                and atom_ok(atom.left.letters[0]) and atom_ok(atom.right.letters[0]))
    return all(m.is_letter and atom_ok(m.letters[0]) for m, _ in element.items())


def drop_triangles(element: FramedElement) -> FramedElement:
    """Quotient setting the triangle to zero: keep bracket words of generators."""
    return element.filter(lambda m: all(atom.is_generator for atom in m.letters))


@lru_cache(maxsize=None)
def _atom_trees(atom: FramedAtom) -> GradedCombo:
    if atom.is_generator:
        return GradedCombo.basis(vertex(atom.label))
    if not (atom.left.is_letter and atom.right.is_letter):
        raise ValueError(f"Bold bracket inside a magmatic element: {atom.encode()}")
    return graft_left_combo(
        _atom_trees(atom.left.letters[0]), _atom_trees(atom.right.letters[0]))


def magma_to_trees(element: FramedElement) -> GradedCombo:
    """
    Magmatic element as planar trees, the triangle acting as left grafting.

    :param element: Framed element without bold brackets.
    :return: Combination of planar trees.
    :raises ValueError: When a bold bracket occurs.
    """
    def monomial_trees(monomial: LieMonomial) -> GradedCombo:
        if not monomial.is_letter:
            raise ValueError(f"Bold bracket in a magmatic element: {encode_monomial(monomial)}")
        return _atom_trees(monomial.letters[0])
    return element.map_linear(monomial_trees)


@lru_cache(maxsize=None)
def _kappa_left_inverse(tree: PlanarTree) -> FramedAtom:
    if not tree.children:
        return FramedAtom(tree.label)
    first = _kappa_left_inverse(tree.children[0])
    rest = _kappa_left_inverse(PlanarTree(tree.label, tree.children[1:]))
    return FramedAtom(left=LieMonomial((first,)), right=LieMonomial((rest,)))


@lru_cache(maxsize=None)
def trees_to_magma(tree: PlanarTree) -> FramedElement:
    """
    Inverse of magma_to_trees on a single tree.

    :param tree: Planar tree.
    :return: Magmatic framed element.
    """
    return psi_inverse(tree).map_linear(lambda t: _atom_element(_kappa_left_inverse(t)))


@lru_cache(maxsize=None)
def _atom_planar(atom: FramedAtom) -> PlanarTree:
    if atom.is_generator:
        return vertex(atom.label)
    return butcher_right(_atom_planar(atom.left.letters[0]), _atom_planar(atom.right.letters[0]))


def magma_to_planar(element: FramedElement) -> GradedCombo:
    """
    Magmatic element drawn as planar trees with the triangle as the right
    Butcher product (each monomial is one tree).

    :param element: Framed element without bold brackets.
    :return: Combination of planar trees.
    """
    if not is_magmatic(element):
        raise ValueError("Bold bracket in a magmatic element")
    return element.map_basis(lambda m: _atom_planar(m.letters[0]))


def render_tree_magma(tree: PlanarTree) -> str:
    """A tree letter rendered as a magmatic expression in the generators."""
    image = trees_to_magma(tree)
    if len(image) == 1:
        ((monomial, coeff),) = image.items()
        if coeff == 1:
            return render_monomial(monomial)
    return f"({render_framed(image)})"


@lru_cache(maxsize=None)
def _project_monomial(monomial: LieMonomial) -> FramedElement:
    if monomial.is_letter:
        return trees_to_magma(monomial.letters[0])
    left, right = monomial.factors
    return bold_bracket(_project_monomial(left), _project_monomial(right))


def project_p(element: GradedCombo) -> FramedElement:
    """
    Projection p: commutators become bold brackets, tree letters become
    their magmatic monomials.

    :param element: Lie element over trees, or a tensor element.
    :return: Framed element.
    :raises NotALieElementError: For non-primitive tensor input.
    """
    if any(isinstance(basis, Forest) for basis, _ in element.items()):
        element = tensor_to_lie(element)
    return element.map_linear(_project_monomial)


@lru_cache(maxsize=None)
def _delta_atom(label: str, atom: FramedAtom) -> FramedElement:
    if atom.is_generator:
        return triangle(generator(label), _atom_element(atom))
    left = GradedCombo.basis(atom.left)
    right = GradedCombo.basis(atom.right)
    return (triangle(_delta_monomial(label, atom.left), right)
            + triangle(left, _delta_monomial(label, atom.right)))


@lru_cache(maxsize=None)
def _delta_monomial(label: str, monomial: LieMonomial) -> FramedElement:
    if monomial.is_letter:
        return _delta_atom(label, monomial.letters[0])
    left, right = monomial.factors
    return (bold_bracket(_delta_monomial(label, left), GradedCombo.basis(right))
            + bold_bracket(GradedCombo.basis(left), _delta_monomial(label, right)))


def delta(label: str, element: FramedElement) -> FramedElement:
    """
    The derivation with delta(g) = label |> g on every generator g,
    extended as a derivation of both products.

    :param label: Acting generator.
    :param element: Framed element.
    :return: delta(element).
    """
    return element.map_linear(lambda m: _delta_monomial(label, m))


def framed_substitute(element: FramedElement, assignment: Mapping[str, BiSeries],
                      order: int) -> BiSeries:
    """
    Substitute series for generators, evaluating both products on series.

    :param element: Framed element (polynomial in the generators).
    :param assignment: Generator label -> framed series without constant term.
    :param order: Truncation order.
    :return: The resulting series.
    :raises ValueError: For an unassigned generator.
    """
    cache: Dict[Union[LieMonomial, FramedAtom], BiSeries] = {}

    def atom_value(atom: FramedAtom) -> BiSeries:
        if atom in cache:
            return cache[atom]
        if atom.is_generator:
            if atom.label not in assignment:
                raise ValueError(f"Unassigned generator: {atom.label}")
            value = assignment[atom.label].with_order(order)
        else:
            value = monomial_value(atom.left).multiply(
                monomial_value(atom.right), triangle, order)
        cache[atom] = value
        return value

    def monomial_value(monomial: LieMonomial) -> BiSeries:
        if monomial in cache:
            return cache[monomial]
        if monomial.is_letter:
            value = atom_value(monomial.letters[0])
        else:
            left, right = monomial.factors
            value = monomial_value(left).multiply(monomial_value(right), bold_bracket, order)
        cache[monomial] = value
        return value

    result = BiSeries({}, order)
    for monomial, coeff in element.terms():
        result = result + monomial_value(monomial) * coeff
    return result
