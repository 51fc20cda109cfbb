#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Planar Trees

Decorated planar rooted trees and ordered forests, their wire grammar
and the tree products:

- right and left Butcher products (graft a tree as the rightmost or
  leftmost child of the root),
- left grafting, the free magmatic product used throughout the engine,
- multi-grafting of a forest onto a tree,
- the isomorphism Psi between the left Butcher and the left grafting
  magmas, together with its inverse.

Trees are interned: building the same tree twice returns the same object,
so equality is identity and hashing is cheap.
"""

from __future__ import annotations
import itertools
import re
import threading
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple, Union
import pyparsing as pp
from src.lib.core.log import Logger
from src.lib.services.algebra.scalars import GradedCombo


logger = Logger().get_logger()

LABEL_PATTERN = r"[A-Za-z][A-Za-z0-9_]*"
_LABEL_RE = re.compile(LABEL_PATTERN + r"\Z")


class TreeSyntaxError(ValueError):
    """Malformed tree or forest string."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class PlanarTree:
    """
    Interned decorated planar rooted tree.
    """

    __slots__ = ("label", "children", "degree", "sort_key", "_text", "__weakref__")
    _table: Dict[Tuple[str, Tuple[PlanarTree, ...]], PlanarTree] = {}
    _lock = threading.Lock()

    def __new__(cls, label: str, children: Sequence[PlanarTree] = ()):
        children = tuple(children)
        key = (label, children)
        tree = cls._table.get(key)
        if tree is not None:
            return tree
        if not isinstance(label, str) or not _LABEL_RE.match(label):
            raise ValueError(f"Invalid decoration label: {label!r}")
        with cls._lock:
            tree = cls._table.get(key)
            if tree is None:
                tree = object.__new__(cls)
                tree.label = label
                tree.children = children
                tree.degree = 1 + sum(child.degree for child in children)
                tree.sort_key = (tree.degree, label, tuple(child.sort_key for child in children))
                tree._text = None
                cls._table[key] = tree
        return tree

    def __reduce__(self):
        return (PlanarTree, (self.label, self.children))

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def encode(self) -> str:
        """Wire form, children listed left to right: 'c[a,b]'."""
        if self._text is None:
            if self.children:
                inner = ",".join(child.encode() for child in self.children)
                self._text = f"{self.label}[{inner}]"
            else:
                self._text = self.label
        return self._text

    def vertices(self) -> Iterator[Tuple[int, ...]]:
        """Vertex paths (child index sequences) in preorder."""
        yield ()
        for index, child in enumerate(self.children):
            for path in child.vertices():
                yield (index,) + path

    def depth_sum(self, depth: int = 0) -> int:
        """Sum of vertex depths, the root having depth zero."""
        return depth + sum(child.depth_sum(depth + 1) for child in self.children)

    def __repr__(self) -> str:
        return f"PlanarTree({self.encode()})"

    def __str__(self) -> str:
        return self.encode()


class Forest:
    """
    Ordered forest of planar trees; the empty forest is the unit 1.
    """

    __slots__ = ("trees", "degree", "sort_key", "_hash")

    def __init__(self, trees: Sequence[PlanarTree] = ()):
        self.trees = tuple(trees)
        self.degree = sum(tree.degree for tree in self.trees)
        self.sort_key = (self.degree, len(self.trees), tuple(t.sort_key for t in self.trees))
        self._hash = hash(self.trees)

    def concat(self, other: Forest) -> Forest:
        """Concatenation of forests."""
        return Forest(self.trees + other.trees)

    def is_unit(self) -> bool:
        """True for the empty forest."""
        return not self.trees

    def encode(self) -> str:
        """Wire form 'a.b[c]', the unit encodes as '1'."""
        if not self.trees:
            return "1"
        return ".".join(tree.encode() for tree in self.trees)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Forest) and self.trees == other.trees

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self) -> Iterator[PlanarTree]:
        return iter(self.trees)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Forest(self.trees[index])
        return self.trees[index]

    def __repr__(self) -> str:
        return f"Forest({self.encode()})"

    def __str__(self) -> str:
        return self.encode()


def _build_grammar() -> Tuple[pp.ParserElement, pp.ParserElement]:
    label = pp.Regex(LABEL_PATTERN)
    tree = pp.Forward()
    children = pp.Group(
        pp.Suppress("[") + tree + pp.ZeroOrMore(pp.Suppress(",") + tree) + pp.Suppress("]"))
    tree <<= label + pp.Optional(children)

    def make_tree(tokens):
        kids = tuple(tokens[1]) if len(tokens) > 1 else ()
        return PlanarTree(tokens[0], kids)

    tree.set_parse_action(make_tree)
    forest = tree + pp.ZeroOrMore(pp.Suppress(".") + tree)
    return tree, forest


_TREE_GRAMMAR, _FOREST_GRAMMAR = _build_grammar()


def parse_tree(text: str) -> PlanarTree:
    """
    Parse a single tree, e.g. 'e[c,d[b[a]]]'.

    :param text: Tree in wire form.
    :return: The interned tree.
    :raises TreeSyntaxError: On malformed input.
    """
    try:
        return _TREE_GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseException as exc:
        raise TreeSyntaxError(
            f"Malformed tree {text!r} at position {exc.loc}: {exc.msg}", exc.loc) from exc


def parse_forest(text: str) -> Forest:
    """
    Parse a forest 'a.b[c]' ('1' is the empty forest).

    :param text: Forest in wire form.
    :return: The forest.
    :raises TreeSyntaxError: On malformed input.
    """
    if text.strip() == "1":
        return Forest()
    try:
        return Forest(_FOREST_GRAMMAR.parse_string(text, parse_all=True))
    except pp.ParseException as exc:
        raise TreeSyntaxError(
            f"Malformed forest {text!r} at position {exc.loc}: {exc.msg}", exc.loc) from exc


def encode(item: Union[PlanarTree, Forest]) -> str:
    """Wire form of a tree or forest."""
    return item.encode()


def decode(text: str) -> Union[PlanarTree, Forest]:
    """
    Parse a tree, or a forest when the text is the unit or contains '.'.

    :param text: Wire form.
    :return: PlanarTree or Forest.
    """
    forest = parse_forest(text)
    if len(forest) == 1 and "." not in text:
        return forest[0]
    return forest


def vertex(label: str) -> PlanarTree:
    """Single-vertex tree."""
    return PlanarTree(label)


def butcher_right(sigma: PlanarTree, tau: PlanarTree) -> PlanarTree:
    """sigma grafted on the root of tau as its rightmost child."""
    return PlanarTree(tau.label, tau.children + (sigma,))


def butcher_left(sigma: PlanarTree, tau: PlanarTree) -> PlanarTree:
    """sigma grafted on the root of tau as its leftmost child."""
    return PlanarTree(tau.label, (sigma,) + tau.children)


@lru_cache(maxsize=None)
def _graft_left_terms(sigma: PlanarTree, tau: PlanarTree) -> Tuple[PlanarTree, ...]:
    terms = [butcher_left(sigma, tau)]
    for index, child in enumerate(tau.children):
        for grafted in _graft_left_terms(sigma, child):
            kids = tau.children[:index] + (grafted,) + tau.children[index + 1:]
            terms.append(PlanarTree(tau.label, kids))
    return tuple(terms)


def graft_left(sigma: PlanarTree, tau: PlanarTree) -> GradedCombo:
    """
    Left grafting: sigma attached as the leftmost child of every vertex of tau.

    :param sigma: Grafted tree.
    :param tau: Receiving tree.
    :return: Sum over the vertices of tau, each with coefficient one.
    """
    return GradedCombo.from_pairs((tree, 1) for tree in _graft_left_terms(sigma, tau))


def graft_left_combo(left: GradedCombo, right: GradedCombo) -> GradedCombo:
    """Bilinear extension of graft_left to tree combinations."""
    return left.bilinear(right, graft_left)


def _distribute(omega: Tuple[PlanarTree, ...], tau: PlanarTree) -> Iterator[PlanarTree]:
    if not omega:
        yield tau
        return
    slots = len(tau.children) + 1
    for targets in itertools.product(range(slots), repeat=len(omega)):
        at_root = tuple(t for t, slot in zip(omega, targets) if slot == 0)
        per_child = [
            tuple(t for t, slot in zip(omega, targets) if slot == index + 1)
            for index in range(len(tau.children))]
        options = [list(_distribute(sub, child)) for sub, child in zip(per_child, tau.children)]
        for kids in itertools.product(*options):
            yield PlanarTree(tau.label, at_root + tuple(kids))


def multi_graft(omega: Union[Forest, Sequence[PlanarTree]], tau: PlanarTree) -> GradedCombo:
    """
    Simultaneous grafting of the trees of omega onto the vertices of tau.

    Trees landing on a common vertex keep their order in omega and are
    placed to the left of the existing children; no tree of omega is
    grafted onto another one.

    :param omega: Forest of grafted trees.
    :param tau: Receiving tree.
    :return: Sum of all graftings.
    """
    trees = tuple(omega.trees if isinstance(omega, Forest) else omega)
    return GradedCombo.from_pairs((tree, 1) for tree in _distribute(trees, tau))


@lru_cache(maxsize=None)
def _psi(tau: PlanarTree) -> GradedCombo:
    if not tau.children:
        return GradedCombo.basis(tau)
    first = tau.children[0]
    rest = PlanarTree(tau.label, tau.children[1:])
    return graft_left_combo(_psi(first), _psi(rest))


def psi_iso(tau: PlanarTree) -> GradedCombo:
    """
    Isomorphism from (trees, left Butcher) to (trees, left grafting),
    identity on single vertices: Psi(a[c1,...,ck]) = Psi(c1) graft Psi(a[c2,...,ck]).

    :param tau: Planar tree.
    :return: Psi(tau).
    """
    return _psi(tau)


@lru_cache(maxsize=None)
def _psi_inverse(tau: PlanarTree) -> GradedCombo:
    image = _psi(tau)
    lower = image - GradedCombo.basis(tau)
    return GradedCombo.basis(tau) - lower.map_linear(_psi_inverse)


def psi_inverse(tau: PlanarTree) -> GradedCombo:
    """
    Inverse of Psi. Psi(tau) = tau + (trees with larger depth sum), so the
    triangular solve terminates.

    :param tau: Planar tree.
    :return: Psi^{-1}(tau).
    """
    return _psi_inverse(tau)


def nonplanar_key(tau: PlanarTree) -> tuple:
    """Canonical key of the underlying non-planar rooted tree."""
    return (tau.label, tuple(sorted(nonplanar_key(child) for child in tau.children)))


@lru_cache(maxsize=None)
def _trees_of_size(size: int, alphabet: Tuple[str, ...]) -> Tuple[PlanarTree, ...]:
    return tuple(
        PlanarTree(label, forest.trees)
        for label in alphabet
        for forest in _forests_of_size(size - 1, alphabet))


@lru_cache(maxsize=None)
def _forests_of_size(size: int, alphabet: Tuple[str, ...]) -> Tuple[Forest, ...]:
    if size == 0:
        return (Forest(),)
    forests = []
    for first in range(1, size + 1):
        for head in _trees_of_size(first, alphabet):
            for tail in _forests_of_size(size - first, alphabet):
                forests.append(Forest((head,) + tail.trees))
    return tuple(forests)


def enumerate_trees(max_vertices: int, alphabet: Sequence[str]) -> List[PlanarTree]:
    """
    All planar trees with at most max_vertices vertices, in canonical order.

    :param max_vertices: Vertex bound.
    :param alphabet: Decoration labels.
    :return: List of trees.
    """
    labels = tuple(sorted(alphabet))
    trees = [t for n in range(1, max_vertices + 1) for t in _trees_of_size(n, labels)]
    return sorted(trees, key=lambda t: t.sort_key)


def enumerate_forests(max_vertices: int, alphabet: Sequence[str],
                      include_unit: bool = False) -> List[Forest]:
    """
    All ordered forests with total vertex count at most max_vertices.

    :param max_vertices: Vertex bound.
    :param alphabet: Decoration labels.
    :param include_unit: Whether to include the empty forest.
    :return: List of forests in canonical order.
    """
    labels = tuple(sorted(alphabet))
    start = 0 if include_unit else 1
    forests = [f for n in range(start, max_vertices + 1) for f in _forests_of_size(n, labels)]
    return sorted(forests, key=lambda f: f.sort_key)
