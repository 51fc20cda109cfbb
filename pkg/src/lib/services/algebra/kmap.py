#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
K-map

The linear automorphism K of T(M) turning the Grossman-Larson product into
concatenation, its inverse written over set partitions, and the
noncommutative Bell polynomials, together with the iterated letter
action tau_hat through which K rewrites the Grossman-Larson product.

K is computed from its recursion K(yU) = y K(U) - K(y |> U); the inverse
uses the closed partition formula, so both directions are independent.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple
from src.lib.core.log import Logger
from src.lib.services.algebra.scalars import GradedCombo
from src.lib.services.algebra.tensor import TensorElement, concat, triangle, unit, word
from src.lib.services.algebra.trees import Forest, PlanarTree, graft_left_combo, vertex


logger = Logger().get_logger()

MAX_PARTITION_SIZE = 12
MAX_BELL_DEGREE = 8


class OrderError(ValueError):
    """Requested order or size is outside the supported range."""


@dataclass(frozen=True)
class SetPartition:
    """
    Partition of {1..n}; each block is increasing and blocks are ordered
    by their maximum.
    """
    blocks: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        """The n of {1..n}."""
        return sum(len(block) for block in self.blocks)

    def __str__(self) -> str:
        return "".join("{" + ",".join(map(str, block)) + "}" for block in self.blocks)


def _restricted_growth_strings(size: int):
    def extend(prefix: List[int], top: int):
        if len(prefix) == size:
            yield tuple(prefix)
            return
        for value in range(top + 2):
            prefix.append(value)
            yield from extend(prefix, max(top, value))
            prefix.pop()
    yield from extend([0], 0)


@lru_cache(maxsize=None)
def _partitions(size: int) -> Tuple[SetPartition, ...]:
    result = []
    for rgs in _restricted_growth_strings(size):
        groups = {}
        for position, block in enumerate(rgs, start=1):
            groups.setdefault(block, []).append(position)
        blocks = sorted((tuple(items) for items in groups.values()), key=max)
        result.append(SetPartition(tuple(blocks)))
    return tuple(result)


def partitions(n: int) -> List[SetPartition]:
    """
    All set partitions of {1..n} in restricted-growth-string order.

    :param n: Size, 1 <= n <= 12.
    :return: Bell(n) partitions.
    :raises OrderError: For n outside the supported range.
    """
    if not 1 <= n <= MAX_PARTITION_SIZE:
        raise OrderError(f"Partition size must be in [1, {MAX_PARTITION_SIZE}], got {n}")
    return list(_partitions(n))


@lru_cache(maxsize=None)
def bell_number(n: int) -> int:
    """Bell numbers from the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


@lru_cache(maxsize=None)
def _k_forest(forest: Forest) -> GradedCombo:
    if len(forest) <= 1:
        return GradedCombo.basis(forest)
    head = GradedCombo.basis(Forest(forest.trees[:1]))
    tail = forest[1:]
    first = concat(head, _k_forest(tail))
    second = triangle(head, GradedCombo.basis(tail)).map_linear(_k_forest)
    return first - second


def k_map(element: TensorElement) -> TensorElement:
    """
    The K-map: K(1) = 1, K(y) = y, K(yU) = y K(U) - K(y |> U).

    :param element: Tensor element.
    :return: K(element).
    """
    return element.map_linear(_k_forest)


@lru_cache(maxsize=None)
def _nested_graft(trees: Tuple[PlanarTree, ...]) -> GradedCombo:
    # y_b1 |> (y_b2 |> (... |> y_bk))
    result = GradedCombo.basis(trees[-1])
    for tree in reversed(trees[:-1]):
        result = graft_left_combo(GradedCombo.basis(tree), result)
    return result


@lru_cache(maxsize=None)
def _k_inverse_forest(forest: Forest) -> GradedCombo:
    if len(forest) <= 1:
        return GradedCombo.basis(forest)
    parts = []
    for partition in _partitions(len(forest)):
        term = unit()
        for block in partition.blocks:
            letters = _nested_graft(tuple(forest.trees[i - 1] for i in block))
            term = concat(term, letters.map_basis(lambda tree: Forest((tree,))))
        parts.append((1, term))
    return GradedCombo.sum(parts)


def k_inverse(element: TensorElement) -> TensorElement:
    """
    Inverse K-map as a sum over set partitions: each block contributes the
    right-nested triangle product of its letters, blocks concatenated by
    increasing maximum.

    :param element: Tensor element.
    :return: K^{-1}(element).
    :raises OrderError: For words longer than the partition bound.
    """
    for forest, _ in element.items():
        if len(forest) > MAX_PARTITION_SIZE:
            raise OrderError(
                f"Word length must be at most {MAX_PARTITION_SIZE}, got {len(forest)}")
    return element.map_linear(_k_inverse_forest)


def bell_poly(n: int, label: str = "y") -> TensorElement:
    """
    Noncommutative Bell polynomial b_n = K^{-1}(y^n).

    :param n: Degree, 1 <= n <= 8.
    :param label: Decoration of the generator.
    :return: b_n.
    :raises OrderError: For n outside the supported range.
    """
    if not 1 <= n <= MAX_BELL_DEGREE:
        raise OrderError(f"Bell polynomial degree must be in [1, {MAX_BELL_DEGREE}], got {n}")
    return k_inverse(word(*([vertex(label)] * n)))


def bell_step(previous: TensorElement, label: str = "y") -> TensorElement:
    """One step of b_n = y b_(n-1) + y |> b_(n-1)."""
    generator = word(vertex(label))
    return concat(generator, previous) + triangle(generator, previous)


@lru_cache(maxsize=None)
def _tau_hat_forests(acting: Forest, target: Forest) -> GradedCombo:
    result = GradedCombo.basis(target)
    for tree in reversed(acting.trees):
        result = triangle(GradedCombo.basis(Forest((tree,))), result)
    return result


def tau_hat(acting: TensorElement, target: TensorElement) -> TensorElement:
    """
    Concatenation-multiplicative extension of the letter actions:
    tau_hat(x1...xn, B) = x1 |> (x2 |> (... |> (xn |> B))).

    :param acting: Tensor element.
    :param target: Tensor element.
    :return: tau_hat(acting, target).
    """
    return acting.bilinear(target, _tau_hat_forests)
