#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Magnus-type expansions in the free post-Lie algebra

- chi and theta: the two ways of rewriting exponentials between the
  Grossman-Larson and the concatenation products,
- alpha and lambda: the exponentially weighted derivation series,
- the Magnus recursion for any Lie bracket,
- the Z map, computed from its own recursion and cross-checked against
  K applied to chi,
- the Grossman-Larson bracket and the presentation of Lie elements in it.
"""

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Any, Callable, Dict, Iterator, Tuple, Union
from src.lib.core.log import Logger
from src.lib.services.algebra.framed import (
    FramedElement, bold_bracket, delta, generator, magma_to_trees)
from src.lib.services.algebra.kmap import k_map
from src.lib.services.algebra.lie import (
    LieMonomial, lie_bracket, lie_letter, lie_to_tensor, tensor_to_lie)
from src.lib.services.algebra.scalars import BiSeries, GradedCombo, bernoulli_weight
from src.lib.services.algebra.series import series_exp, series_log, time_series
from src.lib.services.algebra.tensor import gl_commutator, trees_to_letters
from src.lib.services.algebra.trees import nonplanar_key


logger = Logger().get_logger()

Bracket = Union[str, Callable[[GradedCombo, GradedCombo], GradedCombo]]


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


def chi(value: Any, order: int) -> BiSeries:
    """
    chi(tY) = log_*(exp_.(tY)), the Lie series whose Grossman-Larson
    exponential equals the concatenation exponential of tY.

    :param value: Generator label, tree, Lie or tensor element, or a series.
    :param order: Truncation order in t.
    :return: Series with Lie coefficients over tree letters.
    :raises NotALieElementError: If a coefficient fails to be primitive.
    """
    series = time_series(value, order)
    return series_log(series_exp(series, "concat"), "gl").map_coefficients(tensor_to_lie)


def theta(value: Any, order: int) -> BiSeries:
    """
    theta(tY) = log_.(exp_*(tY)), the inverse rewriting of chi.

    :param value: Generator label, tree, Lie or tensor element, or a series.
    :param order: Truncation order in t.
    :return: Series with Lie coefficients over tree letters.
    """
    series = time_series(value, order)
    return series_log(series_exp(series, "gl"), "concat").map_coefficients(tensor_to_lie)


def delta_power(label: str, k: int, target: str = None) -> FramedElement:
    """
    k-fold application of the derivation delta_label to a generator.

    :param label: Acting generator.
    :param k: Number of applications.
    :param target: Generator acted on, defaults to label.
    :return: delta^k(target).
    """
    element = generator(target or label)
    for _ in range(k):
        element = delta(label, element)
    return element


def _exponential_weighted(label: str, target: str, order: int,
                          key: Callable[[int], Tuple[int, int]]) -> BiSeries:
    coefficients = {}
    element = generator(target)
    for k in range(order + 1):
        coefficients[key(k)] = element * Fraction((-1) ** k, factorial(k))
        element = delta(label, element)
    return BiSeries(coefficients, order)


def alpha(label: str, order: int) -> BiSeries:
    """
    alpha(t) = exp(-t delta) y = sum_k (-1)^k / k! delta^k(y) t^k.

    :param label: Generator y.
    :param order: Truncation order in t.
    :return: Framed series, coefficients magmatic.
    """
    return _exponential_weighted(label, label, order, lambda k: (k, 0))


def lambda_map(label: str, target: str, order: int, time: str = "t") -> BiSeries:
    """
    lambda(t) = exp(-t delta_y) z.

    :param label: Acting generator y.
    :param target: Generator z.
    :param order: Truncation order.
    :param time: 't' or 's', the variable carrying the powers.
    :return: Framed series.
    """
    if time not in ("t", "s"):
        raise ValueError(f"Unsupported time variable: {time}")
    key = (lambda k: (k, 0)) if time == "t" else (lambda k: (0, k))
    return _exponential_weighted(label, target, order, key)


def alpha_trees(label: str, order: int) -> BiSeries:
    """alpha with coefficients drawn as planar trees (left grafting picture)."""
    return alpha(label, order).map_coefficients(magma_to_trees)


def alpha_tensor(label: str, order: int) -> BiSeries:
    """alpha with coefficients as one-letter tensor elements."""
    return alpha_trees(label, order).map_coefficients(trees_to_letters)


def alpha_lie(label: str, order: int) -> BiSeries:
    """alpha with coefficients as Lie elements over tree letters."""
    return alpha_trees(label, order).map_coefficients(
        lambda combo: combo.map_basis(lambda tree: LieMonomial((tree,))))


@lru_cache(maxsize=None)
def _gl_bracket_monomials(left: LieMonomial, right: LieMonomial) -> GradedCombo:
    if left == right:
        return GradedCombo.zero()
    product = gl_commutator(
        lie_to_tensor(GradedCombo.basis(left)), lie_to_tensor(GradedCombo.basis(right)))
    return tensor_to_lie(product)


def gl_lie_bracket(left: GradedCombo, right: GradedCombo) -> GradedCombo:
    """
    Grossman-Larson commutator of Lie elements, the post-Lie bracket
    [[x, y]] = x |> y - y |> x + [x, y].

    :param left: Lie element over tree letters.
    :param right: Lie element over tree letters.
    :return: The bracket in the Lyndon basis.
    """
    return left.bilinear(right, _gl_bracket_monomials)


BRACKETS = {
    "concat": lie_bracket,
    "gl": gl_lie_bracket,
    "bold": bold_bracket,
}


def resolve_bracket(bracket: Bracket) -> Callable[[GradedCombo, GradedCombo], GradedCombo]:
    """
    Look up a bracket by name; callables are returned unchanged.

    :param bracket: 'concat', 'gl', 'bold' or a bilinear callable.
    :return: The bracket.
    :raises ValueError: For an unknown name.
    """
    if callable(bracket):
        return bracket
    if bracket not in BRACKETS:
        raise ValueError(f"Unsupported bracket type: {bracket}")
    return BRACKETS[bracket]


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Ordered tuples of positive integers of the given length and sum."""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def magnus_omega(derivative: BiSeries, order: int, bracket: Bracket = "concat") -> BiSeries:
    """
    Magnus expansion Omega(t) with Omega' = sum_m B_m/m! ad_Omega^m A,
    solved by iterating A_1 = A and
    A_r = sum_m B_m/m! sum_(r1+...+rm = r-1) [I A_r1, [..., [I A_rm, A]]],
    where I is integration in t; then Omega = I(A_1 + ... + A_order).

    :param derivative: The series A(t).
    :param order: Truncation order of Omega.
    :param bracket: Bracket used for ad.
    :return: Omega as a series.
    """
    operation = resolve_bracket(bracket)
    base = derivative.with_order(order)
    integrals: Dict[int, BiSeries] = {1: base.integrate_t()}
    for r in range(2, order + 1):
        total = BiSeries({}, order)
        for m in range(1, r):
            weight = bernoulli_weight(m)
            if not weight:
                continue
            for parts in compositions(r - 1, m):
                term = base
                for part in reversed(parts):
                    term = integrals[part].multiply(term, operation, order)
                total = total + term * weight
        integrals[r] = total.integrate_t()
    omega = BiSeries({}, order)
    for value in integrals.values():
        omega = omega + value
    return omega


def _z_recursion(alpha_series: BiSeries, order: int) -> BiSeries:
    # (n+1) Z_(n+1) = sum_m w_m sum_(a1+..+am+l = n) ad_Z_a1 ... ad_Z_am alpha_l
    parts_of_z: Dict[int, GradedCombo] = {1: alpha_series.coefficient(0)}
    for n in range(1, order):
        total = []
        for ell in range(n + 1):
            remainder = n - ell
            seed = alpha_series.coefficient(ell)
            if not seed:
                continue
            if remainder == 0:
                total.append((1, seed))
                continue
            for m in range(1, remainder + 1):
                weight = bernoulli_weight(m)
                if not weight:
                    continue
                for parts in compositions(remainder, m):
                    term = seed
                    for part in reversed(parts):
                        term = lie_bracket(parts_of_z[part], term)
                    total.append((weight, term))
        parts_of_z[n + 1] = GradedCombo.sum(total) / (n + 1)
    return BiSeries.univariate(parts_of_z, order)


def z_map(label: str, order: int) -> BiSeries:
    """
    Z(t) = K(chi(ty)), computed from the Bernoulli recursion driven by alpha
    and confirmed against K applied to chi.

    :param label: Generator y.
    :param order: Truncation order in t.
    :return: Series with Lie coefficients over tree letters.
    :raises ConsistencyError: When the two computations disagree.
    """
    recursive = _z_recursion(alpha_lie(label, order), order)
    via_k = chi(label, order).map_coefficients(
        lambda combo: tensor_to_lie(k_map(lie_to_tensor(combo))))
    for degree in range(1, order + 1):
        if recursive.coefficient(degree) != via_k.coefficient(degree):
            raise ConsistencyError(
                f"Z map mismatch at degree {degree}: recursion and K(chi) disagree")
    logger.debug(f"Z map confirmed up to order {order}")
    return recursive


def gl_presentation(element: GradedCombo) -> GradedCombo:
    """
    Express a Lie element through Grossman-Larson brackets of tree letters.

    The returned Lyndon-basis element is to be read with every bracket
    meaning [[.,.]]; K maps that bracket onto the commutator, so the
    presentation of X is the ordinary Lyndon expansion of K(X).

    :param element: Lie element over tree letters.
    :return: Lyndon-basis element read with [[.,.]].
    """
    return tensor_to_lie(k_map(lie_to_tensor(element)))


@lru_cache(maxsize=None)
def _evaluate_gl_monomial(monomial: LieMonomial) -> GradedCombo:
    if monomial.is_letter:
        return lie_letter(monomial.letters[0])
    left, right = monomial.factors
    return gl_lie_bracket(_evaluate_gl_monomial(left), _evaluate_gl_monomial(right))


def from_gl_presentation(presentation: GradedCombo) -> GradedCombo:
    """
    Evaluate a Lyndon-basis element whose brackets are [[.,.]].

    :param presentation: Element produced by gl_presentation.
    :return: The Lie element in the ordinary Lyndon basis.
    """
    return presentation.map_linear(_evaluate_gl_monomial)


def _split_vertex(key: tuple, label: str) -> list:
    # replace one vertex v by the edge v[y], the former children of v
    # distributed over both ends
    root, children = key
    results = []
    for mask in range(1 << len(children)):
        moved = tuple(child for index, child in enumerate(children) if mask >> index & 1)
        kept = tuple(child for index, child in enumerate(children) if not mask >> index & 1)
        leaf = (label, tuple(sorted(moved)))
        results.append((root, tuple(sorted(kept + (leaf,)))))
    for index, child in enumerate(children):
        for grown in _split_vertex(child, label):
            kids = children[:index] + (grown,) + children[index + 1:]
            results.append((root, tuple(sorted(kids))))
    return results


def connes_moscovici(n: int, label: str = "y") -> Dict[tuple, Fraction]:
    """
    Coefficients of (-1)^n/n! delta^n(y) on non-planar rooted trees.

    delta(y) = y |> y extended as a derivation of non-planar grafting acts
    on a tree by splitting each vertex into an edge in every way.

    :param n: Degree minus one.
    :param label: Decoration.
    :return: Mapping non-planar key -> coefficient.
    """
    counts: Dict[tuple, int] = {(label, ()): 1}
    for _ in range(n):
        grown: Dict[tuple, int] = {}
        for key, count in counts.items():
            for split in _split_vertex(key, label):
                grown[split] = grown.get(split, 0) + count
        counts = grown
    scale = Fraction((-1) ** n, factorial(n))
    return {key: count * scale for key, count in counts.items()}


def alpha_nonplanar(n: int, label: str = "y") -> Dict[tuple, Fraction]:
    """
    Coefficient of t^n in alpha, planar trees grouped by their non-planar shape.

    :param n: Power of t.
    :param label: Generator.
    :return: Mapping non-planar key -> coefficient.
    """
    grouped: Dict[tuple, Fraction] = {}
    for tree, coeff in alpha_trees(label, n).coefficient(n).items():
        key = nonplanar_key(tree)
        grouped[key] = grouped.get(key, Fraction(0)) + coeff
    return {key: value for key, value in grouped.items() if value}
