#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
K-map Suite

K and its partition inverse are independent implementations, so their
mutual inverseness is checked along with the algebra isomorphism, the
inverse recursion, the Bell polynomials and the rewriting of the
Grossman-Larson product through K.
"""

from itertools import product
from typing import Callable, List
from src.lib.services.algebra.framed import trees_to_magma
from src.lib.services.algebra.kmap import (
    MAX_BELL_DEGREE, bell_number, bell_poly, bell_step, k_inverse, k_map, tau_hat)
from src.lib.services.algebra.scalars import GradedCombo
from src.lib.services.algebra.tensor import concat, coproduct, gl_product, triangle, word
from src.lib.services.algebra.trees import Forest, enumerate_forests, vertex
from src.lib.services.verification.suites.base import BaseVerificationSuite, InvariantReport


def bell_term_count(element: GradedCombo) -> int:
    """
    Number of terms of a Bell polynomial once every tree is expanded
    into magmatic words, counted with multiplicity.
    """
    total = 0
    for forest, coeff in element.items():
        count = coeff
        for tree in forest:
            count *= trees_to_magma(tree).coefficient_mass()
        total += count
    return total


class KMapSuite(BaseVerificationSuite):
    """
    Invariants of K, its inverse and the Bell polynomials.
    """

    def invariants(self) -> List[Callable[[], InvariantReport]]:
        return [
            self.check_inverse,
            self.check_multiplicative,
            self.check_inverse_recursion,
            self.check_bell_count,
            self.check_bell_recursion,
            self.check_gl_identity,
        ]

    def forests(self, max_degree: int) -> List[Forest]:
        """Non-unit forests up to a degree."""
        return enumerate_forests(max_degree, self.alphabet, include_unit=False)

    def check_inverse(self) -> InvariantReport:
        """K(K^-1(U)) = U = K^-1(K(U))."""
        def holds(forest: Forest) -> bool:
            element = GradedCombo.basis(forest)
            return k_map(k_inverse(element)) == element and k_inverse(k_map(element)) == element
        return self.check("k_inverse", self.forests(self.config.max_degree), holds,
                          lambda f: f.encode())

    def check_multiplicative(self) -> InvariantReport:
        """K(U * V) = K(U) K(V)."""
        d = self.config.max_degree
        forests = enumerate_forests(d, self.alphabet)
        cases = [(u, v) for u, v in product(forests, repeat=2) if u.degree + v.degree <= d]

        def holds(case) -> bool:
            u, v = (GradedCombo.basis(f) for f in case)
            return k_map(gl_product(u, v)) == concat(k_map(u), k_map(v))
        return self.check("k_multiplicative", cases, holds,
                          lambda c: f"{c[0].encode()}, {c[1].encode()}")

    def check_inverse_recursion(self) -> InvariantReport:
        """y K^-1(U) + y |> K^-1(U) = K^-1(y U) for generators y."""
        forests = enumerate_forests(max(self.config.max_degree - 1, 0), self.alphabet)
        cases = [(label, forest) for label in self.alphabet for forest in forests]

        def holds(case) -> bool:
            label, forest = case
            generator = word(vertex(label))
            inverse = k_inverse(GradedCombo.basis(forest))
            left = concat(generator, inverse) + triangle(generator, inverse)
            return left == k_inverse(concat(generator, GradedCombo.basis(forest)))
        return self.check("k_inverse_recursion", cases, holds,
                          lambda c: f"{c[0]}, {c[1].encode()}")

    def bell_range(self) -> List[int]:
        """Bell degrees examined at the configured degree."""
        return list(range(1, min(self.config.max_degree + 2, MAX_BELL_DEGREE) + 1))

    def check_bell_count(self) -> InvariantReport:
        """b_n expands into Bell(n) magmatic terms."""
        return self.check("bell_count", self.bell_range(),
                          lambda n: bell_term_count(bell_poly(n)) == bell_number(n),
                          lambda n: f"n={n}")

    def check_bell_recursion(self) -> InvariantReport:
        """b_n = y b_(n-1) + y |> b_(n-1)."""
        return self.check("bell_recursion", [n for n in self.bell_range() if n > 1],
                          lambda n: bell_poly(n) == bell_step(bell_poly(n - 1)),
                          lambda n: f"n={n}")

    def check_gl_identity(self) -> InvariantReport:
        """A * B = A_(1) . tau_hat(K(A_(2)), B)."""
        d = self.config.max_degree
        forests = enumerate_forests(d, self.alphabet)
        cases = [(a, b) for a, b in product(forests, repeat=2) if a.degree + b.degree <= d]

        def holds(case) -> bool:
            a, b = (GradedCombo.basis(f) for f in case)
            rewritten = GradedCombo.sum(
                (coeff, concat(GradedCombo.basis(left),
                               tau_hat(k_map(GradedCombo.basis(right)), b)))
                for (left, right), coeff in coproduct(a).items())
            return rewritten == gl_product(a, b)
        return self.check("gl_identity", cases, holds,
                          lambda c: f"{c[0].encode()}, {c[1].encode()}")
