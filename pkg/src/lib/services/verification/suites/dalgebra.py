#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
D-algebra Suite

Invariants of the free D-algebra on planar forests: compatibility of the
coproduct with the triangle and Grossman-Larson products, the composition
law, associativity, the concatenation formula through the
Grossman-Larson product, both antipodes, the post-Lie identities on
primitive elements and the tree products underneath.
"""

from itertools import product
from typing import Callable, List
from src.lib.services.algebra.lie import lie_bracket, lie_letter, lie_to_tensor
from src.lib.services.algebra.scalars import GradedCombo
from src.lib.services.algebra.tensor import (
    antipode, commutator, concat, concat_via_gl, coproduct, counit, gl_product, hat_l,
    square_product, triangle, unit)
from src.lib.services.algebra.trees import (
    Forest, enumerate_forests, enumerate_trees, graft_left, multi_graft, parse_tree,
    psi_inverse, psi_iso)
from src.lib.services.verification.suites.base import BaseVerificationSuite, InvariantReport


def _basis(forest: Forest) -> GradedCombo:
    return GradedCombo.basis(forest)


def _text(*forests: Forest) -> str:
    return ", ".join(forest.encode() for forest in forests)


class DAlgebraSuite(BaseVerificationSuite):
    """
    Invariants of the tensor D-algebra.
    """

    def invariants(self) -> List[Callable[[], InvariantReport]]:
        return [
            self.check_coproduct_triangle,
            self.check_coproduct_gl,
            self.check_composition,
            self.check_gl_associative,
            self.check_concat_via_gl,
            self.check_antipodes,
            self.check_hat_l,
            self.check_post_lie,
            self.check_graft_mass,
            self.check_multi_graft,
            self.check_psi,
            self.check_tree_codec,
        ]

    def forests(self, max_degree: int, include_unit: bool = True) -> List[Forest]:
        """Forests over the alphabet up to a degree."""
        return enumerate_forests(max_degree, self.alphabet, include_unit=include_unit)

    def pairs(self):
        """Forest pairs with total degree at most max_degree."""
        d = self.config.max_degree
        forests = self.forests(d)
        return [(u, v) for u, v in product(forests, repeat=2) if u.degree + v.degree <= d]

    def triples(self):
        """Non-unit forest triples with total degree at most max_degree."""
        d = self.config.max_degree
        forests = self.forests(d, include_unit=False)
        return [(u, v, w) for u, v, w in product(forests, repeat=3)
                if u.degree + v.degree + w.degree <= d]

    def check_coproduct_triangle(self) -> InvariantReport:
        """Delta(U |> V) = Delta(U) |> Delta(V)."""
        return self.check(
            "coproduct_triangle", self.pairs(),
            lambda p: coproduct(triangle(_basis(p[0]), _basis(p[1]))) == square_product(
                coproduct(_basis(p[0])), coproduct(_basis(p[1])), triangle),
            lambda p: _text(*p))

    def check_coproduct_gl(self) -> InvariantReport:
        """Delta(U * V) = Delta(U) * Delta(V)."""
        return self.check(
            "coproduct_gl", self.pairs(),
            lambda p: coproduct(gl_product(_basis(p[0]), _basis(p[1]))) == square_product(
                coproduct(_basis(p[0])), coproduct(_basis(p[1])), gl_product),
            lambda p: _text(*p))

    def check_composition(self) -> InvariantReport:
        """U |> (V |> W) = (U * V) |> W."""
        return self.check(
            "composition", self.triples(),
            lambda c: triangle(_basis(c[0]), triangle(_basis(c[1]), _basis(c[2])))
            == triangle(gl_product(_basis(c[0]), _basis(c[1])), _basis(c[2])),
            lambda c: _text(*c))

    def check_gl_associative(self) -> InvariantReport:
        """(U * V) * W = U * (V * W)."""
        return self.check(
            "gl_associative", self.triples(),
            lambda c: gl_product(gl_product(_basis(c[0]), _basis(c[1])), _basis(c[2]))
            == gl_product(_basis(c[0]), gl_product(_basis(c[1]), _basis(c[2]))),
            lambda c: _text(*c))

    def check_concat_via_gl(self) -> InvariantReport:
        """A_(1) * (S_*(A_(2)) |> B) = A.B."""
        return self.check(
            "concat_via_gl", self.pairs(),
            lambda p: concat_via_gl(_basis(p[0]), _basis(p[1]))
            == concat(_basis(p[0]), _basis(p[1])),
            lambda p: _text(*p))

    def check_antipodes(self) -> InvariantReport:
        """m(S (x) id) Delta = unit counit for both Hopf structures."""
        def holds(forest: Forest) -> bool:
            element = _basis(forest)
            expected = unit() * counit(element)
            for which, multiply in (("concat", concat), ("gl", gl_product)):
                total = GradedCombo.sum(
                    (coeff, multiply(antipode(_basis(left), which), _basis(right)))
                    for (left, right), coeff in coproduct(element).items())
                if total != expected:
                    return False
            return True
        return self.check("antipodes", self.forests(self.config.max_degree), holds,
                          lambda f: f.encode())

    def check_hat_l(self) -> InvariantReport:
        """L_(A * B) C = L_A (L_B C)."""
        return self.check(
            "hat_l_multiplicative", self.triples(),
            lambda c: hat_l(gl_product(_basis(c[0]), _basis(c[1])), _basis(c[2]))
            == hat_l(_basis(c[0]), hat_l(_basis(c[1]), _basis(c[2]))),
            lambda c: _text(*c))

    def primitives(self) -> List[GradedCombo]:
        """Tree letters and commutators of two tree letters."""
        d = self.config.max_degree
        trees = enumerate_trees(max(d - 2, 1), self.alphabet)
        letters = [lie_letter(tree) for tree in trees]
        brackets = [lie_bracket(x, y) for x, y in product(letters, repeat=2)]
        return [lie_to_tensor(x) for x in letters + brackets if x]

    def check_post_lie(self) -> InvariantReport:
        """
        x |> [y,z] = [x |> y, z] + [y, x |> z] and
        [x,y] |> z = a(x,y,z) - a(y,x,z) on primitive elements.
        """
        d = self.config.max_degree
        elements = self.primitives()
        cases = [(x, y, z) for x, y, z in product(elements, repeat=3)
                 if x.degree() + y.degree() + z.degree() <= d]

        def associator(x, y, z):
            return triangle(x, triangle(y, z)) - triangle(triangle(x, y), z)

        def holds(case) -> bool:
            x, y, z = case
            first = (triangle(x, commutator(y, z))
                     == commutator(triangle(x, y), z) + commutator(y, triangle(x, z)))
            second = triangle(commutator(x, y), z) == associator(x, y, z) - associator(y, x, z)
            return first and second

        return self.check("post_lie", cases, holds, lambda c: " | ".join(map(repr, c)))

    def tree_pairs(self):
        """Tree pairs with at most four vertices each, within max_degree."""
        trees = enumerate_trees(min(self.config.max_degree, 4), self.alphabet)
        return [(s, t) for s, t in product(trees, repeat=2)
                if s.degree + t.degree <= max(self.config.max_degree, 2)]

    def check_graft_mass(self) -> InvariantReport:
        """Grafting sigma onto tau has coefficient mass |tau|."""
        return self.check(
            "graft_mass", self.tree_pairs(),
            lambda p: graft_left(p[0], p[1]).coefficient_mass() == p[1].degree,
            lambda p: f"{p[0].encode()}, {p[1].encode()}")

    def check_multi_graft(self) -> InvariantReport:
        """Multi-grafting a one-tree forest is left grafting."""
        return self.check(
            "multi_graft_single", self.tree_pairs(),
            lambda p: multi_graft((p[0],), p[1]) == graft_left(p[0], p[1]),
            lambda p: f"{p[0].encode()}, {p[1].encode()}")

    def check_psi(self) -> InvariantReport:
        """Psi preserves degree, has unit diagonal and is inverted by psi_inverse."""
        def holds(tree) -> bool:
            image = psi_iso(tree)
            return (image.coefficient(tree) == 1
                    and all(other.degree == tree.degree for other in image)
                    and psi_inverse(tree).map_linear(psi_iso) == GradedCombo.basis(tree))
        return self.check("psi_triangular",
                          enumerate_trees(min(self.config.max_degree, 5), self.alphabet),
                          holds, lambda t: t.encode())

    def check_tree_codec(self) -> InvariantReport:
        """Parsing the wire form returns the same interned tree."""
        return self.check("tree_codec",
                          enumerate_trees(self.config.max_degree, self.alphabet),
                          lambda t: parse_tree(t.encode()) is t, lambda t: t.encode())
