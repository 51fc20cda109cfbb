#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Framed Suite

Invariants of the projection p, the beta map and its inverse, and the
double exponential: the two routes to beta agree, beta is inverted, q*
degenerates to the bold BCH series once the triangle vanishes, and the
product of exponentials behind q* holds in the tensor algebra.
"""

from itertools import product
from typing import Callable, List
from src.lib.services.algebra.beta import beta, beta_apply, beta_inverse, double_exp, framed_bch
from src.lib.services.algebra.framed import bold_bracket, drop_triangles, generator, project_p
from src.lib.services.algebra.lie import lie_bracket, lie_letter
from src.lib.services.algebra.magnus import z_map
from src.lib.services.algebra.scalars import BiSeries
from src.lib.services.algebra.series import series_exp, time_series
from src.lib.services.algebra.tensor import concat, gl_product, triangle
from src.lib.services.algebra.trees import enumerate_trees
from src.lib.services.verification.suites.base import BaseVerificationSuite, InvariantReport


GENERATOR = "y"
MAX_FRAMED_ORDER = 4


def series_keys(order: int) -> List[tuple]:
    """All (i, j) with 1 <= i + j <= order."""
    return [(i, total - i) for total in range(1, order + 1) for i in range(total, -1, -1)]


def same_coefficient(left: BiSeries, right: BiSeries, key: tuple) -> bool:
    """True when both series carry the same coefficient at t^i s^j."""
    return left.coefficient(*key) == right.coefficient(*key)


class FramedSuite(BaseVerificationSuite):
    """
    Invariants of the free framed Lie algebra and the beta map.
    """

    def invariants(self) -> List[Callable[[], InvariantReport]]:
        return [
            self.check_projection,
            self.check_beta_routes,
            self.check_beta_inverse,
            self.check_double_exp_bch,
            self.check_double_exp_single,
            self.check_exponential_product,
        ]

    @property
    def order(self) -> int:
        """Series order examined."""
        return min(self.config.max_degree, MAX_FRAMED_ORDER)

    def lie_elements(self):
        """Tree letters and brackets of two tree letters."""
        trees = enumerate_trees(max(self.config.max_degree - 1, 1), self.alphabet)
        letters = [lie_letter(tree) for tree in trees]
        brackets = [lie_bracket(x, y) for x, y in product(letters, repeat=2)
                    if x.degree() + y.degree() <= self.config.max_degree - 1]
        return letters + [x for x in brackets if x]

    def check_projection(self) -> InvariantReport:
        """p([x, y]) = [[p(x), p(y)]]."""
        elements = self.lie_elements()
        cases = [(x, y) for x, y in product(elements, repeat=2)
                 if x.degree() + y.degree() <= self.config.max_degree]
        return self.check(
            "projection_morphism", cases,
            lambda c: project_p(lie_bracket(*c)) == bold_bracket(project_p(c[0]), project_p(c[1])),
            lambda c: f"{c[0]!r}, {c[1]!r}")

    def check_beta_routes(self) -> InvariantReport:
        """beta(ty) = p(Z(ty)), the bold Magnus series of alpha."""
        through_z = z_map(GENERATOR, self.order).map_coefficients(project_p)
        series = beta(GENERATOR, self.order)
        return self.check("beta_routes", list(range(1, self.order + 1)),
                          lambda n: same_coefficient(series, through_z, (n, 0)),
                          lambda n: f"t^{n}")

    def check_beta_inverse(self) -> InvariantReport:
        """beta^-1(beta(ty)) = ty = beta(beta^-1(ty))."""
        order = self.order
        single = BiSeries.monomial(generator(GENERATOR), (1, 0), order)
        there = beta_inverse(beta_apply(single, order), order)
        back = beta_apply(beta_inverse(single, order), order)
        return self.check("beta_inverse", list(range(1, order + 1)),
                          lambda n: (same_coefficient(there, single, (n, 0))
                                     and same_coefficient(back, single, (n, 0))),
                          lambda n: f"t^{n}")

    def check_double_exp_bch(self) -> InvariantReport:
        """q*(tv, sw) with the triangle set to zero is BCH(tv, sw)."""
        order = self.order
        series = double_exp("v", "w", order).map_coefficients(drop_triangles)
        expected = framed_bch(BiSeries.monomial(generator("v"), (1, 0), order),
                              BiSeries.monomial(generator("w"), (0, 1), order), order)
        return self.check("double_exp_bch", series_keys(order),
                          lambda key: same_coefficient(series, expected, key),
                          lambda key: f"t^{key[0]} s^{key[1]}")

    def check_double_exp_single(self) -> InvariantReport:
        """q*(tv, 0) = tv."""
        order = self.order
        series = double_exp("v", "w", order).substitute_s_zero()
        expected = BiSeries.monomial(generator("v"), (1, 0), order)
        return self.check("double_exp_single", list(range(1, order + 1)),
                          lambda n: same_coefficient(series, expected, (n, 0)),
                          lambda n: f"t^{n}")

    def check_exponential_product(self) -> InvariantReport:
        """
        exp_.(tv) * exp_.(W) = exp_.(tv) . exp_.(sw), where W solves
        exp_.(tv) |> W = sw.
        """
        order = self.order
        first = series_exp(time_series("v", order), "concat")
        target = time_series("w", order, key=(0, 1))
        solved = target
        for _ in range(order):
            solved = target - (first.multiply(solved, triangle, order) - solved)
        left = first.multiply(series_exp(solved, "concat"), gl_product, order)
        right = first.multiply(series_exp(target, "concat"), concat, order)
        return self.check("exponential_product", series_keys(order),
                          lambda key: same_coefficient(left, right, key),
                          lambda key: f"t^{key[0]} s^{key[1]}")
