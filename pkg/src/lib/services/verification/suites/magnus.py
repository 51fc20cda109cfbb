#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Magnus Suite

Identities of the post-Lie Magnus expansion in one generator y, each
checked one power of t at a time up to the suite order.
"""

from fractions import Fraction
from typing import Callable, List
from src.lib.services.algebra import framed
from src.lib.services.algebra.kmap import k_map
from src.lib.services.algebra.lie import lie_bracket, lie_letter
from src.lib.services.algebra.magnus import (
    alpha, alpha_lie, alpha_nonplanar, alpha_tensor, chi, connes_moscovici, lambda_map,
    magnus_omega, theta, z_map)
from src.lib.services.algebra.scalars import BiSeries
from src.lib.services.algebra.series import as_tensor_series, bch, series_exp, time_series
from src.lib.services.algebra.tensor import concat, is_primitive, letter, triangle
from src.lib.services.algebra.trees import vertex
from src.lib.services.verification.suites.base import BaseVerificationSuite, InvariantReport


GENERATOR = "y"
MAX_SERIES_ORDER = 6


def agree(left: BiSeries, right: BiSeries, degree: int) -> bool:
    """True when the two series share their t^degree coefficient."""
    return left.coefficient(degree) == right.coefficient(degree)


class MagnusSuite(BaseVerificationSuite):
    """
    Invariants of chi, theta, alpha, lambda, Z and BCH.
    """

    def invariants(self) -> List[Callable[[], InvariantReport]]:
        return [
            self.check_exponentials,
            self.check_intriguing_identity,
            self.check_flow_equation,
            self.check_lambda_flow,
            self.check_chi_primitive,
            self.check_theta_inverse,
            self.check_generating_ode,
            self.check_connes_moscovici,
            self.check_z_routes,
            self.check_chi_magnus,
            self.check_bch,
        ]

    @property
    def order(self) -> int:
        """Series order examined: one above the degree, at most six."""
        return min(self.config.max_degree + 1, MAX_SERIES_ORDER)

    def degrees(self, start: int = 1) -> List[int]:
        """Powers of t examined."""
        return list(range(start, self.order + 1))

    def chi_tensor(self) -> BiSeries:
        """chi(ty) with tensor coefficients."""
        return as_tensor_series(chi(GENERATOR, self.order))

    def check_exponentials(self) -> InvariantReport:
        """exp_*(chi(ty)) = exp_.(ty)."""
        left = series_exp(self.chi_tensor(), "gl")
        right = series_exp(time_series(GENERATOR, self.order), "concat")
        return self.check("exp_chi", self.degrees(), lambda n: agree(left, right, n),
                          lambda n: f"t^{n}")

    def check_intriguing_identity(self) -> InvariantReport:
        """exp_*(-chi(ty)) |> y = exp(-t delta_y) y."""
        acting = series_exp(self.chi_tensor() * -1, "gl")
        target = BiSeries.monomial(letter(vertex(GENERATOR)), (0, 0), self.order)
        left = acting.multiply(target, triangle, self.order)
        right = alpha_tensor(GENERATOR, self.order)
        return self.check("intriguing_identity", self.degrees(0),
                          lambda n: agree(left, right, n), lambda n: f"t^{n}")

    def check_flow_equation(self) -> InvariantReport:
        """d/dt alpha = -alpha |> alpha."""
        series = alpha(GENERATOR, self.order)
        left = series.derivative_t()
        right = series.multiply(series, framed.triangle, self.order) * -1
        return self.check("flow_equation", self.degrees(0)[:-1],
                          lambda n: agree(left, right, n), lambda n: f"t^{n}")

    def check_lambda_flow(self) -> InvariantReport:
        """d/dt lambda(ty, z) = -alpha(y, t) |> lambda(ty, z)."""
        order = min(self.order, MAX_SERIES_ORDER - 1)
        weighted = lambda_map(GENERATOR, "z", order)
        left = weighted.derivative_t()
        right = alpha(GENERATOR, order).multiply(weighted, framed.triangle, order) * -1
        return self.check("lambda_flow", list(range(order)),
                          lambda n: agree(left, right, n), lambda n: f"t^{n}")

    def check_chi_primitive(self) -> InvariantReport:
        """Every coefficient of chi is primitive."""
        series = self.chi_tensor()
        return self.check("chi_primitive", self.degrees(),
                          lambda n: is_primitive(series.coefficient(n)), lambda n: f"t^{n}")

    def check_theta_inverse(self) -> InvariantReport:
        """theta(chi(ty)) = ty = chi(theta(ty))."""
        expected = time_series(GENERATOR, self.order)
        there = as_tensor_series(theta(chi(GENERATOR, self.order), self.order))
        back = as_tensor_series(chi(theta(GENERATOR, self.order), self.order))
        return self.check("theta_chi", self.degrees(),
                          lambda n: agree(there, expected, n) and agree(back, expected, n),
                          lambda n: f"t^{n}")

    def check_generating_ode(self) -> InvariantReport:
        """d/dt K(exp_.(ty)) = K(exp_.(ty)) . alpha(y, t)."""
        generating = series_exp(time_series(GENERATOR, self.order), "concat").map_coefficients(k_map)
        left = generating.derivative_t()
        right = generating.multiply(alpha_tensor(GENERATOR, self.order), concat, self.order)
        return self.check("generating_ode", self.degrees(0)[:-1],
                          lambda n: agree(left, right, n), lambda n: f"t^{n}")

    def check_connes_moscovici(self) -> InvariantReport:
        """Planar alpha grouped by shape matches the non-planar grafting count."""
        return self.check("connes_moscovici", self.degrees(0),
                          lambda n: alpha_nonplanar(n, GENERATOR) == connes_moscovici(n, GENERATOR),
                          lambda n: f"t^{n}")

    def check_z_routes(self) -> InvariantReport:
        """Z from its recursion equals K(chi) and the concatenation Magnus series of alpha."""
        recursive = z_map(GENERATOR, self.order)
        magnus = magnus_omega(alpha_lie(GENERATOR, self.order), self.order, "concat")
        return self.check("z_routes", self.degrees(),
                          lambda n: agree(recursive, magnus, n), lambda n: f"t^{n}")

    def check_chi_magnus(self) -> InvariantReport:
        """chi is the Grossman-Larson Magnus series of alpha."""
        direct = chi(GENERATOR, self.order)
        magnus = magnus_omega(alpha_lie(GENERATOR, self.order), self.order, "gl")
        return self.check("chi_magnus", self.degrees(),
                          lambda n: agree(direct, magnus, n), lambda n: f"t^{n}")

    def check_bch(self) -> InvariantReport:
        """Low-order BCH coefficients v, w, [v,w]/2 and [[v,w],w-v]/12."""
        v, w = lie_letter(vertex("v")), lie_letter(vertex("w"))
        vw = lie_bracket(v, w)
        expected = {
            (1, 0): v,
            (0, 1): w,
            (1, 1): vw * Fraction(1, 2),
            (1, 2): lie_bracket(vw, w) * Fraction(1, 12),
            (2, 1): lie_bracket(vw, v) * Fraction(-1, 12),
        }
        series = bch("v", "w", 3)
        return self.check("bch_low_order", sorted(expected),
                          lambda key: series.coefficient(*key) == expected[key],
                          lambda key: f"t^{key[0]} s^{key[1]}")
