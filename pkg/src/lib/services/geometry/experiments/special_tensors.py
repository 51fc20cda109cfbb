#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Special Tensors Experiment

The tensors t_alpha and R_alpha of Lie monomials computed by the
recursions over right-normed brackets and, on chart models, from their
definition through rho. The degree-two and degree-three cases are
compared with torsion, curvature and their derivatives.
"""

from itertools import product
from typing import List
from pydantic import Field
from src.lib.core.log import Logger
from src.lib.services.algebra.lie import LieMonomial, is_lyndon, parse_lie
from src.lib.services.algebra.scalars import GradedCombo
from src.lib.services.algebra.trees import vertex
from src.lib.services.geometry.connection_models.base import BaseConnectionModel
from src.lib.services.geometry.curvature import (
    curvature, special_tensors, special_tensors_recursive, tensor_derivative, torsion)
from src.lib.services.geometry.experiments.base import BaseGeometryExperiment
from src.lib.services.geometry.experiments.error_handler import experiment_error_handler


logger = Logger().get_logger()


def lyndon_monomials(alphabet: str, max_degree: int) -> List[GradedCombo]:
    """
    Lyndon basis monomials over single-vertex letters.

    :param alphabet: Letters, one character each.
    :param max_degree: Largest degree.
    :return: Lie elements ordered by degree.
    """
    letters = [vertex(label) for label in alphabet]
    monomials = []
    for degree in range(1, max_degree + 1):
        for candidate in product(letters, repeat=degree):
            if is_lyndon(candidate):
                monomials.append(GradedCombo.basis(LieMonomial(candidate)))
    return monomials


class SpecialTensorsExperiment(BaseGeometryExperiment):
    """
    Dual-route agreement of the special tensors.
    """

    class Config(BaseGeometryExperiment.Config):
        """
        Configuration for the special tensors experiment.
        """
        alphabet: str = Field(
            default="ab",
            min_length=1,
            description="Letters of the Lie monomials."
        )
        max_degree: int = Field(
            default=3,
            ge=2,
            description="Largest degree of the Lie monomials."
        )

    @experiment_error_handler("Error running special-tensors experiment")
    def run(self, connection: BaseConnectionModel) -> BaseGeometryExperiment.Result:
        """
        Compute the residuals at random points.

        :param connection: Connection model.
        :return: Report with 'torsion', 'curvature', 'torsion_degree3',
                 'curvature_degree3' and, on chart models, one agreement
                 entry per monomial.
        """
        self._start(connection)
        points = self.sample_points(connection)
        labels = sorted(set(self.config.alphabet) | set("abcd"))
        ctx = self.random_context(connection, *labels, "z")
        z = ctx.field("z")
        a, b, c, d = (ctx.field(label) for label in "abcd")

        t_value, r_value = special_tensors_recursive(ctx, parse_lie("[a,b]"), z)
        self.record(connection, "torsion", t_value - torsion(connection, a, b), points)
        self.record(connection, "curvature", r_value - curvature(connection, a, b, z), points)

        t_value, r_value = special_tensors_recursive(ctx, parse_lie("[[a,b],c]"), d)
        expected_t = (curvature(connection, a, b, c)
                      - tensor_derivative(connection, lambda p, q: torsion(connection, p, q),
                                          c, a, b)
                      - torsion(connection, torsion(connection, a, b), c))
        expected_r = (-tensor_derivative(connection, lambda p, q, r: curvature(connection, p, q, r),
                                         c, a, b, d)
                      - curvature(connection, torsion(connection, a, b), c, d))
        self.record(connection, "torsion_degree3", t_value - expected_t, points)
        self.record(connection, "curvature_degree3", r_value - expected_r, points)

        if connection.supports_functions:
            checked = 0
            for alpha in lyndon_monomials(self.config.alphabet, self.config.max_degree):
                if alpha_degree(alpha) < 2:
                    continue
                values = special_tensors(ctx, alpha, z)
                (t_rec, r_rec), (t_dir, r_dir) = values["recursive"], values["direct"]
                name = render_label(alpha)
                self.record(connection, f"agreement_t {name}", t_rec - t_dir, points)
                self.record(connection, f"agreement_r {name}", r_rec - r_dir, points)
                checked += 1
            self.result.details["monomials"] = checked
        self.conclude()
        logger.info(
            f"Special tensors experiment on {connection.name}: passed={self.result.passed}")
        return self.result


def alpha_degree(alpha: GradedCombo) -> int:
    """Degree of a homogeneous Lie element."""
    return next(iter(alpha.items()))[0].degree


def render_label(alpha: GradedCombo) -> str:
    """Bracket text of a Lie monomial over single-vertex letters."""
    return next(iter(alpha.items()))[0].render(lambda tree: tree.label)
