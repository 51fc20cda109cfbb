#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Torsion, curvature and the curvature elements

Torsion and curvature of a connection, their covariant derivatives, the
residuals of both Bianchi identities, the curvature elements
s(a.b) = [a,b] + t(a,b) of the Grossman-Larson Lie algebra and the
special tensors t_alpha, R_alpha attached to Lie monomials.
"""

from fractions import Fraction
from typing import Callable, Dict, List, Tuple
import sympy
from src.lib.core.log import Logger
from src.lib.services.algebra.lie import (
    NotALieElementError, lie_bracket, lie_letter, lie_to_tensor, lie_to_words)
from src.lib.services.algebra.scalars import GradedCombo
from src.lib.services.algebra.tensor import gl_commutator, letter
from src.lib.services.algebra.trees import PlanarTree, vertex
from src.lib.services.geometry.connection_models.base import (
    BaseConnectionModel, VectorField)
from src.lib.services.geometry.evaluation import (
    EvalContext, Target, rho_eval, tensor_field)


logger = Logger().get_logger()


def torsion(connection: BaseConnectionModel, x: VectorField, y: VectorField) -> VectorField:
    """t(x,y) = nabla_x y - nabla_y x - [x,y]."""
    return connection.simplify(
        connection.covariant_derivative(x, y) - connection.covariant_derivative(y, x)
        - connection.jacobi_bracket(x, y))


def curvature(connection: BaseConnectionModel, x: VectorField, y: VectorField,
              z: VectorField) -> VectorField:
    """r(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z."""
    nabla = connection.covariant_derivative
    return connection.simplify(
        nabla(x, nabla(y, z)) - nabla(y, nabla(x, z))
        - nabla(connection.jacobi_bracket(x, y), z))


def tensor_derivative(connection: BaseConnectionModel, tensor: Callable[..., VectorField],
                      u: VectorField, *args: VectorField) -> VectorField:
    """
    Covariant derivative of a vector-valued tensor along u:
    (u |> T)(X1..Xn) = nabla_u T(X) - sum_i T(X1..nabla_u Xi..Xn).

    :param connection: Connection model.
    :param tensor: Tensor as a callable on fields.
    :param u: Direction.
    :param args: Arguments X1..Xn.
    :return: The field (u |> T)(X).
    """
    value = connection.covariant_derivative(u, tensor(*args))
    for index, field in enumerate(args):
        moved = args[:index] + (connection.covariant_derivative(u, field),) + args[index + 1:]
        value = value - tensor(*moved)
    return connection.simplify(value)


def bianchi_residuals(connection: BaseConnectionModel, x: VectorField, y: VectorField,
                      z: VectorField, w: VectorField) -> Tuple[VectorField, VectorField]:
    """
    Residuals of the Bianchi identities with torsion:

        sum_cyc r(x,y)z - (x |> t)(y,z) + t(x, t(y,z)) = 0
        sum_cyc (x |> r)(y,z)w - r(x, t(y,z))w = 0

    :param connection: Connection model.
    :param x: Field.
    :param y: Field.
    :param z: Field.
    :param w: Field acted on by the curvature in the second identity.
    :return: (first, second) residual fields.
    """
    def t(a, b):
        return torsion(connection, a, b)

    def r(a, b, c):
        return curvature(connection, a, b, c)

    first = connection.zero_field()
    second = connection.zero_field()
    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
        first = first + r(a, b, c) - tensor_derivative(connection, t, a, b, c) + t(a, t(b, c))
        second = second + tensor_derivative(connection, r, a, b, c, w) - r(a, t(b, c), w)
    return connection.simplify(first), connection.simplify(second)


class ElementBuilder:
    """
    Builds elements of the Grossman-Larson Lie algebra over generator
    letters. Fields without a generator, such as t(a,b), get a fresh
    letter bound in the context.
    """

    def __init__(self, ctx: EvalContext):
        self.ctx = ctx
        self._count = 0

    def bind(self, field: VectorField) -> str:
        """
        A fresh generator bound to a field.

        :param field: Field.
        :return: The generator label.
        """
        self._count += 1
        label = f"aux{self._count}"
        self.ctx = self.ctx.bind(**{label: field})
        return label

    def generator(self, label: str) -> GradedCombo:
        """The letter of a generator."""
        return letter(vertex(label))

    def curvature_element(self, a: str, b: str) -> GradedCombo:
        """
        s(a.b) = [a,b] + t(a,b), acting as r(a,b) on fields and as zero on
        functions.

        :param a: Generator.
        :param b: Generator.
        :return: Tensor element.
        """
        connection = self.ctx.connection
        t_label = self.bind(torsion(connection, self.ctx.field(a), self.ctx.field(b)))
        bracket = lie_bracket(lie_letter(vertex(a)), lie_letter(vertex(b)))
        return lie_to_tensor(bracket) + self.generator(t_label)

    def gl_bracket(self, a: str, element: GradedCombo) -> GradedCombo:
        """[[a, element]] for the Grossman-Larson product."""
        return gl_commutator(self.generator(a), element)

    def kernel_element(self, a: str, b: str, c: str) -> GradedCombo:
        """
        The Bianchi element
        [[a,s(b.c)]] + [[b,s(c.a)]] + [[c,s(a.b)]] + s(a.[b,c]) + s(b.[c,a]) + s(c.[a,b])
        with [.,.] the Jacobi bracket of fields.

        :param a: Generator.
        :param b: Generator.
        :param c: Generator.
        :return: Tensor element annihilating every field.
        """
        connection = self.ctx.connection
        total = GradedCombo.zero()
        for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
            total = total + self.gl_bracket(p, self.curvature_element(q, r))
            jacobi = self.bind(connection.jacobi_bracket(self.ctx.field(q), self.ctx.field(r)))
            total = total + self.curvature_element(p, jacobi)
        return total


def curvature_element_check(ctx: EvalContext, a: str, b: str, z: VectorField,
                                function: sympy.Expr = None) -> Dict[str, VectorField]:
    """
    Residuals of s(a.b) |> z = r(a,b)z and, on chart models,
    s(a.b) |> f = 0.

    :param ctx: Context binding a and b.
    :param a: Generator.
    :param b: Generator.
    :param z: Field acted on.
    :param function: Function of the coordinates, chart models only.
    :return: Map from check name to residual; the function residual is a
             one-component field.
    """
    builder = ElementBuilder(ctx)
    element = builder.curvature_element(a, b)
    connection = ctx.connection
    expected = curvature(connection, ctx.field(a), ctx.field(b), z)
    residuals = {"action": connection.simplify(rho_eval(builder.ctx, element, z) - expected)}
    if function is not None:
        value = sympy.sympify(rho_eval(builder.ctx, element, function))
        residuals["function"] = VectorField((value,) + (sympy.Integer(0),) * (connection.dim - 1))
    return residuals


def kernel_element_check(ctx: EvalContext, a: str, b: str, c: str, d: VectorField,
                             u: str = None) -> Dict[str, VectorField]:
    """
    Residual of the Bianchi element acting on d, and of the derivative
    identities of the curvature:

        nabla_u(r(b,c)d) - r(b,c)nabla_u d = [[u,s(b.c)]] |> d
        (u |> r)(b,c)d = ([[u,s(b.c)]] - s(u|>b . c) - s(b . u|>c)) |> d

    :param ctx: Context binding a, b, c (and u).
    :param a: Generator.
    :param b: Generator.
    :param c: Generator.
    :param d: Field acted on.
    :param u: Generator for the derivative identities, a when omitted.
    :return: Map from check name to residual field.
    """
    connection = ctx.connection
    u = u or a
    builder = ElementBuilder(ctx)
    element = builder.kernel_element(a, b, c)
    residuals = {"kernel": rho_eval(builder.ctx, element, d)}

    field_u, field_b, field_c = (builder.ctx.field(label) for label in (u, b, c))
    commutator = builder.gl_bracket(u, builder.curvature_element(b, c))
    lhs = (connection.covariant_derivative(field_u, curvature(connection, field_b, field_c, d))
           - curvature(connection, field_b, field_c, connection.covariant_derivative(field_u, d)))
    residuals["commutator"] = connection.simplify(lhs - rho_eval(builder.ctx, commutator, d))

    ub = builder.bind(connection.covariant_derivative(field_u, field_b))
    uc = builder.bind(connection.covariant_derivative(field_u, field_c))
    element = (commutator - builder.curvature_element(ub, c)
               - builder.curvature_element(b, uc))
    derivative = tensor_derivative(
        connection, lambda x, y, z: curvature(connection, x, y, z), field_u, field_b, field_c, d)
    residuals["derivative"] = connection.simplify(derivative - rho_eval(builder.ctx, element, d))
    return residuals


def _check_monomial(alpha: GradedCombo) -> List[Tuple[Tuple[PlanarTree, ...], Fraction]]:
    if not alpha:
        raise NotALieElementError("The zero element is not a Lie monomial")
    degrees = {monomial.degree for monomial, _ in alpha.items()}
    if len(degrees) != 1:
        raise NotALieElementError("Special tensors need a homogeneous Lie element")
    words = list(lie_to_words(alpha).items())
    for letters, _ in words:
        if any(tree.children for tree in letters):
            raise NotALieElementError("Special tensors need single-vertex letters")
    return words


def _right_normed_t(connection: BaseConnectionModel, fields: Tuple[VectorField, ...],
                    cache: dict) -> VectorField:
    key = ("t", fields)
    if key in cache:
        return cache[key]
    if len(fields) == 1:
        value = -fields[0]
    else:
        head, rest = fields[0], fields[1:]
        t_rest = _right_normed_t(connection, rest, cache)
        value = tensor_derivative(
            connection, lambda *args: _right_normed_t(connection, args, cache), head, *rest)
        value = (value - torsion(connection, head, t_rest)
                 - _right_normed_r(connection, rest, head, cache))
    cache[key] = connection.simplify(value)
    return cache[key]


def _right_normed_r(connection: BaseConnectionModel, fields: Tuple[VectorField, ...],
                    z: VectorField, cache: dict) -> VectorField:
    key = ("r", fields, z)
    if key in cache:
        return cache[key]
    if len(fields) == 1:
        value = connection.zero_field()
    else:
        head, rest = fields[0], fields[1:]
        t_rest = _right_normed_t(connection, rest, cache)
        value = tensor_derivative(
            connection, lambda *args: _right_normed_r(connection, args[:-1], args[-1], cache),
            head, *rest, z)
        value = value - curvature(connection, head, t_rest, z)
    cache[key] = connection.simplify(value)
    return cache[key]


def special_tensors_recursive(ctx: EvalContext, alpha: GradedCombo,
                              z: VectorField) -> Tuple[VectorField, VectorField]:
    """
    t_alpha and R_alpha from the recursions over right-normed brackets
    alpha = [x, beta]:

        t_alpha(X) = (x |> t_beta)(X) - t(x, t_beta(X)) - R_beta(X, x)
        R_alpha(X, z) = (x |> R_beta)(X, z) - r(x, t_beta(X))z

    starting from t_x = -x and R_x = 0. A Lie element P of degree n is
    expanded as (1/n) sum_w c_w [w1,[w2,...]].

    :param ctx: Context binding the letters of alpha.
    :param alpha: Homogeneous Lie element over single-vertex letters.
    :param z: Last argument of R_alpha.
    :return: (t_alpha, R_alpha z).
    :raises NotALieElementError: For other input.
    """
    connection = ctx.connection
    words = _check_monomial(alpha)
    cache: dict = {}
    t_value = connection.zero_field()
    r_value = connection.zero_field()
    for letters, coeff in words:
        fields = tuple(ctx.field(tree.label) for tree in letters)
        weight = sympy.Rational(coeff.numerator, coeff.denominator) / len(letters)
        t_value = t_value + _right_normed_t(connection, fields, cache) * weight
        r_value = r_value + _right_normed_r(connection, fields, z, cache) * weight
    return connection.simplify(t_value), connection.simplify(r_value)


def special_tensors_direct(ctx: EvalContext, alpha: GradedCombo,
                           z: VectorField) -> Tuple[VectorField, VectorField]:
    """
    t_alpha = -rho(alpha) and R_alpha z = rho(alpha) |> z - nabla_{rho(alpha)} z
    on a chart model.

    :param ctx: Context binding the letters of alpha; chart model.
    :param alpha: Homogeneous Lie element over single-vertex letters.
    :param z: Last argument of R_alpha.
    :return: (t_alpha, R_alpha z).
    :raises NotALieElementError: For other input.
    :raises ModelError: On models without functions.
    """
    _check_monomial(alpha)
    connection = ctx.connection
    element = lie_to_tensor(alpha)
    field = tensor_field(ctx, element)
    action: Target = rho_eval(ctx, element, z)
    return (connection.simplify(-field),
            connection.simplify(action - connection.covariant_derivative(field, z)))


def post_lie_residuals(connection: BaseConnectionModel, x: VectorField, y: VectorField,
                       z: VectorField) -> Tuple[VectorField, VectorField]:
    """
    Residuals of the post-Lie identities for |> = nabla and
    [x,y] = -t(x,y):

        x |> [y,z] - [x |> y, z] - [y, x |> z]
        [x,y] |> z - a(x,y,z) + a(y,x,z), a(x,y,z) = x|>(y|>z) - (x|>y)|>z

    Both vanish for flat connections with parallel torsion.

    :param connection: Connection model.
    :param x: Field.
    :param y: Field.
    :param z: Field.
    :return: The two residual fields.
    """
    nabla = connection.covariant_derivative

    def bracket(p, q):
        return -torsion(connection, p, q)

    def associator(p, q, r):
        return nabla(p, nabla(q, r)) - nabla(nabla(p, q), r)

    first = nabla(x, bracket(y, z)) - bracket(nabla(x, y), z) - bracket(y, nabla(x, z))
    second = nabla(bracket(x, y), z) - associator(x, y, z) + associator(y, x, z)
    return connection.simplify(first), connection.simplify(second)


def special_tensors(ctx: EvalContext, alpha: GradedCombo,
                    z: VectorField) -> Dict[str, Tuple[VectorField, VectorField]]:
    """
    t_alpha and R_alpha z by the recursions and, on chart models, from the
    definition.

    :param ctx: Context binding the letters of alpha.
    :param alpha: Homogeneous Lie element over single-vertex letters.
    :param z: Last argument of R_alpha.
    :return: {'recursive': (t, R)} plus {'direct': (t, R)} on chart models.
    :raises NotALieElementError: For other input.
    """
    values = {"recursive": special_tensors_recursive(ctx, alpha, z)}
    if ctx.connection.supports_functions:
        values["direct"] = special_tensors_direct(ctx, alpha, z)
    return values
