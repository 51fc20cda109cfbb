#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Scalars and Series

Exact rational scalars, graded linear combinations over an ordered basis
and truncated formal series in one or two indeterminates (t, s).

Basis elements are arbitrary hashable objects exposing ``degree`` and
``sort_key`` attributes; tuples of such objects (tensor squares) are
accepted as well, their degree and key being taken componentwise.
"""

from __future__ import annotations
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Any, Callable, Dict, Iterable, Iterator, List, Mapping, Tuple, Union
from src.lib.core.log import Logger


logger = Logger().get_logger()

Rational = Fraction
Scalar = Union[int, Fraction]
SeriesKey = Tuple[int, int]


def sort_key_of(basis: Any) -> Any:
    """
    Canonical ordering key of a basis element.

    :param basis: Basis element or tuple of basis elements.
    :return: A totally ordered key.
    """
    if isinstance(basis, tuple):
        return tuple(sort_key_of(item) for item in basis)
    return basis.sort_key


def degree_of(basis: Any) -> int:
    """
    Degree of a basis element (sum of degrees for tuples).

    :param basis: Basis element or tuple of basis elements.
    :return: Non-negative degree.
    """
    if isinstance(basis, tuple):
        return sum(degree_of(item) for item in basis)
    return basis.degree


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """
    Bernoulli numbers with the convention B_1 = +1/2.

    Generated by x/(1 - e^(-x)); all other values coincide with the
    classical numbers, so B_(2k+1) = 0 for k >= 1.

    :param n: Non-negative index.
    :return: The exact Bernoulli number.
    :raises ValueError: If n is negative.
    """
    if n < 0:
        raise ValueError(f"Bernoulli index must be non-negative, got {n}")
    if n == 0:
        return Fraction(1)
    total = sum(comb(n + 1, k) * bernoulli(k) for k in range(n))
    return (Fraction(n + 1) - total) / (n + 1)


def bernoulli_weight(m: int) -> Fraction:
    """
    Weight of the m-fold nested commutator in the Magnus recursions.

    :param m: Nesting depth.
    :return: bernoulli(m) / m!
    """
    return bernoulli(m) / factorial(m)


def rational_to_json(value: Scalar) -> Dict[str, str]:
    """
    Serialize a rational as decimal strings.

    :param value: Rational value.
    :return: Dictionary with 'num' and 'den'.
    """
    value = Fraction(value)
    return {"num": str(value.numerator), "den": str(value.denominator)}


def rational_from_json(data: Mapping[str, str]) -> Fraction:
    """
    Parse a rational serialized by rational_to_json.

    :param data: Dictionary with 'num' and 'den'.
    :return: The rational value.
    """
    return Fraction(int(data["num"]), int(data["den"]))


def format_rational(value: Scalar) -> str:
    """
    Human readable rational, e.g. '1/12' or '-2'.

    :param value: Rational value.
    :return: String form.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_terms(pairs: Iterable[Tuple[Scalar, str]]) -> str:
    """
    Join (coefficient, body) pairs into '1/2 a - b + 2 c'.

    :param pairs: Coefficients with rendered basis elements.
    :return: The text, '0' when empty.
    """
    parts = []
    for coeff, body in pairs:
        sign = "-" if coeff < 0 else "+"
        magnitude = abs(Fraction(coeff))
        text = body if magnitude == 1 else f"{format_rational(magnitude)} {body}"
        parts.append((sign, text))
    if not parts:
        return "0"
    first_sign, first_text = parts[0]
    head = first_text if first_sign == "+" else f"-{first_text}"
    return " ".join([head] + [f"{sign} {text}" for sign, text in parts[1:]])


class GradedCombo:
    """
    Immutable finite linear combination of basis elements with exact
    rational coefficients. Zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Any, Scalar] = None):
        """
        Build a combination from a mapping basis -> coefficient.

        :param terms: Mapping of basis elements to coefficients.
        """
        cleaned = {}
        for basis, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                cleaned[basis] = coeff
        self._terms = cleaned
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Any, Fraction]) -> GradedCombo:
        combo = cls.__new__(cls)
        combo._terms = terms
        combo._hash = None
        return combo

    @classmethod
    def zero(cls) -> GradedCombo:
        """Return the zero combination."""
        return cls._wrap({})

    @classmethod
    def basis(cls, element: Any, coeff: Scalar = 1) -> GradedCombo:
        """
        Single-term combination.

        :param element: Basis element.
        :param coeff: Coefficient.
        :return: coeff * element.
        """
        return cls({element: coeff})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Any, Scalar]]) -> GradedCombo:
        """
        Accumulate (basis, coefficient) pairs, merging like terms.

        :param pairs: Iterable of pairs.
        :return: The merged combination.
        """
        acc: Dict[Any, Fraction] = {}
        for basis, coeff in pairs:
            acc[basis] = acc.get(basis, 0) + coeff
        return cls._wrap({b: Fraction(c) for b, c in acc.items() if c})

    @classmethod
    def sum(cls, combos: Iterable[Tuple[Scalar, GradedCombo]]) -> GradedCombo:
        """
        Exact linear combination of combinations.

        :param combos: Iterable of (scalar, combo).
        :return: The sum.
        """
        acc: Dict[Any, Fraction] = {}
        for scalar, combo in combos:
            if not scalar:
                continue
            for basis, coeff in combo._terms.items():
                acc[basis] = acc.get(basis, 0) + scalar * coeff
        return cls._wrap({b: c for b, c in acc.items() if c})

    def items(self) -> Iterable[Tuple[Any, Fraction]]:
        """Unordered (basis, coefficient) view."""
        return self._terms.items()

    def terms(self) -> List[Tuple[Any, Fraction]]:
        """
        Terms in canonical basis order.

        :return: Sorted list of (basis, coefficient).
        """
        return sorted(self._terms.items(), key=lambda item: sort_key_of(item[0]))

    def coefficient(self, element: Any) -> Fraction:
        """
        Coefficient of a basis element.

        :param element: Basis element.
        :return: The coefficient, zero when absent.
        """
        return self._terms.get(element, Fraction(0))

    def degree(self) -> int:
        """Maximal degree of a term, -1 for the zero combination."""
        return max((degree_of(b) for b in self._terms), default=-1)

    def homogeneous(self, degree: int) -> GradedCombo:
        """
        Degree component.

        :param degree: Requested degree.
        :return: The terms of that degree.
        """
        return GradedCombo._wrap(
            {b: c for b, c in self._terms.items() if degree_of(b) == degree})

    def filter(self, predicate: Callable[[Any], bool]) -> GradedCombo:
        """Keep the terms whose basis element satisfies the predicate."""
        return GradedCombo._wrap({b: c for b, c in self._terms.items() if predicate(b)})

    def map_linear(self, func: Callable[[Any], GradedCombo]) -> GradedCombo:
        """
        Extend a map on basis elements linearly.

        :param func: Map from a basis element to a combination.
        :return: The image of the combination.
        """
        return GradedCombo.sum((coeff, func(basis)) for basis, coeff in self._terms.items())

    def map_basis(self, func: Callable[[Any], Any]) -> GradedCombo:
        """Relabel basis elements, merging collisions."""
        return GradedCombo.from_pairs((func(b), c) for b, c in self._terms.items())

    def bilinear(self, other: GradedCombo,
                 func: Callable[[Any, Any], GradedCombo]) -> GradedCombo:
        """
        Extend a map on pairs of basis elements bilinearly.

        :param other: Right argument.
        :param func: Map from (basis, basis) to a combination.
        :return: The image of (self, other).
        """
        return GradedCombo.sum(
            (c1 * c2, func(b1, b2))
            for b1, c1 in self._terms.items()
            for b2, c2 in other._terms.items())

    def coefficient_mass(self) -> Fraction:
        """Sum of all coefficients."""
        return sum(self._terms.values(), Fraction(0))

    def __add__(self, other: GradedCombo) -> GradedCombo:
        if isinstance(other, int) and other == 0:
            return self
        return GradedCombo.sum(((1, self), (1, other)))

    __radd__ = __add__

    def __sub__(self, other: GradedCombo) -> GradedCombo:
        return GradedCombo.sum(((1, self), (-1, other)))

    def __neg__(self) -> GradedCombo:
        return GradedCombo._wrap({b: -c for b, c in self._terms.items()})

    def __mul__(self, scalar: Scalar) -> GradedCombo:
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if not scalar:
            return GradedCombo.zero()
        return GradedCombo._wrap({b: c * scalar for b, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> GradedCombo:
        return self * (Fraction(1) / Fraction(scalar))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, GradedCombo):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Any]:
        return iter(basis for basis, _ in self.terms())

    def __contains__(self, element: Any) -> bool:
        return element in self._terms

    def __repr__(self) -> str:
        if not self._terms:
            return "GradedCombo(0)"
        body = " + ".join(f"{format_rational(c)}*{b!r}" for b, c in self.terms())
        return f"GradedCombo({body})"


def combo_linear(ops: Iterable[Tuple[Scalar, GradedCombo]]) -> GradedCombo:
    """
    Exact linear combination of graded combinations.

    :param ops: Iterable of (scalar, combo) pairs.
    :return: The combination with zero terms dropped.
    """
    return GradedCombo.sum(ops)


class BiSeries:
    """
    Truncated formal series in t and s with GradedCombo coefficients.

    The coefficient of t^i s^j is stored under the key (i, j); only keys
    with i + j <= order are kept and zero coefficients are dropped.
    """

    __slots__ = ("_coefficients", "order")

    def __init__(self, coefficients: Mapping[SeriesKey, GradedCombo] = None, order: int = 0):
        """
        :param coefficients: Mapping (t-degree, s-degree) -> coefficient.
        :param order: Truncation order N.
        """
        if order < 0:
            raise ValueError(f"Series order must be non-negative, got {order}")
        self.order = order
        self._coefficients = {
            key: value for key, value in (coefficients or {}).items()
            if value and key[0] + key[1] <= order}

    @classmethod
    def univariate(cls, coefficients: Mapping[int, GradedCombo], order: int) -> BiSeries:
        """
        Series in t only.

        :param coefficients: Mapping t-degree -> coefficient.
        :param order: Truncation order.
        :return: The series.
        """
        return cls({(k, 0): value for k, value in coefficients.items()}, order)

    @classmethod
    def monomial(cls, value: GradedCombo, key: SeriesKey, order: int) -> BiSeries:
        """Single coefficient series value * t^i s^j."""
        return cls({key: value}, order)

    def keys(self) -> List[SeriesKey]:
        """Stored keys ordered by total degree, then t-degree descending."""
        return sorted(self._coefficients, key=lambda k: (k[0] + k[1], -k[0]))

    def items(self) -> List[Tuple[SeriesKey, GradedCombo]]:
        """Stored coefficients in key order."""
        return [(key, self._coefficients[key]) for key in self.keys()]

    def coefficient(self, t_degree: int, s_degree: int = 0) -> GradedCombo:
        """
        Coefficient of t^i s^j.

        :param t_degree: Power of t.
        :param s_degree: Power of s.
        :return: The coefficient, zero when absent.
        """
        return self._coefficients.get((t_degree, s_degree), GradedCombo.zero())

    def constant(self) -> GradedCombo:
        """Coefficient of t^0 s^0."""
        return self.coefficient(0, 0)

    def total_degree_part(self, degree: int) -> BiSeries:
        """Terms with i + j equal to the given degree."""
        return BiSeries(
            {k: v for k, v in self._coefficients.items() if k[0] + k[1] == degree},
            self.order)

    def with_order(self, order: int) -> BiSeries:
        """Same coefficients with another truncation order (terms beyond it dropped)."""
        return BiSeries(self._coefficients, order)

    def map_coefficients(self, func: Callable[[GradedCombo], GradedCombo]) -> BiSeries:
        """Apply a linear map to every coefficient."""
        return BiSeries({k: func(v) for k, v in self._coefficients.items()}, self.order)

    def shift(self, t_shift: int = 0, s_shift: int = 0) -> BiSeries:
        """Multiply by t^a s^b."""
        return BiSeries(
            {(k[0] + t_shift, k[1] + s_shift): v for k, v in self._coefficients.items()},
            self.order)

    def multiply(self, other: BiSeries,
                 product: Callable[[GradedCombo, GradedCombo], GradedCombo],
                 order: int = None) -> BiSeries:
        """
        Truncated Cauchy product with a pluggable coefficient product.

        :param other: Right factor.
        :param product: Bilinear product of coefficients.
        :param order: Truncation order, defaults to the smaller order.
        :return: The product series.
        """
        order = min(self.order, other.order) if order is None else order
        acc: Dict[SeriesKey, List[Tuple[int, GradedCombo]]] = {}
        for (i1, j1), left in self._coefficients.items():
            for (i2, j2), right in other._coefficients.items():
                if i1 + i2 + j1 + j2 > order:
                    continue
                acc.setdefault((i1 + i2, j1 + j2), []).append((1, product(left, right)))
        return BiSeries({k: GradedCombo.sum(v) for k, v in acc.items()}, order)

    def derivative_t(self) -> BiSeries:
        """Formal d/dt."""
        return BiSeries(
            {(i - 1, j): value * i for (i, j), value in self._coefficients.items() if i > 0},
            self.order)

    def integrate_t(self) -> BiSeries:
        """Formal integral from 0 to t, t^k -> t^(k+1)/(k+1)."""
        return BiSeries(
            {(i + 1, j): value / (i + 1) for (i, j), value in self._coefficients.items()},
            self.order)

    def substitute_s_zero(self) -> BiSeries:
        """Set s = 0."""
        return BiSeries(
            {k: v for k, v in self._coefficients.items() if k[1] == 0}, self.order)

    def __add__(self, other: BiSeries) -> BiSeries:
        order = min(self.order, other.order)
        keys = set(self._coefficients) | set(other._coefficients)
        return BiSeries({k: self.coefficient(*k) + other.coefficient(*k) for k in keys}, order)

    def __sub__(self, other: BiSeries) -> BiSeries:
        return self + (-other)

    def __neg__(self) -> BiSeries:
        return BiSeries({k: -v for k, v in self._coefficients.items()}, self.order)

    def __mul__(self, scalar: Scalar) -> BiSeries:
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return BiSeries({k: v * scalar for k, v in self._coefficients.items()}, self.order)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(frozenset(self._coefficients.items()))

    def __bool__(self) -> bool:
        return bool(self._coefficients)

    def __repr__(self) -> str:
        body = ", ".join(f"t^{i}s^{j}: {v!r}" for (i, j), v in self.items())
        return f"BiSeries(order={self.order}, {{{body}}})"
