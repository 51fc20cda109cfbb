#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Series Expansion

Computes one of the named maps to a given order and lays the result out
as a list of coefficients, one per power t^i s^j, each carrying its JSON
terms and its text rendering.
"""

from typing import Any, Callable, Dict, List, Optional, Tuple
from pydantic import BaseModel, Field, field_validator
from src.lib.core.log import Logger
from src.lib.services.algebra.beta import MAX_DOUBLE_EXP_ORDER, beta, beta_inverse, double_exp
from src.lib.services.algebra.framed import (
    framed_to_json, generator, render_framed, render_tree_magma)
from src.lib.services.algebra.kmap import MAX_PARTITION_SIZE, OrderError, k_inverse, k_map
from src.lib.services.algebra.lie import lie_to_json, render_lie
from src.lib.services.algebra.magnus import alpha, chi, lambda_map, theta, z_map
from src.lib.services.algebra.scalars import BiSeries, GradedCombo
from src.lib.services.algebra.series import bch
from src.lib.services.algebra.tensor import from_text, render_tensor, tensor_to_json


logger = Logger().get_logger()

DEFAULT_MAX_ORDERS = {
    "chi": 7,
    "theta": 7,
    "alpha": 9,
    "lambda": 9,
    "z": 7,
    "k": MAX_PARTITION_SIZE,
    "kinv": MAX_PARTITION_SIZE,
    "beta": 6,
    "betainv": 6,
    "qstar": MAX_DOUBLE_EXP_ORDER,
    "bch": 8,
}

SECOND_GENERATOR = {"lambda": "z", "qstar": "w", "bch": "w"}
FIRST_GENERATOR = {"qstar": "v", "bch": "v"}


def _encode(letter: Any) -> str:
    return letter.encode()


RENDERERS: Dict[str, Tuple[Callable[[GradedCombo], list], Callable[[GradedCombo], str]]] = {
    "lie": (lambda c: lie_to_json(c, _encode), lambda c: render_lie(c, render_tree_magma)),
    "framed": (framed_to_json, render_framed),
    "tensor": (tensor_to_json, render_tensor),
}


class Coefficient(BaseModel):
    """
    Coefficient of one power t^i s^j of an expansion.
    """
    t: int = Field(..., description="Power of t.")
    s: int = Field(..., description="Power of s.")
    terms: List[Dict[str, Any]] = Field(
        default_factory=list,
        description="JSON terms of the coefficient."
    )
    text: str = Field(
        default="0",
        exclude=True,
        description="Text rendering of the coefficient."
    )


class SeriesExpansion:
    """
    Expansion of a named map.
    """

    class Config(BaseModel):
        """
        Configuration of an expansion.
        """
        map: str = Field(
            ...,
            description="Name of the map, one of " + ", ".join(DEFAULT_MAX_ORDERS) + "."
        )
        order: int = Field(
            default=3,
            ge=1,
            description="Truncation order; the word length for k and kinv."
        )
        alphabet: str = Field(
            default="y",
            min_length=1,
            description="Generators, one character each; two-generator maps use the first two."
        )
        word: Optional[str] = Field(
            default=None,
            description="Input tree for chi and theta, forest wire form for k and kinv."
        )
        max_orders: Dict[str, int] = Field(
            default_factory=lambda: dict(DEFAULT_MAX_ORDERS),
            description="Largest accepted order per map."
        )

        @field_validator("map")
        @classmethod
        def known_map(cls, value: str) -> str:
            """Reject unknown map names."""
            if value not in DEFAULT_MAX_ORDERS:
                raise ValueError(f"Unsupported map type: {value}")
            return value

        @field_validator("alphabet")
        @classmethod
        def plain_labels(cls, value: str) -> str:
            """Every character must be a valid decoration."""
            for label in value:
                if not label.isalpha():
                    raise ValueError(f"Invalid generator label: {label!r}")
            return value

    class Result(BaseModel):
        """
        Result of an expansion.
        """
        map: str = Field(..., description="Name of the map.")
        order: int = Field(..., description="Truncation order.")
        coefficients: List[Coefficient] = Field(
            default_factory=list,
            description="Non-zero coefficients by increasing total degree."
        )

    def __init__(self, config: Dict[str, Any]):
        self.config = self.Config(**config)

    def generators(self) -> Tuple[str, str]:
        """First and second generator of the expansion."""
        name = self.config.map
        labels = list(self.config.alphabet)
        if len(labels) > 1:
            return labels[0], labels[1]
        if name in FIRST_GENERATOR and labels == ["y"]:
            return FIRST_GENERATOR[name], SECOND_GENERATOR[name]
        return labels[0], SECOND_GENERATOR.get(name, "z")

    def _check_order(self):
        name, order = self.config.map, self.config.order
        limit = self.config.max_orders.get(name, DEFAULT_MAX_ORDERS[name])
        if order > limit:
            raise OrderError(f"Order for {name} must be at most {limit}, got {order}")

    def _series(self) -> Tuple[Any, str]:
        name, order = self.config.map, self.config.order
        first, second = self.generators()
        word = self.config.word
        if name == "chi":
            return chi(word or first, order), "lie"
        if name == "theta":
            return theta(word or first, order), "lie"
        if name == "alpha":
            return alpha(first, order), "framed"
        if name == "lambda":
            return lambda_map(first, second, order), "framed"
        if name == "z":
            return z_map(first, order), "lie"
        if name == "beta":
            return beta(first, order), "framed"
        if name == "betainv":
            return beta_inverse(BiSeries.monomial(generator(first), (1, 0), order), order), "framed"
        if name == "qstar":
            return double_exp(first, second, order), "framed"
        if name == "bch":
            return bch(first, second, order), "lie"
        text = word or ".".join([first] * order)
        element = from_text(text)
        return (k_map(element) if name == "k" else k_inverse(element)), "tensor"

    def run(self) -> 'SeriesExpansion.Result':
        """
        Compute the expansion.

        :return: The coefficients with their terms and text.
        :raises OrderError: When the order exceeds the limit of the map.
        :raises TreeSyntaxError: For a malformed word.
        """
        self._check_order()
        value, kind = self._series()
        to_json, to_text = RENDERERS[kind]
        result = self.Result(map=self.config.map, order=self.config.order)
        if isinstance(value, GradedCombo):
            items = [((0, 0), value)]
        else:
            items = sorted(value.items(), key=lambda item: (sum(item[0]), -item[0][0]))
        for (i, j), coefficient in items:
            if coefficient:
                result.coefficients.append(Coefficient(
                    t=i, s=j, terms=to_json(coefficient), text=to_text(coefficient)))
        logger.info(f"Expanded {self.config.map} to order {self.config.order}: "
                    f"{len(result.coefficients)} coefficients")
        return result
