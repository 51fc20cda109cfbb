#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Free Lie algebras in the Lyndon basis

Letters are arbitrary interned objects carrying ``degree`` and
``sort_key`` (planar trees, framed atoms). A word is a tuple of letters;
a Lie basis element is a Lyndon word bracketed by its standard
factorization (longest proper Lyndon suffix).

Conversion from words to the Lyndon basis uses the triangularity of the
bracket polynomials: P_w = w + (lexicographically larger words).
"""

from __future__ import annotations
import heapq
from functools import lru_cache
from typing import Any, Callable, Dict, Optional, Sequence, Tuple
import pyparsing as pp
from src.lib.core.log import Logger
from src.lib.services.algebra.scalars import GradedCombo, format_terms, rational_to_json
from src.lib.services.algebra.trees import LABEL_PATTERN, Forest, TreeSyntaxError, vertex


logger = Logger().get_logger()

Word = Tuple[Any, ...]


class NotALieElementError(ValueError):
    """The element is not in the free Lie algebra (not primitive)."""


def word_key(letters: Sequence[Any]) -> tuple:
    """Lexicographic key of a word."""
    return tuple(letter.sort_key for letter in letters)


def is_lyndon(letters: Sequence[Any]) -> bool:
    """
    A non-empty word strictly smaller than each of its proper suffixes.

    :param letters: The word.
    :return: True for Lyndon words.
    """
    key = word_key(letters)
    if not key:
        return False
    return all(key < key[index:] for index in range(1, len(key)))


def standard_factorization(letters: Sequence[Any]) -> Tuple[Word, Word]:
    """
    Split a Lyndon word of length >= 2 as u v with v its longest proper
    Lyndon suffix.

    :param letters: Lyndon word.
    :return: (u, v).
    :raises ValueError: For words of length one.
    """
    letters = tuple(letters)
    if len(letters) < 2:
        raise ValueError("A letter has no standard factorization")
    for index in range(1, len(letters)):
        if is_lyndon(letters[index:]):
            return letters[:index], letters[index:]
    raise ValueError("Word has no Lyndon suffix")  # unreachable for words of length >= 2


class LieMonomial:
    """
    Lyndon basis element of a free Lie algebra.
    """

    __slots__ = ("letters", "degree", "sort_key", "_hash", "_factors")

    def __init__(self, letters: Sequence[Any]):
        self.letters = tuple(letters)
        self.degree = sum(letter.degree for letter in self.letters)
        self.sort_key = (self.degree, word_key(self.letters))
        self._hash = hash(self.letters)
        self._factors = None

    @property
    def is_letter(self) -> bool:
        """True for single letters."""
        return len(self.letters) == 1

    @property
    def factors(self) -> Optional[Tuple[LieMonomial, LieMonomial]]:
        """Bracket factors (left, right), None for a letter."""
        if self.is_letter:
            return None
        if self._factors is None:
            left, right = standard_factorization(self.letters)
            self._factors = (LieMonomial(left), LieMonomial(right))
        return self._factors

    def render(self, letter_render: Callable[[Any], str] = str,
               brackets: Tuple[str, str] = ("[", "]")) -> str:
        """
        Bracketed form such as '[a,[a,b]]'.

        :param letter_render: Rendering of a letter.
        :param brackets: Opening and closing bracket strings.
        :return: Text form.
        """
        if self.is_letter:
            return letter_render(self.letters[0])
        left, right = self.factors
        return (f"{brackets[0]}{left.render(letter_render, brackets)},"
                f"{right.render(letter_render, brackets)}{brackets[1]}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LieMonomial) and self.letters == other.letters

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"LieMonomial({self.render()})"


def lie_letter(letter: Any) -> GradedCombo:
    """Lie element of a single letter."""
    return GradedCombo.basis(LieMonomial((letter,)))


@lru_cache(maxsize=None)
def _bracket_polynomial(monomial: LieMonomial) -> GradedCombo:
    if monomial.is_letter:
        return GradedCombo.basis(monomial.letters)
    left, right = monomial.factors
    return word_commutator(_bracket_polynomial(left), _bracket_polynomial(right))


def bracket_polynomial(monomial: LieMonomial) -> GradedCombo:
    """
    Expansion of a Lie basis element into words.

    :param monomial: Lyndon basis element.
    :return: Combination over word tuples.
    """
    return _bracket_polynomial(monomial)


def word_concat(left: GradedCombo, right: GradedCombo) -> GradedCombo:
    """Concatenation of combinations over word tuples."""
    return left.bilinear(right, lambda u, v: GradedCombo.basis(u + v))


def word_commutator(left: GradedCombo, right: GradedCombo) -> GradedCombo:
    """Commutator of combinations over word tuples."""
    return word_concat(left, right) - word_concat(right, left)


def words_to_lie(words: GradedCombo) -> GradedCombo:
    """
    Rewrite a combination of words in the Lyndon basis.

    :param words: Combination over word tuples.
    :return: Combination over LieMonomial.
    :raises NotALieElementError: When the words do not form a Lie element.
    """
    remaining: Dict[Word, Any] = dict(words.items())
    heap = [(word_key(w), w) for w in remaining]
    heapq.heapify(heap)
    result = []
    while heap:
        _, smallest = heapq.heappop(heap)
        coeff = remaining.pop(smallest, 0)
        if not coeff:
            continue
        if not is_lyndon(smallest):
            raise NotALieElementError(
                f"Not a Lie element: leading word {_render_word(smallest)} is not Lyndon")
        monomial = LieMonomial(smallest)
        result.append((monomial, coeff))
        for other, value in _bracket_polynomial(monomial).items():
            if other == smallest:
                continue
            if other not in remaining:
                heapq.heappush(heap, (word_key(other), other))
            remaining[other] = remaining.get(other, 0) - coeff * value
    return GradedCombo.from_pairs(result)


def lie_to_words(element: GradedCombo) -> GradedCombo:
    """Expansion of a Lie element into words."""
    return element.map_linear(_bracket_polynomial)


@lru_cache(maxsize=None)
def _bracket_monomials(left: LieMonomial, right: LieMonomial) -> GradedCombo:
    if left == right:
        return GradedCombo.zero()
    return words_to_lie(word_commutator(_bracket_polynomial(left), _bracket_polynomial(right)))


def lie_bracket(left: GradedCombo, right: GradedCombo) -> GradedCombo:
    """
    Lie bracket of two elements in the Lyndon basis.

    :param left: Lie element.
    :param right: Lie element.
    :return: [left, right] in normal form.
    """
    return left.bilinear(right, _bracket_monomials)


def lie_to_tensor(element: GradedCombo) -> GradedCombo:
    """Lie element over tree letters as a tensor element over forests."""
    return lie_to_words(element).map_basis(Forest)


def tensor_to_lie(element: GradedCombo) -> GradedCombo:
    """
    Tensor element over forests as a Lie element over tree letters.

    :param element: Tensor element.
    :return: Lyndon-basis Lie element.
    :raises NotALieElementError: For non-primitive input.
    """
    return words_to_lie(element.map_basis(lambda forest: forest.trees))


def lie_to_json(element: GradedCombo, letter_render: Callable[[Any], str] = str) -> list:
    """JSON term list [{'coeff': {...}, 'lie': '[a,b]'}, ...]."""
    return [
        {"coeff": rational_to_json(coeff), "lie": monomial.render(letter_render)}
        for monomial, coeff in element.terms()]


def render_lie(element: GradedCombo, letter_render: Callable[[Any], str] = str,
               brackets: Tuple[str, str] = ("[", "]")) -> str:
    """Text form of a Lie element."""
    return format_terms(
        (coeff, monomial.render(letter_render, brackets)) for monomial, coeff in element.terms())


def _render_word(letters: Word) -> str:
    return ".".join(str(letter) for letter in letters) or "1"


def _build_grammar() -> pp.ParserElement:
    expr = pp.Forward()
    label = pp.Regex(LABEL_PATTERN).set_parse_action(lambda tokens: lie_letter(vertex(tokens[0])))
    pair = pp.Suppress("[") + expr + pp.Suppress(",") + expr + pp.Suppress("]")
    pair.set_parse_action(lambda tokens: lie_bracket(tokens[0], tokens[1]))
    expr <<= pair | label
    return expr


_LIE_GRAMMAR = _build_grammar()


def parse_lie(text: str) -> GradedCombo:
    """
    Parse a bracket monomial over single-vertex letters, e.g. '[[a,b],c]'.

    :param text: Bracket expression.
    :return: The Lie element in normal form.
    :raises TreeSyntaxError: On malformed input.
    """
    try:
        return _LIE_GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseException as exc:
        raise TreeSyntaxError(
            f"Malformed bracket expression {text!r} at position {exc.loc}: {exc.msg}",
            exc.loc) from exc
