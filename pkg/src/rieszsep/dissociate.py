"""
Words over a letter set, truncated word sets and dissociativity checks.

A formal word is a tuple of ``(letter_index, exponent)`` pairs with strictly
increasing letter indices; involutive letters only carry exponent ``+1``.
Words are always enumerated by increasing length, then lexicographically in
``(letter_index, exponent)`` with ``+1`` before ``-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Sequence

from .dualgroup import DualGroup, GroupElement

__all__ = [
    "Letter",
    "make_letters",
    "FormalWord",
    "Counterexample",
    "DissociateReport",
    "NotDissociateError",
    "WordSet",
    "iter_words",
    "evaluate_word",
    "is_dissociate",
    "enumerate_words",
    "word_intersection_check",
    "IntersectionCheck",
    "word_count",
]

FormalWord = tuple  # tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Letter:
    element: GroupElement
    involution: bool


def make_letters(G: DualGroup, elements: Sequence[GroupElement]) -> list[Letter]:
    """Wrap group elements as letters, rejecting the identity and duplicates."""
    seen = set()
    letters = []
    for x in elements:
        if x in seen:
            raise ValueError(f"duplicate letter {G.to_json(x)!r}")
        seen.add(x)
        letters.append(Letter(x, G.is_involution(x)))
    return letters


def _check_letters(G: DualGroup, letters: Sequence[Letter]) -> None:
    seen = set()
    for letter in letters:
        if not letter.element:
            raise ValueError("the identity is not a valid letter")
        if letter.element in seen:
            raise ValueError(f"duplicate letter {G.to_json(letter.element)!r}")
        seen.add(letter.element)
        if letter.involution != G.is_involution(letter.element):
            raise ValueError("letter involution flag inconsistent with group")


class NotDissociateError(ValueError):
    """Raised when two distinct words evaluate to the same element."""

    def __init__(self, counterexample: "Counterexample"):
        self.counterexample = counterexample
        super().__init__(
            f"letters are not dissociate: words {counterexample.first} and "
            f"{counterexample.second} coincide"
        )


def iter_words(letters: Sequence[Letter], max_length: int, G: DualGroup | None = None) -> Iterator[tuple[FormalWord, GroupElement | None]]:
    """Yield ``(word, value)`` in the canonical enumeration order.

    When ``G`` is given each word's value is accumulated along the recursion,
    so every word costs one group operation; otherwise ``value`` is ``None``.
    """
    n = len(letters)
    if G is not None:
        signed = [
            ((1, l.element),) if l.involution else ((1, l.element), (-1, G.invert(l.element)))
            for l in letters
        ]
    else:
        signed = [((1, None),) if l.involution else ((1, None), (-1, None)) for l in letters]
    identity = G.identity() if G is not None else None

    def extend(start, remaining, prefix, value):
        for i in range(start, n - remaining + 1):
            for eps, elt in signed[i]:
                word = prefix + ((i, eps),)
                v = G.combine(value, elt) if G is not None else None
                if remaining == 1:
                    yield word, v
                else:
                    yield from extend(i + 1, remaining - 1, word, v)

    yield (), identity
    for length in range(1, min(max_length, n) + 1):
        yield from extend(0, length, (), identity)


def evaluate_word(G: DualGroup, letters: Sequence[Letter], word: FormalWord) -> GroupElement:
    value = G.identity()
    for index, eps in word:
        x = letters[index].element
        value = G.combine(value, x if eps == 1 else G.invert(x))
    return value


def word_count(n_letters: int, max_length: int, n_involutions: int = 0) -> int:
    """Number of formal words of length ``<= max_length`` (identity included)."""
    # generating function prod (1 + 2t) over free letters and (1 + t) over involutions
    poly = [1]
    for k in range(n_letters):
        w = 1 if k < n_involutions else 2
        poly = [a + (w * poly[j - 1] if j > 0 else 0) for j, a in enumerate(poly + [0])]
    return sum(poly[: max_length + 1])


@dataclass(frozen=True)
class Counterexample:
    first: FormalWord
    second: FormalWord
    element: GroupElement


@dataclass(frozen=True)
class DissociateReport:
    max_length: int
    n_words: int
    counterexample: Counterexample | None = None

    @property
    def verified(self) -> bool:
        return self.counterexample is None


@dataclass
class WordSet:
    """Truncated word set: evaluated element -> the unique word producing it."""

    group: DualGroup
    letters: list
    max_length: int
    entries: dict = field(default_factory=dict)

    def __contains__(self, x: GroupElement) -> bool:
        return x in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def elements(self) -> set:
        return set(self.entries)

    def to_json(self) -> list:
        return [
            {"element": self.group.to_json(x), "factors": [list(f) for f in w]}
            for x, w in self.entries.items()
        ]


def _build(G, letters, L):
    entries: dict = {}
    for word, value in iter_words(letters, L, G):
        prior = entries.get(value)
        if prior is not None:
            return entries, Counterexample(prior, word, value)
        entries[value] = word
    return entries, None


def is_dissociate(G: DualGroup, letters: Sequence[Letter], L: int) -> DissociateReport:
    """Check that all words of length ``<= L`` evaluate to distinct elements.

    The counterexample, if any, pairs the first word in enumeration order whose
    value repeats with the earlier word it collides with.
    """
    if L < 1:
        raise ValueError("word length bound must be >= 1")
    _check_letters(G, letters)
    entries, bad = _build(G, letters, L)
    return DissociateReport(L, len(entries) + (bad is not None), bad)


def enumerate_words(G: DualGroup, letters: Sequence[Letter], L: int) -> WordSet:
    """Build the truncated word set, raising :class:`NotDissociateError` on a collision."""
    _check_letters(G, letters)
    entries, bad = _build(G, letters, L)
    if bad is not None:
        raise NotDissociateError(bad)
    return WordSet(G, list(letters), L, entries)


@dataclass(frozen=True)
class IntersectionCheck:
    common: frozenset
    expected: frozenset
    witness: GroupElement | None = None

    @property
    def equal(self) -> bool:
        return self.witness is None


def word_intersection_check(G: DualGroup, first: Sequence[Letter], second: Sequence[Letter], L: int) -> IntersectionCheck:
    """Compare the common part of two truncated word sets with the word set of the common letters."""
    union = list(first) + [l for l in second if l not in set(first)]
    report = is_dissociate(G, union, L)
    if not report.verified:
        raise NotDissociateError(report.counterexample)
    shared = [l for l in first if l in set(second)]
    common = enumerate_words(G, first, L).elements() & enumerate_words(G, second, L).elements()
    expected = enumerate_words(G, shared, L).elements()
    diff = sorted(common ^ expected, key=G.sort_key)
    return IntersectionCheck(frozenset(common), frozenset(expected), diff[0] if diff else None)
