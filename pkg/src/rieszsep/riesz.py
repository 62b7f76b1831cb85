"""
Riesz products through their Fourier-Stieltjes coefficients.

A :class:`RieszSpec` fixes a dissociate letter set and a coefficient per
letter.  The measure itself is never built; everything is expressed through
its coefficient system: the transform is ``1`` at the identity, the product of
``a(letter)`` (conjugated for exponent ``-1``) on a word, and ``0`` elsewhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .dissociate import (
    Letter,
    NotDissociateError,
    WordSet,
    enumerate_words,
    is_dissociate,
)
from .dualgroup import DualGroup, GroupElement

__all__ = [
    "RieszSpec",
    "SparseTransform",
    "make_spec",
    "validate_spec",
    "coefficient",
    "transform",
    "partial_transform",
    "default_family_coefficients",
    "default_family_spec",
    "convolve",
    "transform_power",
    "ip_term",
    "ip_criterion_partial",
    "default_family_ip_partial",
    "INVOLUTION_CAP",
]

INVOLUTION_CAP = 1 - 1e-6


@dataclass(eq=False)
class RieszSpec:
    """Letters, coefficients and the word-length level used for decompositions.

    ``infinite`` marks the letters as a finite prefix of an infinite letter
    set, so that a missing decomposition is never reported as an exact zero.
    """

    group: DualGroup
    letters: list
    coeffs: dict
    level: int
    infinite: bool = False
    _words: dict = field(default_factory=dict, repr=False)

    @property
    def hermitian(self) -> bool:
        return all(complex(a).imag == 0 for a in self.coeffs.values())

    def a(self, letter: Letter) -> complex:
        return self.coeffs[letter]

    def words(self, L: int | None = None) -> WordSet:
        L = self.level if L is None else L
        if L not in self._words:
            self._words[L] = enumerate_words(self.group, self.letters, L)
        return self._words[L]

    def word_value(self, word) -> complex:
        value = 1.0 + 0j
        for index, eps in word:
            a = complex(self.coeffs[self.letters[index]])
            value *= a if eps == 1 else a.conjugate()
        return value

    def to_json(self) -> dict:
        return {
            "group": self.group.label,
            "letters": [self.group.to_json(l.element) for l in self.letters],
            "coefficients": [_complex_json(self.coeffs[l]) for l in self.letters],
            "level": self.level,
            "infinite": self.infinite,
        }


def _complex_json(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def make_spec(G: DualGroup, letters: Sequence[Letter], coeffs: Mapping[Letter, complex] | Iterable[complex], level: int, *, infinite: bool = False, verify: bool = True) -> RieszSpec:
    """Build a spec; with ``verify`` the letters are checked dissociate at ``level``."""
    letters = list(letters)
    if not isinstance(coeffs, Mapping):
        coeffs = dict(zip(letters, coeffs, strict=True))
    coeffs = {l: complex(coeffs[l]) for l in letters}
    if level < 1:
        raise ValueError("level must be >= 1")
    if verify:
        report = is_dissociate(G, letters, level)
        if not report.verified:
            raise NotDissociateError(report.counterexample)
    return RieszSpec(G, letters, coeffs, level, infinite)


def validate_spec(spec: RieszSpec) -> list[str]:
    """Return the list of coefficient-constraint violations (empty when valid)."""
    problems = []
    for i, letter in enumerate(spec.letters):
        a = complex(spec.coeffs[letter])
        if letter.involution:
            if a.imag != 0:
                problems.append(f"letter {i}: involutive coefficient {a} is not real")
            elif not -1 < a.real < 1:
                problems.append(f"letter {i}: involutive coefficient {a.real} outside (-1, 1)")
        elif abs(a) > 0.5:
            problems.append(f"letter {i}: |a| = {abs(a)} exceeds 1/2")
    return problems


def coefficient(spec: RieszSpec, omega: GroupElement, L: int | None = None, diagnostic: bool = False):
    """Transform value at ``omega`` using words of length ``<= L``.

    With ``diagnostic=True`` returns ``(value, status)`` where status is one of
    ``"identity"``, ``"word"``, ``"zero"`` (provably off the support) or
    ``"truncated"`` (no decomposition within the truncation).
    """
    L = spec.level if L is None else L
    if not omega:
        value, status = 1.0 + 0j, "identity"
    else:
        words = spec.words(L)
        word = words.entries.get(omega)
        if word is not None:
            value, status = spec.word_value(word), "word"
        elif len(spec.letters) <= L and not spec.infinite:
            value, status = 0j, "zero"
        else:
            value, status = 0j, "truncated"
    return (value, status) if diagnostic else value


@dataclass
class SparseTransform:
    """Finitely supported transform; ``complete`` is False for truncations of infinite supports."""

    group: DualGroup
    values: dict
    complete: bool = True
    provenance: dict = field(default_factory=dict)

    def __getitem__(self, x: GroupElement) -> complex:
        return self.values.get(x, 0j)

    def __len__(self) -> int:
        return len(self.values)

    def support(self) -> set:
        return set(self.values)

    @property
    def real(self) -> bool:
        return all(complex(v).imag == 0 for v in self.values.values())

    def sorted_items(self) -> list:
        return sorted(self.values.items(), key=lambda kv: self.group.sort_key(kv[0]))

    def to_json(self) -> list:
        return [
            {"element": self.group.to_json(x), "re": complex(v).real, "im": complex(v).imag}
            for x, v in self.sorted_items()
        ]


def _from_words(spec: RieszSpec, words: WordSet) -> dict:
    values = {}
    for x, word in words.entries.items():
        v = spec.word_value(word)
        if v != 0:
            values[x] = v
    return values


def transform(spec: RieszSpec, L: int | None = None) -> SparseTransform:
    """The transform restricted to words of length ``<= L``."""
    L = spec.level if L is None else L
    complete = len(spec.letters) <= L and not spec.infinite
    return SparseTransform(
        spec.group,
        _from_words(spec, spec.words(L)),
        complete,
        {"letters": len(spec.letters), "L": L, "infinite": spec.infinite},
    )


def partial_transform(spec: RieszSpec, phi: Sequence[Letter], L: int | None = None) -> SparseTransform:
    """Exact transform of the finite product of the factors ``1 + a x + conj(a x)`` over ``phi``."""
    L = spec.level if L is None else L
    phi = list(phi)
    if len(phi) > L:
        raise ValueError(f"|phi| = {len(phi)} exceeds truncation level {L}")
    missing = [l for l in phi if l not in spec.coeffs]
    if missing:
        raise ValueError("phi must be a subset of the spec letters")
    sub = RieszSpec(spec.group, phi, {l: spec.coeffs[l] for l in phi}, max(len(phi), 1))
    return SparseTransform(spec.group, _from_words(sub, sub.words(len(phi))), True, {"letters": len(phi), "L": "exact"})


def default_family_coefficients(b: int, involutive: bool = False) -> float:
    """``1 / ln(b + 5)``, clamped to 1/2 for letters of order other than two."""
    if b < 1:
        raise ValueError("index must be >= 1")
    raw = 1.0 / math.log(b + 5)
    return min(raw, INVOLUTION_CAP) if involutive else min(raw, 0.5)


def default_family_spec(G: DualGroup, letters: Sequence[Letter], index: Mapping[Letter, int] | None = None, level: int = 2, *, verify: bool = True) -> RieszSpec:
    """Spec with the decaying coefficient rule; ``index`` defaults to 1-based position."""
    letters = list(letters)
    if index is None:
        index = {l: k for k, l in enumerate(letters, start=1)}
    coeffs = {l: default_family_coefficients(index[l], l.involution) for l in letters}
    return make_spec(G, letters, coeffs, level, infinite=True, verify=verify)


def convolve(first: SparseTransform, second: SparseTransform) -> SparseTransform:
    """Transform of the convolution: pointwise product on the common support."""
    if first.group != second.group:
        raise ValueError(f"group mismatch: {first.group.label} vs {second.group.label}")
    small, large = (first, second) if len(first) <= len(second) else (second, first)
    values = {}
    for x, v in small.values.items():
        w = large.values.get(x)
        if w is not None:
            p = v * w
            if p != 0:
                values[x] = p
    return SparseTransform(
        first.group,
        values,
        first.complete and second.complete,
        {"convolve": [first.provenance, second.provenance]},
    )


def transform_power(spec: RieszSpec, n: int) -> RieszSpec:
    """Spec of the ``n``-fold convolution power (coefficients ``a**n``)."""
    if n < 1:
        raise ValueError("convolution powers start at n = 1")
    if not spec.hermitian:
        raise ValueError("transform_power requires real coefficients")
    problems = validate_spec(spec)
    if problems:
        raise ValueError("; ".join(problems))
    coeffs = {l: complex(a) ** n for l, a in spec.coeffs.items()}
    out = RieszSpec(spec.group, list(spec.letters), coeffs, spec.level, spec.infinite)
    out._words = spec._words
    return out


def ip_term(a: complex, n: int) -> float:
    """One letter's contribution to the independent-powers sum."""
    m = abs(a)
    if m < 0.5:
        return m ** (2 * n)
    if m > 0.5:
        return 1.0 - m
    return 0.0


def ip_criterion_partial(spec: RieszSpec, N: int, n: int) -> float:
    """Partial sum over the first ``N`` letters of the independent-powers criterion."""
    if N > len(spec.letters):
        raise ValueError(f"N = {N} exceeds letter count {len(spec.letters)}")
    return math.fsum(ip_term(spec.coeffs[l], n) for l in spec.letters[:N])


def default_family_ip_partial(N: int, n: int, involutive: bool = False) -> float:
    """Same partial sum for the decaying family, evaluated straight from the index."""
    b = np.arange(1, N + 1, dtype=float)
    a = 1.0 / np.log(b + 5)
    a = np.minimum(a, INVOLUTION_CAP if involutive else 0.5)
    terms = np.where(a < 0.5, a ** (2 * n), np.where(a > 0.5, 1.0 - a, 0.0))
    return math.fsum(terms)
