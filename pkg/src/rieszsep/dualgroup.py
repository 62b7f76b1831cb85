"""
Discrete abelian groups in canonical sparse coordinates.

Supported groups are the integers, integer lattices, countable direct sums of
cyclic groups (``sumZ2``, ``sumZ(m)``) and finite products of these.  An
element is stored as a sorted tuple of ``(key, value)`` pairs with no zero
entries; residues are reduced into ``[0, m)``.  Product groups namespace their
keys as ``(component, inner_key)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Iterable, Mapping

__all__ = [
    "GroupElement",
    "DualGroup",
    "IntegerGroup",
    "IntegerLattice",
    "DirectSumOrderTwo",
    "DirectSumOrderM",
    "ProductGroup",
    "parse_group",
]


@dataclass(frozen=True, order=True)
class GroupElement:
    """Immutable element of a discrete abelian group in canonical form."""

    coords: tuple = ()

    def __bool__(self) -> bool:
        # the identity is the only falsy element
        return bool(self.coords)

    def get(self, key, default: int = 0) -> int:
        for k, v in self.coords:
            if k == key:
                return v
        return default


class DualGroup:
    """Base class for group descriptors.

    Subclasses define :meth:`modulus` (``None`` for a free coordinate) and
    :meth:`check_key`.  Arithmetic is shared.
    """

    def modulus(self, key) -> int | None:  # pragma: no cover - abstract
        raise NotImplementedError

    def check_key(self, key) -> None:  # pragma: no cover - abstract
        raise NotImplementedError

    # -- construction -----------------------------------------------------
    def from_mapping(self, mapping: Mapping[Any, int]) -> GroupElement:
        items = []
        for key, value in mapping.items():
            self.check_key(key)
            m = self.modulus(key)
            value = int(value) % m if m is not None else int(value)
            if value:
                items.append((key, value))
        items.sort()
        return GroupElement(tuple(items))

    def canonical(self, x: GroupElement) -> GroupElement:
        return self.from_mapping(dict(x.coords))

    def identity(self) -> GroupElement:
        return GroupElement(())

    # -- arithmetic -------------------------------------------------------
    def combine(self, x: GroupElement, y: GroupElement) -> GroupElement:
        if not y.coords:
            return x
        if not x.coords:
            return y
        if len(x.coords) == 1 and len(y.coords) == 1 and x.coords[0][0] == y.coords[0][0]:
            # hot path for word enumeration in Z and single-coordinate letters
            key = x.coords[0][0]
            m = self.modulus(key)
            s = x.coords[0][1] + y.coords[0][1]
            if m is not None:
                s %= m
            return GroupElement(((key, s),)) if s else GroupElement(())
        acc = dict(x.coords)
        for key, value in y.coords:
            self.check_key(key)
            m = self.modulus(key)
            s = acc.get(key, 0) + value
            if m is not None:
                s %= m
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
        return GroupElement(tuple(sorted(acc.items())))

    def invert(self, x: GroupElement) -> GroupElement:
        items = []
        for key, value in x.coords:
            m = self.modulus(key)
            items.append((key, (-value) % m if m is not None else -value))
        return GroupElement(tuple(items))

    def power(self, x: GroupElement, n: int) -> GroupElement:
        return self.from_mapping({k: v * n for k, v in x.coords})

    def is_involution(self, x: GroupElement) -> bool:
        """True iff ``x`` has order two.  The identity is rejected."""
        if not x.coords:
            raise ValueError("the identity is not a valid letter")
        return not self.combine(x, x).coords

    # -- presentation -----------------------------------------------------
    def to_json(self, x: GroupElement) -> Any:
        return [[_key_json(k), v] for k, v in x.coords]

    def sort_key(self, x: GroupElement):
        return x.coords

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, DualGroup) and self.label == other.label

    def __hash__(self) -> int:
        return hash(self.label)


def _key_json(key):
    if isinstance(key, tuple):
        return [_key_json(k) for k in key]
    return key


def _check_index(key) -> None:
    if not isinstance(key, int) or isinstance(key, bool) or key < 0:
        raise ValueError(f"invalid coordinate index {key!r}")


class IntegerGroup(DualGroup):
    """The integers, dual of the circle."""

    label = "Z"

    def modulus(self, key):
        return None

    def check_key(self, key):
        if key != 0:
            raise ValueError(f"invalid coordinate index {key!r} for Z")

    def element(self, n: int) -> GroupElement:
        n = int(n)
        return GroupElement(((0, n),)) if n else GroupElement(())

    def value(self, x: GroupElement) -> int:
        return x.get(0)

    def to_json(self, x):
        return self.value(x)

    def sort_key(self, x):
        return self.value(x)


class IntegerLattice(DualGroup):
    def __init__(self, d: int):
        if d < 1:
            raise ValueError("lattice dimension must be >= 1")
        self.d = d
        self.label = f"Z^{d}"

    def modulus(self, key):
        return None

    def check_key(self, key):
        if not isinstance(key, int) or not 0 <= key < self.d:
            raise ValueError(f"invalid coordinate index {key!r} for {self.label}")

    def element(self, vector: Iterable[int]) -> GroupElement:
        vector = list(vector)
        if len(vector) != self.d:
            raise ValueError(f"expected {self.d} coordinates")
        return self.from_mapping(dict(enumerate(vector)))

    def vector(self, x: GroupElement) -> tuple[int, ...]:
        return tuple(x.get(i) for i in range(self.d))

    def to_json(self, x):
        return list(self.vector(x))

    def sort_key(self, x):
        return self.vector(x)


class DirectSumOrderM(DualGroup):
    """Countable direct sum of copies of ``Z/m``, indexed by naturals."""

    def __init__(self, m: int):
        if m < 2:
            raise ValueError("modulus must be >= 2")
        self.m = m
        self.label = f"sumZ({m})"

    def modulus(self, key):
        return self.m

    def check_key(self, key):
        _check_index(key)

    def basis(self, index: int, value: int = 1) -> GroupElement:
        return self.from_mapping({index: value})

    def element(self, mapping: Mapping[int, int]) -> GroupElement:
        return self.from_mapping(mapping)


class DirectSumOrderTwo(DirectSumOrderM):
    """Countable direct sum of ``Z/2``: the dual of the Cantor group."""

    def __init__(self):
        super().__init__(2)
        self.label = "sumZ2"


class ProductGroup(DualGroup):
    def __init__(self, factors: Iterable[DualGroup]):
        self.factors = tuple(factors)
        if len(self.factors) < 2:
            raise ValueError("a product needs at least two factors")
        self.label = "x".join(f.label for f in self.factors)

    def _split(self, key):
        if not (isinstance(key, tuple) and len(key) == 2 and isinstance(key[0], int)):
            raise ValueError(f"invalid coordinate index {key!r} for {self.label}")
        comp, inner = key
        if not 0 <= comp < len(self.factors):
            raise ValueError(f"invalid component {comp} for {self.label}")
        return self.factors[comp], inner

    def modulus(self, key):
        factor, inner = self._split(key)
        return factor.modulus(inner)

    def check_key(self, key):
        factor, inner = self._split(key)
        factor.check_key(inner)

    def element(self, parts: Iterable[GroupElement]) -> GroupElement:
        parts = list(parts)
        if len(parts) != len(self.factors):
            raise ValueError(f"expected {len(self.factors)} components")
        mapping = {}
        for comp, part in enumerate(parts):
            for key, value in part.coords:
                mapping[(comp, key)] = value
        return self.from_mapping(mapping)

    def component(self, x: GroupElement, comp: int) -> GroupElement:
        return GroupElement(tuple((k[1], v) for k, v in x.coords if k[0] == comp))

    def to_json(self, x):
        return [f.to_json(self.component(x, i)) for i, f in enumerate(self.factors)]

    def sort_key(self, x):
        return tuple(f.sort_key(self.component(x, i)) for i, f in enumerate(self.factors))


_ATOM = re.compile(r"^(?:(Z)|Z\^(\d+)|(sumZ2)|sumZ\((\d+)\))$")


def _parse_atom(text: str) -> DualGroup:
    match = _ATOM.match(text)
    if match is None:
        raise ValueError(f"unrecognised group descriptor {text!r}")
    z, d, z2, m = match.groups()
    if z:
        return IntegerGroup()
    if d is not None:
        return IntegerLattice(int(d))
    if z2:
        return DirectSumOrderTwo()
    if int(m) == 2:
        return DirectSumOrderTwo()
    return DirectSumOrderM(int(m))


def parse_group(text: str) -> DualGroup:
    """Parse a descriptor string such as ``"Z"``, ``"Z^2"``, ``"sumZ(3)"`` or ``"ZxsumZ2"``."""
    text = text.strip()
    parts = text.split("x")
    if len(parts) == 1:
        return _parse_atom(parts[0])
    return ProductGroup(_parse_atom(p) for p in parts)
