"""
Almost-disjoint subsets of the naturals from branches of the binary tree.

Every infinite 0/1 sequence (a branch) is mapped to the set of codes of its
finite prefixes, ``code(s) = 2**len(s) - 1 + int(s, 2)``.  Two branches that
first differ at position ``p`` share exactly ``p - 1`` codes.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Sequence

from .dissociate import Letter

__all__ = [
    "BranchSeed",
    "ADSet",
    "code",
    "decode",
    "ad_set",
    "ad_set_within",
    "intersection_bound",
    "IndistinguishableSeeds",
    "letters_for",
]

DEFAULT_HORIZON = 1024


@dataclass(frozen=True)
class BranchSeed:
    """A reproducible infinite bit sequence.

    Either an explicit ``prefix`` followed by ``period`` repeated forever, or
    the output of ``random.Random(prng)``.
    """

    prefix: str = ""
    period: str = ""
    prng: int | None = None
    _cache: list = field(default_factory=list, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.prng is None:
            if not self.period:
                raise ValueError("an explicit seed needs a non-empty period")
            if set(self.prefix + self.period) - {"0", "1"}:
                raise ValueError("seed bits must be 0 or 1")
        elif self.prefix or self.period:
            raise ValueError("prng seeds take no explicit bits")

    @classmethod
    def parse(cls, text: str) -> "BranchSeed":
        """Parse ``"prefix=0110,period=10"`` or ``"prng=<int>"``."""
        fields = {}
        for part in text.replace(" ", "").split(","):
            if not part:
                continue
            key, sep, value = part.partition("=")
            if not sep or key not in ("prefix", "period", "prng"):
                raise ValueError(f"malformed seed {text!r}")
            fields[key] = value
        if "prng" in fields:
            if len(fields) > 1 or not re.fullmatch(r"\d+", fields["prng"]):
                raise ValueError(f"malformed seed {text!r}")
            return cls(prng=int(fields["prng"]))
        return cls(prefix=fields.get("prefix", ""), period=fields.get("period", ""))

    def __str__(self) -> str:
        if self.prng is not None:
            return f"prng={self.prng}"
        return f"prefix={self.prefix},period={self.period}"

    def bit(self, i: int) -> int:
        """The ``i``-th bit, 1-based."""
        if i < 1:
            raise ValueError("bit positions are 1-based")
        if self.prng is None:
            if i <= len(self.prefix):
                return int(self.prefix[i - 1])
            return int(self.period[(i - len(self.prefix) - 1) % len(self.period)])
        cache = self._cache
        if len(cache) < i:
            # regenerate from scratch so the stream never depends on call history
            rng = random.Random(self.prng)
            cache[:] = [rng.getrandbits(1) for _ in range(max(i, 2 * len(cache), 64))]
        return cache[i - 1]

    def bits(self, n: int) -> str:
        return "".join(str(self.bit(i)) for i in range(1, n + 1))


def code(s: str) -> int:
    if not s:
        raise ValueError("only non-empty prefixes are coded")
    return (1 << len(s)) - 1 + int(s, 2)


def decode(c: int) -> str:
    if c < 1:
        raise ValueError("codes are positive")
    length = (c + 1).bit_length() - 1
    return format(c - (1 << length) + 1, f"0{length}b")


@dataclass(frozen=True)
class ADSet:
    codes: tuple
    seed: BranchSeed

    @property
    def n(self) -> int:
        return len(self.codes)


def ad_set(seed: BranchSeed, n: int) -> ADSet:
    """Codes of the first ``n`` prefixes of the branch."""
    if n < 1:
        raise ValueError("n must be >= 1")
    bits = seed.bits(n)
    return ADSet(tuple(code(bits[:k]) for k in range(1, n + 1)), seed)


def ad_set_within(seed: BranchSeed, limit: int) -> ADSet:
    """The longest prefix family whose codes stay ``<= limit``."""
    n = 0
    while code(seed.bits(n + 1)) <= limit:
        n += 1
    if n == 0:
        raise ValueError(f"no prefix code fits below {limit}")
    return ad_set(seed, n)


class IndistinguishableSeeds(ValueError):
    pass


def intersection_bound(first: BranchSeed, second: BranchSeed, horizon: int = DEFAULT_HORIZON) -> int:
    """``p - 1`` where ``p`` is the first position at which the branches differ."""
    for p in range(1, horizon + 1):
        if first.bit(p) != second.bit(p):
            return p - 1
    raise IndistinguishableSeeds(f"seeds {first} and {second} agree on the first {horizon} bits")


def letters_for(master: Sequence[Letter], S: ADSet) -> tuple[list[Letter], dict]:
    """Select ``master[m - 1]`` for each code ``m``; the k-th smallest code gets index k."""
    if max(S.codes) > len(master):
        raise ValueError(f"code {max(S.codes)} exceeds master length {len(master)}")
    letters = [master[m - 1] for m in S.codes]
    return letters, {letter: k for k, letter in enumerate(letters, start=1)}
