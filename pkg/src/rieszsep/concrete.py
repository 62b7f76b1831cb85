"""
Concrete realizations of finite Riesz partial products.

On the circle the partial product is sampled on an equispaced grid and its
Fourier coefficients are recovered with an FFT.  On the Cantor group the
density of a partial product (or of its convolution powers) is exact on the
``2**k`` atoms of level ``k``.  The piecewise-linear helpers extend a
transform given on the integers to the real line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .dissociate import Letter
from .dualgroup import DirectSumOrderM, IntegerGroup
from .riesz import RieszSpec

__all__ = [
    "CircleGrid",
    "DensityVector",
    "eval_circle",
    "grid_coefficients",
    "rademacher_coordinates",
    "eval_cantor",
    "tv_norm",
    "tv_distance",
    "singularity_profile",
    "PLTransform",
    "pl_extend",
    "pl_eval",
    "pl_product_support",
    "DEFAULT_CANTOR_CAP",
]

DEFAULT_CANTOR_CAP = 24


@dataclass(frozen=True)
class CircleGrid:
    N: int

    def __post_init__(self):
        if self.N < 2 or self.N & (self.N - 1):
            raise ValueError(f"grid size {self.N} is not a power of two")

    @property
    def points(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.N) / self.N


@dataclass
class DensityVector:
    """Samples of a density together with the quadrature weight of each sample."""

    values: np.ndarray
    weight: float

    def __sub__(self, other: "DensityVector") -> "DensityVector":
        if self.values.shape != other.values.shape or self.weight != other.weight:
            raise ValueError("densities live on different grids")
        return DensityVector(self.values - other.values, self.weight)

    @property
    def mass(self) -> float:
        return float(np.sum(self.values) * self.weight)


def _frequencies(spec: RieszSpec, phi: Sequence[Letter]) -> list[int]:
    if not isinstance(spec.group, IntegerGroup):
        raise ValueError("circle evaluation needs letters in Z")
    return [spec.group.value(l.element) for l in phi]


def eval_circle(spec: RieszSpec, phi: Sequence[Letter], grid: CircleGrid) -> DensityVector:
    """Sample ``prod (1 + 2 Re(a e^{i f t}))`` over ``phi`` on the grid."""
    freqs = _frequencies(spec, phi)
    top = sum(abs(f) for f in freqs)
    if grid.N <= 2 * top + 1:
        raise ValueError(f"grid N={grid.N} aliases frequencies up to {top}")
    t = grid.points
    values = np.ones(grid.N)
    for letter, f in zip(phi, freqs):
        a = complex(spec.coeffs[letter])
        values *= 1.0 + 2.0 * np.real(a * np.exp(1j * f * t))
    return DensityVector(values, 1.0 / grid.N)


def grid_coefficients(d: DensityVector, threshold: float = 1e-12) -> dict[int, complex]:
    """Fourier coefficients of grid samples, keyed by signed frequency."""
    N = d.values.size
    c = np.fft.fft(d.values) / N
    freqs = np.fft.fftfreq(N, 1.0 / N).astype(int)
    keep = np.abs(c) > threshold
    return {int(f): complex(v) for f, v in zip(freqs[keep], c[keep])}


def rademacher_coordinates(spec: RieszSpec, k: int) -> list[int]:
    """Coordinates of the first ``k`` letters, which must be distinct basis characters of order two."""
    G = spec.group
    if not isinstance(G, DirectSumOrderM) or G.m != 2:
        raise ValueError("Cantor evaluation needs letters in sumZ2")
    if k > len(spec.letters):
        raise ValueError(f"level {k} exceeds letter count {len(spec.letters)}")
    coords = []
    for letter in spec.letters[:k]:
        if len(letter.element.coords) != 1:
            raise ValueError("Cantor evaluation needs single-coordinate (Rademacher) letters")
        coords.append(letter.element.coords[0][0])
    return coords


def _cantor_factors(spec: RieszSpec, k: int, n: int) -> np.ndarray:
    if not spec.hermitian:
        raise ValueError("Cantor evaluation needs real coefficients")
    rademacher_coordinates(spec, k)
    return np.array([complex(spec.coeffs[l]).real ** n for l in spec.letters[:k]])


def _grow(values: np.ndarray, c: float) -> np.ndarray:
    # new coordinate becomes the high bit of the atom index
    return np.concatenate((values * (1.0 + c), values * (1.0 - c)))


def eval_cantor(spec: RieszSpec, k: int, n: int = 1, cap: int = DEFAULT_CANTOR_CAP) -> DensityVector:
    """Exact density of the ``n``-th convolution power of the level-``k`` partial product.

    Atom ``x`` has bit ``i`` equal to the value of coordinate ``i`` and the
    density there is ``prod_i (1 + a_i**n * (-1)**bit_i(x))``.
    """
    if not 1 <= k <= cap:
        raise ValueError(f"level k={k} outside [1, {cap}]")
    if n < 1:
        raise ValueError("power must be >= 1")
    values = np.ones(1)
    for c in _cantor_factors(spec, k, n):
        values = _grow(values, c)
    return DensityVector(values, 2.0 ** -k)


def tv_norm(d: DensityVector) -> float:
    return float(np.sum(np.abs(d.values)) * d.weight)


def tv_distance(first: DensityVector, second: DensityVector) -> float:
    return tv_norm(first - second)


def singularity_profile(spec: RieszSpec, k_range: Iterable[int], n: int, m: int, cap: int = DEFAULT_CANTOR_CAP) -> list[tuple[int, float]]:
    """Total-variation distance between the ``n``-th and ``m``-th powers at each level."""
    if n == m:
        raise ValueError("powers must differ")
    ks = sorted(set(k_range))
    if not ks:
        return []
    if ks[0] < 1 or ks[-1] > cap:
        raise ValueError(f"levels must lie in [1, {cap}]")
    cn = _cantor_factors(spec, ks[-1], n)
    cm = _cantor_factors(spec, ks[-1], m)
    wanted = set(ks)
    dn, dm = np.ones(1), np.ones(1)
    out = []
    for level in range(1, ks[-1] + 1):
        dn = _grow(dn, cn[level - 1])
        dm = _grow(dm, cm[level - 1])
        if level in wanted:
            out.append((level, tv_distance(DensityVector(dn, 2.0 ** -level), DensityVector(dm, 2.0 ** -level))))
    return out


@dataclass(frozen=True)
class PLTransform:
    """Values on the integers ``-N..N``, linear in between and zero outside."""

    N: int
    values: np.ndarray

    @property
    def knots(self) -> np.ndarray:
        return np.arange(-self.N, self.N + 1)

    def at(self, j: int):
        if -self.N <= j <= self.N:
            return self.values[j + self.N]
        return 0


def pl_extend(T: Mapping[int, complex], N: int | None = None) -> PLTransform:
    """Piecewise-linear extension of integer-indexed transform values.

    ``N`` defaults to one past the largest key so the extension returns to
    zero continuously.
    """
    if N is None:
        N = max((abs(int(k)) for k in T), default=0) + 1
    dtype = complex if any(complex(v).imag for v in T.values()) else float
    values = np.zeros(2 * N + 1, dtype=dtype)
    for key, v in T.items():
        key = int(key)
        if abs(key) > N:
            raise ValueError(f"key {key} outside [-{N}, {N}]")
        values[key + N] = v if dtype is complex else complex(v).real
    return PLTransform(N, values)


def pl_eval(E: PLTransform, xi):
    """Evaluate the extension at real points ``xi``."""
    xi = np.asarray(xi, dtype=float)
    knots = E.knots.astype(float)
    re = np.interp(xi, knots, np.real(E.values), left=0.0, right=0.0)
    if np.iscomplexobj(E.values):
        return re + 1j * np.interp(xi, knots, np.imag(E.values), left=0.0, right=0.0)
    return re


def _zero_points(E: PLTransform) -> list[float]:
    pts = []
    for j in range(-E.N, E.N):
        v0, v1 = complex(E.at(j)), complex(E.at(j + 1))
        if v0 == 0 or v1 == 0 or v0 == v1:
            continue
        s = -v0 / (v1 - v0)
        if abs(s.imag) <= 1e-15 * max(1.0, abs(s)) and 0 < s.real < 1:
            pts.append(j + s.real)
    return pts


def pl_product_support(first: PLTransform, second: PLTransform) -> list[tuple[float, float]]:
    """Maximal open intervals on which both extensions are nonzero."""
    lo, hi = max(-first.N, -second.N), min(first.N, second.N)
    if lo >= hi:
        return []
    cuts = set(range(lo, hi + 1))
    cuts.update(p for p in _zero_points(first) + _zero_points(second) if lo < p < hi)
    cuts = sorted(cuts)

    def both_nonzero(x):
        return pl_eval(first, x) != 0 and pl_eval(second, x) != 0

    intervals: list[list[float]] = []
    for a, b in zip(cuts, cuts[1:]):
        if not both_nonzero(0.5 * (a + b)):
            continue
        if intervals and intervals[-1][1] == a and both_nonzero(a):
            intervals[-1][1] = b
        else:
            intervals.append([a, b])
    return [(float(a), float(b)) for a, b in intervals]
