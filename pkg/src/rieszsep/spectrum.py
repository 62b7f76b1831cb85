"""
Range estimates, disc arithmetic and per-pair separation certificates.

Nothing here computes a spectrum.  The functions check the finite facts a
separation argument for two members of the Riesz family relies on: the
transform of their convolution has finite support, every transform value is
real and therefore far from the point ``z0`` off the real axis, and products
of two numbers close to ``z0`` land close to ``z0**2``.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np
from scipy.spatial import cKDTree

from .adfamily import BranchSeed, ad_set_within, intersection_bound, letters_for
from .concrete import eval_cantor, eval_circle, CircleGrid, rademacher_coordinates, singularity_profile
from .dissociate import Letter, is_dissociate, word_count
from .dualgroup import DualGroup, DirectSumOrderM, IntegerGroup
from .riesz import (
    RieszSpec,
    SparseTransform,
    coefficient,
    convolve,
    default_family_ip_partial,
    default_family_spec,
    ip_criterion_partial,
    transform,
    validate_spec,
)

__all__ = [
    "Z0",
    "RADIUS",
    "DiscPreconditionError",
    "NonHermitianError",
    "SpectrumEstimate",
    "natural_spectrum",
    "disc_lemma_check",
    "sample_admissible",
    "disc_lemma_violations",
    "gamma_avoidance",
    "UnitDiscClaim",
    "unit_disc_claim",
    "disc_mesh",
    "naturalness_gap",
    "WitnessParams",
    "WitnessReport",
    "witness_pair",
]

Z0 = (1 + 1j) / math.sqrt(2)
RADIUS = 0.1


class DiscPreconditionError(ValueError):
    pass


class NonHermitianError(ValueError):
    pass


@dataclass(frozen=True)
class SpectrumEstimate:
    points: tuple
    includes_zero: bool

    def all_points(self) -> list[complex]:
        pts = list(self.points)
        if self.includes_zero and 0 not in pts:
            pts.append(0j)
        return pts


def natural_spectrum(T: SparseTransform) -> SpectrumEstimate:
    """Value set of the transform; zero is added for truncated infinite supports."""
    points = sorted({complex(v) for v in T.values.values()}, key=lambda z: (z.real, z.imag))
    return SpectrumEstimate(tuple(points), not T.complete)


def disc_lemma_check(x: complex, y: complex, z0: complex = Z0, r: float = RADIUS) -> bool:
    """For ``x, y`` within ``r`` of ``z0`` in the unit disc, test ``|x y - z0**2| < 2 r``."""
    if r <= 0:
        raise DiscPreconditionError("radius must be positive")
    if abs(x) > 1 or abs(y) > 1:
        raise DiscPreconditionError("x and y must lie in the closed unit disc")
    if abs(x - z0) >= r or abs(y - z0) >= r:
        raise DiscPreconditionError(f"x and y must lie within {r} of z0")
    return abs(x * y - z0 * z0) < 2 * r


def sample_admissible(n: int, z0: complex = Z0, r: float = RADIUS, rng=None) -> tuple[np.ndarray, np.ndarray]:
    """Uniform samples of admissible ``(x, y)`` pairs, by rejection from the small disc."""
    rng = np.random.default_rng(rng)

    def draw(count):
        out = np.empty(0, dtype=complex)
        while out.size < count:
            m = 2 * (count - out.size) + 16
            z = z0 + r * np.sqrt(rng.random(m)) * np.exp(2j * np.pi * rng.random(m))
            z = z[(np.abs(z) <= 1) & (np.abs(z - z0) < r)]
            out = np.concatenate((out, z))
        return out[:count]

    return draw(n), draw(n)


def disc_lemma_violations(x: np.ndarray, y: np.ndarray, z0: complex = Z0, r: float = RADIUS) -> int:
    """Vectorized :func:`disc_lemma_check`; returns the number of failing pairs."""
    x, y = np.asarray(x, dtype=complex), np.asarray(y, dtype=complex)
    if r <= 0:
        raise DiscPreconditionError("radius must be positive")
    ok = (np.abs(x) <= 1) & (np.abs(y) <= 1) & (np.abs(x - z0) < r) & (np.abs(y - z0) < r)
    if not ok.all():
        raise DiscPreconditionError(f"{int((~ok).sum())} inadmissible samples")
    return int(np.count_nonzero(np.abs(x * y - z0 * z0) >= 2 * r))


def gamma_avoidance(T: SparseTransform, z0: complex = Z0) -> float:
    """Smallest distance from a transform value to ``z0``; values must be real."""
    values = [complex(v) for v in T.values.values()]
    if any(v.imag != 0 for v in values):
        raise NonHermitianError("transform has non-real values")
    if not values:
        return math.inf
    return min(abs(v - z0) for v in values)


@dataclass
class UnitDiscClaim:
    hermitian: bool
    probability: bool
    terms: int
    ip_partial: list
    ip_increasing: bool
    profile: list | None
    conclusion: str


def _nonnegative_density(spec: RieszSpec) -> bool | None:
    G = spec.group
    if isinstance(G, IntegerGroup):
        phi = []
        for letter in spec.letters:
            if sum(abs(G.value(l.element)) for l in phi + [letter]) > 4096:
                break
            phi.append(letter)
        if not phi:
            return None
        top = sum(abs(G.value(l.element)) for l in phi)
        N = 1 << (2 * top + 2).bit_length()
        return bool(eval_circle(spec, phi, CircleGrid(N)).values.min() >= -1e-9)
    if isinstance(G, DirectSumOrderM) and G.m == 2 and spec.hermitian:
        try:
            k = min(12, len(spec.letters))
            rademacher_coordinates(spec, k)
        except ValueError:
            return None
        return bool(eval_cantor(spec, k).values.min() >= -1e-9)
    return None


def unit_disc_claim(spec: RieszSpec, N: int, n_max: int = 3) -> UnitDiscClaim:
    """Record whether the premises of the full-disc spectrum statement are evidenced.

    The spectrum itself is never computed; the conclusion is a conditional
    statement that depends on divergence of the independent-powers sum.
    """
    hermitian = spec.hermitian
    mass_one = coefficient(spec, spec.group.identity()) == 1
    density_ok = _nonnegative_density(spec)
    probability = bool(mass_one and not validate_spec(spec) and density_ok is not False)
    N = min(N, len(spec.letters))
    sums = [ip_criterion_partial(spec, N, n) for n in range(1, n_max + 1)]
    half = [ip_criterion_partial(spec, N // 2, n) for n in range(1, n_max + 1)] if N >= 2 else sums
    increasing = N >= 2 and all(s > h for s, h in zip(sums, half))
    profile = None
    if hermitian and isinstance(spec.group, DirectSumOrderM) and spec.group.m == 2:
        try:
            profile = singularity_profile(spec, range(1, min(12, len(spec.letters)) + 1), 1, 2)
        except ValueError:
            profile = None
    if not hermitian:
        conclusion = "withheld: transform is not real-valued"
    elif not probability:
        conclusion = "withheld: not a probability measure"
    elif all(s == 0 for s in sums):
        conclusion = "criterion partial sums vanish; premises not evidenced"
    elif not increasing:
        conclusion = "criterion partial sums not increasing; premises not evidenced"
    else:
        conclusion = (
            "spectrum = closed unit disc, asserted conditional on divergence "
            "of the independent-powers criterion (partial sums increasing)"
        )
    return UnitDiscClaim(hermitian, probability, N, sums, increasing, profile, conclusion)


def disc_mesh(boundary: int = 4096, rings: int = 64) -> np.ndarray:
    """Deterministic mesh of the closed unit disc: the centre plus ``rings`` circles."""
    theta = 2 * np.pi * np.arange(boundary) / boundary
    radii = np.arange(1, rings + 1) / rings
    pts = (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()
    return np.concatenate(([0j], pts))


def naturalness_gap(est: SpectrumEstimate, boundary: int = 4096, rings: int = 64) -> float:
    """Hausdorff distance between the estimate and the closed unit disc (mesh approximation)."""
    pts = np.array(est.all_points(), dtype=complex)
    if pts.size == 0:
        return math.inf
    mesh = disc_mesh(boundary, rings)
    tree = cKDTree(np.column_stack((pts.real, pts.imag)))
    dist, _ = tree.query(np.column_stack((mesh.real, mesh.imag)))
    outside = np.maximum(np.abs(pts) - 1.0, 0.0)
    return float(max(dist.max(), outside.max()))


@dataclass(frozen=True)
class WitnessParams:
    z0: complex = Z0
    r: float = RADIUS
    samples: int = 10_000
    sample_seed: int = 0
    ip_terms: int = 10_000
    horizon: int = 1024

    def __post_init__(self):
        if self.r <= 0:
            raise ValueError("radius must be positive")
        if self.r >= abs(complex(self.z0).imag):
            raise ValueError(f"radius {self.r} must be below |Im z0| = {abs(complex(self.z0).imag)}")
        if abs(self.z0) > 1:
            raise ValueError("z0 must lie in the closed unit disc")
        if self.samples < 1:
            raise ValueError("need at least one disc sample")


Z0_NOTE = (
    "z0 sits on the unit circle with z0**2 = i, as in the direct disc argument; "
    "an interior point off the real axis would serve the other argument equally"
)


@dataclass
class WitnessReport:
    pair: list
    group: str
    master_size: int
    L: int
    letter_counts: list
    shared_letters: int
    intersection_bound: int
    product_support_size: int
    product_support_bound: int
    gamma_min_distance: float
    disc_lemma: dict
    hermitian: bool
    ip_partial: float
    ip_terms: int
    conclusion: str
    notes: str = Z0_NOTE
    content_hash: str = ""

    @property
    def certified(self) -> bool:
        return self.conclusion == "certified"

    def payload(self) -> dict:
        data = asdict(self)
        data.pop("content_hash")
        return data

    def seal(self) -> "WitnessReport":
        blob = json.dumps(self.payload(), separators=(",", ":"), allow_nan=False)
        self.content_hash = hashlib.sha256(blob.encode()).hexdigest()
        return self

    def to_json(self) -> dict:
        return asdict(self)


def witness_pair(seed_a: BranchSeed, seed_b: BranchSeed, G: DualGroup, master: Sequence[Letter], L: int, params: WitnessParams = WitnessParams()) -> WitnessReport:
    """Certify the finite ingredients of the separation argument for one pair of seeds.

    Raises for unusable input (indistinguishable seeds, bad parameters); a
    failed gate yields a report whose conclusion is ``failed(<reason>)``.
    """
    bound = intersection_bound(seed_a, seed_b, params.horizon)
    set_a = ad_set_within(seed_a, len(master))
    set_b = ad_set_within(seed_b, len(master))
    theta_a, b_a = letters_for(master, set_a)
    theta_b, b_b = letters_for(master, set_b)
    shared = [l for l in theta_a if l in set(theta_b)]
    s = min(bound, set_a.n, set_b.n)
    shared_codes = set_a.codes[:s]
    n_invol = sum(master[c - 1].involution for c in shared_codes)
    support_bound = word_count(s, L, n_invol)

    reasons = []
    if len(shared) != s:
        reasons.append("shared_letter_mismatch")
    union = theta_a + [l for l in theta_b if l not in set(theta_a)]
    if not is_dissociate(G, union, L).verified:
        reasons.append("union_not_dissociate")
        # nothing downstream is meaningful without unique decompositions
        return _failed_report(seed_a, seed_b, G, master, L, set_a, set_b, s, bound, support_bound, params, reasons)

    spec_a = default_family_spec(G, theta_a, b_a, L, verify=False)
    spec_b = default_family_spec(G, theta_b, b_b, L, verify=False)
    product = convolve(transform(spec_a), transform(spec_b))
    hermitian = spec_a.hermitian and spec_b.hermitian
    if not hermitian:
        reasons.append("non_hermitian")
        gamma = -1.0
    else:
        gamma = gamma_avoidance(product, params.z0)
    if len(product) > support_bound:
        reasons.append("support_exceeds_bound")
    if not gamma > params.r:
        reasons.append("gamma_avoidance")
    x, y = sample_admissible(params.samples, params.z0, params.r, params.sample_seed)
    disc_ok = disc_lemma_violations(x, y, params.z0, params.r) == 0
    if not disc_ok:
        reasons.append("disc_lemma")
    involutive = all(l.involution for l in master)
    ip = default_family_ip_partial(params.ip_terms, 1, involutive)
    return WitnessReport(
        pair=[str(seed_a), str(seed_b)],
        group=G.label,
        master_size=len(master),
        L=L,
        letter_counts=[set_a.n, set_b.n],
        shared_letters=len(shared),
        intersection_bound=bound,
        product_support_size=len(product),
        product_support_bound=support_bound,
        gamma_min_distance=gamma,
        disc_lemma=_disc_record(params, disc_ok),
        hermitian=hermitian,
        ip_partial=ip,
        ip_terms=params.ip_terms,
        conclusion="certified" if not reasons else f"failed({','.join(reasons)})",
    ).seal()


def _disc_record(params: WitnessParams, verified: bool) -> dict:
    z0 = complex(params.z0)
    return {
        "z0": {"re": z0.real, "im": z0.imag},
        "r": params.r,
        "verified": verified,
        "samples": params.samples,
        "seed": params.sample_seed,
    }


def _failed_report(seed_a, seed_b, G, master, L, set_a, set_b, s, bound, support_bound, params, reasons):
    return WitnessReport(
        pair=[str(seed_a), str(seed_b)],
        group=G.label,
        master_size=len(master),
        L=L,
        letter_counts=[set_a.n, set_b.n],
        shared_letters=s,
        intersection_bound=bound,
        product_support_size=-1,
        product_support_bound=support_bound,
        gamma_min_distance=-1.0,
        disc_lemma=_disc_record(params, False),
        hermitian=False,
        ip_partial=0.0,
        ip_terms=params.ip_terms,
        conclusion=f"failed({','.join(reasons)})",
    ).seal()
