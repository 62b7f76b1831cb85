import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import SEEDS, ints, lacunary, rademacher
from rieszsep.adfamily import BranchSeed, IndistinguishableSeeds
from rieszsep.dualgroup import IntegerGroup
from rieszsep.riesz import SparseTransform, default_family_spec, make_spec, partial_transform, transform
from rieszsep.spectrum import (
    Z0,
    DiscPreconditionError,
    NonHermitianError,
    SpectrumEstimate,
    WitnessParams,
    disc_lemma_check,
    disc_lemma_violations,
    disc_mesh,
    gamma_avoidance,
    natural_spectrum,
    naturalness_gap,
    sample_admissible,
    unit_disc_claim,
    witness_pair,
)

ONE_MINUS_Z0 = math.sqrt((1 - 1 / math.sqrt(2)) ** 2 + 0.5)


def test_z0_squares_to_i():
    assert Z0 * Z0 == pytest.approx(1j, abs=1e-15)


def test_natural_spectrum_examples(Z):
    spec = make_spec(Z, ints(Z, [3]), [0.5], 1)
    est = natural_spectrum(partial_transform(spec, []))
    assert est.points == (1,) and not est.includes_zero
    fam = natural_spectrum(transform(default_family_spec(Z, lacunary(Z, 6), level=3)))
    assert fam.includes_zero
    assert all(0 < z.real <= 1 and z.imag == 0 for z in fam.points)


def test_disc_lemma_examples():
    assert disc_lemma_check(Z0, Z0)
    x = 0.65 + 0.75j
    assert abs(x - Z0) == pytest.approx(0.0714, abs=1e-4)
    assert abs(x * x - 1j) == pytest.approx(0.1422, abs=1e-4)
    assert disc_lemma_check(x, x)
    with pytest.raises(DiscPreconditionError):
        disc_lemma_check(Z0, Z0, r=0)
    with pytest.raises(DiscPreconditionError):
        disc_lemma_check(0.5, Z0)
    with pytest.raises(DiscPreconditionError):
        disc_lemma_check(1.01 * Z0, Z0)


def test_disc_lemma_other_centres():
    z0 = 0.3 + 0.5j
    x, y = sample_admissible(2000, z0, 0.05, rng=1)
    assert disc_lemma_violations(x, y, z0, 0.05) == 0


def test_sampling_is_admissible_and_seeded():
    x, y = sample_admissible(5000, rng=3)
    assert np.all(np.abs(x - Z0) < 0.1) and np.all(np.abs(x) <= 1)
    x2, _ = sample_admissible(5000, rng=3)
    assert np.array_equal(x, x2)
    with pytest.raises(DiscPreconditionError):
        disc_lemma_violations(np.array([0.0]), np.array([Z0]))


def test_gamma_avoidance_examples(Z):
    def real_transform(values):
        return SparseTransform(Z, {Z.element(i): v for i, v in enumerate(values)})

    assert gamma_avoidance(real_transform([1 / math.sqrt(2)])) == pytest.approx(1 / math.sqrt(2))
    assert gamma_avoidance(real_transform([0.0 + 0j])) == pytest.approx(1.0)
    with pytest.raises(NonHermitianError):
        gamma_avoidance(real_transform([0.5 + 0.1j]))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(-1, 1), min_size=1, max_size=30))
def test_gamma_avoidance_bound(values):
    G = IntegerGroup()
    T = SparseTransform(G, {G.element(i): complex(v) for i, v in enumerate(values)})
    assert gamma_avoidance(T) >= 1 / math.sqrt(2) - 1e-12 > 0.1


def test_unit_disc_claim(Z, Z2sum):
    claim = unit_disc_claim(default_family_spec(Z2sum, rademacher(Z2sum, 200), level=1), 200)
    assert claim.hermitian and claim.probability and claim.ip_increasing
    assert "conditional" in claim.conclusion
    assert claim.profile is not None and len(claim.profile) == 12
    zero = unit_disc_claim(make_spec(Z, lacunary(Z, 10), [0.0] * 10, 1), 10)
    assert zero.ip_partial == [0.0, 0.0, 0.0]
    assert "vanish" in zero.conclusion
    cplx = unit_disc_claim(make_spec(Z, lacunary(Z, 3), [0.3j, 0.1, 0.1], 1), 3)
    assert not cplx.hermitian and cplx.conclusion.startswith("withheld")
    lac = unit_disc_claim(default_family_spec(Z, lacunary(Z, 50), level=1), 50)
    assert lac.hermitian and lac.probability and lac.ip_increasing


def test_disc_mesh_shape():
    mesh = disc_mesh()
    assert mesh.size == 1 + 64 * 4096
    assert np.abs(mesh).max() == pytest.approx(1.0)


def test_naturalness_gap_examples():
    mesh = disc_mesh(256, 16)
    est = SpectrumEstimate(tuple(mesh), False)
    assert naturalness_gap(est) <= 2 * math.pi / 256 + 1 / 16
    unit_interval = SpectrumEstimate(tuple(np.linspace(0, 1, 101)), True)
    assert naturalness_gap(unit_interval) == pytest.approx(1.0, abs=1e-2)
    assert naturalness_gap(SpectrumEstimate((1 + 0j,), False)) == pytest.approx(2.0, abs=1e-2)
    assert naturalness_gap(SpectrumEstimate((2 + 0j,), False)) == pytest.approx(3.0, abs=1e-2)


def seeds(*names):
    return [BranchSeed.parse(s) for s in names]


def test_witness_pair_examples(Z):
    master = lacunary(Z, 40)
    a, b = seeds(SEEDS[0], SEEDS[1])
    rep = witness_pair(a, b, Z, master, 4)
    assert rep.certified
    assert rep.shared_letters == 2
    # Omega_4 over two free letters: 1 + 4 + 4
    assert rep.product_support_size == rep.product_support_bound == 9
    a, b = seeds("prefix=0,period=1", "period=1")
    rep = witness_pair(a, b, Z, master, 4)
    assert rep.certified and rep.product_support_size == 1
    assert rep.gamma_min_distance == pytest.approx(ONE_MINUS_Z0, abs=1e-15)
    with pytest.raises(IndistinguishableSeeds):
        witness_pair(a, a, Z, master, 4)


def test_witness_params_gate():
    with pytest.raises(ValueError):
        WitnessParams(r=0.8)
    with pytest.raises(ValueError):
        WitnessParams(r=0.0)
    with pytest.raises(ValueError):
        WitnessParams(z0=0.5 + 0.05j, r=0.1)


def test_witness_fails_on_non_dissociate_master(Z):
    master = ints(Z, list(range(1, 41)))
    a, b = seeds(SEEDS[0], SEEDS[1])
    rep = witness_pair(a, b, Z, master, 3)
    assert not rep.certified
    assert "union_not_dissociate" in rep.conclusion


def test_witness_monotone_in_truncation(Z):
    master = lacunary(Z, 40)
    a, b = seeds(SEEDS[1], SEEDS[2])
    reps = [witness_pair(a, b, Z, master, L) for L in range(1, 7)]
    assert all(r.certified for r in reps)
    sizes = [r.product_support_size for r in reps]
    assert sizes == sorted(sizes)


def test_witness_rademacher_master(Z2sum):
    master = rademacher(Z2sum, 40)
    a, b = seeds(SEEDS[0], SEEDS[1])
    rep = witness_pair(a, b, Z2sum, master, 4)
    assert rep.certified
    # two involutive shared letters: 1 + 2 + 1
    assert rep.product_support_size == 4


def test_witness_recomputable(Z):
    master = lacunary(Z, 40)
    a, b = seeds(SEEDS[2], SEEDS[3])
    r1 = witness_pair(a, b, Z, master, 4)
    r2 = witness_pair(*seeds(SEEDS[2], SEEDS[3]), Z, lacunary(Z, 40), 4)
    assert r1.to_json() == r2.to_json()
    assert len(r1.content_hash) == 64
