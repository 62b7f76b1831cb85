"""Finite-truncation toolkit for Riesz products on dissociate sets and the
separation certificates built from an almost-disjoint family of them."""

from .adfamily import ADSet, BranchSeed, ad_set, ad_set_within, intersection_bound, letters_for
from .concrete import (
    CircleGrid,
    DensityVector,
    eval_cantor,
    eval_circle,
    grid_coefficients,
    pl_eval,
    pl_extend,
    pl_product_support,
    singularity_profile,
    tv_distance,
    tv_norm,
)
from .dissociate import (
    Letter,
    WordSet,
    enumerate_words,
    is_dissociate,
    make_letters,
    word_intersection_check,
)
from .dualgroup import GroupElement, parse_group
from .riesz import (
    RieszSpec,
    SparseTransform,
    coefficient,
    convolve,
    default_family_coefficients,
    default_family_spec,
    ip_criterion_partial,
    make_spec,
    partial_transform,
    transform,
    transform_power,
    validate_spec,
)
from .spectrum import (
    Z0,
    disc_lemma_check,
    gamma_avoidance,
    natural_spectrum,
    naturalness_gap,
    unit_disc_claim,
    witness_pair,
    WitnessParams,
    WitnessReport,
)

__version__ = "0.1.0"
