"""Certificates for pairs of measures from the almost-disjoint Riesz family."""

import itertools
import json

from rieszsep import BranchSeed, WitnessParams, make_letters, natural_spectrum, naturalness_gap, witness_pair
from rieszsep.dualgroup import IntegerGroup
from rieszsep.riesz import default_family_spec, transform

Z = IntegerGroup()
master = make_letters(Z, [Z.element(3 ** k) for k in range(1, 41)])
seeds = [BranchSeed.parse(s) for s in ("prefix=0,period=1", "prefix=01,period=0", "period=01", "period=1")]

for a, b in itertools.combinations(seeds, 2):
    rep = witness_pair(a, b, Z, master, 4, WitnessParams(samples=2000))
    print(f"{str(a):20s} {str(b):20s} shared={rep.shared_letters} "
          f"support={rep.product_support_size} gamma={rep.gamma_min_distance:.4f} -> {rep.conclusion}")

print(json.dumps(rep.to_json(), indent=1)[:400], "...")

# the transform range is real, yet the spectrum is the whole disc: the gap is 1
spec = default_family_spec(Z, master[:20], level=3)
print("naturalness gap:", naturalness_gap(natural_spectrum(transform(spec))))
