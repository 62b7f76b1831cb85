"""Branches of the binary tree give sets of naturals with finite pairwise intersections."""

from rieszsep import BranchSeed, ad_set, intersection_bound, letters_for, make_letters
from rieszsep.dualgroup import IntegerGroup

seeds = [BranchSeed.parse(s) for s in ("prefix=0,period=1", "prefix=01,period=0", "prng=7")]
for s in seeds:
    print(f"{str(s):22s} bits {s.bits(10)}  codes {ad_set(s, 6).codes}")

a, b = seeds[:2]
print("first difference after", intersection_bound(a, b), "shared prefixes")
for n in (3, 6, 12):
    print(f"  n={n:2d}: shared codes", sorted(set(ad_set(a, n).codes) & set(ad_set(b, n).codes)))

# attach letters: code m selects the m-th power of 3; the k-th selected letter gets index k
Z = IntegerGroup()
master = make_letters(Z, [Z.element(3 ** k) for k in range(1, 41)])
theta, index = letters_for(master, ad_set(a, 4))
print("letters:", [Z.value(l.element) for l in theta])
print("indices:", [index[l] for l in theta])
