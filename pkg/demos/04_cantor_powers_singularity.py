"""Convolution powers of a Riesz product on the Cantor group drift apart in total variation."""

from rieszsep import default_family_spec, eval_cantor, make_letters, singularity_profile, tv_norm
from rieszsep.dualgroup import DirectSumOrderTwo
from rieszsep.riesz import default_family_ip_partial

G = DirectSumOrderTwo()
spec = default_family_spec(G, make_letters(G, [G.basis(i) for i in range(1, 21)]), level=1)

for n in (1, 2, 3):
    d = eval_cantor(spec, 16, n)
    print(f"power {n}: min density {d.values.min():.3e}, mass {tv_norm(d):.12f}")

print(" k   TV(mu, mu*mu)")
for k, tv in singularity_profile(spec, range(2, 21, 2), 1, 2):
    print(f"{k:2d}   {tv:.6f}")

# the divergence that drives the trend
for N in (10 ** 2, 10 ** 3, 10 ** 4, 10 ** 5):
    print(f"criterion partial sum, N={N:>6d}: {default_family_ip_partial(N, 1, involutive=True):.3f}")
