"""Riesz partial products on the circle: sparse coefficients against an FFT of samples."""

import numpy as np

from rieszsep import CircleGrid, eval_circle, grid_coefficients, make_letters, make_spec, partial_transform
from rieszsep.dualgroup import IntegerGroup

Z = IntegerGroup()
letters = make_letters(Z, [Z.element(f) for f in (3, 9, 27)])
spec = make_spec(Z, letters, [0.5, 0.4, 0.3], level=3)

T = partial_transform(spec, letters)
print("support size", len(T))
for x, v in T.sorted_items()[:8]:
    print(f"  freq {Z.value(x):4d}: {v.real:.4f}")

grid = CircleGrid(2048)
density = eval_circle(spec, letters, grid)
print("density min", density.values.min(), "mass", density.mass)

c = grid_coefficients(density)
err = max(abs(c.get(Z.value(x), 0) - v) for x, v in T.values.items())
print("max deviation from FFT:", err)

# optional picture
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None
if plt is not None:
    plt.plot(grid.points, density.values)
    plt.title("partial product over {3, 9, 27}")
    plt.savefig("riesz_circle.png")
