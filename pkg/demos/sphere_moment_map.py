"""Moment maps of the spin^c prequantizations of the two-sphere.

Run with ``python3 demos/sphere_moment_map.py``.
"""

from fractions import Fraction

import numpy as np

from spincut.models import Sphere, moment_map, sphere, verify_moment_derivative

for k, n in [(0, 2), (-1, 3), (2, 1)]:
    lo, hi = sphere.moment_image_sphere(k, n)
    north = moment_map(Sphere(k, n), (1 + 0j, 0j))
    south = moment_map(Sphere(k, n), (0j, 1 + 0j))
    check = verify_moment_derivative(Sphere(k, n), rng=np.random.default_rng(1))
    print(f"P_{{{k},{n}}}: image [{lo}, {hi}], north pole {north:g}, south pole {south:g},"
          f" dPhi residual {check.residual:.1e}")

# the moment map is affine in the height h = |z|^2 - |w|^2
k, n = 0, 2
for h in np.linspace(-1, 1, 5):
    z, w = complex(np.sqrt((1 + h) / 2)), complex(np.sqrt((1 - h) / 2))
    print(f"  h = {h:+.2f}  Phi = {moment_map(Sphere(k, n), (z, w)):.3f}")

quarters = [Fraction(j, 4) for j in range(-6, 7)]
print("prequantizable coefficients among the quarters in [-3/2, 3/2]:",
      [str(c) for c in quarters if sphere.is_prequantizable_sphere(c)])
