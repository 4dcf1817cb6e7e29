"""Walk through the circle-equivariant prequantization of the complex plane.

Run with ``python3 demos/plane_prequantization.py``.
"""

import numpy as np

from spincut.forms import pair, verify_curvature
from spincut.models import ComplexPlane, moment_map, plane

rng = np.random.default_rng(0)
points = plane.sample_points(rng, 20)

for ell in (-1, 1, 3):
    theta = plane.theta_c(ell)
    check = verify_curvature(theta, plane.omega_c(), points)
    print(f"ell = {ell:+d}: d theta = -i omega holds to {check.residual:.1e}")

    # the generator pairing recovers the moment map -(|z|^2 + ell/2)
    z = 0.6 - 0.3j
    value = pair(theta, plane.generator_field_c(ell), plane.lift(z))
    print(f"          -i theta(generator) at z = {z}: {(-1j * value).real:+.4f}"
          f"  (moment_map gives {moment_map(ComplexPlane(ell), z):+.4f})")

neg = plane.theta_c(3, negative=True)
check = verify_curvature(neg, plane.omega_c(negative=True), points)
print(f"negative orientation, ell = 3: curvature residual {check.residual:.1e},"
      f" moment at the origin {plane.moment(0j, 3, negative=True):+.2f}")
