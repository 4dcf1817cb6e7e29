"""Curvature of the homogeneous spin^c connection on CP^n.

Run with ``python3 demos/cpn_curvature.py``.
"""

from fractions import Fraction

import numpy as np

from spincut.models import cpn

rng = np.random.default_rng(3)
for n in (1, 2, 3):
    check = cpn.verify_cpn_curvature(n, rng, pairs=10)
    t = cpn.descriptor(n).omega_fs_coefficient
    print(f"CP^{n}: closed-form curvature vs finite differences {check.residual:.1e};"
          f" canonical coefficient t = {t} admissible: {cpn.classify_cpn(n, t)}")

for n in (1, 2):
    allowed = [str(Fraction(j, 2)) for j in range(-4, 5) if cpn.classify_cpn(n, Fraction(j, 2))]
    print(f"CP^{n}: admissible t in [-2, 2]: {allowed}")
