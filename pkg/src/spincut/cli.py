"""Command-line verification reports.

JSON goes to stdout and a one-line-per-check summary to stderr.  Exit status
is 0 when every check passes, 1 when one fails and 2 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import cutting
from .clifford import Multivector, blade_indices, blade_mul, reduce_word
from .errors import SpinCError
from .forms import pair, verify_curvature
from .models import (ComplexPlane, Sphere, cpn, det_bundle_connection, moment_map, plane, sphere,
                     verify_moment_derivative)
from .models.descriptors import require_odd
from .report import Check, Report
from .spin import det_map, lambda_c, lambda_map, rotor

PAIRING_TOL = 1e-9


def _flag(name: str, ok: bool, detail: str = "") -> Check:
    return Check(name, 0.0 if ok else 1.0, 0.5, detail=detail if not ok else "")


def _random_vector(rng, k):
    return Multivector.vector(rng.normal(size=k).tolist())


def _random_spin(rng, k):
    x = Multivector.scalar(1.0, k)
    for _ in range(2):
        u, v = rng.normal(size=k), rng.normal(size=k)
        x = x * Multivector.vector((u / np.linalg.norm(u)).tolist()) \
              * Multivector.vector((v / np.linalg.norm(v)).tolist())
    return x


def verify_clifford(args, rng) -> Report:
    report = Report("verify clifford", {"samples": args.samples, "seed": args.seed})
    bad = sum(blade_mul(a, b, k) != reduce_word(blade_indices(a) + blade_indices(b))
              for k in range(6) for a in range(1 << k) for b in range(1 << k))
    report.add(Check("blade_mul vs word reduction, k <= 5", float(bad), 1.0, detail="mismatch count"))

    worst_assoc = worst_rel = worst_anti = 0.0
    for _ in range(args.samples):
        x, y, z = (Multivector(4, dict(enumerate(rng.normal(size=16)))) for _ in range(3))
        worst_assoc = max(worst_assoc, ((x * y) * z - x * (y * z)).norm())
        worst_anti = max(worst_anti, ((x * y).transpose() - y.transpose() * x.transpose()).norm())
        v = _random_vector(rng, 5)
        v = v / v.norm()
        worst_rel = max(worst_rel, (v * v + 1).norm())
    report.add(Check("associativity", worst_assoc, 1e-12))
    report.add(Check("v v = -|v|^2", worst_rel, 1e-12))
    report.add(Check("(xy)^t = y^t x^t", worst_anti, 1e-12))

    worst_rot = worst_hom = worst_orth = 0.0
    for _ in range(args.samples):
        phi = rng.uniform(-np.pi, np.pi)
        c, s = math.cos(2 * phi), math.sin(2 * phi)
        worst_rot = max(worst_rot, np.abs(lambda_map(rotor(phi)) - np.array([[c, -s], [s, c]])).max())
        x, y = _random_spin(rng, 4), _random_spin(rng, 4)
        Lx = lambda_map(x)
        worst_hom = max(worst_hom, np.abs(lambda_map(x * y) - Lx @ lambda_map(y)).max(),
                        np.abs(lambda_map(-x) - Lx).max())
        worst_orth = max(worst_orth, np.abs(Lx.T @ Lx - np.eye(4)).max())
    report.add(Check("lambda(x_phi) rotates by 2 phi", worst_rot, 1e-10))
    report.add(Check("lambda homomorphism and lambda(-x) = lambda(x)", worst_hom, 1e-10))
    report.add(Check("lambda orthogonality", worst_orth, 1e-10))
    return report


def verify_plane(args, rng) -> Report:
    ell = require_odd(args.ell)
    report = Report("verify plane", {"ell": ell, "samples": args.samples, "seed": args.seed})
    for negative in (False, True):
        tag = "negative plane" if negative else "plane"
        theta = plane.theta_c(ell, negative)
        points = plane.sample_points(rng, args.samples)
        report.add(verify_curvature(theta, plane.omega_c(negative), points, tol=args.tol,
                                    name=f"{tag}: d theta = -i omega"))
        gen = plane.generator_field_c(ell, negative)
        worst = max(abs(-1j * pair(theta, gen, p) - plane.moment(complex(p[0], p[1]), ell, negative))
                    for p in points)
        report.add(Check(f"{tag}: -i theta(d/dphi) = Phi", worst, PAIRING_TOL))
        worst = 0.0
        for p in points:
            phi = rng.uniform(-np.pi, np.pi)
            v = rng.normal(size=4)
            # the action is affine in the chart, so its differential is exact
            moved = plane.act(ell, phi, p + v, negative) - plane.act(ell, phi, p, negative)
            worst = max(worst, abs(theta(plane.act(ell, phi, p, negative), moved) - theta(p, v)))
        report.add(Check(f"{tag}: circle invariance", worst, PAIRING_TOL))
        report.add(verify_moment_derivative(ComplexPlane(ell, negative), args.samples, args.tol, rng))
    return report


def verify_sphere(args, rng) -> Report:
    k, n = args.k, args.n
    d = Sphere(k, n)
    report = Report("verify sphere", {"k": k, "n": n, "samples": args.samples, "seed": args.seed})
    theta = sphere.theta_sphere(k, n)
    points = sphere.sample_points(rng, args.samples)
    report.add(verify_curvature(theta, sphere.omega_n(n), points, tol=args.tol,
                                name="d theta_n = -i omega_n"))
    gen = sphere.generator_field_sphere(k, n)
    worst = max(abs(-1j * pair(theta, gen, p)
                    - sphere.moment_closed_form(k, n, complex(p[0], p[1]), complex(p[2], p[3])))
                for p in points)
    report.add(Check("-i theta(d/dphi) = (n/2)(h + 1) + k + 1/2", worst, PAIRING_TOL))
    report.add(verify_moment_derivative(d, args.samples, args.tol, rng))
    worst = max(abs(theta(p, sphere.spin_direction(p))) for p in points)
    report.add(Check("theta vanishes on spin directions", worst, PAIRING_TOL))
    det = det_bundle_connection(d, rng=rng)
    worst = 0.0
    for p in points:
        v = rng.normal(size=10)
        worst = max(worst, abs(theta(p, v) - det.pullback_half(p, v)))
    report.add(Check("theta = 1/2 q^* theta_bar", worst, args.tol))
    lo, hi = sphere.moment_image_sphere(k, n)
    report.extra["moment_image"] = [float(lo), float(hi)]
    report.extra["prequantizable"] = sphere.is_prequantizable_sphere(Sphere(k, n).omega_coefficient / 2)
    return report


def verify_cpn(args, rng) -> Report:
    n = args.n
    if n < 1:
        raise SpinCError(f"cpn needs n >= 1, got {n}")
    report = Report("verify cpn", {"n": n, "samples": args.samples, "seed": args.seed})
    report.add(cpn.verify_cpn_curvature(n, rng, pairs=min(args.samples, 20), tol=max(args.tol, 1e-5)))
    worst = 0.0
    for _ in range(args.samples):
        A = cpn.random_unitary(n, rng)
        F = cpn.lift_F(A)
        worst = max(worst, np.abs(lambda_c(F) - cpn.realify(A)).max(), abs(det_map(F) - np.linalg.det(A)))
    report.add(Check("lift_F covers realification and det", worst, 1e-8))
    t = cpn.descriptor(n).omega_fs_coefficient
    report.add(_flag(f"t = {t} admissible", cpn.classify_cpn(n, t)))
    report.extra["omega_fs_coefficient"] = str(t)
    report.extra["admissible_parity"] = "integral t" if n % 2 else "half-integral t"
    return report


def cmd_cut(args, rng) -> Report:
    ell = require_odd(args.ell)
    inputs = {"k": args.k, "n": args.n, "ell": ell, "alpha": args.alpha, "seed": args.seed}
    report = Report("cut", inputs)
    cut = cutting.cut_report(args.k, args.n, ell, args.alpha, args.samples, rng=rng)
    report.extra["cut"] = cut.to_json()
    report.add(_flag("validity: k + 1/2 < ell/2 < n + k + 1/2", cut.validity,
                     "ell/2 is not strictly inside the moment image"))
    report.add(Check("descent residual", cut.residual, cutting.ADMISSIBLE_TOL,
                     detail=cut.reason if math.isnan(cut.residual) else ""))
    if cut.validity and args.alpha is None:
        report.add(cutting.verify_cut_chart_map(args.k, args.n, ell, samples=args.samples, rng=rng))
    return report


def cmd_moment(args, rng) -> Report:
    k, n = args.k, args.n
    d = Sphere(k, n)
    point = None if args.point is None else [[c.real, c.imag] for c in args.point]
    report = Report("moment", {"k": k, "n": n, "point": point})
    lo, hi = sphere.moment_image_sphere(k, n)
    report.extra["image"] = [float(lo), float(hi)]
    if args.point is not None:
        z, w = args.point
        sphere.check_unit(z, w)
        value = moment_map(d, (z, w))
        report.extra["values"] = [{"h": abs(z) ** 2 - abs(w) ** 2, "phi": value}]
        report.add(Check("pairing vs closed form",
                         abs(value - sphere.moment_closed_form(k, n, z, w)), PAIRING_TOL))
        return report
    heights = np.linspace(-1, 1, args.samples)
    values = [moment_map(d, (complex(math.sqrt((1 + h) / 2)), complex(math.sqrt((1 - h) / 2))))
              for h in heights]
    report.extra["values"] = [{"h": float(h), "phi": v} for h, v in zip(heights, values)]
    steps = np.diff(values) * np.sign(n)
    report.add(_flag("monotone in h", bool(np.all(steps >= -PAIRING_TOL))))
    report.add(Check("pairing vs closed form",
                     max(abs(v - sphere.moment_of_height(k, n, h)) for h, v in zip(heights, values)),
                     PAIRING_TOL))
    return report


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ell", type=int, default=1, help="odd plane parameter")
    common.add_argument("--k", type=int, default=0)
    common.add_argument("--n", type=int, default=2)
    common.add_argument("--samples", type=int, default=50)
    common.add_argument("--tol", type=float, default=1e-6, help="tolerance for finite-difference checks")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="indent the JSON report")

    parser = argparse.ArgumentParser(prog="spincut", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser("verify", parents=[common], help="run a model's invariant suite")
    verify.add_argument("target", choices=["clifford", "plane", "sphere", "cpn"])
    cut = sub.add_parser("cut", parents=[common], help="cut the sphere model with the plane")
    cut.add_argument("--alpha", type=float, default=None, help="cut level (default ell/2)")
    moment = sub.add_parser("moment", parents=[common], help="sphere moment map values")
    moment.add_argument("--point", type=complex, nargs=2, metavar=("Z", "W"),
                        help="a point of S^3, e.g. 1 0 or 0.6 0.8j")
    return parser


_VERIFY = {"clifford": verify_clifford, "plane": verify_plane, "sphere": verify_sphere, "cpn": verify_cpn}


def run(args) -> Report:
    rng = np.random.default_rng(args.seed)
    if args.command == "verify":
        return _VERIFY[args.target](args, rng)
    if args.command == "cut":
        return cmd_cut(args, rng)
    return cmd_moment(args, rng)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.samples < 1:
        parser.error("--samples must be positive")
    try:
        report = run(args)
    except SpinCError as exc:
        print(f"spincut: error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(report.to_dict(), indent=2 if args.json else None))
    for c in report.checks:
        print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.residual:.3g} (tol {c.tolerance:g})",
              file=sys.stderr)
    print(f"overall: {'PASS' if report.overall else 'FAIL'}", file=sys.stderr)
    return 0 if report.overall else 1


if __name__ == "__main__":
    sys.exit(main())
