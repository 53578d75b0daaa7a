"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 flag/usage error,
3 numerical error.  Identical flags and seed produce byte-identical output.
"""
import argparse
import sys

import numpy as np

from . import verify as verify_mod
from ._backend import cosh_sqrt_real
from ._format import (
    bmv_csv,
    bmv_json,
    density_csv,
    density_json,
    gram_json,
    gram_random_json,
    measure_json,
    reconstruct_csv,
    reconstruct_json,
    taylor_csv,
    taylor_json,
)
from .bmv2 import Hermitian2, reduce_to_phi, trace_exp
from .branch_geometry import Params
from .density import DensityMethod, density_profile
from .errors import DomainError
from .expconvex_gram import check_exp_convex, gram_matrix, psd_verdict
from .laplace_rep import reconstruct_phi, representing_measure
from .specfun import phi, psi_sinc
from .taylor import phi_k_bessel, phi_k_integral, psi_k_recursion

_METHOD_BY_FLAG = {
    "series": DensityMethod.SERIES,
    "bessel": DensityMethod.BESSEL,
    "quad": DensityMethod.SINH_QUADRATURE,
    "contour": DensityMethod.CONTOUR_ELLIPSE,
}


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated floats, got {text!r}") from exc


def _hermitian(text: str) -> Hermitian2:
    vals = _float_list(text)
    if len(vals) != 4:
        raise argparse.ArgumentTypeError(
            f"a Hermitian matrix is h11,h22,Re(h12),Im(h12); got {len(vals)} numbers"
        )
    return Hermitian2(h11=vals[0], h22=vals[1], h12=complex(vals[2], vals[3]))


def cmd_density(args) -> int:
    p = Params(args.a, args.b)
    profile = density_profile(p, args.n_lambda, _METHOD_BY_FLAG[args.method], n=args.n)
    text = density_csv(profile) if args.format == "csv" else density_json(profile)
    sys.stdout.write(text)
    return 0


def cmd_reconstruct(args) -> int:
    p = Params(args.a, args.b)
    m = representing_measure(p, 65)
    rows = []
    worst = 0.0
    for t in np.linspace(args.t_min, args.t_max, args.t_steps):
        direct = phi(float(t), p)
        rec = reconstruct_phi(m, float(t), 32)
        err = abs(direct - rec)
        worst = max(worst, err)
        rows.append((float(t), direct, rec, err))
    text = reconstruct_csv(rows) if args.format == "csv" else reconstruct_json(rows)
    sys.stdout.write(text)
    return 0 if worst < 1e-6 else 1


def _gram_function(args):
    if args.function == "phi":
        p = Params(args.a, args.b)
        return lambda ts: phi(ts, p)
    if args.function == "psi":
        p = Params(args.a, args.b)
        return lambda ts: psi_sinc(ts, p)
    if args.k is None:
        raise DomainError("--function coeff requires --k")
    return lambda ts: phi_k_integral(args.k, ts, args.a, 64)


def cmd_gram(args) -> int:
    f = _gram_function(args)
    if args.points is not None:
        report = psd_verdict(args.points, gram_matrix(f, args.points))
        sys.stdout.write(gram_json(report))
        return 0 if report.verdict == "psd" else 1
    if not args.random:
        raise DomainError("provide --points or --random")
    result = check_exp_convex(
        f, trials=args.trials, N_max=args.n, t_range=args.t_range, seed=args.seed
    )
    sys.stdout.write(gram_random_json(result, args.trials, args.seed))
    return 0 if result.passed else 1


def cmd_taylor(args) -> int:
    rows = []
    for k in range(args.k_max + 1):
        if k == 0:
            val = phi_k_integral(0, args.t, args.a, args.n)
        elif args.method == "integral":
            val = phi_k_integral(k, args.t, args.a, args.n)
        elif args.method == "bessel":
            val = phi_k_bessel(k, args.t, args.a)
        else:
            val = psi_k_recursion(k, args.t, np.sqrt(args.a), 25) * args.a ** (-k)
        rows.append((k, val))
    text = taylor_csv(rows) if args.format == "csv" else taylor_json(rows)
    sys.stdout.write(text)
    return 0


def _reduced_value(t: float, red) -> float:
    factor = 2.0 * np.exp(red.mu * t + red.nu)
    if red.a == 0.0:
        return float(factor * cosh_sqrt_real(red.b))
    return float(factor * phi(t + red.shift, Params(red.a, red.b)))


def cmd_bmv2(args) -> int:
    red = reduce_to_phi(args.A, args.B)
    rows = []
    for t in np.linspace(args.t_min, args.t_max, args.t_steps):
        t = float(t)
        direct = trace_exp(t, args.A, args.B)
        reduced = _reduced_value(t, red)
        rows.append((t, direct, reduced, abs(direct - reduced)))
    text = bmv_csv(rows) if args.format == "csv" else bmv_json(rows, red)
    sys.stdout.write(text)
    return 0


def cmd_measure(args) -> int:
    p = Params(args.a, args.b)
    sys.stdout.write(measure_json(representing_measure(p, args.n_lambda)))
    return 0


def cmd_verify(args) -> int:
    results = verify_mod.run_battery(quick=args.quick, seed=args.seed)
    sys.stdout.write(verify_mod.format_report(results))
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coshrep",
        description="Representing density, Taylor routes, Gram PSD certification and the "
        "2x2 trace-exponential reduction for cosh(sqrt(a t^2 + b)).",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--seed", type=int, default=42)
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("density", parents=[common], help="tabulate the representing density")
    d.add_argument("--a", type=float, required=True)
    d.add_argument("--b", type=float, required=True)
    d.add_argument("--method", choices=sorted(_METHOD_BY_FLAG), required=True)
    d.add_argument("--n-lambda", type=int, required=True)
    d.add_argument("--n", type=int, default=None, help="quadrature/contour order")
    d.set_defaults(func=cmd_density)

    r = sub.add_parser("reconstruct", parents=[common], help="rebuild the function from its measure")
    r.add_argument("--a", type=float, required=True)
    r.add_argument("--b", type=float, required=True)
    r.add_argument("--t-min", type=float, required=True)
    r.add_argument("--t-max", type=float, required=True)
    r.add_argument("--t-steps", type=int, required=True)
    r.set_defaults(func=cmd_reconstruct)

    g = sub.add_parser("gram", parents=[common], help="PSD-certify a Gram matrix")
    g.add_argument("--function", choices=("phi", "psi", "coeff"), required=True)
    g.add_argument("--a", type=float, required=True)
    g.add_argument("--b", type=float, default=0.0)
    g.add_argument("--k", type=int, default=None)
    g.add_argument("--points", type=_float_list, default=None)
    g.add_argument("--random", action="store_true")
    g.add_argument("--n", type=int, default=8, help="max points per random trial")
    g.add_argument("--trials", type=int, default=100)
    g.add_argument("--t-range", type=float, default=3.0)
    g.set_defaults(func=cmd_gram)

    t = sub.add_parser("taylor", parents=[common], help="Taylor coefficients in b")
    t.add_argument("--a", type=float, required=True)
    t.add_argument("--t", type=float, required=True)
    t.add_argument("--k-max", type=int, required=True)
    t.add_argument("--method", choices=("integral", "bessel", "recursion"), required=True)
    t.add_argument("--n", type=int, default=64)
    t.set_defaults(func=cmd_taylor)

    m = sub.add_parser("bmv2", parents=[common], help="2x2 trace-exponential reduction")
    m.add_argument("--A", type=_hermitian, required=True, metavar="h11,h22,re,im")
    m.add_argument("--B", type=_hermitian, required=True, metavar="h11,h22,re,im")
    m.add_argument("--t-min", type=float, required=True)
    m.add_argument("--t-max", type=float, required=True)
    m.add_argument("--t-steps", type=int, required=True)
    m.set_defaults(func=cmd_bmv2)

    s = sub.add_parser("measure", parents=[common], help="export the representing measure")
    s.add_argument("--a", type=float, required=True)
    s.add_argument("--b", type=float, required=True)
    s.add_argument("--n-lambda", type=int, required=True)
    s.set_defaults(func=cmd_measure)

    v = sub.add_parser("verify", parents=[common], help="run the acceptance battery")
    v.add_argument("--quick", action="store_true")
    v.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
