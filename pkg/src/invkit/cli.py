"""Command-line front end: ``invkit <subcommand> ...``.

Every subcommand prints JSON (UTF-8, keys in a fixed order) on stdout.
Failures print a one-line diagnostic on stderr and exit with the code
attached to the error class: 2 parse, 3 precondition, 4 sampler,
5 numeric non-convergence, 6 I/O.
"""

import argparse
import json
import sys

from .cloud import write_csv, write_svg
from .diffop import DiffOp, psi_tilde
from .errors import InvkitError, ParseError
from .hutchinson import (ContinuousUniform, Integer, SamplerConfig, TwoPoint, chaos_game,
                         chaos_game_continuous, chaos_game_two_point)
from .invariance import (classify_operator, disk_invariance_sampled, eigenroot_cloud,
                         large_disk_decision, lower_bound_region)
from .newton import affine_map_A_inverse, border_report
from .parsing import parse_bipoly, parse_scalar

EXIT_IO = 6
EXIT_PRECONDITION = 3


def _emit(obj, out):
    json.dump(obj, out, indent=2, ensure_ascii=False)
    out.write("\n")


def _pair(text, conv, what):
    parts = text.split(":")
    if len(parts) != 2:
        raise ParseError(f"{what} must look like a:b", text, 0)
    try:
        return conv(parts[0]), conv(parts[1])
    except ValueError:
        raise ParseError(f"bad number in {what}", text, 0) from None


def cmd_classify(args, out):
    _emit(classify_operator(DiffOp.parse(args.operator)).to_json(), out)


def cmd_disk(args, out):
    T = DiffOp.parse(args.operator)
    if args.radius is None:
        res = large_disk_decision(T, args.n, exact_count=not args.approximate)
    else:
        b, i = _pair(args.samples.replace(",", ":"), int, "--samples")
        res = disk_invariance_sampled(T, args.n, args.radius, b, i)
    _emit(res.to_json(), out)


def cmd_hutchinson(args, out):
    T = DiffOp.parse(args.operator)
    if args.n_range is not None:
        mode, run = ContinuousUniform(*_pair(args.n_range, float, "--n-range")), chaos_game_continuous
    elif args.two_point is not None:
        mode, run = TwoPoint(*_pair(args.two_point, float, "--two-point")), chaos_game_two_point
    else:
        mode, run = Integer(args.n if args.n is not None else T.order), chaos_game
    cfg = SamplerConfig(steps=args.steps, burn_in=args.burn_in, chains=args.chains, seed=args.seed,
                        mode=mode, include_trivial=args.include_trivial)
    z0 = complex(parse_scalar(args.z0))
    cloud = run(T, cfg, z0)
    meta = dict(cloud.metadata)
    meta["points"] = len(cloud)
    write_csv(cloud, args.out)
    meta["csv"] = args.out
    if args.svg:
        write_svg(cloud, args.svg)
        meta["svg"] = args.svg
    _emit(meta, out)


def cmd_newton(args, out):
    if args.bipoly is not None:
        names = tuple(v.strip() for v in args.vars.split(","))
        _emit(border_report(parse_bipoly(args.bipoly, names)), out)
        return
    if args.operator is None:
        raise ParseError("newton needs an operator or --bipoly")
    T = DiffOp.parse(args.operator)
    rep = border_report(psi_tilde(T))
    rep["shifted_vertices"] = [list(v) for v in affine_map_A_inverse(rep["vertices"], T.order)]
    _emit(rep, out)


def cmd_eigenroots(args, out):
    T = DiffOp.parse(args.operator)
    a, b = _pair(args.m, int, "--m")
    cloud = eigenroot_cloud(T, a, b)
    if args.out:
        write_csv(cloud, args.out)
        meta = dict(cloud.metadata)
        meta["points"] = len(cloud)
        meta["csv"] = args.out
        _emit(meta, out)
    else:
        out.write("re,im,m\n")
        for z, m in zip(cloud.points, cloud.tags):
            out.write(f"{z.real:.17g},{z.imag:.17g},{m}\n")


def cmd_lowerbound(args, out):
    T = DiffOp.parse(args.operator)
    _emit(lower_bound_region(T, n=args.n, m_max=args.m_max).to_json(), out)


def build_parser():
    p = argparse.ArgumentParser(prog="invkit", description="Invariant sets of polynomial-coefficient differential operators.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="Fuchs index, degeneracy, Newton class, cone, notes")
    s.add_argument("operator")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("disk", help="large-disk decision, or a sampled check for one radius")
    s.add_argument("operator")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--radius", type=float)
    s.add_argument("--samples", default="64,64", help="boundary,interior sample counts")
    s.add_argument("--approximate", action="store_true", help="numeric root location instead of exact counts")
    s.set_defaults(func=cmd_disk)

    s = sub.add_parser("hutchinson", help="chaos-game point cloud")
    s.add_argument("operator")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--n", type=int)
    g.add_argument("--n-range", dest="n_range")
    g.add_argument("--two-point", dest="two_point")
    s.add_argument("--steps", type=int, default=100_000)
    s.add_argument("--burn-in", dest="burn_in", type=int, default=100)
    s.add_argument("--chains", type=int, default=4)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--z0", default="0")
    s.add_argument("--include-trivial", dest="include_trivial", action="store_true")
    s.add_argument("--out", required=True)
    s.add_argument("--svg")
    s.set_defaults(func=cmd_hutchinson)

    s = sub.add_parser("newton", help="NE border of psi-tilde of an operator, or of a bivariate polynomial")
    s.add_argument("operator", nargs="?")
    s.add_argument("--bipoly")
    s.add_argument("--vars", default="u,v")
    s.set_defaults(func=cmd_newton)

    s = sub.add_parser("eigenroots", help="roots of dominant eigenpolynomials")
    s.add_argument("operator")
    s.add_argument("--m", default="1:8")
    s.add_argument("--out")
    s.set_defaults(func=cmd_eigenroots)

    s = sub.add_parser("lowerbound", help="sets contained in every invariant set")
    s.add_argument("operator")
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--m-max", dest="m_max", type=int, default=8)
    s.set_defaults(func=cmd_lowerbound)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except InvkitError as exc:
        print(f"invkit {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"invkit {args.command}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"invkit {args.command}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return 0


if __name__ == "__main__":
    sys.exit(main())
