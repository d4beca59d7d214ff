"""Command line front end.

Exit codes: 0 stable / success, 1 unstable, 2 marginal, 64 usage error.
"""

from __future__ import annotations

import argparse
import ast
import cmath
import json
import math
import operator
import sys
from pathlib import Path

from . import bohl, oracle, raster, recurrence, region
from .config import load_tolerances
from .core import NormalizedTrinomial, Trinomial, TrinomialError, normalize

EXIT_STABLE, EXIT_UNSTABLE, EXIT_MARGINAL, EXIT_USAGE = 0, 1, 2, 64

_COMPLEX_OPTS = {"-a", "-b", "-c"}
_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}
_UNARY = {ast.UAdd: operator.pos, ast.USub: operator.neg}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_real(text: str) -> float:
    """Real literal with ``pi`` sugar: ``0.6+pi``, ``-pi/2``, ``3*pi-0.1``."""
    try:
        tree = ast.parse(text.strip().replace("π", "pi"), mode="eval")
    except SyntaxError as exc:
        raise UsageError(f"bad real literal {text!r}") from exc

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id == "pi":
            return math.pi
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and type(node.op) in _UNARY:
            return _UNARY[type(node.op)](ev(node.operand))
        raise UsageError(f"bad real literal {text!r}")

    try:
        return ev(tree)
    except ZeroDivisionError as exc:
        raise UsageError(f"bad real literal {text!r}") from exc


def parse_complex(text: str) -> complex:
    """``re,im`` or ``polar:MOD@ARG`` (ARG may use ``pi``); a bare real also works."""
    text = text.strip()
    if text.startswith("polar:"):
        body = text[len("polar:"):]
        if "@" not in body:
            raise UsageError(f"polar literal needs MOD@ARG, got {text!r}")
        mod, arg = body.split("@", 1)
        return parse_real(mod) * cmath.exp(1j * parse_real(arg))
    if "," in text:
        parts = text.split(",")
        if len(parts) != 2:
            raise UsageError(f"complex literal needs exactly re,im, got {text!r}")
        return complex(parse_real(parts[0]), parse_real(parts[1]))
    return complex(parse_real(text))


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _real_arg(text: str) -> float:
    try:
        return parse_real(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _glue_negative_values(argv: list[str]) -> list[str]:
    # "-c -0.05,0" would otherwise read "-0.05,0" as an option
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _COMPLEX_OPTS and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and argv[i + 1] not in _COMPLEX_OPTS and len(argv[i + 1]) > 1 \
                and (argv[i + 1][1].isdigit() or argv[i + 1][1] in ".p"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _add_trinomial(p: argparse.ArgumentParser) -> None:
    p.add_argument("-n", type=int, required=True, help="degree n")
    p.add_argument("-m", type=int, required=True, help="inner exponent m < n")
    p.add_argument("-a", type=_complex_arg, default=1 + 0j, help="leading coefficient (default 1)")
    p.add_argument("-b", type=_complex_arg, required=True, help="middle coefficient, re,im or polar:MOD@ARG")
    p.add_argument("-c", type=_complex_arg, required=True, help="constant coefficient, re,im or polar:MOD@ARG")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trinom", description="Schur stability and root counts for a z^n + b z^m + c.",
                     allow_abbrev=False)
    parser.add_argument("--config", help="key=value tolerance file (default: $TRINOM_CONFIG)")
    parser.add_argument("--tau-int", type=float, help="integer-boundary tolerance")
    parser.add_argument("--tau-tri", type=float, help="triangle-tie tolerance")
    parser.add_argument("--tau-res", type=float, help="oracle residual tolerance")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("check", help="Schur stability verdict as JSON")
    _add_trinomial(p)

    p = sub.add_parser("count", help="roots with |z| < r by Bohl's theorem")
    _add_trinomial(p)
    p.add_argument("-r", "--radius", type=_real_arg, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check against computed roots")

    p = sub.add_parser("region", help="rasterize the projected stability region")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--bounds", nargs=4, type=_real_arg, metavar=("UMIN", "UMAX", "VMIN", "VMAX"),
                   default=list(raster.DEFAULT_BOUNDS))
    p.add_argument("--width", type=int, default=400)
    p.add_argument("--height", type=int, default=400)
    p.add_argument("--ppm", help="plain PPM (P3) output path")
    p.add_argument("--csv", help="CSV output path")
    p.add_argument("--png", help="matplotlib figure output path")
    p.add_argument("--prefix", help="write PREFIX.ppm, PREFIX.csv and PREFIX.png")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("params", help="(x, y, s, t) parameters and the |t| bound")
    _add_trinomial(p)

    p = sub.add_parser("compose", help="trinomial from (x, y, s, t)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    for name in ("x", "y", "s", "t"):
        p.add_argument(f"--{name}", type=_real_arg, required=True)

    p = sub.add_parser("simulate", help="run X(t) = -b X(t-(n-m)) - c X(t-n)")
    _add_trinomial(p)
    p.add_argument("--horizon", type=int, help="number of samples (default from the spectral radius)")
    p.add_argument("--seed", type=int, default=0, help="seed for the random initial string")
    p.add_argument("--csv", help="trajectory CSV output path")
    p.add_argument("--png", help="trajectory figure output path")
    return parser


def _trinomial(args) -> Trinomial:
    return Trinomial(args.n, args.m, args.a, args.b, args.c)


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True, allow_nan=False))


def cmd_check(args, tol) -> int:
    t = _trinomial(args)
    verdict = region.is_schur_stable(t, tol)
    payload = {"n": t.n, "m": t.m, "a": _pair(t.a), "b": _pair(t.b), "c": _pair(t.c), **verdict.to_dict()}
    _emit(payload)
    if verdict.marginal:
        return EXIT_MARGINAL
    return EXIT_STABLE if verdict.stable else EXIT_UNSTABLE


def cmd_count(args, tol) -> int:
    t = _trinomial(args)
    r = args.radius
    if not r > 0:
        raise UsageError("radius must be positive")
    dc = bohl.count_roots(t, r, tol)
    payload = {"n": t.n, "m": t.m, "r": r, "count": dc.count, "marginal": dc.marginal,
               "triangle": dc.triangle.value}
    if dc.interval is not None:
        payload["pivot"] = dc.interval.pivot
        payload["halfWidth"] = dc.interval.half_width
    if args.oracle:
        rs = oracle.find_roots(t)
        k, near = oracle.count_in_disc(rs, r, tol.root_margin)
        payload.update(oracleCount=k, oracleMarginal=near, agree=(k == dc.count))
    _emit(payload)
    return EXIT_STABLE


def cmd_region(args, tol) -> int:
    ppm, csv_path, png = args.ppm, args.csv, args.png
    if args.prefix:
        ppm = ppm or f"{args.prefix}.ppm"
        csv_path = csv_path or f"{args.prefix}.csv"
        png = png or f"{args.prefix}.png"
    if not (ppm or csv_path or png):
        raise UsageError("region needs at least one of --ppm, --csv, --png, --prefix")
    Trinomial(args.n, args.m)  # validates n > m >= 1
    ras = raster.rasterize(args.n, args.m, tuple(args.bounds), args.width, args.height, tol, args.jobs)
    written = []
    if ppm:
        raster.write_ppm(ras, ppm)
        written.append(ppm)
    if csv_path:
        raster.write_csv(ras, csv_path)
        written.append(csv_path)
    if png:
        from .plotting import plot_region

        plot_region(ras, png)
        written.append(png)
    _emit({"n": args.n, "m": args.m, "bounds": list(ras.bounds), "width": ras.width,
           "height": ras.height, "counts": ras.counts(), "files": written})
    return EXIT_STABLE


def _params_payload(nt: NormalizedTrinomial, tol) -> dict:
    point = region.project_pi(nt)
    rc = region.classify_region(point, tol)
    params = region.decompose_parameters(nt)
    bound = region.t_bound(rc, nt.n)
    if bound is None:
        within = False
    elif rc.tag is region.RegionTag.DELTA:
        within = abs(params.t) < bound
    else:
        within = abs(params.t) <= bound + tol.tau_int
    return {"n": nt.n, "m": nt.m, "reduction": nt.reduction, "x": params.x, "y": params.y,
            "s": params.s, "t": params.t, "tBound": bound, "withinBound": within,
            "region": rc.tag.value, "omega": rc.omega, "marginal": rc.marginal}


def cmd_params(args, tol) -> int:
    nt = normalize(_trinomial(args))
    _emit(_params_payload(nt, tol))
    return EXIT_STABLE


def cmd_compose(args, tol) -> int:
    nt = region.compose_parameters(args.x, args.y, args.s, args.t, args.n, args.m)
    verdict = region.is_schur_stable(nt.as_trinomial(), tol)
    _emit({"n": nt.n, "m": nt.m, "b": _pair(nt.b), "c": _pair(nt.c),
           "stable": verdict.stable, "marginal": verdict.marginal})
    return EXIT_STABLE


def cmd_simulate(args, tol) -> int:
    t = _trinomial(args)
    if t.a == 0:
        raise UsageError("simulate needs a nonzero leading coefficient")
    b, c = t.b / t.a, t.c / t.a
    verdict = region.is_schur_stable(t, tol)
    rho = oracle.find_roots(t).max_modulus
    horizon = args.horizon or recurrence.default_horizon(t.n, rho)
    spec = recurrence.RecurrenceSpec(t.n, t.m, b, c, recurrence.random_initial(t.n, args.seed), horizon)
    traj = recurrence.simulate(spec)
    rate = None
    if not traj.divergent:
        try:
            rate = recurrence.empirical_decay_rate(traj)
        except recurrence.DegenerateTrajectory:
            rate = None
    if verdict.stable:
        agrees = not traj.divergent and rate is not None and rate < 0
    else:
        agrees = traj.divergent or (rate is not None and rate >= 0)
    if args.csv:
        recurrence.write_csv(traj, args.csv)
    if args.png:
        from .plotting import plot_trajectory

        plot_trajectory(traj.values, args.png, title=f"n={t.n}, m={t.m}")
    _emit({"n": t.n, "m": t.m, "horizon": horizon, "steps": len(traj), "divergent": traj.divergent,
           "decayRate": None if rate is None or math.isinf(rate) else rate,
           "logSpectralRadius": math.log(rho) if rho > 0 else None,
           "stable": verdict.stable, "agreesWithVerdict": bool(agrees)})
    return EXIT_STABLE


COMMANDS = {
    "check": cmd_check,
    "count": cmd_count,
    "region": cmd_region,
    "params": cmd_params,
    "compose": cmd_compose,
    "simulate": cmd_simulate,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_glue_negative_values(argv))
        tol = load_tolerances(args.config).updated(
            tau_int=args.tau_int, tau_tri=args.tau_tri, tau_res=args.tau_res)
        return COMMANDS[args.command](args, tol)
    except (UsageError, TrinomialError, ValueError, OSError) as exc:
        print(f"trinom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
