"""Command-line front end.

Subcommands: member, slice, transform, oracle, massgap, continue.
Outputs are deterministic for a fixed command line + seed: volatile data
(wall time) goes to stderr only.  Exit codes: 0 success, 1 check failure,
2 usage/schema error, 3 unsupported region/configuration.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .config import DEFAULT_SEED, SearchBudget, TOL_ENV
from .continuation import build_hyperbola_family, continue_along_family, default_test_functions
from .envelopes import (
    EnvelopeVerdict,
    envelope_hyperboloid_shell,
    envelope_mu_cone,
    envelope_shell_complement,
    jld_excluded,
)
from .errors import (
    BadGeometry,
    LightconeError,
    PreconditionFailed,
    SchemaError,
    SingularPoint,
    UnsupportedConfiguration,
    UnsupportedRegion,
)
from .minkowski import ComplexPoint2, RealPoint2
from .oracles import SUITES, run_suite
from .regions import boundary_distance, contains, region_from_json
from .spectral import ShellBand, SpectrumHypothesis, massgap_contradiction
from .transforms import phi, psi_phi, psi_phi_inverse

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3


def _parse_real_point(text: str) -> RealPoint2:
    try:
        parts = [float(v) for v in text.split(",")]
        if len(parts) != 2:
            raise ValueError
        return RealPoint2(parts[0], parts[1])
    except ValueError as exc:
        raise SchemaError(f"bad point {text!r}; expected 't,x'") from exc


def _parse_complex_point(text: str) -> ComplexPoint2:
    """Syntax re0,re1;im0,im1 (imaginary part optional)."""
    try:
        chunks = text.split(";")
        re = _parse_real_point(chunks[0])
        im = _parse_real_point(chunks[1]) if len(chunks) > 1 else RealPoint2(0, 0)
        if len(chunks) > 2:
            raise ValueError
        return ComplexPoint2.from_parts(re, im)
    except (ValueError, SchemaError) as exc:
        raise SchemaError(
            f"bad complex point {text!r}; expected 're0,re1;im0,im1'"
        ) from exc


def _emit(args, payload: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _envelope_fn(args):
    name = args.envelope
    if name == "mu-cone":
        if args.mu is None:
            raise SchemaError("--mu required for the mu-cone envelope")
        return lambda z: envelope_mu_cone(z, args.mu, tol=args.tol)
    if name == "hyperboloid-shell":
        if args.m1 is None or args.m2 is None:
            raise SchemaError("--m1/--m2 required for the hyperboloid-shell envelope")
        return lambda z: envelope_hyperboloid_shell(z, args.m1, args.m2, tol=args.tol)
    if name in ("shell", "shell-complement"):
        if args.m is None:
            raise SchemaError("--m required for the shell-complement envelope")
        return lambda z: envelope_shell_complement(z, args.m, tol=args.tol)
    raise SchemaError(f"unknown envelope {name!r}")


def cmd_member(args) -> int:
    if (args.region is None) == (args.envelope is None):
        raise SchemaError("provide exactly one of --region or --envelope")
    if args.region is not None:
        try:
            spec = json.loads(args.region)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"bad region JSON: {exc}") from exc
        region = region_from_json(spec)
        if args.z is not None:
            # envelope membership of a complex point by witness search
            z = _parse_complex_point(args.z)
            budget = SearchBudget(psi_grid=args.budget, lam_grid=args.budget)
            v = jld_excluded(z, region, budget)
            _emit(args, _dump_json({"verdict": v.kind.value, "margin": v.margin}))
            return EXIT_OK
        if args.p is None:
            raise SchemaError("--p required for region membership")
        p = _parse_real_point(args.p)
        inside = contains(region, p)
        margin = boundary_distance(region, p)
        verdict = "inside" if inside else "excluded"
        if margin <= args.tol:
            verdict = "boundary"
        _emit(args, _dump_json({"verdict": verdict, "margin": margin if inside else -margin}))
        return EXIT_OK
    if args.z is None:
        raise SchemaError("--z required for envelope membership")
    z = _parse_complex_point(args.z)
    v = _envelope_fn(args)(z)
    _emit(args, _dump_json({"verdict": v.kind.value, "margin": v.margin}))
    return EXIT_OK


def _slice_rows(args, fn, region):
    try:
        b = [float(v) for v in args.bounds.split(",")]
        if len(b) != 4:
            raise ValueError
    except ValueError as exc:
        raise SchemaError("--bounds must be 'x0min,x0max,x1min,x1max'") from exc
    if args.res < 2:
        raise SchemaError("--res must be >= 2 per axis")
    y = _parse_real_point(args.y) if args.y else RealPoint2(0, 0)
    x0s = np.linspace(b[0], b[1], args.res)
    x1s = np.linspace(b[2], b[3], args.res)

    def eval_row(x0):
        row = []
        for x1 in x1s:
            if region is not None:
                p = RealPoint2(float(x0), float(x1))
                inside = contains(region, p)
                d = boundary_distance(region, p)
                verdict = "inside" if inside else "excluded"
                if d <= args.tol:
                    verdict = "boundary"
                row.append((float(x0), float(x1), verdict, d if inside else -d))
            else:
                z = ComplexPoint2.from_parts(RealPoint2(float(x0), float(x1)), y)
                v: EnvelopeVerdict = fn(z)
                row.append((float(x0), float(x1), v.kind.value, v.margin))
        return row

    workers = max(1, int(os.environ.get("LIGHTCONE_ENV_THREADS", "1")))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(eval_row, x0s))
    else:
        rows = [eval_row(x0) for x0 in x0s]
    return [cell for row in rows for cell in row]


def cmd_slice(args) -> int:
    if (args.region is None) == (args.envelope is None):
        raise SchemaError("provide exactly one of --region or --envelope")
    region = None
    fn = None
    if args.region is not None:
        try:
            region = region_from_json(json.loads(args.region))
        except json.JSONDecodeError as exc:
            raise SchemaError(f"bad region JSON: {exc}") from exc
    else:
        fn = _envelope_fn(args)
    cells = _slice_rows(args, fn, region)
    if args.format == "json":
        payload = _dump_json(
            [
                {"x0": c[0], "x1": c[1], "verdict": c[2], "margin": c[3]}
                for c in cells
            ]
        )
    else:
        lines = ["x0,x1,verdict,margin"]
        lines += [f"{c[0]!r},{c[1]!r},{c[2]},{c[3]!r}" for c in cells]
        payload = "\n".join(lines) + "\n"
    _emit(args, payload)
    return EXIT_OK


def cmd_transform(args) -> int:
    z = _parse_complex_point(args.z)
    if args.map == "phi":
        w = phi(z)
    elif args.map == "psi-phi":
        if args.mu is None:
            raise SchemaError("--mu required for psi-phi")
        w = psi_phi(z, args.mu)
    elif args.map == "psi-phi-inverse":
        if args.mu is None:
            raise SchemaError("--mu required for psi-phi-inverse")
        w = psi_phi_inverse(z, args.mu)
    else:
        raise SchemaError(f"unknown map {args.map!r}")
    _emit(
        args,
        _dump_json(
            {
                "t": [w.t.real, w.t.imag],
                "x": [w.x.real, w.x.imag],
            }
        ),
    )
    return EXIT_OK


def cmd_oracle(args) -> int:
    import inspect

    params = inspect.signature(SUITES[args.suite]).parameters
    kwargs = {}
    if "seed" in params:
        kwargs["seed"] = args.seed
    if args.n is not None:
        for cand in ("n", "nodes", "nfuncs", "trials"):
            if cand in params:
                kwargs[cand] = args.n
                break
    if args.grid is not None and "grid_n" in params:
        kwargs["grid_n"] = args.grid
    t0 = time.perf_counter()
    report = run_suite(args.suite, **kwargs)
    elapsed = time.perf_counter() - t0
    data = report.to_json()
    data["command"] = "oracle " + args.suite
    _emit(args, _dump_json(data))
    print(f"[{'PASS' if report.passed else 'FAIL'}] {args.suite} "
          f"max_dev={report.max_dev:.3e} violations={report.violations} "
          f"({elapsed:.2f}s)", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_massgap(args) -> int:
    try:
        m = float(args.m)
        m1 = math.inf if str(args.m1).lower() in ("inf", "infinity") else float(args.m1)
    except ValueError as exc:
        raise SchemaError("bad --m/--m1") from exc
    if not (m > 0 and (math.isinf(m1) or m1 >= m)):
        raise SchemaError("need m > 0 and m1 >= m (or 'inf')")
    s = _parse_real_point(args.s) if args.s else RealPoint2(1.0, 0.0)
    h = SpectrumHypothesis(ShellBand(m, m1), s, epsilon=args.eps)
    res = massgap_contradiction(h)
    payload = {
        "witness": None if res.witness is None else [res.witness.t, res.witness.x],
        "q_square": res.q_square,
        "theta": res.theta,
        "theta_crossing": res.theta_crossing,
        "reason": res.reason,
    }
    _emit(args, _dump_json(payload))
    return EXIT_OK


def cmd_continue(args) -> int:
    s = _parse_real_point(args.s) if args.s else RealPoint2(1.0, 0.0)
    p = _parse_real_point(args.p) if args.p else RealPoint2(-0.05, 1.0)
    fam = build_hyperbola_family(p, args.slope, s, args.mu, scale=args.scale)
    funcs = dict(default_test_functions(args.mu))
    if args.function not in funcs:
        raise SchemaError(f"unknown test function {args.function!r}; "
                          f"choose from {sorted(funcs)}")
    alphas = [float(v) for v in args.alphas.split(",")]
    result = continue_along_family(funcs[args.function], fam, alphas, nodes=args.nodes)
    payload = {
        "function": args.function,
        "alphas": alphas,
        "nodes": args.nodes,
        "alpha_star": fam.alpha_star,
        "window": list(fam.window),
        "max_deviation": result.max_deviation,
        "max_err_estimate": max(float(np.max(s.err_estimates)) for s in result.slices),
    }
    _emit(args, _dump_json(payload))
    return EXIT_OK if result.max_deviation <= 1e-6 else EXIT_CHECK_FAILED


def _add_globals(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None

    def default(v):
        return argparse.SUPPRESS if suppress else v

    parser.add_argument("--seed", type=int, default=default(DEFAULT_SEED),
                        help="sampling seed")
    parser.add_argument("--tol", type=float, default=default(TOL_ENV),
                        help="verdict tolerance")
    parser.add_argument("--budget", type=int, default=default(64),
                        help="search grid size per axis")
    parser.add_argument("--format", choices=("csv", "json"), default=default("csv"))
    parser.add_argument("--out", default=default(None),
                        help="write output to FILE instead of stdout")
    _ = d


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lightcone-env",
        description="Envelopes of holomorphy for Minkowski coincidence regions: "
        "membership queries, plane slices, inversion transforms, oracle "
        "cross-checks, Cauchy continuation and the mass-gap detector.  "
        "LIGHTCONE_ENV_THREADS caps slice parallelism.",
    )
    _add_globals(ap, suppress=False)
    sub = ap.add_subparsers(dest="command", required=True)

    m = sub.add_parser("member", help="membership verdict for a point")
    m.add_argument("--region", help="region JSON (see docs/regions.md)")
    m.add_argument("--envelope", choices=("mu-cone", "hyperboloid-shell", "shell", "shell-complement"))
    m.add_argument("--mu", type=float)
    m.add_argument("--m", type=float)
    m.add_argument("--m1", type=float)
    m.add_argument("--m2", type=float)
    m.add_argument("--z", help="complex point 're0,re1;im0,im1'")
    m.add_argument("--p", help="real point 't,x'")
    _add_globals(m, suppress=True)
    m.set_defaults(fn=cmd_member)

    s = sub.add_parser("slice", help="verdict grid on a real plane slice")
    s.add_argument("--region")
    s.add_argument("--envelope", choices=("mu-cone", "hyperboloid-shell", "shell", "shell-complement"))
    s.add_argument("--mu", type=float)
    s.add_argument("--m", type=float)
    s.add_argument("--m1", type=float)
    s.add_argument("--m2", type=float)
    s.add_argument("--y", help="fixed imaginary part 'y0,y1'")
    s.add_argument("--bounds", required=True, help="'x0min,x0max,x1min,x1max'")
    s.add_argument("--res", type=int, required=True, help="grid resolution per axis (>= 2)")
    _add_globals(s, suppress=True)
    s.set_defaults(fn=cmd_slice)

    t = sub.add_parser("transform", help="apply an inversion transform to a point")
    t.add_argument("--map", required=True, choices=("phi", "psi-phi", "psi-phi-inverse"))
    t.add_argument("--mu", type=float)
    t.add_argument("--z", required=True)
    _add_globals(t, suppress=True)
    t.set_defaults(fn=cmd_transform)

    o = sub.add_parser("oracle", help="run a cross-verification suite")
    o.add_argument("suite", choices=sorted(SUITES))
    o.add_argument("--n", type=int, default=None, help="sample count / node count")
    o.add_argument("--grid", type=int, default=None, help="grid size (grid suites)")
    _add_globals(o, suppress=True)
    o.set_defaults(fn=cmd_oracle)

    g = sub.add_parser("massgap", help="band-confined spectrum contradiction witness")
    g.add_argument("--m", required=True)
    g.add_argument("--m1", required=True, help="band top, or 'inf'")
    g.add_argument("--s", default=None, help="unit timelike direction 't,x'")
    g.add_argument("--eps", type=float, default=0.1)
    _add_globals(g, suppress=True)
    g.set_defaults(fn=cmd_massgap)

    c = sub.add_parser("continue", help="Cauchy continuation along a hyperbola family")
    c.add_argument("--mu", type=float, default=1.0)
    c.add_argument("--s", default="1,0")
    c.add_argument("--p", default="-0.05,1.0")
    c.add_argument("--slope", type=float, default=-0.8)
    c.add_argument("--scale", type=float, default=0.05, help="hyperbola scale (apex offset)")
    c.add_argument("--alphas", default="0,0.5,1.0")
    c.add_argument("--nodes", type=int, default=256)
    c.add_argument("--function", default="rational_far_pole")
    _add_globals(c, suppress=True)
    c.set_defaults(fn=cmd_continue)
    return ap


_POINT_FLAGS = ("--p", "--z", "--y", "--s", "--bounds", "--alphas", "--slope", "--eps", "--scale")


def _absorb_negative_values(argv: list[str]) -> list[str]:
    """Join point-valued flags with values that start with '-' so argparse
    does not mistake '-0.5,0' for an option."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _POINT_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    ap = build_parser()
    args = ap.parse_args(_absorb_negative_values(list(argv)))
    try:
        return args.fn(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedRegion, UnsupportedConfiguration) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (PreconditionFailed, BadGeometry, SingularPoint) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except LightconeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
