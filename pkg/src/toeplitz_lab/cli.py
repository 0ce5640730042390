"""Batch front door: bounds, verify, sharpness, table, highdim.

Exit codes: 0 success, 2 usage error, 3 mathematical violation,
4 condition-not-met refusal.  Seeds fall back to the TOEPLITZ_LAB_SEED
environment variable, then to 0; every command is deterministic given
its flags and seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from . import bounds as bd
from . import extremal as ex
from . import highdim as hd
from . import sampler as sp
from .phi import InvalidParameters, condition_t22, condition_t31, parse_family

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VIOLATION = 3
EXIT_REFUSED = 4

DEFAULT_LAMBDAS = (0.0, 0.5, 1.0, 2.0)


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text)


def _emit_json(payload, out_path):
    _emit(json.dumps(payload, indent=2, sort_keys=True), out_path)


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    return int(os.environ.get("TOEPLITZ_LAB_SEED", "0"))


def cmd_bounds(args) -> int:
    phi = parse_family(args.family)
    rep = bd.report(phi, [complex(x) for x in args.fs_lambda or DEFAULT_LAMBDAS])
    _emit_json(rep.to_json_dict(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    phi = parse_family(args.family)
    theorems = ("t22", "t31") if args.theorem == "both" else (args.theorem,)
    cond = {"t22": condition_t22, "t31": condition_t31}
    for t in theorems:
        if not cond[t](phi):
            print(f"refused: {t} condition does not hold for {phi.label()}",
                  file=sys.stderr)
            return EXIT_REFUSED
    payload = {}
    try:
        for t in theorems:
            rep = sp.montecarlo_verify(
                phi, args.samples, _seed(args), theorem=t,
                order=args.order, tol=args.tol or sp.SAMPLE_TOL,
            )
            payload[t] = rep.to_json_dict()
    except sp.BoundViolated as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    _emit_json(payload, args.out)
    return EXIT_OK


def cmd_sharpness(args) -> int:
    phi = parse_family(args.family)
    try:
        cert = ex.certify(phi, args.order)
    except ex.CertificationFailed as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    payload = {"certificate": cert.to_json_dict(), "oracle": {}}
    for t in ("t22", "t31"):
        ok = condition_t22(phi) if t == "t22" else condition_t31(phi)
        if not ok:
            continue
        res = sp.oracle_sup(phi, t, grid=args.grid)
        bound = sp.target_bound(phi, t)
        payload["oracle"][t] = {
            "value": res.value,
            "bound": bound,
            "deficit": bound - res.value,
            "argmax_w1": [res.argmax.w1.real, res.argmax.w1.imag],
            "argmax_w2": [res.argmax.w2.real, res.argmax.w2.imag],
        }
    _emit_json(payload, args.out)
    return EXIT_OK


def cmd_table(args) -> int:
    name, start, stop, step = args.sweep.split(":")
    start, stop, step = float(start), float(stop), float(step)
    if name not in ("alpha", "power"):
        raise InvalidParameters(f"sweep supports alpha/power, got {name!r}")
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["param", "t22", "t31", "cond_t22", "cond_t31"])
    n = max(0, int(round((stop - start) / step)) + 1) if step > 0 else 0
    for k in range(n):
        p = start + k * step
        rep = bd.report(parse_family(f"{name}:{p}"))
        writer.writerow([
            f"{p:.10g}",
            "" if rep.t22 is None else f"{rep.t22:.12g}",
            "" if rep.t31 is None else f"{rep.t31:.12g}",
            rep.cond_t22,
            rep.cond_t31,
        ])
    _emit(buf.getvalue().rstrip("\n"), args.out)
    return EXIT_OK


def cmd_highdim(args) -> int:
    phi = parse_family(args.family)
    rng = np.random.default_rng(_seed(args))
    radii = [float(r) for r in args.r.split(",")]
    h_ext = hd.extremal_lift(phi, args.order)
    runs = []
    try:
        for r in radii:
            z_axis = hd.NormedPoint((r,) + (0j,) * (args.n - 1), args.norm)
            if args.norm == hd.SUP:
                runs.append(hd.verify_polydisc(phi, h_ext, z_axis).to_json_dict())
            u = np.zeros(args.n, dtype=complex)
            u[0] = 1.0
            runs.append(hd.verify_ball(phi, h_ext, z_axis, direction=u).to_json_dict())
        for _ in range(args.samples):
            w = sp.sample_words(1, int(rng.integers(0, 2**63)))[0]
            h = hd.lift_from_class_member(sp.g_from_schwarz(phi, w, args.order))
            z = hd.random_interior_point(rng, args.n, args.norm)
            if args.norm == hd.SUP:
                runs.append(hd.verify_polydisc(phi, h, z).to_json_dict())
            runs.append(hd.verify_ball(phi, h, z).to_json_dict())
    except sp.BoundViolated as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    _emit_json({"family": phi.label(), "n": args.n, "norm": args.norm,
                "runs": runs}, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="toeplitz-lab")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--family", required=True)
        p.add_argument("--order", type=int, default=16)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--out", default=None)

    p = sub.add_parser("bounds", help="closed-form bounds and conditions")
    common(p)
    p.add_argument("--fs-lambda", type=float, nargs="*", default=None)

    p = sub.add_parser("verify", help="Monte-Carlo bound verification")
    common(p)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--theorem", choices=["t22", "t31", "both"], default="both")
    p.add_argument("--tol", type=float, default=None)

    p = sub.add_parser("sharpness", help="extremal certificate + grid oracle")
    common(p)
    p.add_argument("--grid", type=int, default=200)

    p = sub.add_parser("table", help="CSV sweep of bounds over a parameter")
    p.add_argument("--sweep", required=True,
                   help="<alpha|power>:<start>:<stop>:<step>")
    p.add_argument("--out", default=None)

    p = sub.add_parser("highdim", help="ball/polydisc margin checks")
    common(p)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--norm", choices=[hd.SUP, hd.EUCLID], default=hd.SUP)
    p.add_argument("--r", default="0.3,0.6,0.9")
    p.add_argument("--samples", type=int, default=100)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "bounds": cmd_bounds,
        "verify": cmd_verify,
        "sharpness": cmd_sharpness,
        "table": cmd_table,
        "highdim": cmd_highdim,
    }
    try:
        return handlers[args.command](args)
    except InvalidParameters as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
