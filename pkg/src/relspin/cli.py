"""Command-line surface.

Subcommands: check (identity suites), correlate (one pair file), curve
(correlation vs speed as CSV), omega (decomposition/entropy report for an
ensemble file), entropy (alias of omega --entropy-only), precess (spin
precession trajectories as CSV).

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 verification failure, 2 usage or schema error.  RELSPIN_TOLERANCE
overrides the default 1e-10 residual threshold of `check`.

Output is locale-independent and byte-stable: floats are printed with 17
significant digits, rows in fixed order, newline-terminated.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import __version__, checks
from .bmt import EMField, IntegrationError, ParticleParams, SpinKinState, integrate, integrate_slow
from .density import (
    decompose,
    entropy,
    normalize_theta,
    omega_of_ensemble,
    sigma_average,
    theta_of,
    transform_omega,
)
from .epr import correlation_closed, correlation_trace, named_configuration
from .lorentz import OnShellMomentum
from .statefiles import SchemaError, load_pair_file, load_state_file


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _parse_vec3(text: str, name: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 3:
        raise SchemaError(f"{name}: expected 3 comma-separated numbers, got {text!r}")
    try:
        return np.array([float(p) for p in parts])
    except ValueError as err:
        raise SchemaError(f"{name}: {err}") from err


def _parse_grad(text: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 9:
        raise SchemaError(f"--grad-b: expected 9 comma-separated numbers (rows of dB_j/dx_i)")
    try:
        return np.array([float(p) for p in parts]).reshape(3, 3)
    except ValueError as err:
        raise SchemaError(f"--grad-b: {err}") from err


def _tolerance() -> float:
    raw = os.environ.get("RELSPIN_TOLERANCE")
    if raw is None:
        return checks.DEFAULT_TOLERANCE
    try:
        return float(raw)
    except ValueError as err:
        raise SchemaError(f"RELSPIN_TOLERANCE: not a number: {raw!r}") from err


def cmd_check(args) -> int:
    results = checks.run_all(
        seed=args.seed,
        samples=args.samples,
        tolerance=_tolerance(),
        max_rapidity=args.max_rapidity,
        perturb_gamma1=args.inject_fault,
    )
    for res in results:
        status = "ok" if res.ok else "FAIL"
        print(f"{res.name:<20} max residual {res.residual:.3e}   {status}")
    failed = [res.name for res in results if not res.ok]
    if failed:
        print(f"failed suites: {', '.join(failed)}", file=sys.stderr)
        return 1
    print(f"all suites passed (threshold {results[0].tolerance:g})")
    return 0


def cmd_correlate(args) -> int:
    pair = load_pair_file(args.pairfile)
    for key in pair.renormalized:
        print(f"warning: direction {key!r} was renormalized to unit length", file=sys.stderr)
    c_trace = correlation_trace(pair.state, pair.a, pair.b)
    print(f"C_trace  = {_fmt(c_trace)}")
    if pair.is_singlet:
        c_closed = correlation_closed(pair.state.k.mass, pair.state.k, pair.state.p, pair.a, pair.b)
        print(f"C_closed = {_fmt(c_closed)}")
        print(f"diff     = {_fmt(abs(c_trace - c_closed))}")
    else:
        print("note: non-singlet coefficients, closed form suppressed", file=sys.stderr)
    print(f"delta_C  = {_fmt(c_trace + float(pair.a @ pair.b))}")
    return 0


def cmd_curve(args) -> int:
    if not (0.0 <= args.beta_min < args.beta_max < 1.0):
        raise SchemaError(
            f"speed range must satisfy 0 <= beta-min < beta-max < 1, "
            f"got [{args.beta_min}, {args.beta_max}]"
        )
    if args.steps < 2:
        raise SchemaError("--steps must be at least 2")
    betas = np.linspace(args.beta_min, args.beta_max, args.steps)
    print("beta,correlation_trace,correlation_closed")
    for beta in betas:
        state, a, b = named_configuration(args.config, float(beta), args.mass)
        c_trace = correlation_trace(state, a, b)
        c_closed = correlation_closed(args.mass, state.k, state.p, a, b)
        print(f"{_fmt(beta)},{_fmt(c_trace)},{_fmt(c_closed)}")
    return 0


def _omega_report(omega: np.ndarray, mass: float) -> dict:
    dec = decompose(omega, mass)
    return {
        "a": dec.a,
        "b": dec.b,
        "u": dec.u.tolist(),
        "w": dec.w.tolist(),
        "s": dec.s.tolist(),
        "entropy": entropy(normalize_theta(theta_of(omega))),
        "sigma_average": sigma_average(omega).tolist(),
    }


def cmd_omega(args) -> int:
    doc = load_state_file(args.statefile)
    omega = omega_of_ensemble(doc.ensemble)
    report = _omega_report(omega, doc.mass)
    out: dict = {"mass": doc.mass}
    if args.entropy_only:
        out["entropy"] = report["entropy"]
    else:
        out.update(report)
    if doc.boost is not None:
        boosted = _omega_report(transform_omega(omega, doc.boost), doc.mass)
        delta = boosted["entropy"] - report["entropy"]
        if args.entropy_only:
            out["boosted_entropy"] = boosted["entropy"]
        else:
            out["boosted"] = boosted
        out["entropy_delta"] = delta
    print(json.dumps(out, indent=2))
    return 0


def _slow_precess(args, fld: EMField, params: ParticleParams) -> int:
    xi = _parse_vec3(args.bloch, "--bloch")
    q0 = _parse_vec3(args.momentum, "--momentum")
    traj = integrate_slow(q0, xi, fld, params, args.dt, args.steps)
    print("t,qx,qy,qz,xix,xiy,xiz")
    for i in range(len(traj.t)):
        row = [traj.t[i], *traj.q[i], *traj.xi[i]]
        print(",".join(_fmt(x) for x in row))
    return 0


def cmd_precess(args) -> int:
    fld = EMField(
        e=_parse_vec3(args.e_field, "--e-field"),
        b=_parse_vec3(args.b_field, "--b-field"),
        grad_b=_parse_grad(args.grad_b),
    )
    params = ParticleParams.from_g(args.mass, args.charge, args.g_factor)
    if args.dt <= 0.0:
        raise SchemaError("--dt must be positive")
    if args.steps < 1:
        raise SchemaError("--steps must be at least 1")
    if args.slow_motion:
        return _slow_precess(args, fld, params)

    momentum = OnShellMomentum(args.mass, _parse_vec3(args.momentum, "--momentum"))
    state0 = SpinKinState.from_bloch(
        momentum, _parse_vec3(args.bloch, "--bloch"), _parse_vec3(args.position, "--position")
    )
    print("tau,x,y,z,q0,qx,qy,qz,w0,wx,wy,wz,inv_qq,inv_qw")

    def emit(traj):
        qq = traj.inv_qq
        qw = traj.inv_qw
        for i in range(len(traj.tau)):
            row = [traj.tau[i], *traj.x[i], *traj.q[i], *traj.w[i], qq[i], qw[i]]
            print(",".join(_fmt(x) for x in row))

    try:
        traj = integrate(state0, fld, params, args.dt, args.steps)
    except IntegrationError as err:
        emit(err.trajectory)
        print(f"error: {err}", file=sys.stderr)
        return 1
    emit(traj)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relspin",
        description="Covariant spin density matrices, EPR-Bohm correlations, "
        "and BMT spin precession for massive spin-1/2 particles.",
    )
    parser.add_argument("--version", action="version", version=f"relspin {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run the identity suites and report max residuals")
    p_check.add_argument("--seed", type=int, default=42, help="random seed (default 42)")
    p_check.add_argument("--samples", type=int, default=1000, help="samples per suite (default 1000)")
    p_check.add_argument("--max-rapidity", type=float, default=3.0, help="rapidity cap (default 3)")
    p_check.add_argument(
        "--inject-fault",
        type=float,
        default=0.0,
        metavar="EPS",
        help="perturb gamma^1 by EPS inside the clifford suite (harness sanity check)",
    )
    p_check.set_defaults(func=cmd_check)

    p_corr = sub.add_parser("correlate", help="correlation report for a two-particle pair file")
    p_corr.add_argument("pairfile", help="JSON file with mass, k, p, a, b and optional coeffs")
    p_corr.set_defaults(func=cmd_correlate)

    p_curve = sub.add_parser(
        "curve",
        help="CSV correlation curve over a speed grid",
        description="Emits beta,correlation_trace,correlation_closed rows for the special "
        "configurations with |k| = |p|, a perpendicular to b, momenta fixed along x and y "
        "(k = kappa x, p = kappa y).  parallel-spin measures along the momenta (a = x, "
        "b = y); perpendicular-spin across them (a = y, b = -x).  Both trace out "
        "beta^2/(2 - beta^2).",
    )
    p_curve.add_argument(
        "--config",
        required=True,
        choices=["parallel-spin", "perpendicular-spin"],
        help="analyzer geometry relative to the momenta",
    )
    p_curve.add_argument("--beta-min", type=float, default=0.0)
    p_curve.add_argument("--beta-max", type=float, default=0.99)
    p_curve.add_argument("--steps", type=int, default=100, help="number of grid points (>= 2)")
    p_curve.add_argument("--mass", type=float, default=1.0)
    p_curve.set_defaults(func=cmd_curve)

    p_omega = sub.add_parser(
        "omega", help="decomposition, entropy, and spin-average report for an ensemble file"
    )
    p_omega.add_argument("statefile", help="JSON file with mass, ensemble, optional boost")
    p_omega.add_argument(
        "--entropy-only", action="store_true", help="report only entropy (and its boost delta)"
    )
    p_omega.set_defaults(func=cmd_omega)

    p_entropy = sub.add_parser("entropy", help="entropy report (alias of omega --entropy-only)")
    p_entropy.add_argument("statefile")
    p_entropy.set_defaults(func=cmd_omega, entropy_only=True)

    p_prec = sub.add_parser(
        "precess",
        help="CSV spin precession trajectory in a static EM field",
        description="Full mode integrates position, four-momentum and the spin four-vector "
        "in proper time and reports the invariant monitors q.q - m^2 and q.w; "
        "--slow-motion integrates the Stern-Gerlach system for (q, xi) in coordinate time "
        "(requires zero electric field, uses the uniform field plus a constant gradient "
        "force).",
    )
    p_prec.add_argument("--e-field", default="0,0,0", help="uniform E as ex,ey,ez")
    p_prec.add_argument("--b-field", default="0,0,0", help="uniform B as bx,by,bz")
    p_prec.add_argument(
        "--grad-b",
        default="0,0,0,0,0,0,0,0,0",
        help="magnetic gradient dB_j/dx_i, 9 numbers row-major (symmetric, trace-free)",
    )
    p_prec.add_argument("--mass", type=float, default=1.0)
    p_prec.add_argument("--charge", type=float, default=1.0)
    p_prec.add_argument("--g-factor", type=float, default=2.0)
    p_prec.add_argument("--momentum", default="0,0,0", help="initial spatial momentum px,py,pz")
    p_prec.add_argument("--bloch", default="0,0,1", help="initial polarization x,y,z")
    p_prec.add_argument("--position", default="0,0,0", help="initial position (full mode)")
    p_prec.add_argument("--dt", type=float, default=1e-3, help="step (proper time, or t in slow motion)")
    p_prec.add_argument("--steps", type=int, default=1000)
    p_prec.add_argument("--slow-motion", action="store_true")
    p_prec.set_defaults(func=cmd_precess)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SchemaError, FileNotFoundError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
