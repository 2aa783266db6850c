"""Command-line front-end: verify | curve | threshold | minimize | simulate.

Results go to stdout or --out; diagnostics go to stderr, gated by the
QKD_LOG environment variable (error|info|debug). Exit codes: 0 success,
1 I/O failure, 2 invalid arguments or domain, 3 internal verification
failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys

import numpy as np

from . import attack, protosim, rates
from .smallmat import projector
from .states import Protocol, basis_labels, conjugate_flip, state_vector

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

VERIFY_TOL = 1e-9

CURVE_COLUMNS = ("x", "y", "D", "I_AB", "chi_AE", "R_DW_numeric", "R_DW_closed", "abs_diff")

log = logging.getLogger("symqkd")


def _setup_logging() -> None:
    levels = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}
    level = levels.get(os.environ.get("QKD_LOG", "error").strip().lower(), logging.ERROR)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _fmt(value: float) -> str:
    return format(value, ".12g")


def _round12(value: float) -> float:
    return float(_fmt(value))


def _protocol(name: str) -> Protocol:
    return Protocol(name)


def _attack_params(args: argparse.Namespace) -> attack.AttackParams:
    protocol = _protocol(args.protocol)
    if protocol is Protocol.SIX_STATE:
        if args.y is not None and args.y != math.pi / 2:
            raise ValueError("--y is pinned to pi/2 for the six-state attack")
        return attack.AttackParams.six_state(args.x)
    return attack.AttackParams.bb84(args.x, args.y)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_verify(args: argparse.Namespace) -> int:
    params = _attack_params(args)
    v = attack.attack_isometry(params)
    report = attack.verify_symmetry(params)
    residuals = {f"{b}:{c}": r for (b, c), r in report.residuals.items()}

    # Channel and complementary-output checks per basis, plus the rate identity.
    f, d = params.fidelity, params.qber
    for basis in params.protocol.bases:
        u0, u1 = basis_labels(basis)
        fu, du, fv, dv = attack.induced_ancillas(v, basis)
        chan = 0.0
        comp = 0.0
        for u, anc_f, anc_d in ((u0, fu, du), (u1, fv, dv)):
            target_b = f * projector(state_vector(u)) + d * projector(state_vector(conjugate_flip(u)))
            chan = max(chan, float(np.linalg.norm(attack.bob_state(v, u) - target_b)))
            target_e = projector(anc_f) + projector(anc_d)
            comp = max(comp, float(np.linalg.norm(attack.eve_state(v, u) - target_e)))
        residuals[f"{basis}:channel_contraction"] = chan
        residuals[f"{basis}:complementary_output"] = comp

    point = rates.dw_rate_numeric(params)
    rho_avg = attack.eve_average(v, "Z")
    residuals["rate_identity"] = abs(point.R_DW - (1.0 - rates.von_neumann_entropy(rho_avg)))

    width = max(len(k) for k in residuals)
    for name, value in residuals.items():
        print(f"{name:<{width}}  {_fmt(value)}")
    worst = max(residuals.values())
    print(f"{'max_residual':<{width}}  {_fmt(worst)}")
    if worst > VERIFY_TOL:
        log.error("verification failed: max residual %s", _fmt(worst))
        return EXIT_INTERNAL
    return EXIT_OK


def _curve_rows(protocol: Protocol, grid: int) -> list[dict]:
    # x sweeps the QBER range of each protocol: D(x,x) in [0, 1/2] for
    # BB84 (x up to pi/2), D(x) in [0, 2/3] for six-state (x up to pi).
    x_hi = math.pi / 2 if protocol is Protocol.BB84 else math.pi
    rows = []
    for x in np.linspace(0.0, x_hi, grid):
        x = float(x)
        if protocol is Protocol.BB84:
            params = attack.AttackParams.bb84(x, x)
            closed = rates.general_rate_bb84(x, x)
        else:
            params = attack.AttackParams.six_state(x)
            closed = rates.closed_rate_six_state(params.qber)
        point = rates.dw_rate_numeric(params)
        rows.append(
            {
                "x": point.x,
                "y": point.y,
                "D": point.D,
                "I_AB": point.I_AB,
                "chi_AE": point.chi_AE,
                "R_DW_numeric": point.R_DW,
                "R_DW_closed": closed,
                "abs_diff": abs(point.R_DW - closed),
            }
        )
    return rows


def cmd_curve(args: argparse.Namespace) -> int:
    if args.grid < 2:
        raise ValueError("--grid must be at least 2")
    rows = _curve_rows(_protocol(args.protocol), args.grid)
    log.info("curve: %d points, max |numeric - closed| = %s", len(rows), _fmt(max(r["abs_diff"] for r in rows)))
    if args.format == "csv":
        lines = [",".join(CURVE_COLUMNS)]
        lines += [",".join(_fmt(row[c]) for c in CURVE_COLUMNS) for row in rows]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        payload = [{c: _round12(row[c]) for c in CURVE_COLUMNS} for row in rows]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_threshold(args: argparse.Namespace) -> int:
    protocol = _protocol(args.protocol)
    t = rates.find_threshold(protocol)
    log.info("bisection converged in %d iterations", t.iterations)
    print(f"protocol:   {protocol.value}")
    print(f"D_star:     {t.D_star:.6f}")
    print(f"residual:   {_fmt(t.residual)}")
    print(f"iterations: {t.iterations}")
    return EXIT_OK


def cmd_minimize(args: argparse.Namespace) -> int:
    best = rates.minimize_family_rate(args.d_target, args.grid)
    target = rates.closed_rate_bb84(args.d_target)
    print(f"D_target: {_fmt(args.d_target)}")
    print(f"x_best:   {_fmt(best.x)}")
    print(f"y_best:   {_fmt(best.y)}")
    print(f"R_min:    {_fmt(best.rate)}")
    print(f"gap:      {_fmt(abs(best.rate - target))}")
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    params = _attack_params(args)
    cfg = protosim.SimConfig(params=params, rounds=args.rounds, seed=args.seed)
    result = protosim.run_simulation(cfg)
    log.info(
        "simulated %d rounds: sifted %d, estimated QBER %s",
        cfg.rounds,
        result.sifted_count,
        _fmt(result.qber_hat),
    )
    record = protosim.result_record(cfg, result)
    record = {k: _round12(v) if isinstance(v, float) else v for k, v in record.items()}
    _emit(json.dumps(record, indent=2) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symqkd",
        description="Symmetric collective attacks and Devetak-Winter key rates for BB84 and six-state QKD.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_protocol(p: argparse.ArgumentParser) -> None:
        p.add_argument("--protocol", required=True, choices=["bb84", "six-state"])

    def add_angles(p: argparse.ArgumentParser) -> None:
        p.add_argument("--x", type=float, required=True, help="attack angle x in radians")
        p.add_argument(
            "--y",
            type=float,
            default=None,
            help="attack angle y in radians (bb84: defaults to x; six-state: must be pi/2)",
        )

    p = sub.add_parser("verify", help="check every symmetry and consistency condition of an attack")
    add_protocol(p)
    add_angles(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("curve", help="tabulate numeric vs closed-form rates over the attack family")
    add_protocol(p)
    p.add_argument("--grid", type=int, default=100, help="number of x samples")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("threshold", help="bisect the closed-form rate to the security threshold")
    add_protocol(p)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("minimize", help="minimize the BB84 rate over attacks at fixed QBER")
    p.add_argument("--d-target", type=float, required=True, help="QBER at which to minimize")
    p.add_argument("--grid", type=int, default=2000, help="scan resolution")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("simulate", help="Monte Carlo protocol run through the attacked channel")
    add_protocol(p)
    add_angles(p)
    p.add_argument("--rounds", type=int, required=True)
    p.add_argument("--seed", type=int, default=0, help="64-bit RNG seed")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv: list[str] | None = None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        log.debug("usage error", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except RuntimeError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
