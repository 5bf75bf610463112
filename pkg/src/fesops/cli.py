"""Command-line interface.

Subcommands: validate, scale, state, transform, sweep, figure.
Exit codes: 0 on success, 1 when a validation or domain check fails,
2 on usage errors. FES_TOL and FES_ORACLE_CAP override the tolerance and
the dense-expansion cap when the flags are not given.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import elements, oracle, states, sweeps, transform
from .exceptions import FesError

FORMATS = ("csv", "svg", "png", "both", "all")


def _env_default(name: str, fallback: float, cast=float):
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except ValueError:
        raise SystemExit(f"error: cannot parse {name}={raw!r}")


def _parse_element(text: str) -> np.ndarray:
    """Parse '<a1>,<a2>;<a3>,<a4>' with complex entries like 1+2j."""
    try:
        rows = [
            [complex(cell.strip()) for cell in row.split(",")]
            for row in text.split(";")
        ]
        arr = np.array(rows, dtype=complex)
        if arr.shape != (2, 2):
            raise ValueError
        return arr
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected 'a1,a2;a3,a4' with numeric entries, got {text!r}"
        )


def _parse_params(text: str) -> tuple[complex, complex, complex, complex]:
    parts = [complex(cell.strip()) for cell in text.split(",")]
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected 'a,b,c,d', got {text!r}")
    return tuple(parts)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None,
                        help="numeric tolerance (default: FES_TOL or 1e-10)")
    common.add_argument("--samples", type=int, default=None,
                        help="sample count for sweeps and figures")
    common.add_argument("--out", type=str, default=None, help="output file or directory")
    common.add_argument("--format", choices=FORMATS, default="csv",
                        help="sweep/figure output: both = csv+svg, all = csv+svg+png")
    common.add_argument("--seed", type=int, default=7, help="seed for random states")
    common.add_argument("--oracle-cap", type=int, default=None,
                        help="dense expansion cap (default: FES_ORACLE_CAP or 14)")

    parser = argparse.ArgumentParser(
        prog="fesops",
        description="Optimal one-shot local transformations of flip and "
                    "exchange symmetric multiqubit states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common],
                       help="check whether a 2x2 matrix is a valid operation element")
    p.add_argument("--element", type=_parse_element, required=True,
                   metavar="'a1,a2;a3,a4'")

    p = sub.add_parser("scale", parents=[common],
                       help="optimal rescaling of an operation element")
    p.add_argument("--element", type=_parse_element, required=True,
                   metavar="'a1,a2;a3,a4'")

    p = sub.add_parser("state", parents=[common], help="build or convert a state")
    _add_state_source(p)
    p.add_argument("--basis", choices=("fes", "comp"), default="fes",
                   help="output basis")

    p = sub.add_parser("transform", parents=[common],
                       help="apply the optimally scaled operator at parameter t")
    _add_state_source(p)
    p.add_argument("--t", type=float, required=True, dest="t_param",
                   help="operator parameter, |t| < 1")

    p = sub.add_parser("sweep", parents=[common], help="sweep t or theta and tabulate")
    p.add_argument("--family", choices=sweeps.FAMILIES, required=True)
    p.add_argument("--angle", type=float, default=None, help="family angle in radians")
    p.add_argument("--n", type=int, default=3, help="qubit count for ghz")
    p.add_argument("--state-file", type=str, default=None,
                   help="state file for family custom-file")
    p.add_argument("--variable", choices=("t", "theta"), default="t")
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.add_argument("--direction", type=int, choices=(1, -1), default=None)

    p = sub.add_parser("figure", parents=[common],
                       help="reproduce the report panels as CSV and plots")
    p.add_argument("--panel", choices=sweeps.PANELS + ("all",), required=True)

    return parser


def _add_state_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family",
                   choices=("ghz", "gamma", "theta", "phi", "psi", "gabcd", "random"),
                   default=None)
    p.add_argument("--angle", type=float, default=None, help="family angle in radians")
    p.add_argument("--n", type=int, default=3, help="qubit count")
    p.add_argument("--q", type=int, default=0, help="minus-factor count for psi")
    p.add_argument("--params", type=_parse_params, default=None,
                   metavar="'a,b,c,d'", help="parameters for gabcd")
    p.add_argument("--in", dest="in_file", type=str, default=None,
                   help="read the state from a file instead")


def _resolve_tol(args) -> float:
    if args.tol is not None:
        return args.tol
    return _env_default("FES_TOL", 1e-10)


def _resolve_state(args, parser, tol: float) -> states.FesVector:
    """Build the FES state a subcommand starts from."""
    if args.in_file is not None:
        loaded = states.load_state(args.in_file)
        if isinstance(loaded, states.StateVector):
            return states.from_computational(states.normalize(loaded), tol=tol)
        return loaded if loaded.normalized else states.normalize(loaded)
    if args.family is None:
        parser.error("give --family or --in")
    if args.family == "ghz":
        return states.ghz(args.n)
    if args.family == "psi":
        return states.psi_pq(args.n, args.q)
    if args.family == "random":
        return oracle.random_fes_states(oracle.RandomSpec(args.seed, args.n, 1))[0]
    if args.family == "gabcd":
        if args.params is None:
            parser.error("family gabcd needs --params 'a,b,c,d'")
        vec = states.normalize(states.g_abcd(*args.params))
        return states.from_computational(vec, tol=tol)
    if args.angle is None:
        parser.error(f"family {args.family} needs --angle")
    fn = {"gamma": states.gamma, "theta": states.theta_family, "phi": states.phi_family}
    return fn[args.family](args.angle)


def _write_state(state, out: str | None) -> None:
    text = states.dumps_state(state)
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="ascii", newline="\n")
        print(f"wrote {out}")


def _emit_outputs(table: sweeps.SweepTable, base: Path, fmt: str) -> list[Path]:
    written = []
    if fmt in ("csv", "both", "all"):
        path = base.with_suffix(".csv")
        sweeps.emit_csv(table, path)
        written.append(path)
    if fmt in ("svg", "both", "all"):
        path = base.with_suffix(".svg")
        sweeps.emit_svg(table, path)
        written.append(path)
    if fmt in ("png", "all"):
        from .plotting import render_figure  # defers the matplotlib import

        path = base.with_suffix(".png")
        render_figure(table, path, title=base.stem)
        written.append(path)
    return written


def _cmd_validate(args) -> int:
    report = elements.analyze_element(args.element, tol=_resolve_tol(args))
    print(f"frobenius_sq = {report.frobenius_sq:.12g}")
    print(f"abs_det_sq   = {report.abs_det_sq:.12g}")
    print(f"lambda_min   = {report.lambda_min:.12g}")
    print(f"lambda_max   = {report.lambda_max:.12g}")
    print(f"max_scale_sq = {report.max_scale_sq:.12g}")
    print(f"valid        = {report.valid}")
    print(f"saturated    = {report.saturated}")
    return 0 if report.valid else 1


def _cmd_scale(args) -> int:
    scale = elements.max_scale_sq(args.element)
    rescaled = elements.rescale_optimal(args.element)
    print(f"max_scale_sq = {scale:.12g}")
    print("rescaled element:")
    for row in rescaled:
        print("  " + ", ".join(f"{z.real:.12g}{z.imag:+.12g}j" for z in row))
    return 0


def _cmd_state(args, parser) -> int:
    tol = _resolve_tol(args)
    state = _resolve_state(args, parser, tol)
    if args.basis == "comp":
        cap = args.oracle_cap or int(_env_default("FES_ORACLE_CAP", 14, int))
        state = states.to_computational(state, cap=max(cap, states.N_CAP_DEFAULT))
    _write_state(state, args.out)
    return 0


def _cmd_transform(args, parser) -> int:
    tol = _resolve_tol(args)
    state = _resolve_state(args, parser, tol)
    op = transform.optimal_operator(args.t_param)
    outcome = transform.apply(op, state)
    print(f"t = {args.t_param:.12g}  f = {op.f:.12g}")
    print(f"success_probability = {outcome.success_prob:.12g}")
    _write_state(outcome.final_state, args.out)
    return 0


def _cmd_sweep(args, parser) -> int:
    state = None
    if args.family == "custom-file":
        if args.state_file is None:
            parser.error("family custom-file needs --state-file")
        loaded = states.load_state(args.state_file)
        if isinstance(loaded, states.StateVector):
            loaded = states.from_computational(states.normalize(loaded), tol=_resolve_tol(args))
        state = loaded if loaded.normalized else states.normalize(loaded)
    samples = args.samples or (
        sweeps.DEFAULT_T_SAMPLES if args.variable == "t" else sweeps.DEFAULT_THETA_SAMPLES
    )
    spec = sweeps.SweepSpec(
        family=args.family,
        variable=args.variable,
        lo=args.lo,
        hi=args.hi,
        samples=samples,
        family_angle=args.angle,
        direction=args.direction,
        n=args.n,
        state=state,
    )
    table = sweeps.run_sweep(spec)
    if args.out is None:
        if args.format != "csv":
            parser.error("--format svg/png/both/all needs --out")
        sys.stdout.write(sweeps.csv_bytes(table).decode("ascii"))
        return 0
    for path in _emit_outputs(table, Path(args.out), args.format):
        print(f"wrote {path}")
    return 0


def _cmd_figure(args) -> int:
    outdir = Path(args.out) if args.out is not None else Path("figures")
    outdir.mkdir(parents=True, exist_ok=True)
    panels = sweeps.PANELS if args.panel == "all" else (args.panel,)
    for panel in panels:
        table = sweeps.figure_panel(panel, samples=args.samples)
        for path in _emit_outputs(table, outdir / f"panel_{panel}", args.format):
            print(f"wrote {path}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "validate":
            return _cmd_validate(args)
        if args.command == "scale":
            return _cmd_scale(args)
        if args.command == "state":
            return _cmd_state(args, parser)
        if args.command == "transform":
            return _cmd_transform(args, parser)
        if args.command == "sweep":
            return _cmd_sweep(args, parser)
        if args.command == "figure":
            return _cmd_figure(args)
        parser.error(f"unknown command {args.command!r}")
    except FesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
