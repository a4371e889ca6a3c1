"""Command-line front-end: radius computation, bound tables, verification.

Subcommands
-----------
radius      solve a Bohr radius equation
rogosinski  solve a Bohr-Rogosinski radius equation
fs-bound    Fekete-Szego bound table over a mu grid
log-bounds  logarithmic-coefficient difference bounds
verify      Monte-Carlo verification of all inequalities
sweep       radius solves over a beta grid (CSV schema is fixed)

Exit status: 0 success, 1 validation error, 2 verification failure.
All numeric output uses 17 significant digits so doubles round-trip.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from .bounds import fekete_szego_bound, inverse_log_diff_bounds, log_diff_bounds
from .extremal import BetaDomainError, BetaParam
from .radii import (
    AreaPolynomial,
    RadiusProblem,
    RootResult,
    Variant,
    solve_radius,
)
from .verify import VerifyConfig, falsification_sweep

SWEEP_HEADER = ["beta", "m", "p", "N", "variant", "root", "residual", "iterations"]


class CliError(Exception):
    """Validation failure; message names the offending flag."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 by default; the contract is 1 for any
    # validation problem, including unknown flags.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise CliError(message)


def fmt(x: float) -> str:
    return f"{x:.17g}"


def parse_grid(spec: str, flag: str) -> list[float]:
    """Parse `start:stop:step` (start inclusive, stop exclusive beyond
    floating tolerance), a comma list, or a single number."""
    try:
        if ":" in spec:
            parts = spec.split(":")
            if len(parts) != 3:
                raise ValueError("expected start:stop:step")
            start, stop, step = (float(p) for p in parts)
            if step <= 0:
                raise ValueError("step must be positive")
            values = []
            k = 0
            while True:
                v = start + k * step
                if v >= stop - 1e-9 * step:
                    break
                values.append(v)
                k += 1
            if not values:
                raise ValueError("empty grid")
            return values
        if "," in spec:
            return [float(p) for p in spec.split(",") if p.strip()]
        return [float(spec)]
    except ValueError as exc:
        raise CliError(f"{flag}: malformed grid {spec!r} ({exc})") from exc


def _beta(value: float, flag: str = "--beta") -> BetaParam:
    try:
        return BetaParam(value)
    except BetaDomainError as exc:
        raise CliError(f"{flag}: {exc}") from exc


def _poly(spec: str | None) -> AreaPolynomial:
    if not spec:
        return AreaPolynomial()
    try:
        return AreaPolynomial(tuple(float(p) for p in spec.split(",")))
    except ValueError as exc:
        raise CliError(f"--poly: {exc}") from exc


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _solve(variant: Variant, args: argparse.Namespace) -> tuple[RadiusProblem, RootResult]:
    beta = _beta(args.beta)
    try:
        beta.require_strict()
    except BetaDomainError as exc:
        raise CliError(f"--beta: {exc}") from exc
    try:
        problem = RadiusProblem(
            variant=variant,
            beta=beta,
            m=args.m,
            p=args.p,
            N=getattr(args, "N", 1),
            F=_poly(args.poly),
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    return problem, solve_radius(problem, args.tol)


def _root_document(problem: RadiusProblem, result: RootResult) -> dict:
    return {
        "variant": problem.variant.value,
        "beta": float(fmt(problem.beta.value)),
        "m": problem.m,
        "p": float(fmt(problem.p)),
        "N": problem.N,
        "poly": list(getattr(problem.F, "lambdas", ())),
        "root": float(fmt(result.root)),
        "residual": float(fmt(result.residual)),
        "bracket_lo": float(fmt(result.bracket[0])),
        "bracket_hi": float(fmt(result.bracket[1])),
        "iterations": result.iterations,
    }


def _cmd_radius(args: argparse.Namespace) -> int:
    problem, result = _solve(Variant.BOHR_SCHWARZ, args)
    doc = _root_document(problem, result)
    if args.out_format == "json":
        _emit(_json_text(doc), args.out_path)
    else:
        keys = list(doc.keys())
        _emit(_csv_text(keys, [[_cell(doc[k]) for k in keys]]), args.out_path)
    return 0


def _cmd_rogosinski(args: argparse.Namespace) -> int:
    problem, result = _solve(Variant.BOHR_ROGOSINSKI, args)
    doc = _root_document(problem, result)
    if args.out_format == "json":
        _emit(_json_text(doc), args.out_path)
    else:
        keys = list(doc.keys())
        _emit(_csv_text(keys, [[_cell(doc[k]) for k in keys]]), args.out_path)
    return 0


def _cell(v: object) -> str:
    if isinstance(v, float):
        return fmt(v)
    if isinstance(v, list):
        return ";".join(fmt(float(x)) for x in v)
    return str(v)


def _cmd_fs_bound(args: argparse.Namespace) -> int:
    beta = _beta(args.beta)
    mus = parse_grid(args.mu, "--mu")
    rows = [[fmt(beta.value), fmt(mu), fmt(fekete_szego_bound(mu, beta))] for mu in mus]
    if args.out_format == "json":
        doc = {
            "beta": float(fmt(beta.value)),
            "bounds": [
                {"mu": float(r[1]), "bound": float(r[2])} for r in rows
            ],
        }
        _emit(_json_text(doc), args.out_path)
    else:
        _emit(_csv_text(["beta", "mu", "bound"], rows), args.out_path)
    return 0


def _cmd_log_bounds(args: argparse.Namespace) -> int:
    beta = _beta(args.beta)
    lo, hi = log_diff_bounds(beta)
    ilo, ihi = inverse_log_diff_bounds(beta)
    if args.out_format == "json":
        doc = {
            "beta": float(fmt(beta.value)),
            "gamma_lower": float(fmt(lo)),
            "gamma_upper": float(fmt(hi)),
            "inverse_gamma_lower": float(fmt(ilo)),
            "inverse_gamma_upper": float(fmt(ihi)),
        }
        _emit(_json_text(doc), args.out_path)
    else:
        header = [
            "beta",
            "gamma_lower",
            "gamma_upper",
            "inverse_gamma_lower",
            "inverse_gamma_upper",
        ]
        row = [fmt(beta.value), fmt(lo), fmt(hi), fmt(ilo), fmt(ihi)]
        _emit(_csv_text(header, [row]), args.out_path)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    betas = parse_grid(args.beta_grid, "--beta-grid") if args.beta_grid else [args.beta]
    for b in betas:
        beta = _beta(b, "--beta-grid" if args.beta_grid else "--beta")
        try:
            beta.require_strict()
        except BetaDomainError as exc:
            raise CliError(f"--beta: {exc}") from exc
    config = VerifyConfig(
        samples=args.samples,
        atoms=args.atoms,
        seed=args.seed,
        slack=args.slack,
    )
    summary = falsification_sweep(betas, config)
    doc = {
        "beta_grid": [float(fmt(b)) for b in betas],
        "samples": config.samples,
        "atoms": config.atoms,
        "seed": config.seed,
        "slack": float(fmt(config.slack)),
        "all_pass": summary.all_pass,
        "inequalities": [
            {
                "id": rec.inequality_id,
                "max_violation": float(fmt(rec.max_violation)),
                "witness": rec.witness,
                "checks": rec.checks,
            }
            for rec in summary.records
        ],
    }
    if args.out_format == "csv":
        header = ["id", "max_violation", "witness", "checks", "pass"]
        rows = [
            [
                rec.inequality_id,
                fmt(rec.max_violation),
                rec.witness,
                str(rec.checks),
                str(rec.max_violation <= config.slack).lower(),
            ]
            for rec in summary.records
        ]
        _emit(_csv_text(header, rows), args.out_path)
    else:
        _emit(_json_text(doc), args.out_path)
    return 0 if summary.all_pass else 2


def _sweep_cell(cell: tuple[float, int, float, int, Variant, float]) -> list[str]:
    beta, m, p, n_rog, variant, tol = cell
    problem = RadiusProblem(
        variant=variant, beta=BetaParam(beta), m=m, p=p, N=n_rog
    )
    result = solve_radius(problem, tol)
    return [
        fmt(beta),
        str(m),
        fmt(p),
        str(n_rog),
        variant.value,
        fmt(result.root),
        fmt(result.residual),
        str(result.iterations),
    ]


def _thread_count(n_cells: int) -> int:
    raw = os.environ.get("ABETA_THREADS")
    if raw is None:
        return min(4, max(1, n_cells))
    try:
        cap = int(raw)
        if cap < 1:
            raise ValueError
    except ValueError:
        raise CliError(f"ABETA_THREADS: expected a positive integer, got {raw!r}")
    return min(cap, max(1, n_cells))


def _cmd_sweep(args: argparse.Namespace) -> int:
    betas = parse_grid(args.beta_grid, "--beta-grid")
    for b in betas:
        beta = _beta(b, "--beta-grid")
        try:
            beta.require_strict()
        except BetaDomainError as exc:
            raise CliError(f"--beta-grid: {exc}") from exc
    ms = [int(v) for v in parse_grid(args.m, "--m")]
    ps = parse_grid(args.p, "--p")
    ns = [int(v) for v in parse_grid(args.N, "--N")]
    variants = {
        "bohr": [Variant.BOHR_SCHWARZ],
        "rogosinski": [Variant.BOHR_ROGOSINSKI],
        "both": [Variant.BOHR_SCHWARZ, Variant.BOHR_ROGOSINSKI],
    }[args.variant]
    cells = [
        (beta, m, p, n, variant, args.tol)
        for beta in betas
        for m in ms
        for p in ps
        for n in ns
        for variant in variants
    ]
    workers = _thread_count(len(cells))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(_sweep_cell, cells))  # map preserves grid order
    _emit(_csv_text(SWEEP_HEADER, rows), args.out_path)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="abeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p: _Parser, default_format: str) -> None:
        p.add_argument("--out-format", choices=["csv", "json"], default=default_format)
        p.add_argument("--out-path", default=None)

    def add_radius_args(p: _Parser) -> None:
        p.add_argument("--beta", type=float, required=True)
        p.add_argument("--m", type=int, default=1)
        p.add_argument("--p", type=float, default=1.0)
        p.add_argument("--poly", default=None, help="comma list of lambda_1..lambda_k")
        p.add_argument("--tol", type=float, default=1e-10)

    p = sub.add_parser("radius", help="solve a Bohr radius equation")
    add_radius_args(p)
    add_output(p, "json")
    p.set_defaults(func=_cmd_radius)

    p = sub.add_parser("rogosinski", help="solve a Bohr-Rogosinski radius equation")
    add_radius_args(p)
    p.add_argument("--N", type=int, default=1)
    add_output(p, "json")
    p.set_defaults(func=_cmd_rogosinski)

    p = sub.add_parser("fs-bound", help="Fekete-Szego bound table")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--mu", required=True, help="single value, comma list, or start:stop:step")
    add_output(p, "csv")
    p.set_defaults(func=_cmd_fs_bound)

    p = sub.add_parser("log-bounds", help="logarithmic-coefficient difference bounds")
    p.add_argument("--beta", type=float, required=True)
    add_output(p, "csv")
    p.set_defaults(func=_cmd_log_bounds)

    p = sub.add_parser("verify", help="Monte-Carlo verification of all inequalities")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--beta", type=float)
    group.add_argument("--beta-grid", default=None)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--atoms", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--slack", type=float, default=1e-9)
    add_output(p, "json")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="radius solves over parameter grids (CSV)")
    p.add_argument("--beta-grid", required=True)
    p.add_argument("--m", default="1")
    p.add_argument("--p", default="1")
    p.add_argument("--N", default="1")
    p.add_argument("--variant", choices=["bohr", "rogosinski", "both"], default="bohr")
    p.add_argument("--tol", type=float, default=1e-10)
    add_output(p, "csv")
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (BetaDomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
