"""Command-line entry point: ``fuzzyskew {skew,optimize,bench}``.

Exit status: 0 success, 2 invalid configuration, 3 unreadable asset file,
4 no feasible portfolio, 5 coefficient undefined for the input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from . import jkpt, moments
from .assetfile import load_assets
from .bench import rows_to_csv, run_bench, synthetic_assets
from .errors import AssetFileError, DegenerateInputError, InfeasibleError
from .portfolio import MODE_ALIASES, MODES, PortfolioProblem, SkewConfig, optimize

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_PARSE = 3
EXIT_INFEASIBLE = 4
EXIT_DEGENERATE = 5

PANEL = (
    ("JKPT1(0.1)", lambda f, v: jkpt.jkpt1(f, jkpt.JkptConfig(0.1, v))),
    ("JKPT1(0.25)", lambda f, v: jkpt.jkpt1(f, jkpt.JkptConfig(0.25, v))),
    ("JKPT2", lambda f, v: jkpt.jkpt2(f, v)),
    ("VB13", lambda f, v: moments.vb13_skewness(f)),
    ("LGY15", lambda f, v: moments.lgy15_skewness(f)),
)


class ConfigError(ValueError):
    pass


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def skew_panel(f, coef: str, alpha: float, v: float) -> dict[str, float]:
    if coef == "all":
        return {name: fn(f, v) for name, fn in PANEL}
    if coef == "jkpt1":
        return {f"JKPT1({alpha:g})": jkpt.jkpt1(f, jkpt.JkptConfig(alpha, v))}
    if coef == "jkpt2":
        return {"JKPT2": jkpt.jkpt2(f, v)}
    if coef == "vb13":
        return {"VB13": moments.vb13_skewness(f)}
    return {"LGY15": moments.lgy15_skewness(f)}


def _emit(text: str, append: str | None) -> None:
    sys.stdout.write(text)
    if append:
        with open(append, "a") as fh:
            fh.write(text)


def cmd_skew(args) -> int:
    if not 0.0 < args.alpha <= 0.5:
        raise ConfigError(f"--alpha must lie in (0, 0.5], got {args.alpha}")
    if not 0.0 <= args.v <= 1.0:
        raise ConfigError(f"--v must lie in [0, 1], got {args.v}")
    assets = load_assets(args.input)
    results = [(a.name, skew_panel(a.fuzzy, args.coef, args.alpha, args.v)) for a in assets]
    if args.out == "json":
        text = json.dumps({name: vals for name, vals in results}, indent=2) + "\n"
    elif args.out == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["asset", *results[0][1].keys()])
        for name, vals in results:
            w.writerow([name, *(_fmt(x) for x in vals.values())])
        text = buf.getvalue()
    else:
        lines = []
        for name, vals in results:
            lines.append(name)
            lines.extend(f"  {k:<12} {_fmt(x)}" for k, x in vals.items())
        text = "\n".join(lines) + "\n"
    _emit(text, args.append)
    return EXIT_OK


def _metrics(args) -> SkewConfig:
    try:
        return SkewConfig(args.coef, args.alpha, args.v, args.dispersion)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def cmd_optimize(args) -> int:
    metrics = _metrics(args)
    assets = load_assets(args.assets)
    try:
        problem = PortfolioProblem(
            tuple(a.fuzzy for a in assets), args.mode, args.rho, args.beta, args.gamma, args.mesh, metrics
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    sol = optimize(problem, workers=args.workers)
    config = {
        "assets": str(args.assets),
        "mode": problem.mode,
        "coefficient": metrics.label,
        "dispersion": metrics.dispersion_kind,
        "rho": args.rho,
        "beta": args.beta,
        "gamma": args.gamma,
        "mesh": args.mesh,
    }
    if args.out == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        names = [a.name for a in assets]
        w.writerow(["coefficient", "mode", "mesh", *[f"w_{n}" for n in names],
                    "mean", "dispersion", "skewness", "evaluated_points", "elapsed_ms"])
        w.writerow([metrics.label, problem.mode, args.mesh, *(_fmt(x) for x in sol.weights),
                    repr(sol.mean), repr(sol.dispersion), repr(sol.skewness),
                    sol.evaluated_points, _fmt(1e3 * sol.elapsed)])
        text = buf.getvalue()
    else:
        report = {
            "config": config,
            "assets": [a.name for a in assets],
            "weights": list(sol.weights),
            "mean": sol.mean,
            "dispersion": sol.dispersion,
            "skewness": sol.skewness,
            "evaluated_points": sol.evaluated_points,
            "elapsed_ms": 1e3 * sol.elapsed,
        }
        text = json.dumps(report, indent=2) + "\n"
    sys.stdout.write(text)
    return EXIT_OK


def _parse_list(text: str, conv=str) -> list:
    return [conv(t.strip()) for t in text.split(",") if t.strip()]


def cmd_bench(args) -> int:
    if args.repeats < 1:
        raise ConfigError("--repeats must be >= 1")
    coefs = _parse_list(args.coef)
    if not coefs:
        raise ConfigError("--coef needs at least one coefficient")
    try:
        configs = [SkewConfig(c, args.alpha, args.v) for c in coefs]
        modes = [MODE_ALIASES.get(m, m) for m in _parse_list(args.modes)]
        sweep = _parse_list(args.sweep, int) if args.sweep else []
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    for m in modes:
        if m not in MODES:
            raise ConfigError(f"unknown mode {m!r}")
    if not sweep and not args.assets:
        raise ConfigError("bench needs --assets or --sweep")
    portfolios = []
    if args.assets:
        portfolios.append([a.fuzzy for a in load_assets(args.assets)])
    for n in sweep:
        if n < 1:
            raise ConfigError("--sweep asset counts must be positive")
        portfolios.append(synthetic_assets(n, seed=args.seed))
    rows = []
    for assets in portfolios:
        rows.extend(
            run_bench(assets, configs, args.mesh, args.repeats, modes,
                      args.rho, args.beta, args.gamma, args.workers)
        )
    sys.stdout.write(rows_to_csv(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fuzzyskew", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def coef_args(p, allow_all=False, default="jkpt1"):
        choices = ["jkpt1", "jkpt2", "vb13", "lgy15"] + (["all"] if allow_all else [])
        p.add_argument("--coef", choices=choices, default=default)
        p.add_argument("--alpha", type=float, default=0.25, help="quantile level for JKPT1 (default 0.25)")
        p.add_argument("--v", type=float, default=0.5, help="outer/inner mixing weight (default 0.5)")

    def threshold_args(p, rho=6.0, beta=3.6, gamma=0.0):
        p.add_argument("--rho", type=float, default=rho, help="minimum mean")
        p.add_argument("--beta", type=float, default=beta, help="maximum dispersion")
        p.add_argument("--gamma", type=float, default=gamma, help="minimum skewness (modes mean/var)")
        p.add_argument("--mesh", type=int, default=100, help="grid resolution r, step 1/r")
        p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("skew", help="skewness coefficients of each fuzzy number in a file")
    p.add_argument("--input", required=True, type=Path)
    coef_args(p, allow_all=True, default="all")
    p.add_argument("--out", choices=["text", "json", "csv"], default="text")
    p.add_argument("--append", metavar="FILE", help="also append the output to FILE")
    p.set_defaults(func=cmd_skew)

    p = sub.add_parser("optimize", help="threshold-constrained portfolio search")
    p.add_argument("--assets", required=True, type=Path)
    p.add_argument("--mode", choices=sorted(MODE_ALIASES), default="skew")
    coef_args(p)
    p.add_argument("--dispersion", choices=["omega", "lgy15"], default=None,
                   help="override the dispersion operator (default: omega, LGY15 variance for lgy15)")
    threshold_args(p)
    p.add_argument("--out", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("bench", help="time full TCPO runs per coefficient and mode (CSV)")
    p.add_argument("--assets", type=Path)
    p.add_argument("--coef", default="jkpt1,vb13,lgy15", help="comma-separated coefficients")
    p.add_argument("--alpha", type=float, default=0.25)
    p.add_argument("--v", type=float, default=0.5)
    p.add_argument("--modes", default="skew,mean,var")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--sweep", help="comma-separated asset counts for synthetic portfolios, e.g. 3,4,5,6")
    p.add_argument("--seed", type=int, default=0)
    threshold_args(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AssetFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except DegenerateInputError as exc:
        print(f"undefined: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (ConfigError, ValueError) as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
