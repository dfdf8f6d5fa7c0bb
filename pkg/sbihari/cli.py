"""Command-line interface of sbihari.

Subcommands: transform, bound, simulate, verify, counterexample, cauchy.
Exit codes: 0 on success (every verdict PASS or INCONCLUSIVE), 1 on any FAIL
verdict, 2 on usage or configuration errors.
"""

import argparse
import json
import logging
import math
import os
import sys
from datetime import datetime, timezone
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from sbihari import CONFIG_SCHEMA_VERSION, __version__
from sbihari.bounds import concave_bound
from sbihari.config.codes import CHECK_CODES, HCASE_CODES, VARIANT_CODES, get_hcase, get_variant
from sbihari.config.loader import ConfigFile, load_eta, parse_config, read_json
from sbihari.exceptions import ArgumentError, BihariError, ConfigError, DomainError
from sbihari.montecarlo import (
    cauchy_experiment,
    counterexample_mc,
    counterexample_ratio,
    euler_order_ladder,
    ladder_report,
    simulate_trials,
    truncation_experiment,
    verify_concave_bound,
    verify_gronwall_random_A,
    verify_osgood,
    verify_random_A,
    verify_thm38,
)
from sbihari.objects import LevyConfig, McReport, ModelSpec, RunConfig, VerifyConfig
from sbihari.objects.run_config import default_workers
from sbihari.simulation import SdeModel, build_model
from sbihari.transform import GTransform
from sbihari.transformers import (
    CounterexampleTransformer,
    LadderTransformer,
    ReportTransformer,
    SimulationTransformer,
    TransformTableTransformer,
)
from sbihari.utils import display_to_ext

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# Verify checks whose reports carry ladder rows, and the ladder table they use
LADDER_OF_CHECK = {
    "cauchy": "cauchy",
    "truncation": "truncation",
    "osgood": "osgood",
    "euler_order": "order",
}


def _add_common(parser: argparse.ArgumentParser, seeded: bool = True):
    parser.add_argument("--out", default=None, help="Output file (stdout if omitted)")
    if seeded:
        parser.add_argument("--seed", type=int, default=0, help="64-bit unsigned base seed")
        parser.add_argument(
            "--workers",
            type=int,
            default=None,
            help="Worker threads (default: $SBIHARI_WORKERS or 1)",
        )


def build_parser() -> argparse.ArgumentParser:
    """Builds the argument parser of the `sbihari` command."""
    parser = argparse.ArgumentParser(
        prog="sbihari",
        description="Stochastic Bihari-LaSalle bounds, Euler approximates and Monte Carlo checks.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"sbihari {__version__} (config schema {CONFIG_SCHEMA_VERSION})",
    )
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("transform", help="Evaluate G (or G~_p) and its inverse")
    p.add_argument(
        "operation",
        choices=["eval", "invert", "quadrature", "explosion"],
        help="eval: x,G,G_inv_roundtrip; invert: y,G_inv,G_roundtrip; "
        "quadrature: G~_p against direct quadrature; explosion: sup(range G) - G(H)",
    )
    p.add_argument("--eta", required=True, help="Eta kind, inline JSON or JSON file")
    p.add_argument("--x", type=display_to_ext, nargs="+", required=True, help="Points")
    p.add_argument("--p", type=float, default=None, help="Use G~_p with this exponent")
    p.add_argument("--anchor-c", type=float, default=1.0, help="Anchor c of G")
    _add_common(p, seeded=False)

    p = sub.add_parser("bound", help="Evaluate the concave bound")
    p.add_argument("--eta", required=True, help="Eta kind, inline JSON or JSON file")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--case", choices=sorted(HCASE_CODES), required=True)
    p.add_argument("--variant", choices=sorted(VARIANT_CODES), required=True)
    p.add_argument("--h-norm", type=float, required=True)
    p.add_argument("--a-t", type=float, required=True)
    p.add_argument("--anchor-c", type=float, default=1.0)
    p.add_argument("--strict", action="store_true", help="Fail when the concavity probe fails")
    _add_common(p, seeded=False)

    p = sub.add_parser("simulate", help="Euler approximates of an SDE model")
    p.add_argument("--model", default="example43", help="Model preset or JSON model file")
    p.add_argument("--n", type=int, default=256, help="Grid points per unit time")
    p.add_argument("--T", type=float, default=1.0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--cap-R", type=float, default=None, help="Truncation radius R")
    p.add_argument("--paths-out", default=None, help="Also write full paths to this CSV")
    _add_common(p)

    p = sub.add_parser("verify", help="Run an empirical inequality check")
    p.add_argument("--check", choices=sorted(CHECK_CODES), required=True)
    p.add_argument("--config", default=None, help="JSON verify config")
    p.add_argument("--trials", type=int, default=None, help="Override the config's trials")
    p.add_argument("--strict", action="store_true", help="Strict config and probe handling")
    p.add_argument("--format", choices=["json", "csv"], default="json", help="Report format")
    p.add_argument("--rows-out", default=None, help="Also write the ladder rows to this CSV")
    _add_common(p)

    p = sub.add_parser("counterexample", help="Closed form and Monte Carlo of the counterexample")
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--gamma", type=float, nargs="+", default=[1.0, 10.0, 100.0])
    p.add_argument("--T", type=float, default=2.0)
    p.add_argument("--trials", type=int, default=10_000, help="0 for the closed form only")
    _add_common(p)

    p = sub.add_parser("cauchy", help="Cauchy exceedance of coupled Euler approximates")
    p.add_argument("--model", default="example43", help="Model preset or JSON model file")
    p.add_argument("--n-list", type=int, nargs="+", default=[16, 64, 256])
    p.add_argument("--eps", type=float, default=0.1)
    p.add_argument("--T", type=float, default=1.0)
    p.add_argument("--trials", type=int, default=2000)
    p.add_argument("--cap-R", type=float, default=None)
    _add_common(p)

    return parser


def _emit(text: str, out: Optional[str], run: RunConfig, argv: Sequence[str]):
    """Writes the primary output and, for files, the metadata sidecar <out>.meta.json."""
    if not out:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    meta = {
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "argv": list(argv),
        "version": __version__,
        "config_schema_version": CONFIG_SCHEMA_VERSION,
        "run": run.to_dict(),
    }
    with open(f"{out}.meta.json", "w", encoding="utf-8") as f:
        json.dump(meta, f, indent=2)
    logger.info(f"Wrote {out} and its metadata sidecar")


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def load_model(arg: str) -> Tuple[SdeModel, LevyConfig]:
    """Resolves --model: a preset name or a JSON model file {model, params, levy}."""
    if os.path.exists(arg):
        spec = ConfigFile(arg, model=ModelSpec).config
        model, levy = build_model(spec.model, spec.params)
        return model, spec.levy or levy
    return build_model(arg.strip().lower())


def _transform_pair(gt: GTransform, p: Optional[float]):
    """(forward, backward) maps: G and G^{-1}, or G~_p and G~_p^{-1} when p is given."""
    if p is None:
        return gt.evaluate, gt.inverse

    def forward(x: float) -> float:
        # G~_p(0) = (1 - p) G(0)
        return (1.0 - p) * gt.G0 if x == 0.0 else gt.tilde_p(p, x)

    return forward, lambda y: gt.tilde_p_inverse(p, y)


def _run_transform(args) -> Tuple[str, int]:
    eta = load_eta(args.eta)
    gt = GTransform(eta, anchor_c=args.anchor_c)
    forward, backward = _transform_pair(gt, args.p)
    points = list(args.x)
    if args.operation == "eval":
        values = [forward(x) for x in points]
        columns = {"x": points, "G": values, "G_inv_roundtrip": [backward(v) for v in values]}
    elif args.operation == "invert":
        values = [backward(y) for y in points]
        columns = {"y": points, "G_inv": values, "G_roundtrip": [forward(v) for v in values]}
    elif args.operation == "quadrature":
        if args.p is None:
            raise ArgumentError("transform quadrature needs --p")
        via_g = [gt.tilde_p(args.p, x) for x in points]
        direct = [gt.tilde_p_quadrature(args.p, x) for x in points]
        diffs = [abs(a - b) for a, b in zip(via_g, direct)]
        columns = {"x": points, "tilde_G_p": via_g, "quadrature": direct, "abs_diff": diffs}
    else:
        columns = {
            "H": points,
            "G": [gt.evaluate(h) for h in points],
            "explosion_level": [gt.explosion_level(h) for h in points],
        }
    transformer = TransformTableTransformer(args.operation)
    return transformer.to_csv(transformer.transform(columns)), EXIT_OK


def _run_bound(args) -> Tuple[str, int]:
    eta = load_eta(args.eta)
    gt = GTransform(eta, anchor_c=args.anchor_c)
    result = concave_bound(
        gt,
        args.p,
        get_hcase(args.case),
        get_variant(args.variant),
        args.h_norm,
        args.a_t,
        strict_mode=args.strict,
    )
    return _json_text(result.to_dict()), EXIT_OK


def _run_simulate(args, run: RunConfig) -> Tuple[str, int]:
    model, levy = load_model(args.model)
    samples = simulate_trials(
        model,
        levy,
        args.n,
        args.T,
        args.trials,
        run.base_seed,
        cap_R=args.cap_R,
        workers=run.workers,
        keep_paths=bool(args.paths_out),
    )
    transformer = SimulationTransformer()
    if args.paths_out:
        transformer.to_csv(transformer.paths(samples["paths"], 1.0 / args.n), args.paths_out)
    df = transformer.transform(samples, run.base_seed)
    return transformer.to_csv(df), EXIT_OK


def _load_verify_config(args) -> VerifyConfig:
    """The --config document (check may be omitted) with the command-line overrides."""
    raw: Dict = {}
    if args.config:
        raw = read_json(args.config)
        if not isinstance(raw, dict):
            raise ConfigError("config must be a JSON object", path=args.config)
    raw = {**raw, "check": args.check}
    if args.trials is not None:
        raw["trials"] = args.trials
    if args.strict:
        raw["strict_mode"] = True
    config, _ = parse_config(raw, VerifyConfig, args.config, strict_mode=args.strict)
    return config


def run_check(vc: VerifyConfig, seed: int, workers: int) -> List[McReport]:
    """Dispatches a verify config to its check and returns the reports."""
    common = {"trials": vc.trials, "base_seed": seed, "workers": workers, "ci_level": vc.ci_level}
    quad = vc.quadruple
    if vc.check == "thm31":
        return [
            verify_concave_bound(
                quad, vc.p, vc.hcase, vc.variant, strict_mode=vc.strict_mode, **common
            )
        ]
    if vc.check == "cor36":
        return [verify_random_A(quad, vc.p, vc.q, vc.hcase, vc.variant, **common)]
    if vc.check == "gronwall_random_a":
        return [verify_gronwall_random_A(quad, vc.p, vc.gronwall_q, vc.hcase, vc.variant, **common)]
    if vc.check == "thm38":
        return verify_thm38(quad, vc.p, **common)
    if vc.check == "osgood":
        return verify_osgood(quad, vc.osgood_n_list, vc.delta, **common)
    if vc.check == "counterexample":
        return [counterexample_mc(vc.p, vc.gamma, vc.counter_T, **common)]
    if vc.check == "euler_order":
        rows = [{**row, "std_error": 0.0} for row in euler_order_ladder(vc.n_list)]
        orders = [row["observed_order"] for row in rows[1:]]
        details = {"min_observed_order": min(orders) if orders else math.nan}
        tag = "increase of |X_T^(n) - e| over meshes"
        return [ladder_report(tag, rows, "error", vc.trials, seed, vc.ci_level, details)]

    model, levy = build_model(vc.model, vc.model_params)
    levy = vc.levy or levy
    if vc.check == "cauchy":
        rows = cauchy_experiment(
            model, levy, vc.n_list, vc.eps, vc.trials, seed, T=vc.sde_T, workers=workers
        )
        tag = f"increase of P[sup |X^(n) - X^(m)| > {vc.eps:g}] over meshes"
        return [ladder_report(tag, rows, "p_exceed", vc.trials, seed, vc.ci_level)]
    rows = truncation_experiment(
        model, levy, vc.truncation_n, vc.cap_R_list, vc.trials, seed, T=vc.sde_T, workers=workers
    )
    tag = "increase of P[capped] over truncation radii"
    return [ladder_report(tag, rows, "p_capped", vc.trials, seed, vc.ci_level)]


def _run_verify(args, run: RunConfig) -> Tuple[str, int]:
    vc = _load_verify_config(args)
    ladder = LADDER_OF_CHECK.get(vc.check)
    if args.rows_out and ladder is None:
        raise ArgumentError(f"check '{vc.check}' has no ladder rows for --rows-out")
    reports = run_check(vc, run.base_seed, run.workers)
    code = EXIT_FAIL if any(report.failed for report in reports) else EXIT_OK

    if args.rows_out:
        rows = next(r.details["rows"] for r in reports if "rows" in r.details)
        transformer = LadderTransformer(ladder)
        transformer.to_csv(transformer.from_rows(rows), args.rows_out)

    if args.format == "csv":
        reporter = ReportTransformer()
        return reporter.to_csv(reporter.transform(reports)), code
    payload = {
        "check": vc.check,
        "config": vc.to_dict(),
        "reports": [report.to_dict() for report in reports],
    }
    return _json_text(payload), code


def _run_counterexample(args, run: RunConfig) -> Tuple[str, int]:
    closed_rows, reports = [], []
    for gamma in args.gamma:
        closed = counterexample_ratio(args.p, gamma, args.T)
        closed_rows.append({"p": args.p, "gamma": gamma, "T": args.T, **closed})
        report = None
        if args.trials > 0:
            report = counterexample_mc(
                args.p, gamma, args.T, args.trials, run.base_seed, workers=run.workers
            )
        reports.append(report)
    df = CounterexampleTransformer().transform(closed_rows, reports)
    code = EXIT_FAIL if any(r is not None and r.failed for r in reports) else EXIT_OK
    return CounterexampleTransformer.to_csv(df), code


def _run_cauchy(args, run: RunConfig) -> Tuple[str, int]:
    model, levy = load_model(args.model)
    rows = cauchy_experiment(
        model,
        levy,
        args.n_list,
        args.eps,
        args.trials,
        run.base_seed,
        T=args.T,
        cap_R=args.cap_R,
        workers=run.workers,
    )
    transformer = LadderTransformer("cauchy")
    return transformer.to_csv(transformer.from_rows(rows)), EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the `sbihari` command.

    Returns:
        0 on success, 1 on a FAIL verdict, 2 on usage or configuration errors.
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        flags = {k: v for k, v in vars(args).items() if k not in ("seed", "workers", "out")}
        run = RunConfig(
            subcommand=args.subcommand,
            base_seed=getattr(args, "seed", 0),
            output=args.out,
            workers=getattr(args, "workers", None) or default_workers(),
            flags=flags,
        )
        handlers = {
            "transform": lambda: _run_transform(args),
            "bound": lambda: _run_bound(args),
            "simulate": lambda: _run_simulate(args, run),
            "verify": lambda: _run_verify(args, run),
            "counterexample": lambda: _run_counterexample(args, run),
            "cauchy": lambda: _run_cauchy(args, run),
        }
        text, code = handlers[args.subcommand]()
        _emit(text, args.out, run, argv)
        return code
    except (ConfigError, ArgumentError, DomainError, ValidationError) as e:
        logger.error(str(e))
        sys.stderr.write(f"sbihari: error: {e}\n")
        return EXIT_USAGE
    except BihariError as e:
        logger.error(str(e))
        sys.stderr.write(f"sbihari: error: {e}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
