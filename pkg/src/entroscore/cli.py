"""Command-line front end: configuration, ingestion, evaluation, reports.

Exit codes: 0 on success, 1 on data errors (the offending file, indicator,
or row is named on stderr), 2 on usage errors.  Output bytes are fully
determined by argv plus the input file bytes.

Configuration precedence: command-line flags override values from a
--config JSON file, which override built-in defaults.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .entropy import WEIGHT_RULES, QuadratureConfig
from .errors import EntroscoreError, InvariantError
from .ingest import parse_csv, validate
from .model import SCHEMA_FORMAT_VERSION, Schema, default_schema, load_schema
from .report import (
    ranking_table,
    stats_block,
    weights_table,
    write_cdf_csv,
    write_normalized_csv,
    write_scores_csv,
    write_weights_csv,
)
from .scoring import METHODS, EvaluationOptions, run_pipeline

__all__ = ["RunConfig", "build_parser", "run", "main"]

# Marker for dump flags given without a path: resolve against --out-dir.
_USE_OUT_DIR = ""

_CONFIG_KEYS = {
    "input",
    "schema",
    "method",
    "weight_rule",
    "bandwidth",
    "boundary_correction",
    "quadrature_points",
    "scale",
    "out_dir",
    "threads",
}


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved settings for one CLI invocation."""

    input: Path
    schema: str = "default"
    method: str = "continuous"
    weight_rule: str = "paper"
    bandwidth: float | None = None
    boundary_correction: bool = True
    quadrature_points: int = 10001
    scale: float = 100.0
    out_dir: Path | None = None
    dump_normalized: Path | None = None
    dump_cdf_dir: Path | None = None
    threads: int = 1

    def __post_init__(self) -> None:
        if self.quadrature_points < 3 or self.quadrature_points % 2 == 0:
            raise InvariantError("quadrature points must be odd and >= 3")
        if not (math.isfinite(self.scale) and self.scale > 0):
            raise InvariantError("scale must be positive")
        if self.method not in METHODS:
            raise InvariantError(f"method must be one of {METHODS}")
        if self.weight_rule not in WEIGHT_RULES:
            raise InvariantError(f"weight rule must be one of {WEIGHT_RULES}")
        if self.bandwidth is not None and not (
            math.isfinite(self.bandwidth) and self.bandwidth > 0
        ):
            raise InvariantError("bandwidth must be positive")
        if self.threads < 1:
            raise InvariantError("threads must be >= 1")

    def options(self) -> EvaluationOptions:
        return EvaluationOptions(
            method=self.method,
            weight_rule=self.weight_rule,
            bandwidth=self.bandwidth,
            boundary_correction=self.boundary_correction,
            quadrature=QuadratureConfig(points=self.quadrature_points),
            scale=self.scale,
            threads=self.threads,
        )


def _odd_points(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 3 or value % 2 == 0:
        raise argparse.ArgumentTypeError("quadrature grid must be odd and >= 3")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number")
    if not (math.isfinite(value) and value > 0):
        raise argparse.ArgumentTypeError("value must be positive")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError("value must be >= 1")
    return value


def _bandwidth_arg(text: str) -> float | str:
    if text == "silverman":
        return "silverman"
    return _positive_float(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entroscore",
        description="Score and rank entities by entropy-weighted composite indicators.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"entroscore {__version__} (schema format v{SCHEMA_FORMAT_VERSION})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="PATH", help="input CSV file")
    common.add_argument(
        "--schema",
        metavar="PATH",
        help="indicator schema JSON file, or 'default' for the built-in schema",
    )
    common.add_argument("--config", metavar="PATH", help="JSON file with default option values")

    pipeline = argparse.ArgumentParser(add_help=False)
    pipeline.add_argument("--method", choices=METHODS, help="entropy method (default continuous)")
    pipeline.add_argument(
        "--weight-rule",
        choices=WEIGHT_RULES,
        help="weights proportional to entropy (paper) or to 1 - entropy (classic)",
    )
    pipeline.add_argument(
        "--bandwidth",
        type=_bandwidth_arg,
        metavar="H",
        help="kernel bandwidth: a positive real, or 'silverman' (default)",
    )
    pipeline.add_argument(
        "--no-boundary-correction",
        action="store_true",
        default=None,
        help="use the raw clamped kernel CDF instead of the endpoint-pinned one",
    )
    pipeline.add_argument(
        "--quadrature-points",
        type=_odd_points,
        metavar="N",
        help="odd Simpson grid size on [0, 1] (default 10001)",
    )
    pipeline.add_argument("--threads", type=_positive_int, metavar="N", help="max worker threads")
    pipeline.add_argument("--out-dir", metavar="DIR", help="directory for machine-readable CSVs")

    p_eval = sub.add_parser(
        "evaluate",
        parents=[common, pipeline],
        help="score and rank all entities, print the full report",
    )
    p_eval.add_argument("--scale", type=_positive_float, help="score magnification (default 100)")
    p_eval.add_argument(
        "--dump-normalized",
        nargs="?",
        const=_USE_OUT_DIR,
        metavar="PATH",
        help="write the normalized matrix as CSV (default <out-dir>/normalized.csv)",
    )
    p_eval.add_argument(
        "--dump-cdf",
        nargs="?",
        const=_USE_OUT_DIR,
        metavar="DIR",
        help="write per-indicator CDF grids as cdf_<indicator>.csv (default into --out-dir)",
    )

    sub.add_parser(
        "weights",
        parents=[common, pipeline],
        help="print the per-indicator entropy and weight table",
    )

    sub.add_parser(
        "validate",
        parents=[common],
        help="check the input for degenerate or non-finite indicator columns",
    )
    return parser


def _load_config_file(path: str, parser: argparse.ArgumentParser) -> dict:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        parser.error(f"cannot read config {path}: {exc}")
    except json.JSONDecodeError as exc:
        parser.error(f"config {path} is not valid JSON: {exc}")
    if not isinstance(payload, dict):
        parser.error(f"config {path} must hold a JSON object")
    unknown = sorted(set(payload) - _CONFIG_KEYS)
    if unknown:
        parser.error(f"config {path} has unknown keys: {', '.join(unknown)}")
    return payload


def resolve_config(args: argparse.Namespace, parser: argparse.ArgumentParser) -> RunConfig:
    """Merge flags over config-file values over built-in defaults."""
    file_values = _load_config_file(args.config, parser) if args.config else {}

    def pick(flag_value, key, default):
        if flag_value is not None:
            return flag_value
        if key in file_values and file_values[key] is not None:
            return file_values[key]
        return default

    input_path = pick(args.input, "input", None)
    if input_path is None:
        parser.error("--input is required")

    bandwidth = pick(getattr(args, "bandwidth", None), "bandwidth", "silverman")
    if bandwidth == "silverman":
        bandwidth = None

    no_correction = getattr(args, "no_boundary_correction", None)
    if no_correction:
        boundary_correction = False
    else:
        boundary_correction = file_values.get("boundary_correction", True)

    out_dir = pick(getattr(args, "out_dir", None), "out_dir", None)
    out_dir = Path(out_dir) if out_dir is not None else None

    def resolve_dump(raw, default_name: str | None, flag: str):
        if raw is None:
            return None
        if raw == _USE_OUT_DIR:
            if out_dir is None:
                parser.error(f"{flag} without a path requires --out-dir")
            return out_dir / default_name if default_name else out_dir
        return Path(raw)

    try:
        return RunConfig(
            input=Path(input_path),
            schema=str(pick(args.schema, "schema", "default")),
            method=str(pick(getattr(args, "method", None), "method", "continuous")),
            weight_rule=str(pick(getattr(args, "weight_rule", None), "weight_rule", "paper")),
            bandwidth=bandwidth,
            boundary_correction=bool(boundary_correction),
            quadrature_points=int(
                pick(getattr(args, "quadrature_points", None), "quadrature_points", 10001)
            ),
            scale=float(pick(getattr(args, "scale", None), "scale", 100.0)),
            out_dir=out_dir,
            dump_normalized=resolve_dump(
                getattr(args, "dump_normalized", None), "normalized.csv", "--dump-normalized"
            ),
            dump_cdf_dir=resolve_dump(getattr(args, "dump_cdf", None), None, "--dump-cdf"),
            threads=int(pick(getattr(args, "threads", None), "threads", os.cpu_count() or 1)),
        )
    except (InvariantError, TypeError, ValueError) as exc:
        parser.error(str(exc))
        raise AssertionError("unreachable")  # parser.error always exits


def _resolve_schema(cfg: RunConfig) -> Schema:
    if cfg.schema == "default":
        return default_schema()
    return load_schema(cfg.schema)


def _read_dataset(cfg: RunConfig, schema: Schema):
    with open(cfg.input, "rb") as fh:
        return parse_csv(fh, schema)


def _note_drops(report) -> None:
    if report.rows_dropped:
        ids = ", ".join(report.dropped_ids)
        print(
            f"note: dropped {report.rows_dropped} incomplete row(s): {ids}",
            file=sys.stderr,
        )


def _cmd_validate(cfg: RunConfig) -> int:
    schema = _resolve_schema(cfg)
    dataset, report = _read_dataset(cfg, schema)
    _note_drops(report)
    findings = validate(dataset)
    if findings:
        for finding in findings:
            print(str(finding), file=sys.stderr)
        return 1
    print(
        f"ok: {dataset.n_entities} entities, {dataset.n_indicators} indicators, "
        f"{report.rows_dropped} row(s) dropped"
    )
    return 0


def _cmd_weights(cfg: RunConfig) -> int:
    schema = _resolve_schema(cfg)
    dataset, report = _read_dataset(cfg, schema)
    _note_drops(report)
    result = run_pipeline(dataset, cfg.options())
    sys.stdout.write(weights_table(schema, result.report.entropies, result.report.weights))
    if cfg.out_dir is not None:
        cfg.out_dir.mkdir(parents=True, exist_ok=True)
        write_weights_csv(cfg.out_dir / "weights.csv", schema, result.report.entropies, result.report.weights)
    return 0


def _cmd_evaluate(cfg: RunConfig) -> int:
    schema = _resolve_schema(cfg)
    dataset, ingest_report = _read_dataset(cfg, schema)
    _note_drops(ingest_report)
    result = run_pipeline(dataset, cfg.options())
    report = result.report

    sys.stdout.write(ranking_table(dataset.entity_ids, report.scores, report.ranking))
    sys.stdout.write("\n")
    sys.stdout.write(weights_table(schema, report.entropies, report.weights))
    sys.stdout.write("\n")
    sys.stdout.write(stats_block(report.stats))

    if cfg.out_dir is not None:
        cfg.out_dir.mkdir(parents=True, exist_ok=True)
        write_weights_csv(cfg.out_dir / "weights.csv", schema, report.entropies, report.weights)
        write_scores_csv(cfg.out_dir / "scores.csv", dataset.entity_ids, report.scores, report.ranking)
    if cfg.dump_normalized is not None:
        cfg.dump_normalized.parent.mkdir(parents=True, exist_ok=True)
        write_normalized_csv(cfg.dump_normalized, dataset.entity_ids, result.normalized)
    if cfg.dump_cdf_dir is not None:
        if result.cdfs is None:
            print("note: --dump-cdf has no effect with --method discrete", file=sys.stderr)
        else:
            cfg.dump_cdf_dir.mkdir(parents=True, exist_ok=True)
            for spec, cdf in zip(schema, result.cdfs):
                write_cdf_csv(cfg.dump_cdf_dir / f"cdf_{spec.name}.csv", cdf)
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "weights": _cmd_weights,
    "evaluate": _cmd_evaluate,
}


def run(argv: list[str] | None = None) -> int:
    """Parse argv, execute the requested subcommand, return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = resolve_config(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](cfg)
    except EntroscoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # never leak a stack trace to the terminal
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
