"""Composite scores, rankings, descriptive statistics, and the end-to-end
evaluation pipeline.

The integrated score of an entity is the weight-blended sum of its
normalized indicators, magnified onto [0, scale] (scale defaults to 100
so scores read as percentages).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy import stats as scipy_stats

from .density import CdfEstimate, estimate_cdf, select_bandwidth
from .entropy import (
    WEIGHT_RULES,
    QuadratureConfig,
    compute_weights,
    continuous_entropy,
    discrete_entropy,
)
from .errors import (
    DegenerateColumnError,
    DimensionMismatchError,
    EntroscoreError,
    InvariantError,
    NonFiniteInputError,
)
from .ingest import FindingKind, validate
from .model import (
    DescriptiveStats,
    EntropyVector,
    EvaluationReport,
    NormalizedMatrix,
    RawDataset,
    WeightVector,
)
from .normalize import normalize_matrix

__all__ = [
    "EvaluationOptions",
    "PipelineRun",
    "composite_scores",
    "rank",
    "describe",
    "run_pipeline",
    "evaluate",
]

METHODS = ("continuous", "discrete")


@dataclass(frozen=True)
class EvaluationOptions:
    """Knobs for one evaluation run.

    bandwidth None selects Silverman's rule per indicator; a positive
    real fixes one bandwidth for every indicator.  threads bounds the
    number of indicator columns processed concurrently; results are
    identical for any thread count.
    """

    method: str = "continuous"
    weight_rule: str = "paper"
    bandwidth: float | None = None
    boundary_correction: bool = True
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    scale: float = 100.0
    threads: int = 1

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise InvariantError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.weight_rule not in WEIGHT_RULES:
            raise InvariantError(
                f"unknown weight rule {self.weight_rule!r}; expected one of {WEIGHT_RULES}"
            )
        if self.bandwidth is not None and not (
            math.isfinite(self.bandwidth) and self.bandwidth > 0
        ):
            raise InvariantError("bandwidth must be a positive finite real or None")
        if not (math.isfinite(self.scale) and self.scale > 0):
            raise InvariantError("scale must be a positive finite real")
        if self.threads < 1:
            raise InvariantError("threads must be >= 1")


def composite_scores(matrix, weights, scale: float = 100.0) -> np.ndarray:
    """Integrated scores F_i = scale * sum_j w_j * s_ij.

    matrix may be a NormalizedMatrix or a bare 2-D array; weights a
    WeightVector or a bare vector.  Scores are clipped into [0, scale]
    to absorb last-ulp rounding of the weight sum.
    """
    values = matrix.values if isinstance(matrix, NormalizedMatrix) else np.asarray(matrix, dtype=np.float64)
    w = weights.weights if isinstance(weights, WeightVector) else np.asarray(weights, dtype=np.float64)
    if values.ndim != 2 or w.ndim != 1 or values.shape[1] != w.size:
        raise DimensionMismatchError(
            f"matrix has {values.shape[1] if values.ndim == 2 else '?'} columns "
            f"but weight vector has {w.size}"
        )
    scores = scale * np.sum(values * w, axis=1)
    return np.clip(scores, 0.0, scale)


def rank(scores) -> np.ndarray:
    """Indices sorted by score descending; ties keep input order."""
    arr = np.asarray(scores, dtype=np.float64)
    return np.argsort(-arr, kind="stable")


def describe(scores) -> DescriptiveStats:
    """Descriptive statistics of a score list.

    Standard deviation uses the n - 1 denominator; skewness and excess
    kurtosis carry the usual small-sample bias corrections and are NaN
    whenever n < 4 or the variance is zero.
    """
    arr = np.asarray(scores, dtype=np.float64)
    if arr.ndim != 1 or arr.size < 1:
        raise InvariantError("describe needs a non-empty 1-D score list")
    n = arr.size
    std_dev = float(np.std(arr, ddof=1)) if n >= 2 else float("nan")
    if n >= 4 and std_dev > 0.0:
        skewness = float(scipy_stats.skew(arr, bias=False))
        kurtosis = float(scipy_stats.kurtosis(arr, fisher=True, bias=False))
    else:
        skewness = float("nan")
        kurtosis = float("nan")
    return DescriptiveStats(
        mean=float(np.mean(arr)),
        median=float(np.median(arr)),
        std_dev=std_dev,
        kurtosis=kurtosis,
        skewness=skewness,
        smallest=float(np.min(arr)),
        largest=float(np.max(arr)),
        obs=n,
    )


@dataclass(frozen=True, eq=False)
class PipelineRun:
    """Report plus the intermediate products the CLI can dump for audit."""

    report: EvaluationReport
    normalized: NormalizedMatrix
    bandwidths: tuple[float, ...] | None
    cdfs: tuple[CdfEstimate, ...] | None


def _column_entropy(column: np.ndarray, options: EvaluationOptions):
    """Entropy of one normalized column; returns (entropy, bandwidth, cdf)."""
    if options.method == "discrete":
        return discrete_entropy(column), None, None
    h = options.bandwidth if options.bandwidth is not None else select_bandwidth(column)
    cdf = estimate_cdf(column, h, options.boundary_correction)
    return continuous_entropy(cdf, options.quadrature), h, cdf


def run_pipeline(dataset: RawDataset, options: EvaluationOptions | None = None) -> PipelineRun:
    """Normalize, estimate, weigh, and score a dataset, keeping intermediates.

    Indicator columns are independent, so they are processed on a thread
    pool when options.threads > 1; results are assembled in column order
    and are bit-identical to a sequential run.
    """
    options = options or EvaluationOptions()
    findings = validate(dataset)
    if findings:
        first = findings[0]
        exc = (
            NonFiniteInputError
            if first.kind is FindingKind.NON_FINITE_VALUE
            else DegenerateColumnError
        )
        raise exc(f"indicator '{first.indicator}': {first.detail}")

    normalized = normalize_matrix(dataset)
    names = dataset.schema.names

    def column_job(j: int):
        try:
            return _column_entropy(normalized.values[:, j], options)
        except EntroscoreError as exc:
            raise type(exc)(f"indicator '{names[j]}': {exc}") from None

    m = len(names)
    if options.threads > 1 and m > 1:
        with ThreadPoolExecutor(max_workers=options.threads) as pool:
            results = list(pool.map(column_job, range(m)))
    else:
        results = [column_job(j) for j in range(m)]

    entropies = EntropyVector(np.array([r[0] for r in results], dtype=np.float64))
    if options.method == "continuous":
        bandwidths = tuple(r[1] for r in results)
        cdfs = tuple(r[2] for r in results)
    else:
        bandwidths = None
        cdfs = None

    weights = compute_weights(entropies, options.weight_rule)
    scores = composite_scores(normalized, weights, options.scale)
    report = EvaluationReport(
        entropies=entropies,
        weights=weights,
        scores=scores,
        ranking=rank(scores),
        stats=describe(scores),
        scale=options.scale,
    )
    return PipelineRun(report, normalized, bandwidths, cdfs)


def evaluate(dataset: RawDataset, options: EvaluationOptions | None = None) -> EvaluationReport:
    """Run the full pipeline and return just the evaluation report."""
    return run_pipeline(dataset, options).report
