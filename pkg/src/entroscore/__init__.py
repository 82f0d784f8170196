"""entroscore: entropy-weighted composite scoring of tabular indicators.

Pipeline: direction-aware min-max normalization, Gaussian-kernel CDF
estimation per indicator, continuous entropy by Simpson quadrature,
entropy-proportional weights, and weighted composite scores with
rankings and descriptive statistics.
"""

from .density import CdfEstimate, estimate_cdf, select_bandwidth
from .entropy import (
    DEFAULT_QUADRATURE,
    QuadratureConfig,
    compute_weights,
    continuous_entropy,
    discrete_entropy,
)
from .errors import (
    AllSamplesEqualError,
    AllZeroEntropyError,
    DegenerateColumnError,
    DimensionMismatchError,
    DuplicateEntityIdError,
    EmptyInputError,
    EntroscoreError,
    HeaderMismatchError,
    InvalidBandwidthError,
    InvariantError,
    NonFiniteInputError,
    QuadratureOutOfRangeError,
    TooFewRowsError,
    ZeroColumnError,
)
from .ingest import FindingKind, IngestReport, ValidationFinding, parse_csv, validate
from .model import (
    Category,
    DescriptiveStats,
    Direction,
    EntropyVector,
    EvaluationReport,
    IndicatorSpec,
    NormalizedMatrix,
    RawDataset,
    Schema,
    WeightVector,
    default_schema,
    load_schema,
    save_schema,
)
from .normalize import normalize_inverse, normalize_matrix, normalize_positive
from .scoring import (
    EvaluationOptions,
    PipelineRun,
    composite_scores,
    describe,
    evaluate,
    rank,
    run_pipeline,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # model
    "Category",
    "Direction",
    "IndicatorSpec",
    "Schema",
    "RawDataset",
    "NormalizedMatrix",
    "EntropyVector",
    "WeightVector",
    "DescriptiveStats",
    "EvaluationReport",
    "default_schema",
    "load_schema",
    "save_schema",
    # ingest
    "parse_csv",
    "validate",
    "IngestReport",
    "ValidationFinding",
    "FindingKind",
    # normalize
    "normalize_positive",
    "normalize_inverse",
    "normalize_matrix",
    # density
    "select_bandwidth",
    "estimate_cdf",
    "CdfEstimate",
    # entropy
    "QuadratureConfig",
    "DEFAULT_QUADRATURE",
    "continuous_entropy",
    "discrete_entropy",
    "compute_weights",
    # scoring
    "EvaluationOptions",
    "PipelineRun",
    "composite_scores",
    "rank",
    "describe",
    "run_pipeline",
    "evaluate",
    # errors
    "EntroscoreError",
    "InvariantError",
    "HeaderMismatchError",
    "EmptyInputError",
    "TooFewRowsError",
    "DuplicateEntityIdError",
    "DegenerateColumnError",
    "NonFiniteInputError",
    "AllSamplesEqualError",
    "InvalidBandwidthError",
    "QuadratureOutOfRangeError",
    "ZeroColumnError",
    "AllZeroEntropyError",
    "DimensionMismatchError",
]
