"""Direction-aware min-max non-dimensionalization.

Each indicator column is rescaled into [0, 1] using the spread between
its per-column minimum and maximum, so every column attains both
endpoints exactly.  Positive indicators map their maximum to 1; inverse
indicators map their minimum to 1.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DegenerateColumnError,
    EntroscoreError,
    InvariantError,
    NonFiniteInputError,
)
from .model import Direction, NormalizedMatrix, RawDataset

__all__ = ["normalize_positive", "normalize_inverse", "normalize_matrix"]


def _checked_column(column) -> np.ndarray:
    col = np.asarray(column, dtype=np.float64)
    if col.ndim != 1:
        raise InvariantError("column must be one-dimensional")
    if col.size < 2:
        raise DegenerateColumnError("column needs at least two entries")
    if not np.all(np.isfinite(col)):
        raise NonFiniteInputError("column contains NaN or infinite values")
    if col.max() == col.min():
        raise DegenerateColumnError("column has no spread (max equals min)")
    return col


def normalize_positive(column) -> np.ndarray:
    """Rescale a higher-is-better column: (x - min) / (max - min)."""
    col = _checked_column(column)
    lo = col.min()
    return (col - lo) / (col.max() - lo)


def normalize_inverse(column) -> np.ndarray:
    """Rescale a lower-is-better column: (max - x) / (max - min)."""
    col = _checked_column(column)
    hi = col.max()
    return (hi - col) / (hi - col.min())


def normalize_matrix(dataset: RawDataset) -> NormalizedMatrix:
    """Normalize every column of a dataset per its schema direction.

    Column errors are re-raised with the offending indicator named.
    """
    n, m = dataset.values.shape
    out = np.empty((n, m), dtype=np.float64)
    for j, spec in enumerate(dataset.schema):
        fn = normalize_positive if spec.direction is Direction.POSITIVE else normalize_inverse
        try:
            out[:, j] = fn(dataset.values[:, j])
        except EntroscoreError as exc:
            raise type(exc)(f"indicator '{spec.name}': {exc}") from None
    return NormalizedMatrix(out, dataset.schema)
