"""Continuous and discrete entropy of indicator distributions, and the
entropy-proportional weight vector.

The continuous form integrates the CDF itself, H = -e * I[phi ln phi]
on [0, 1], by composite Simpson quadrature on a uniform grid.  Because
0 <= -phi ln phi <= 1/e pointwise and the interval has length one, the
e-scaled integral always lands in [0, 1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    AllZeroEntropyError,
    InvariantError,
    QuadratureOutOfRangeError,
    ZeroColumnError,
)
from .model import EntropyVector, WeightVector

__all__ = [
    "QuadratureConfig",
    "DEFAULT_QUADRATURE",
    "WEIGHT_RULES",
    "continuous_entropy",
    "discrete_entropy",
    "compute_weights",
]

# Tolerated quadrature overshoot of the [0, 1] entropy bound.
_NOISE_BUDGET = 1e-9

WEIGHT_RULES = ("paper", "classic")


@dataclass(frozen=True)
class QuadratureConfig:
    """Uniform-grid composite Simpson settings.

    points must be odd (Simpson pairs intervals); epsilon is the cutoff
    below which the integrand phi*ln(phi) is taken as its limit, 0.
    """

    points: int = 10001
    epsilon: float = 1e-12

    def __post_init__(self) -> None:
        if self.points < 3 or self.points % 2 == 0:
            raise InvariantError("quadrature points must be odd and >= 3")
        if not (0.0 < self.epsilon <= 1e-6):
            raise InvariantError("epsilon must lie in (0, 1e-6]")


DEFAULT_QUADRATURE = QuadratureConfig()


def continuous_entropy(
    cdf: Callable[[np.ndarray], np.ndarray],
    config: QuadratureConfig = DEFAULT_QUADRATURE,
) -> float:
    """Entropy of a CDF on [0, 1]: H = -e * integral of phi ln phi.

    cdf may be any callable mapping a grid in [0, 1] to values in [0, 1],
    typically a CdfEstimate.  The result is clamped into [0, 1] when
    quadrature noise overshoots by at most 1e-9; a larger excursion means
    the supplied function is not a CDF and raises QuadratureOutOfRangeError.
    """
    grid = np.linspace(0.0, 1.0, config.points)
    phi = np.asarray(cdf(grid), dtype=np.float64)
    if phi.shape != grid.shape:
        raise InvariantError("cdf must return one value per grid point")
    if not np.all(np.isfinite(phi)):
        raise QuadratureOutOfRangeError(
            "cdf produced NaN or infinite values on the quadrature grid"
        )

    integrand = np.zeros_like(phi)
    live = phi > config.epsilon
    integrand[live] = phi[live] * np.log(phi[live])

    step = 1.0 / (config.points - 1)
    simpson = (step / 3.0) * (
        integrand[0]
        + integrand[-1]
        + 4.0 * np.sum(integrand[1:-1:2])
        + 2.0 * np.sum(integrand[2:-2:2])
    )
    value = float(-math.e * simpson)
    if not (-_NOISE_BUDGET <= value <= 1.0 + _NOISE_BUDGET):
        raise QuadratureOutOfRangeError(
            f"entropy quadrature produced {value!r}; the supplied function "
            "is not a CDF on [0, 1]"
        )
    return min(max(value, 0.0), 1.0) + 0.0  # normalize -0.0


def discrete_entropy(column) -> float:
    """Normalized Shannon entropy of a non-negative column.

    Entries are rescaled into a probability vector p_i = s_i / sum(s),
    then H = -(1/ln n) * sum p_i ln p_i with 0 ln 0 taken as 0, which
    lands in [0, 1] for any column of length n >= 2.
    """
    col = np.asarray(column, dtype=np.float64)
    if col.ndim != 1 or col.size < 2:
        raise InvariantError("discrete entropy needs a 1-D column of length >= 2")
    if not np.all(np.isfinite(col)):
        raise InvariantError("discrete entropy needs finite values")
    if np.any(col < 0.0):
        raise InvariantError("discrete entropy needs non-negative values")
    total = float(np.sum(col))
    if total == 0.0:
        raise ZeroColumnError("all entries are zero")
    p = col / total
    live = p > 0.0
    value = -float(np.sum(p[live] * np.log(p[live]))) / math.log(col.size)
    return min(max(value, 0.0), 1.0) + 0.0


def compute_weights(entropies, rule: str = "paper") -> WeightVector:
    """Turn per-indicator entropies into a weight vector.

    The default rule follows the continuous-entropy method: weights are
    directly proportional to entropy, w_j = H_j / sum(H).  The "classic"
    rule uses the complementary convention w_j proportional to 1 - H_j
    for comparison with the traditional discrete entropy weight method.
    """
    if isinstance(entropies, EntropyVector):
        values = entropies.entropies
    else:
        values = np.asarray(entropies, dtype=np.float64)
    if values.ndim != 1 or values.size < 1:
        raise InvariantError("entropies must be a non-empty 1-D vector")
    if not np.all(np.isfinite(values)):
        raise InvariantError("entropies must be finite")
    if np.any(values < 0.0):
        raise InvariantError("entropies must be non-negative")
    if rule not in WEIGHT_RULES:
        raise InvariantError(f"unknown weight rule {rule!r}; expected one of {WEIGHT_RULES}")

    mass = values if rule == "paper" else 1.0 - values
    if rule == "classic" and np.any(mass < 0.0):
        raise InvariantError("classic rule needs entropies within [0, 1]")
    total = float(np.sum(mass))
    if total <= 0.0:
        raise AllZeroEntropyError(
            "entropy mass sums to zero; no indicator carries information under this rule"
        )
    return WeightVector(mass / total)
