"""Rules combining per-stream log-likelihoods into one hypothesis score.

The weighted sum uses the Cauchy-Schwarz optimal weights beta_i = f_i / ||f||, so its value is
the Euclidean norm of the likelihood vector. Everything stays in the log domain.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
from scipy.special import logsumexp

from blindmc.core.errors import InvalidParameterError
from blindmc.core.types import Algorithm


if TYPE_CHECKING:
    from collections.abc import Sequence

    from numpy.typing import NDArray

    from blindmc.core.protocols import FusionRule


def _as_loglik(stream_loglik: Sequence[float]) -> NDArray[np.float64]:
    values = np.asarray(stream_loglik, dtype=np.float64).ravel()
    if values.size == 0:
        raise InvalidParameterError("stream_loglik", list(stream_loglik), "needs at least one stream")
    if not np.all(np.isfinite(values)):
        raise InvalidParameterError("stream_loglik", values.tolist(), "entries must be finite")
    return values


def fuse_weighted_sum(stream_loglik: Sequence[float]) -> tuple[float, tuple[float, ...]]:
    """Optimal weighted sum: combined = 0.5 LSE(2 log f), beta_i = exp(log f_i - combined).

    Returns:
        Tuple of (combined log-likelihood, unit-norm weights).
    """
    values = _as_loglik(stream_loglik)
    combined = 0.5 * float(logsumexp(2.0 * values))
    weights = np.exp(values - combined)
    return combined, tuple(float(w) for w in weights)


def fuse_product(stream_loglik: Sequence[float]) -> float:
    """Product rule: sum of the stream log-likelihoods."""
    return float(np.sum(_as_loglik(stream_loglik)))


def fuse_equal_weight(stream_loglik: Sequence[float]) -> float:
    """Equal-weight sum: log((1/M_T) sum_i f_i)."""
    values = _as_loglik(stream_loglik)
    return float(logsumexp(values) - np.log(values.size))


def _product_rule(stream_loglik: Sequence[float]) -> tuple[float, tuple[float, ...]]:
    return fuse_product(stream_loglik), (1.0,) * len(stream_loglik)


def _equal_weight_rule(stream_loglik: Sequence[float]) -> tuple[float, tuple[float, ...]]:
    count = len(stream_loglik)
    return fuse_equal_weight(stream_loglik), (1.0 / count,) * count


def fusion_rule(algorithm: Algorithm) -> FusionRule:
    """Return the fusion rule used by a per-stream algorithm.

    Raises:
        InvalidParameterError: If the algorithm does not fuse per-stream likelihoods.
    """
    match algorithm:
        case Algorithm.PROPOSED:
            return fuse_weighted_sum
        case Algorithm.PRODUCT:
            return _product_rule
        case Algorithm.EQUAL_WEIGHT:
            return _equal_weight_rule
        case _:
            raise InvalidParameterError("algorithm", algorithm.value, "has no per-stream fusion rule")
