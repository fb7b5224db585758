"""Log-domain likelihoods: per-stream after MMSE, and joint over all symbol vectors.

Every sum over constellation points goes through a max-subtracted log-sum-exp; the products
over N symbols underflow otherwise.
"""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING
from typing import Final

import numpy as np
from scipy.special import logsumexp

from blindmc.core.errors import DimensionMismatchError
from blindmc.core.errors import InvalidParameterError
from blindmc.core.errors import MissingChannelError
from blindmc.core.types import Algorithm


if TYPE_CHECKING:
    from numpy.typing import NDArray

    from blindmc.core.types import ConstellationSpec
    from blindmc.core.types import MimoFrame


_MIN_VARIANCE: Final = 1e-12
# Upper bound on complex entries held per time block of the joint enumeration.
_JOINT_BLOCK_ENTRIES: Final = 1 << 22


def stream_log_likelihood(
    estimates: NDArray[np.complex128],
    c: float,
    sigma_w2: float,
    spec: ConstellationSpec,
) -> float:
    """Log-likelihood of one equalized stream under a uniform prior over the constellation.

    log f = -N log(|A| pi sigma_w^2) + sum_k LSE_s(-|s_hat(k) - c s|^2 / sigma_w^2)

    Raises:
        InvalidParameterError: If the sequence is empty or sigma_w2 < 1e-12.
    """
    samples = np.asarray(estimates, dtype=np.complex128).ravel()
    if samples.size == 0:
        raise InvalidParameterError("estimates", samples.size, "sequence must be non-empty")
    if not np.isfinite(sigma_w2) or sigma_w2 < _MIN_VARIANCE:
        raise InvalidParameterError("sigma_w2", sigma_w2, f"must be finite and >= {_MIN_VARIANCE}")

    distances = np.abs(samples[:, None] - c * spec.points[None, :]) ** 2
    per_symbol = logsumexp(-distances / sigma_w2, axis=1)
    normalizer = samples.size * np.log(spec.cardinality * np.pi * sigma_w2)
    return float(np.sum(per_symbol) - normalizer)


def joint_symbol_vectors(spec: ConstellationSpec, m_t: int) -> NDArray[np.complex128]:
    """Enumerate every transmit vector in A^{M_T}.

    Returns:
        M_T x |A|^{M_T} matrix, one candidate vector per column.
    """
    return np.array(list(itertools.product(spec.points, repeat=m_t)), dtype=np.complex128).T


def joint_log_likelihood(
    received: NDArray[np.complex128],
    channel: NDArray[np.complex128],
    noise_variance: float,
    spec: ConstellationSpec,
) -> float:
    """Average log-likelihood of the whole received block for a given channel.

    log f = sum_k LSE_s(-||r(k) - H s||^2 / sigma_n^2) - N M_T log|A| - N M_R log(pi sigma_n^2),
    enumerating all |A|^{M_T} joint symbol vectors per time instant.

    Raises:
        DimensionMismatchError: If channel rows differ from received rows.
        InvalidParameterError: If noise_variance <= 0 or the channel is not finite.
    """
    r = np.asarray(received, dtype=np.complex128)
    h = np.asarray(channel, dtype=np.complex128)
    if r.ndim != 2 or h.ndim != 2 or h.shape[0] != r.shape[0]:
        raise DimensionMismatchError((r.shape[0] if r.ndim == 2 else -1, "m_t"), h.shape, "channel")
    if not np.all(np.isfinite(h)):
        raise InvalidParameterError("channel", "non-finite", "channel entries must be finite")
    if not np.isfinite(noise_variance) or noise_variance <= 0:
        raise InvalidParameterError("noise_variance", noise_variance, "must be finite and > 0")

    m_r, n = r.shape
    m_t = h.shape[1]
    noiseless = h @ joint_symbol_vectors(spec, m_t)
    block = max(1, _JOINT_BLOCK_ENTRIES // (noiseless.shape[1] * m_r))

    total = 0.0
    for start in range(0, n, block):
        chunk = r[:, start : start + block]
        distances = np.sum(np.abs(chunk.T[:, None, :] - noiseless.T[None, :, :]) ** 2, axis=2)
        total += float(np.sum(logsumexp(-distances / noise_variance, axis=1)))
    return total - n * m_t * np.log(spec.cardinality) - n * m_r * np.log(np.pi * noise_variance)


def alrt_ub_log_likelihood(frame: MimoFrame, spec: ConstellationSpec) -> float:
    """Joint log-likelihood of a frame under its true channel and noise variance.

    Raises:
        MissingChannelError: If the frame carries no true channel.
    """
    if frame.channel is None:
        raise MissingChannelError(Algorithm.ALRT_UB.value)
    return joint_log_likelihood(frame.received, frame.channel.entries, frame.noise_variance, spec)


def inner_terms(algorithm: Algorithm, spec: ConstellationSpec, m_t: int) -> int:
    """Per-time-instant hypothesis-evaluation work: |A| M_T per-stream, |A|^{M_T} joint."""
    if algorithm.is_joint:
        return spec.cardinality**m_t
    return spec.cardinality * m_t
