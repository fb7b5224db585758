"""Linear MMSE splitting of the MIMO channel into per-antenna sub-channels.

Each output is modelled as c_i s_i plus complex Gaussian distortion of variance c_i (1 - c_i).
"""

from __future__ import annotations

from typing import TYPE_CHECKING
from typing import Final

import numpy as np
import scipy.linalg

from blindmc.core.errors import DimensionMismatchError
from blindmc.core.errors import EstimationFailedError
from blindmc.core.errors import InvalidParameterError
from blindmc.core.types import EqualizedStream


if TYPE_CHECKING:
    from numpy.typing import NDArray

    from blindmc.core.types import SchemeId


_GAIN_IMAG_TOL: Final = 1e-6
_GAIN_RANGE_TOL: Final = 1e-9
_VARIANCE_FLOOR: Final = 1e-12
_VARIANCE_CEIL: Final = 0.25 + 1e-12


def mmse_filter(channel_hyp: NDArray[np.complex128], noise_variance: float) -> NDArray[np.complex128]:
    """Build G = H (H^H H + sigma_n^2 I)^-1 with a Cholesky solve.

    Returns:
        M_R x M_T filter matrix; column i filters stream i.

    Raises:
        DimensionMismatchError: If the channel is not 2-D.
        InvalidParameterError: If the channel has non-finite entries or noise_variance <= 0.
    """
    channel = np.asarray(channel_hyp, dtype=np.complex128)
    if channel.ndim != 2:
        raise DimensionMismatchError("2-D (m_r, m_t)", channel.shape, "channel")
    if not np.all(np.isfinite(channel)):
        raise InvalidParameterError("channel", "non-finite", "channel entries must be finite")
    if not np.isfinite(noise_variance) or noise_variance <= 0:
        raise InvalidParameterError("noise_variance", noise_variance, "must be finite and > 0")

    gram = channel.conj().T @ channel + noise_variance * np.eye(channel.shape[1])
    try:
        factor = scipy.linalg.cho_factor(gram)
    except np.linalg.LinAlgError as exc:
        raise EstimationFailedError("mmse", f"regularized Gram matrix not positive definite: {exc}") from exc
    return scipy.linalg.cho_solve(factor, channel.conj().T).conj().T


def equalize(filter_matrix: NDArray[np.complex128], received: NDArray[np.complex128]) -> NDArray[np.complex128]:
    """Apply G^H to every received vector.

    Returns:
        M_T x N symbol estimates.

    Raises:
        DimensionMismatchError: If G and the received block disagree on M_R.
    """
    if filter_matrix.ndim != 2 or received.ndim != 2 or filter_matrix.shape[0] != received.shape[0]:
        raise DimensionMismatchError(filter_matrix.shape[:1], received.shape, "received rows")
    return filter_matrix.conj().T @ received


def effective_gain(
    filter_matrix: NDArray[np.complex128],
    channel_hyp: NDArray[np.complex128],
    stream_index: int,
) -> float:
    """Return c_i = g_i^H h_i, which is real for an MMSE filter.

    Raises:
        DimensionMismatchError: If G and H have different shapes.
        InvalidParameterError: If stream_index is outside 0..M_T-1.
        EstimationFailedError: If |Im(g_i^H h_i)| >= 1e-6.
    """
    if filter_matrix.shape != channel_hyp.shape:
        raise DimensionMismatchError(channel_hyp.shape, filter_matrix.shape, "filter")
    m_t = channel_hyp.shape[1]
    if not 0 <= stream_index < m_t:
        raise InvalidParameterError("stream_index", stream_index, f"must be in 0..{m_t - 1}")
    gain = complex(np.vdot(filter_matrix[:, stream_index], channel_hyp[:, stream_index]))
    if abs(gain.imag) >= _GAIN_IMAG_TOL:
        raise EstimationFailedError("mmse", f"effective gain {gain} of stream {stream_index} is not real")
    return gain.real


def distortion_variance(c: float) -> float:
    """Residual interference-plus-noise variance c (1 - c), clamped to [1e-12, 0.25 + 1e-12].

    Raises:
        InvalidParameterError: If c lies outside (0, 1) by more than 1e-9.
    """
    if not -_GAIN_RANGE_TOL < c < 1.0 + _GAIN_RANGE_TOL:
        raise InvalidParameterError("c", c, "effective gain must lie in (0, 1)")
    return float(np.clip(c * (1.0 - c), _VARIANCE_FLOOR, _VARIANCE_CEIL))


def equalize_streams(
    channel_hyp: NDArray[np.complex128],
    received: NDArray[np.complex128],
    noise_variance: float,
    hypothesis: SchemeId,
) -> list[EqualizedStream]:
    """Filter a received block under one hypothesis and attach each stream's gain and variance.

    Returns:
        One EqualizedStream per transmit antenna, in column order.
    """
    filter_matrix = mmse_filter(channel_hyp, noise_variance)
    estimates = equalize(filter_matrix, received)
    streams = []
    for index in range(filter_matrix.shape[1]):
        gain = effective_gain(filter_matrix, channel_hyp, index)
        streams.append(
            EqualizedStream(
                estimates=estimates[index],
                effective_gain=gain,
                distortion_variance=distortion_variance(gain),
                stream_index=index,
                hypothesis=hypothesis,
            )
        )
    return streams
