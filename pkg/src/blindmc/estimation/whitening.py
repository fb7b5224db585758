"""Noise-adjusted PCA whitening onto the M_T-dimensional signal subspace."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING
from typing import Final

import numpy as np
import scipy.linalg

from blindmc.core.errors import DimensionMismatchError
from blindmc.core.errors import EstimationFailedError
from blindmc.core.errors import InvalidParameterError


if TYPE_CHECKING:
    from numpy.typing import NDArray


logger = logging.getLogger(__name__)

_SIGNAL_FLOOR: Final = 1e-9
_RANK_TOL: Final = 1e3 * np.finfo(np.float64).eps


def sample_covariance(samples: NDArray[np.complex128]) -> NDArray[np.complex128]:
    """Return the (uncentred) sample covariance X X^H / N of an M x N block."""
    return samples @ samples.conj().T / samples.shape[1]


def whiten(
    received: NDArray[np.complex128],
    m_t: int,
    noise_variance: float,
) -> tuple[NDArray[np.complex128], NDArray[np.complex128]]:
    """Project onto the M_T dominant eigen-directions and equalize their signal power.

    Whitening row i is (max(lambda_i - sigma_n^2, eps))^(-1/2) u_i^H, with eps = 1e-9 lambda_max,
    so the signal part of the output has identity covariance when the noise subtraction is exact.

    Returns:
        Tuple of (whitened M_T x N block, M_T x M_R whitening matrix).

    Raises:
        DimensionMismatchError: If received is not a 2-D M_R x N block with M_R >= m_t.
        InvalidParameterError: If noise_variance is negative or non-finite.
        EstimationFailedError: If the sample covariance has fewer than m_t usable eigenvalues.
    """
    if received.ndim != 2 or received.shape[0] < m_t or m_t < 1:
        raise DimensionMismatchError(f"(m_r >= {m_t}, n)", received.shape, "received")
    if not np.isfinite(noise_variance) or noise_variance < 0:
        raise InvalidParameterError("noise_variance", noise_variance, "must be finite and >= 0")
    if not np.all(np.isfinite(received)):
        raise EstimationFailedError("whitening", "received block contains non-finite samples")

    eigvals, eigvecs = scipy.linalg.eigh(sample_covariance(received))
    order = np.argsort(eigvals)[::-1][:m_t]
    dominant = eigvals[order]
    lam_max = float(eigvals.max())
    if lam_max <= 0 or dominant[-1] <= _RANK_TOL * lam_max:
        raise EstimationFailedError(
            "whitening",
            f"sample covariance rank below m_t={m_t} (eigenvalues {np.round(eigvals, 6).tolist()})",
        )

    floor = _SIGNAL_FLOOR * lam_max
    excess = dominant - noise_variance
    if np.any(excess < floor):
        logger.debug("Signal eigenvalues %s at or below noise %.3g, flooring", dominant, noise_variance)
    scales = np.maximum(excess, floor) ** -0.5
    whitening = scales[:, None] * eigvecs[:, order].conj().T
    return whitening @ received, whitening
