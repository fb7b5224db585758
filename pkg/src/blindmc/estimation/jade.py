"""Complex JADE: joint approximate diagonalization of fourth-order cumulant matrices.

Pipeline: noise-adjusted whitening -> the full set of M_T^2 cumulant matrices of the whitened
data -> complex Givens (Jacobi) sweeps until every rotation is below threshold -> unmixing.
Sources come back up to a permutation and a unit-modulus factor per stream.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING
from typing import Final

import numpy as np

from blindmc.core.errors import EstimationFailedError
from blindmc.core.errors import InvalidParameterError
from blindmc.core.types import BlindEstimate
from blindmc.estimation.whitening import whiten


if TYPE_CHECKING:
    from numpy.typing import NDArray


logger = logging.getLogger(__name__)

SWEEP_CAP: Final = 100
_THRESHOLD_SCALE: Final = 1e-8
_MIN_SAMPLES_PER_PAIR: Final = 8
_MIN_STREAM_POWER: Final = 1e-300

# Maps [a_pp - a_qq, a_pq, a_qp] onto the real 3-vector whose dominant direction gives (c, s).
_GIVENS_BASIS: Final = np.array(
    [[1.0, 0.0, 0.0], [0.0, 1.0, 1.0], [0.0, -1.0j, 1.0j]],
    dtype=np.complex128,
)


def cumulant_matrices(whitened: NDArray[np.complex128]) -> NDArray[np.complex128]:
    """Fourth-order cumulant slices Q_pq[i, j] = cum(x_i, x_j*, x_p*, x_q).

    The pseudo-covariance term is kept so non-circular sources (BPSK) are handled exactly.

    Returns:
        Array of shape (m^2, m, m); slice p*m + q is Q_pq.
    """
    m, n = whitened.shape
    conj = whitened.conj()
    cov = whitened @ conj.T / n
    pseudo = whitened @ whitened.T / n
    fourth = np.einsum("pt,qt,it,jt->pqij", conj, whitened, whitened, conj, optimize=True) / n
    cumulants = (
        fourth
        - cov[None, None, :, :] * cov.T[:, :, None, None]
        - np.einsum("ip,qj->pqij", cov, cov)
        - np.einsum("iq,jp->pqij", pseudo, pseudo.conj())
    )
    return cumulants.reshape(m * m, m, m)


def joint_diagonalize(
    matrices: NDArray[np.complex128],
    threshold: float,
    max_sweeps: int = SWEEP_CAP,
) -> tuple[NDArray[np.complex128], int]:
    """Find a unitary V making every V^H Q_k V as diagonal as possible.

    Returns:
        Tuple of (unitary V, number of sweeps used).

    Raises:
        EstimationFailedError: If rotations are still above threshold after max_sweeps.
    """
    stack = np.array(matrices, dtype=np.complex128, copy=True)
    m = stack.shape[-1]
    rotation = np.eye(m, dtype=np.complex128)
    if m == 1:
        return rotation, 0

    for sweep in range(1, max_sweeps + 1):
        rotated = 0
        for p in range(m - 1):
            for q in range(p + 1, m):
                givens = _givens_rotation(stack, p, q)
                if givens is None or abs(givens[1, 0]) <= threshold:
                    continue
                rotated += 1
                pair = [p, q]
                rotation[:, pair] = rotation[:, pair] @ givens
                stack[:, pair, :] = np.einsum("ab,kbj->kaj", givens.conj().T, stack[:, pair, :])
                stack[:, :, pair] = stack[:, :, pair] @ givens
        logger.debug("Jacobi sweep %d: %d rotations", sweep, rotated)
        if rotated == 0:
            return rotation, sweep

    raise EstimationFailedError(
        "joint diagonalization",
        f"Jacobi rotations still above {threshold:.3g} after {max_sweeps} sweeps",
    )


def _givens_rotation(stack: NDArray[np.complex128], p: int, q: int) -> NDArray[np.complex128] | None:
    """Optimal complex Givens rotation for the (p, q) plane across all matrices.

    Returns:
        2x2 unitary [[c, -conj(s)], [s, c]], or None if the statistics are not finite.
    """
    g = np.vstack([stack[:, p, p] - stack[:, q, q], stack[:, p, q], stack[:, q, p]])
    gram = np.real(_GIVENS_BASIS @ (g @ g.conj().T) @ _GIVENS_BASIS.conj().T)
    if not np.all(np.isfinite(gram)):
        return None
    _, vecs = np.linalg.eigh(gram)
    angles = vecs[:, -1]
    if angles[0] < 0:
        angles = -angles
    c = np.sqrt(0.5 + angles[0] / 2.0)
    s = 0.5 * (angles[1] - 1j * angles[2]) / c
    return np.array([[c, -np.conj(s)], [s, c]], dtype=np.complex128)


def jade_separate(
    received: NDArray[np.complex128],
    m_t: int,
    noise_variance: float,
) -> BlindEstimate:
    """Blindly separate M_T streams and estimate the channel.

    Separated streams are normalized to unit average power. The channel estimate is the
    pseudo-inverse of the unmixing map; its column scale comes from the noise-adjusted whitening,
    so H_hat s_tilde approximates the signal part of the received block.

    Returns:
        BlindEstimate with channel_estimate (M_R x M_T), separated_streams (M_T x N)
        and the whitening matrix.

    Raises:
        InvalidParameterError: If N < 8 M_T^2.
        EstimationFailedError: On rank deficiency, non-convergence or a zero-power stream.
    """
    n = received.shape[-1]
    if n < _MIN_SAMPLES_PER_PAIR * m_t * m_t:
        raise InvalidParameterError("n", n, f"JADE needs at least {_MIN_SAMPLES_PER_PAIR * m_t * m_t} samples")

    whitened, whitening = whiten(received, m_t, noise_variance)
    threshold = _THRESHOLD_SCALE / np.sqrt(n)
    rotation, sweeps = joint_diagonalize(cumulant_matrices(whitened), threshold)

    unmixing = rotation.conj().T @ whitening
    streams = unmixing @ received
    power = np.mean(np.abs(streams) ** 2, axis=1)
    if not np.all(power > _MIN_STREAM_POWER):
        raise EstimationFailedError("separation", f"separated stream power {power.tolist()}")

    channel_estimate = np.linalg.pinv(unmixing)
    norms = np.linalg.norm(channel_estimate, axis=0)
    if not np.all(np.isfinite(channel_estimate)) or not np.all(norms > 0):
        raise EstimationFailedError("separation", "channel estimate has zero or non-finite columns")

    logger.debug("JADE converged in %d sweeps, stream powers %s", sweeps, power)
    return BlindEstimate(
        channel_estimate=channel_estimate,
        separated_streams=streams / np.sqrt(power)[:, None],
        whitening_matrix=whitening,
        sweeps=sweeps,
    )
