"""Power-law phase estimation and per-hypothesis channel phase correction."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING
from typing import Final

import numpy as np

from blindmc.core.errors import DimensionMismatchError
from blindmc.core.errors import InvalidParameterError
from blindmc.core.types import PhaseCorrection


if TYPE_CHECKING:
    from numpy.typing import NDArray

    from blindmc.core.types import BlindEstimate
    from blindmc.core.types import ConstellationSpec


logger = logging.getLogger(__name__)

_DEGENERATE_SUM: Final = 1e-12
_WRAP_TOL: Final = 1e-12


def estimate_phase(stream: NDArray[np.complex128], spec: ConstellationSpec) -> float:
    """Estimate a stream's rotation as (1/P) arg(conj(mu_A) sum_k s(k)^P).

    The result is reduced to [0, 2 pi / P); rotations by multiples of 2 pi / P are invisible
    because the constellation is symmetric under them.

    Returns:
        Phase in radians.

    Raises:
        InvalidParameterError: If the stream is empty or the reference moment vanishes.
    """
    samples = np.asarray(stream, dtype=np.complex128).ravel()
    if samples.size == 0:
        raise InvalidParameterError("stream", samples.size, "needs at least one sample")
    if abs(spec.reference_moment) == 0:
        raise InvalidParameterError("reference_moment", spec.reference_moment, "must be nonzero")

    order = spec.power_law_order
    total = np.sum(samples**order)
    if abs(total) < _DEGENERATE_SUM:
        logger.warning("Power-law sum vanished for %s; phase set to 0", spec.scheme.value)
        return 0.0

    period = 2.0 * np.pi / order
    theta = float(np.mod(np.angle(np.conj(spec.reference_moment) * total) / order, period))
    if theta >= period - _WRAP_TOL:
        theta = 0.0
    return theta


def estimate_phases(estimate: BlindEstimate, spec: ConstellationSpec) -> PhaseCorrection:
    """Estimate the phase of every separated stream under one hypothesis.

    Returns:
        PhaseCorrection with one phase per stream.
    """
    phases = tuple(estimate_phase(stream, spec) for stream in estimate.separated_streams)
    logger.debug("Phases under %s: %s", spec.scheme.value, phases)
    return PhaseCorrection(phases=phases, hypothesis=spec.scheme)


def phase_correct(
    channel_estimate: NDArray[np.complex128],
    correction: PhaseCorrection,
) -> NDArray[np.complex128]:
    """Rotate column m of the channel estimate by e^{+j theta_m}.

    Returns:
        Phase-corrected channel estimate H_hat diag(e^{j theta}).

    Raises:
        DimensionMismatchError: If the phase count differs from the column count.
    """
    channel = np.asarray(channel_estimate, dtype=np.complex128)
    if channel.ndim != 2 or channel.shape[1] != len(correction.phases):
        raise DimensionMismatchError(len(correction.phases), channel.shape, "channel columns")
    return channel * np.exp(1j * np.asarray(correction.phases))[None, :]
