"""Rayleigh flat-fading MIMO frame synthesis: r(k) = H s(k) + n(k).

SNR follows the aggregate convention SNR = 10 log10(M_T / sigma_n^2): every transmit antenna
sends unit average power.
"""

from __future__ import annotations

from typing import TYPE_CHECKING
from typing import Final

import numpy as np

from blindmc.core.errors import InvalidParameterError
from blindmc.core.types import ChannelMatrix
from blindmc.core.types import MimoFrame
from blindmc.modem.constellation import draw_symbols


if TYPE_CHECKING:
    from numpy.typing import NDArray

    from blindmc.core.types import ConstellationSpec


# "Noise-free" frames still carry this much noise; the MMSE solve and likelihoods need sigma_n^2 > 0.
NOISE_FLOOR: Final = 1e-12


def noise_variance_from_snr(snr_db: float, m_t: int) -> float:
    """Invert SNR = 10 log10(M_T / sigma_n^2).

    Returns:
        sigma_n^2 = M_T * 10^(-snr_db / 10).

    Raises:
        InvalidParameterError: If m_t < 1.
    """
    if m_t < 1:
        raise InvalidParameterError("m_t", m_t, "must be >= 1")
    return m_t * 10.0 ** (-snr_db / 10.0)


def derive_seed(master_seed: int, trial_index: int, snr_index: int, scheme_index: int) -> int:
    """Mix the master seed with a cell's indices into a stable 64-bit sub-seed.

    The result depends only on its arguments, never on execution order.

    Returns:
        Unsigned 64-bit integer seed.
    """
    sequence = np.random.SeedSequence(
        entropy=master_seed,
        spawn_key=(trial_index, snr_index, scheme_index),
    )
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def complex_gaussian(
    shape: tuple[int, ...],
    variance: float,
    rng: np.random.Generator,
) -> NDArray[np.complex128]:
    """Draw circularly symmetric CN(0, variance) samples.

    Returns:
        Complex array whose real and imaginary parts each have variance ``variance / 2``.
    """
    scale = np.sqrt(variance / 2.0)
    return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def draw_channel(m_t: int, m_r: int, rng: np.random.Generator) -> ChannelMatrix:
    """Draw an M_R x M_T Rayleigh channel with i.i.d. CN(0, 1) entries.

    Returns:
        ChannelMatrix, deterministic for a given generator state.

    Raises:
        InvalidParameterError: If m_r < m_t or m_t < 1.
    """
    if m_t < 1 or m_r < m_t:
        raise InvalidParameterError("(m_t, m_r)", (m_t, m_r), "requires m_r >= m_t >= 1")
    return ChannelMatrix(entries=complex_gaussian((m_r, m_t), 1.0, rng))


def synthesize_frame(
    spec: ConstellationSpec,
    channel: ChannelMatrix,
    noise_variance: float,
    n: int,
    rng: np.random.Generator,
) -> MimoFrame:
    """Synthesize one frame: i.i.d. symbols per antenna through H plus CN(0, sigma_n^2) noise.

    Symbols for antenna 0..M_T-1 are drawn first, then the M_R x N noise block.

    Returns:
        MimoFrame with ground truth (transmitted symbols, channel, scheme) attached.

    Raises:
        InvalidParameterError: If noise_variance <= 0 or n < 1.
    """
    if not noise_variance > 0:
        raise InvalidParameterError("noise_variance", noise_variance, f"must be > 0 (use {NOISE_FLOOR})")
    if n < 1:
        raise InvalidParameterError("n", n, "observation length must be >= 1")
    transmitted = np.vstack([draw_symbols(spec, n, rng).values for _ in range(channel.m_t)])
    noise = complex_gaussian((channel.m_r, n), noise_variance, rng)
    received = channel.entries @ transmitted + noise
    return MimoFrame(
        received=received,
        m_t=channel.m_t,
        noise_variance=noise_variance,
        transmitted=transmitted,
        channel=channel,
        scheme=spec.scheme,
    )


def noise_realization(frame: MimoFrame) -> NDArray[np.complex128]:
    """Recover n(k) = r(k) - H s(k) from a synthesized frame.

    Returns:
        M_R x N noise block.

    Raises:
        InvalidParameterError: If the frame carries no ground truth.
    """
    if frame.channel is None or frame.transmitted is None:
        raise InvalidParameterError("frame", "ingested capture", "no channel or transmitted symbols")
    return frame.received - frame.channel.entries @ frame.transmitted
