"""Shared test fixtures."""

from __future__ import annotations

import dataclasses
from itertools import permutations

import numpy as np
import pytest

from blindmc.channel.simulate import draw_channel
from blindmc.channel.simulate import noise_variance_from_snr
from blindmc.channel.simulate import synthesize_frame
from blindmc.config import SweepConfig
from blindmc.core.types import Algorithm
from blindmc.core.types import ConstellationSpec
from blindmc.core.types import MimoFrame
from blindmc.core.types import SchemeId
from blindmc.modem.constellation import DEFAULT_CANDIDATES
from blindmc.modem.constellation import build_candidates
from blindmc.modem.constellation import build_constellation


ALL_SCHEMES = DEFAULT_CANDIDATES


def make_frame(
    scheme: SchemeId | str,
    snr_db: float = 20.0,
    n: int = 512,
    m_t: int = 2,
    m_r: int = 4,
    seed: int = 0,
) -> MimoFrame:
    """Synthesize one Rayleigh frame with ground truth from a fixed seed."""
    rng = np.random.default_rng(seed)
    spec = build_constellation(scheme)
    channel = draw_channel(m_t, m_r, rng)
    return synthesize_frame(spec, channel, noise_variance_from_snr(snr_db, m_t), n, rng)


def tiny_config(**overrides: object) -> SweepConfig:
    """A fully explicit SweepConfig (no environment lookups) small enough for unit tests."""
    config = SweepConfig(
        snr_db_grid=(10.0,),
        trials_per_point=2,
        n_symbols=256,
        m_t=2,
        m_r=4,
        candidates=DEFAULT_CANDIDATES,
        algorithms=(Algorithm.PROPOSED,),
        master_seed=7,
        threads=1,
    )
    return dataclasses.replace(config, **overrides)


def best_stream_correlation(estimated: np.ndarray, transmitted: np.ndarray) -> float:
    """Worst-stream |correlation| after the best permutation of separated streams."""
    m_t = transmitted.shape[0]
    corr = np.abs(estimated @ transmitted.conj().T)
    corr /= np.outer(np.linalg.norm(estimated, axis=1), np.linalg.norm(transmitted, axis=1))
    if m_t == 1:
        return float(corr[0, 0])
    return max(float(min(corr[i, perm[i]] for i in range(m_t))) for perm in permutations(range(m_t)))


@pytest.fixture
def candidates() -> list[ConstellationSpec]:
    return build_candidates()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)
