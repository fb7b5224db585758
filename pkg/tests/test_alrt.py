"""Tests for the perfect-CSI ALRT benchmark."""

import pytest

from blindmc.classify import AlrtUpperBound
from blindmc.classify import classify_alrt_ub
from blindmc.core.errors import InvalidParameterError
from blindmc.core.errors import MissingChannelError
from blindmc.core.types import Algorithm
from blindmc.core.types import MimoFrame
from tests.conftest import ALL_SCHEMES
from tests.conftest import make_frame


@pytest.mark.parametrize("scheme", ALL_SCHEMES)
def test_true_scheme_wins_at_high_snr(scheme, candidates):
    for seed in range(5):
        result = classify_alrt_ub(make_frame(scheme, snr_db=20.0, seed=seed), candidates)
        assert result.decided is scheme
        assert result.algorithm is Algorithm.ALRT_UB


def test_ranking_is_descending(candidates):
    result = classify_alrt_ub(make_frame("16qam", snr_db=5.0, n=128, seed=3), candidates)
    values = [s.combined_log for s in result.ranked]
    assert values == sorted(values, reverse=True)


def test_capture_without_channel_rejected(candidates):
    frame = make_frame("qpsk", n=64)
    capture = MimoFrame(received=frame.received, m_t=frame.m_t, noise_variance=frame.noise_variance)
    with pytest.raises(MissingChannelError):
        AlrtUpperBound().classify(capture, candidates)


def test_empty_candidates_rejected():
    with pytest.raises(InvalidParameterError):
        classify_alrt_ub(make_frame("qpsk", n=64), [])
