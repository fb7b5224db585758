"""Tests for per-stream and joint log-likelihoods."""

import itertools
import time

import numpy as np
import pytest

from blindmc.classify import alrt_ub_log_likelihood
from blindmc.classify import inner_terms
from blindmc.classify import joint_log_likelihood
from blindmc.classify import joint_symbol_vectors
from blindmc.classify import stream_log_likelihood
from blindmc.core.errors import DimensionMismatchError
from blindmc.core.errors import InvalidParameterError
from blindmc.core.errors import MissingChannelError
from blindmc.core.types import Algorithm
from blindmc.core.types import ChannelMatrix
from blindmc.core.types import MimoFrame
from blindmc.equalize import equalize_streams
from blindmc.modem.constellation import build_constellation
from tests.conftest import ALL_SCHEMES
from tests.conftest import make_frame


def test_single_bpsk_symbol():
    spec = build_constellation("bpsk")
    value = stream_log_likelihood(np.array([0j]), 1.0, 1.0, spec)
    # (1 / (2 pi)) * 2 e^-1
    assert value == pytest.approx(-2.14473, abs=1e-5)


def test_bpsk_sign_symmetry(rng):
    spec = build_constellation("bpsk")
    estimates = rng.standard_normal(20) + 1j * rng.standard_normal(20)
    a = stream_log_likelihood(estimates, 0.7, 0.2, spec)
    b = stream_log_likelihood(-estimates, 0.7, 0.2, spec)
    assert a == pytest.approx(b, abs=1e-9)


def test_matches_direct_product(rng):
    for _ in range(200):
        spec = build_constellation(ALL_SCHEMES[int(rng.integers(len(ALL_SCHEMES)))])
        n = int(rng.integers(1, 9))
        c = float(rng.uniform(0.1, 0.99))
        sigma_w2 = float(rng.uniform(0.2, 1.0))
        estimates = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        likelihood = 1.0
        for value in estimates:
            likelihood *= np.sum(np.exp(-np.abs(value - c * spec.points) ** 2 / sigma_w2))
            likelihood /= spec.cardinality * np.pi * sigma_w2
        assert abs(stream_log_likelihood(estimates, c, sigma_w2, spec) - np.log(likelihood)) < 1e-9


def test_long_sequences_do_not_underflow(rng):
    spec = build_constellation("16qam")
    estimates = 5 * (rng.standard_normal(4096) + 1j * rng.standard_normal(4096))
    assert np.isfinite(stream_log_likelihood(estimates, 0.5, 1e-3, spec))


def test_stream_input_checks():
    spec = build_constellation("qpsk")
    with pytest.raises(InvalidParameterError):
        stream_log_likelihood(np.array([], dtype=complex), 0.5, 0.25, spec)
    with pytest.raises(InvalidParameterError):
        stream_log_likelihood(np.ones(4, dtype=complex), 0.5, 1e-13, spec)


def test_joint_symbol_vectors_shape():
    vectors = joint_symbol_vectors(build_constellation("16qam"), 2)
    assert vectors.shape == (2, 256)
    assert len({tuple(np.round(col, 12)) for col in vectors.T}) == 256


def test_joint_matches_brute_force(rng):
    spec = build_constellation("bpsk")
    h = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    r = rng.standard_normal((2, 3)) + 1j * rng.standard_normal((2, 3))
    sigma2 = 0.4
    expected = 0.0
    for k in range(3):
        total = 0.0
        for s in itertools.product(spec.points, repeat=2):
            total += np.exp(-np.sum(np.abs(r[:, k] - h @ np.array(s)) ** 2) / sigma2)
        expected += np.log(total / spec.cardinality**2 / (np.pi * sigma2) ** 2)
    assert joint_log_likelihood(r, h, sigma2, spec) == pytest.approx(expected, abs=1e-9)


def test_single_antenna_joint_reduces_to_stream(rng):
    spec = build_constellation("8psk")
    h = complex(rng.standard_normal() + 1j * rng.standard_normal())
    r = rng.standard_normal((1, 16)) + 1j * rng.standard_normal((1, 16))
    sigma2 = 0.3
    frame = MimoFrame(received=r, m_t=1, noise_variance=sigma2, channel=ChannelMatrix(np.array([[h]])))
    joint = alrt_ub_log_likelihood(frame, spec)
    stream = stream_log_likelihood(r[0] / h, 1.0, sigma2 / abs(h) ** 2, spec)
    assert joint == pytest.approx(stream - 16 * np.log(abs(h) ** 2), abs=1e-9)


def test_joint_input_checks(rng):
    spec = build_constellation("qpsk")
    r = np.ones((2, 4), dtype=complex)
    with pytest.raises(DimensionMismatchError):
        joint_log_likelihood(r, np.ones((3, 2), dtype=complex), 1.0, spec)
    with pytest.raises(InvalidParameterError):
        joint_log_likelihood(r, np.ones((2, 2), dtype=complex), 0.0, spec)


def test_alrt_needs_true_channel():
    frame = make_frame("qpsk", n=64)
    stripped = MimoFrame(received=frame.received, m_t=2, noise_variance=frame.noise_variance)
    with pytest.raises(MissingChannelError):
        alrt_ub_log_likelihood(stripped, build_constellation("qpsk"))


def test_inner_terms():
    spec = build_constellation("16qam")
    assert inner_terms(Algorithm.PROPOSED, spec, 2) == 32
    assert inner_terms(Algorithm.PRODUCT, spec, 2) == 32
    assert inner_terms(Algorithm.ALRT_UB, spec, 2) == 256
    assert inner_terms(Algorithm.HLRT_JOINT, spec, 2) == 256


def _best_of(repeats, fn):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def test_joint_enumeration_costs_more_than_per_stream():
    spec = build_constellation("16qam")
    frame = make_frame("16qam", snr_db=10.0, n=512, seed=2)
    channel = frame.channel.entries

    def per_stream():
        for s in equalize_streams(channel, frame.received, frame.noise_variance, spec.scheme):
            stream_log_likelihood(s.estimates, s.effective_gain, s.distortion_variance, spec)

    def joint():
        joint_log_likelihood(frame.received, channel, frame.noise_variance, spec)

    assert _best_of(5, joint) > 3 * _best_of(5, per_stream)
