"""Tests for MMSE sub-channel splitting."""

import numpy as np
import pytest

from blindmc.channel.simulate import complex_gaussian
from blindmc.core.errors import DimensionMismatchError
from blindmc.core.errors import InvalidParameterError
from blindmc.core.types import SchemeId
from blindmc.equalize import distortion_variance
from blindmc.equalize import effective_gain
from blindmc.equalize import equalize
from blindmc.equalize import equalize_streams
from blindmc.equalize import mmse_filter
from tests.conftest import make_frame


def test_scalar_channel():
    g = mmse_filter(np.array([[1.0 + 0j]]), 1.0)
    assert g[0, 0] == pytest.approx(0.5)
    c = effective_gain(g, np.array([[1.0 + 0j]]), 0)
    assert c == pytest.approx(0.5)
    assert distortion_variance(c) == pytest.approx(0.25)


def test_identity_channel():
    assert np.allclose(mmse_filter(np.eye(2, dtype=complex), 1.0), 0.5 * np.eye(2))


def test_matches_explicit_inverse(rng):
    h = complex_gaussian((6, 3), 1.0, rng)
    expected = h @ np.linalg.inv(h.conj().T @ h + 0.3 * np.eye(3))
    assert np.allclose(mmse_filter(h, 0.3), expected, atol=1e-10)


def test_orthonormal_columns_recover_symbols(rng):
    q, _ = np.linalg.qr(complex_gaussian((4, 2), 1.0, rng))
    g = mmse_filter(q, 1e-12)
    assert np.allclose(g.conj().T @ q, np.eye(2), atol=1e-6)
    symbols = np.array([[1, -1, 1j], [-1j, 1, -1]], dtype=complex)
    assert np.allclose(equalize(g, q @ symbols), symbols, atol=1e-6)


def test_equalize_is_linear(rng):
    g = mmse_filter(complex_gaussian((4, 2), 1.0, rng), 0.5)
    a = complex_gaussian((4, 10), 1.0, rng)
    b = complex_gaussian((4, 10), 1.0, rng)
    assert np.allclose(equalize(g, 2 * a - 3j * b), 2 * equalize(g, a) - 3j * equalize(g, b))


def test_gain_is_real_and_in_unit_interval(rng):
    for _ in range(1000):
        m_r = int(rng.integers(2, 9))
        m_t = int(rng.integers(1, m_r + 1))
        h = complex_gaussian((m_r, m_t), 1.0, rng)
        g = mmse_filter(h, float(10 ** rng.uniform(-3, 1)))
        diagonal = np.diag(g.conj().T @ h)
        assert np.all(np.abs(diagonal.imag) < 1e-9)
        assert np.all((diagonal.real >= 0) & (diagonal.real < 1))
        for i in range(m_t):
            c = effective_gain(g, h, i)
            assert abs(distortion_variance(c) - max(c * (1 - c), 1e-12)) < 1e-12


def test_distortion_variance_values():
    assert distortion_variance(0.5) == pytest.approx(0.25)
    assert distortion_variance(0.9) == pytest.approx(0.09)
    assert distortion_variance(1.0) == pytest.approx(1e-12)
    assert distortion_variance(0.0) == pytest.approx(1e-12)
    for bad in (1.1, -0.1):
        with pytest.raises(InvalidParameterError):
            distortion_variance(bad)


def test_filter_input_checks(rng):
    h = complex_gaussian((4, 2), 1.0, rng)
    with pytest.raises(InvalidParameterError):
        mmse_filter(h, 0.0)
    with pytest.raises(InvalidParameterError):
        mmse_filter(np.full((4, 2), np.nan, dtype=complex), 1.0)
    with pytest.raises(DimensionMismatchError):
        mmse_filter(np.ones(4, dtype=complex), 1.0)
    g = mmse_filter(h, 1.0)
    with pytest.raises(DimensionMismatchError):
        equalize(g, np.ones((3, 5), dtype=complex))
    with pytest.raises(InvalidParameterError):
        effective_gain(g, h, 2)


def test_equalize_streams_metadata():
    frame = make_frame("qpsk", snr_db=10.0, n=128, seed=3)
    streams = equalize_streams(frame.channel.entries, frame.received, frame.noise_variance, SchemeId.QPSK)
    assert [s.stream_index for s in streams] == [0, 1]
    for s in streams:
        assert s.hypothesis is SchemeId.QPSK
        assert s.estimates.shape == (128,)
        assert 0 < s.effective_gain < 1
        assert s.distortion_variance == pytest.approx(s.effective_gain * (1 - s.effective_gain))


def test_residual_variance_matches_model():
    # With the true channel, var(s_hat - c s) equals c (1 - c) in expectation.
    relative_errors = []
    for seed in range(10):
        frame = make_frame("qpsk", snr_db=5.0, n=10_000, m_t=2, m_r=8, seed=seed)
        streams = equalize_streams(frame.channel.entries, frame.received, frame.noise_variance, SchemeId.QPSK)
        for s in streams:
            residual = s.estimates - s.effective_gain * frame.transmitted[s.stream_index]
            measured = np.mean(np.abs(residual) ** 2)
            relative_errors.append(abs(measured - s.distortion_variance) / s.distortion_variance)
    assert np.median(relative_errors) < 0.2
