"""Tests for IQ capture persistence."""

import json

import numpy as np
import pytest

from blindmc.channel.capture import read_capture
from blindmc.channel.capture import write_capture
from blindmc.core.errors import CaptureFormatError
from blindmc.core.errors import ConfigurationError
from tests.conftest import make_frame


@pytest.fixture
def capture_paths(tmp_path):
    frame = make_frame("qpsk", snr_db=15.0, n=64, m_t=2, m_r=3, seed=2)
    meta, data = tmp_path / "cap.json", tmp_path / "cap.bin"
    write_capture(frame, meta, data)
    return frame, meta, data


def test_round_trip_is_exact(capture_paths):
    frame, meta, data = capture_paths
    loaded = read_capture(meta, data)
    assert np.array_equal(loaded.received, frame.received)
    assert loaded.noise_variance == frame.noise_variance
    assert loaded.m_t == 2
    assert loaded.channel is None
    assert loaded.transmitted is None


def test_payload_is_time_major_interleaved(capture_paths):
    frame, _, data = capture_paths
    floats = np.frombuffer(data.read_bytes(), dtype="<f8")
    assert floats.size == 2 * frame.m_r * frame.n
    # sample 0 of antenna 1 follows sample 0 of antenna 0
    assert floats[2] == frame.received[1, 0].real
    assert floats[3] == frame.received[1, 0].imag


def test_truncated_payload_reports_byte_counts(capture_paths):
    _, meta, data = capture_paths
    data.write_bytes(data.read_bytes()[: -2 * 8 * 3])
    with pytest.raises(CaptureFormatError, match="expected 3072 bytes"):
        read_capture(meta, data)


def test_partial_instant_reports_offset(capture_paths):
    _, meta, data = capture_paths
    data.write_bytes(data.read_bytes()[:-8])
    with pytest.raises(CaptureFormatError, match="byte offset 3024"):
        read_capture(meta, data)


def test_missing_noise_variance(capture_paths):
    _, meta, data = capture_paths
    content = json.loads(meta.read_text())
    del content["noise_variance"]
    meta.write_text(json.dumps(content))
    with pytest.raises(ConfigurationError, match="noise_variance"):
        read_capture(meta, data)


def test_non_positive_noise_variance(capture_paths):
    _, meta, data = capture_paths
    content = json.loads(meta.read_text())
    content["noise_variance"] = 0
    meta.write_text(json.dumps(content))
    with pytest.raises(ConfigurationError):
        read_capture(meta, data)


def test_unreadable_metadata(tmp_path):
    with pytest.raises(ConfigurationError):
        read_capture(tmp_path / "missing.json", tmp_path / "missing.bin")
