"""IQ capture persistence: JSON metadata sidecar + raw little-endian float64 payload.

Payload layout is time-major: I/Q of antenna 0 at sample k, antenna 1 at sample k, ...,
then sample k+1. That is exactly the memory layout of ``received.T`` as ``<c16``.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import TYPE_CHECKING
from typing import Final

import numpy as np

from blindmc.core.errors import CaptureFormatError
from blindmc.core.errors import ConfigurationError
from blindmc.core.errors import ReportWriteError
from blindmc.core.types import MimoFrame


if TYPE_CHECKING:
    from numpy.typing import NDArray


logger = logging.getLogger(__name__)

_PAYLOAD_DTYPE: Final = np.dtype("<c16")
_BYTES_PER_SAMPLE: Final = 2 * 8
_REQUIRED_KEYS: Final = ("m_r", "n", "noise_variance", "m_t")


def write_capture(frame: MimoFrame, metadata_path: str | Path, payload_path: str | Path) -> None:
    """Write a frame's received samples as a capture (ground truth is not persisted).

    Raises:
        ReportWriteError: If either file cannot be written.
    """
    meta = {
        "m_r": frame.m_r,
        "n": frame.n,
        "noise_variance": frame.noise_variance,
        "m_t": frame.m_t,
    }
    payload = np.ascontiguousarray(frame.received.T, dtype=_PAYLOAD_DTYPE)
    try:
        Path(payload_path).write_bytes(payload.tobytes())
        Path(metadata_path).write_text(json.dumps(meta, indent=2), encoding="utf-8")
    except OSError as exc:
        raise ReportWriteError(str(payload_path), str(exc)) from exc


def read_capture(metadata_path: str | Path, payload_path: str | Path) -> MimoFrame:
    """Load a capture into a MimoFrame without ground truth.

    Returns:
        MimoFrame built from the sidecar dimensions and the decoded samples.

    Raises:
        ConfigurationError: If the sidecar is unreadable or lacks a required key.
        CaptureFormatError: If the payload length disagrees with the sidecar.
    """
    meta = _load_metadata(Path(metadata_path))
    m_r, n, m_t = int(meta["m_r"]), int(meta["n"]), int(meta["m_t"])
    samples = _load_payload(Path(payload_path), m_r, n)
    logger.debug("Loaded capture %s: m_r=%d n=%d m_t=%d", payload_path, m_r, n, m_t)
    return MimoFrame(
        received=samples.reshape(n, m_r).T,
        m_t=m_t,
        noise_variance=float(meta["noise_variance"]),
    )


def _load_metadata(path: Path) -> dict:
    """Read and validate the JSON sidecar.

    Returns:
        Metadata dict with every required key present.

    Raises:
        ConfigurationError: If the file is missing, not JSON, or incomplete.
    """
    try:
        meta = json.loads(path.read_text(encoding="utf-8"))
    except (json.JSONDecodeError, OSError) as exc:
        raise ConfigurationError(str(path), f"unreadable capture metadata: {exc}") from exc
    if not isinstance(meta, dict):
        raise ConfigurationError(str(path), "capture metadata must be a JSON object")

    for key in _REQUIRED_KEYS:
        if key not in meta:
            raise ConfigurationError(key, f"missing from capture metadata {path}")
    try:
        noise_variance = float(meta["noise_variance"])
        dims = [int(meta[key]) for key in ("m_r", "n", "m_t")]
    except (TypeError, ValueError) as exc:
        raise ConfigurationError(str(path), f"non-numeric capture metadata: {exc}") from exc
    if not noise_variance > 0:
        raise ConfigurationError("noise_variance", f"must be > 0, got {noise_variance}")
    if min(dims) < 1:
        raise ConfigurationError("m_r/n/m_t", f"dimensions must be >= 1, got {dims}")
    return meta


def _load_payload(path: Path, m_r: int, n: int) -> NDArray[np.complex128]:
    """Read the payload bytes and check them against the sidecar.

    Returns:
        Flat complex128 array of n * m_r samples, time-major.

    Raises:
        CaptureFormatError: If the file is missing or its size is inconsistent.
    """
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise CaptureFormatError(str(path), f"payload unreadable: {exc}") from exc

    row_bytes = _BYTES_PER_SAMPLE * m_r
    expected = row_bytes * n
    if len(raw) % row_bytes:
        whole_rows = len(raw) // row_bytes
        raise CaptureFormatError(
            str(path),
            f"{len(raw)} bytes is not a multiple of {row_bytes} (2*8*m_r); "
            f"partial time instant starts at byte offset {whole_rows * row_bytes}",
        )
    if len(raw) != expected:
        raise CaptureFormatError(
            str(path),
            f"expected {expected} bytes ({n} samples x {m_r} antennas), found {len(raw)}",
        )
    return np.frombuffer(raw, dtype=_PAYLOAD_DTYPE).astype(np.complex128)
