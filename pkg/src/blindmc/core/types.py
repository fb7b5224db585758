"""Core data types for blindmc.

Array-carrying types are frozen and hold read-only float64/complex128 copies, so they can be
shared freely between worker threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING
from typing import Final

import numpy as np

from blindmc.core.errors import DimensionMismatchError
from blindmc.core.errors import InvalidParameterError
from blindmc.core.errors import UnsupportedSchemeError


if TYPE_CHECKING:
    from numpy.typing import ArrayLike
    from numpy.typing import NDArray


_POWER_TOL: Final = 1e-12


class SchemeId(Enum):
    """Candidate modulation schemes, valued by their CLI spelling."""

    BPSK = "bpsk"
    QPSK = "qpsk"
    PSK8 = "8psk"
    QAM16 = "16qam"

    @classmethod
    def parse(cls, name: str | SchemeId) -> SchemeId:
        """Parse a case-insensitive scheme name ("8psk") or enum name ("PSK8").

        Raises:
            UnsupportedSchemeError: If the name matches no supported scheme.
        """
        if isinstance(name, SchemeId):
            return name
        key = str(name).strip().lower()
        for scheme in cls:
            if key in {scheme.value, scheme.name.lower()}:
                return scheme
        raise UnsupportedSchemeError(name)


class Algorithm(Enum):
    """Classification algorithms: the proposed rule, its baselines and the benchmarks."""

    PROPOSED = "proposed"
    PRODUCT = "product"
    EQUAL_WEIGHT = "equal_weight"
    ALRT_UB = "alrt_ub"
    HLRT_JOINT = "hlrt_joint"

    @classmethod
    def parse(cls, name: str | Algorithm) -> Algorithm:
        """Parse a case-insensitive algorithm name ("equal_weight" or "equal-weight").

        Raises:
            InvalidParameterError: If the name matches no algorithm.
        """
        if isinstance(name, Algorithm):
            return name
        key = str(name).strip().lower().replace("-", "_")
        for algorithm in cls:
            if key == algorithm.value:
                return algorithm
        valid = ", ".join(a.value for a in cls)
        raise InvalidParameterError("algorithm", name, f"expected one of {valid}")

    @property
    def uses_perfect_csi(self) -> bool:
        """Return True for algorithms that bypass blind estimation."""
        return self is Algorithm.ALRT_UB

    @property
    def is_joint(self) -> bool:
        """Return True for algorithms that enumerate joint symbol vectors."""
        return self in {Algorithm.ALRT_UB, Algorithm.HLRT_JOINT}


def _frozen_array(values: ArrayLike, dtype: type) -> NDArray:
    arr = np.array(values, dtype=dtype, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, slots=True, eq=False)
class ConstellationSpec:
    """A unit-average-power modulation scheme with its power-law parameters."""

    scheme: SchemeId
    points: NDArray[np.complex128]
    power_law_order: int
    reference_moment: complex

    def __post_init__(self) -> None:
        points = _frozen_array(self.points, np.complex128)
        object.__setattr__(self, "points", points)
        if points.ndim != 1 or points.size not in {2, 4, 8, 16}:
            raise InvalidParameterError("points", points.shape, "cardinality must be 2, 4, 8 or 16")
        power = float(np.mean(np.abs(points) ** 2))
        if abs(power - 1.0) > _POWER_TOL:
            raise InvalidParameterError("points", power, "constellation must have unit average power")
        if self.power_law_order < 1:
            raise InvalidParameterError("power_law_order", self.power_law_order, "must be >= 1")

    @property
    def cardinality(self) -> int:
        """Return |A|, the number of constellation points."""
        return int(self.points.size)


@dataclass(frozen=True, slots=True, eq=False)
class SymbolSequence:
    """I.i.d. symbols drawn from one constellation."""

    values: NDArray[np.complex128]
    scheme: SchemeId

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _frozen_array(self.values, np.complex128))

    def __len__(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True, slots=True, eq=False)
class ChannelMatrix:
    """Flat-fading M_R x M_T MIMO channel."""

    entries: NDArray[np.complex128]

    def __post_init__(self) -> None:
        entries = _frozen_array(self.entries, np.complex128)
        object.__setattr__(self, "entries", entries)
        if entries.ndim != 2:
            raise DimensionMismatchError("2-D (m_r, m_t)", entries.shape, "channel")
        m_r, m_t = entries.shape
        if m_t < 1 or m_r < m_t:
            raise InvalidParameterError("channel shape", entries.shape, "requires m_r >= m_t >= 1")

    @property
    def m_t(self) -> int:
        """Return the number of transmit antennas."""
        return int(self.entries.shape[1])

    @property
    def m_r(self) -> int:
        """Return the number of receive antennas."""
        return int(self.entries.shape[0])


@dataclass(frozen=True, slots=True, eq=False)
class MimoFrame:
    """One observation r(k) = H s(k) + n(k), k = 1..N.

    ``transmitted``, ``channel`` and ``scheme`` are ground truth and are absent for
    ingested captures.
    """

    received: NDArray[np.complex128]
    m_t: int
    noise_variance: float
    transmitted: NDArray[np.complex128] | None = None
    channel: ChannelMatrix | None = None
    scheme: SchemeId | None = None

    def __post_init__(self) -> None:
        received = _frozen_array(self.received, np.complex128)
        object.__setattr__(self, "received", received)
        if received.ndim != 2 or received.shape[1] < 1:
            raise DimensionMismatchError("2-D (m_r, n) with n >= 1", received.shape, "received")
        if not self.noise_variance > 0 or not np.isfinite(self.noise_variance):
            raise InvalidParameterError("noise_variance", self.noise_variance, "must be finite and > 0")
        if self.m_t < 1 or received.shape[0] < self.m_t:
            raise InvalidParameterError("m_t", self.m_t, f"requires 1 <= m_t <= m_r={received.shape[0]}")
        if self.transmitted is not None:
            transmitted = _frozen_array(self.transmitted, np.complex128)
            object.__setattr__(self, "transmitted", transmitted)
            if transmitted.shape != (self.m_t, self.n):
                raise DimensionMismatchError((self.m_t, self.n), transmitted.shape, "transmitted")
        if self.channel is not None and self.channel.entries.shape != (self.m_r, self.m_t):
            raise DimensionMismatchError((self.m_r, self.m_t), self.channel.entries.shape, "channel")

    @property
    def m_r(self) -> int:
        """Return the number of receive antennas."""
        return int(self.received.shape[0])

    @property
    def n(self) -> int:
        """Return the observation length N."""
        return int(self.received.shape[1])


@dataclass(frozen=True, slots=True, eq=False)
class BlindEstimate:
    """JADE output: channel estimate and separated streams, up to permutation and phase."""

    channel_estimate: NDArray[np.complex128]
    separated_streams: NDArray[np.complex128]
    whitening_matrix: NDArray[np.complex128]
    sweeps: int = 0

    def __post_init__(self) -> None:
        for name in ("channel_estimate", "separated_streams", "whitening_matrix"):
            object.__setattr__(self, name, _frozen_array(getattr(self, name), np.complex128))


@dataclass(frozen=True, slots=True)
class PhaseCorrection:
    """Per-stream power-law phase estimates under one hypothesis, in radians."""

    phases: tuple[float, ...]
    hypothesis: SchemeId


@dataclass(frozen=True, slots=True, eq=False)
class EqualizedStream:
    """MMSE output for one transmit stream under one hypothesis."""

    estimates: NDArray[np.complex128]
    effective_gain: float
    distortion_variance: float
    stream_index: int
    hypothesis: SchemeId

    def __post_init__(self) -> None:
        object.__setattr__(self, "estimates", _frozen_array(self.estimates, np.complex128))


@dataclass(frozen=True, slots=True)
class HypothesisEvaluation:
    """Per-stream log-likelihoods under one hypothesis, before any fusion rule is applied."""

    hypothesis: SchemeId
    stream_loglik: tuple[float, ...]
    phases: PhaseCorrection | None = None
    gains: tuple[float, ...] = ()


@dataclass(frozen=True, slots=True)
class HypothesisScore:
    """Fused score of one candidate scheme."""

    hypothesis: SchemeId
    stream_loglik: tuple[float, ...]
    weights: tuple[float, ...]
    combined_log: float
    phases_used: PhaseCorrection | None = None
    gains: tuple[float, ...] = ()


@dataclass(frozen=True, slots=True)
class ClassificationResult:
    """Decision plus the full ranking; ``failed`` results carry no decision."""

    decided: SchemeId | None
    ranked: tuple[HypothesisScore, ...]
    algorithm: Algorithm
    failed: bool = False
    detail: str = ""
