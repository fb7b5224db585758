"""SweepConfig with environment variable overrides."""

from __future__ import annotations

import os
from dataclasses import dataclass
from dataclasses import field
from typing import Any
from typing import Final

import numpy as np

from blindmc.core.errors import ClassifierError
from blindmc.core.errors import ConfigurationError
from blindmc.core.types import Algorithm
from blindmc.core.types import SchemeId
from blindmc.modem.constellation import DEFAULT_CANDIDATES


_DEFAULT_SNR_MIN: Final = -10.0
_DEFAULT_SNR_MAX: Final = 15.0
_DEFAULT_SNR_STEP: Final = 2.5
_DEFAULT_TRIALS: Final = 100
_REFERENCE_TRIALS: Final = 500
_DEFAULT_SYMBOLS: Final = 512
_DEFAULT_MT: Final = 2
_DEFAULT_MR: Final = 4
_DEFAULT_MODS: Final = tuple(scheme.value for scheme in DEFAULT_CANDIDATES)
_DEFAULT_ALGOS: Final = (Algorithm.PROPOSED.value,)
_DEFAULT_SEED: Final = 20150101
_MIN_SAMPLES_PER_PAIR: Final = 8
_GRID_SLACK: Final = 1e-3


def _env_float(key: str, default: float) -> float:
    raw = os.environ.get(key)
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError:
        return default


def _env_int(key: str, default: int) -> int:
    raw = os.environ.get(key)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def _env_list(key: str, default: tuple[str, ...]) -> tuple[str, ...]:
    raw = os.environ.get(key)
    if raw is None:
        return default
    items = tuple(item.strip() for item in raw.split(",") if item.strip())
    return items or default


def snr_grid(start: float, stop: float, step: float) -> tuple[float, ...]:
    """Evenly spaced SNR points from start to stop, including stop when it lands on the grid.

    Returns:
        Tuple of SNR values in dB; empty when stop < start.

    Raises:
        ConfigurationError: If step is not positive.
    """
    if not step > 0:
        raise ConfigurationError("snr_step", f"must be > 0, got {step}")
    if stop < start:
        return ()
    count = int(np.floor((stop - start) / step + _GRID_SLACK)) + 1
    return tuple(round(start + index * step, 10) for index in range(count))


def env_snr_grid(start: float | None = None, stop: float | None = None, step: float | None = None) -> tuple[float, ...]:
    """SNR grid from the given bounds; missing bounds come from BLINDMC_SNR_MIN/MAX/STEP, then the defaults."""
    return snr_grid(
        start if start is not None else _env_float("BLINDMC_SNR_MIN", _DEFAULT_SNR_MIN),
        stop if stop is not None else _env_float("BLINDMC_SNR_MAX", _DEFAULT_SNR_MAX),
        step if step is not None else _env_float("BLINDMC_SNR_STEP", _DEFAULT_SNR_STEP),
    )


def _parse_all(key: str, names: tuple[Any, ...], parse: Any) -> tuple[Any, ...]:
    try:
        return tuple(parse(name) for name in names)
    except ClassifierError as exc:
        raise ConfigurationError(key, str(exc)) from exc


@dataclass(frozen=True, slots=True)
class SweepConfig:
    """Monte-Carlo sweep configuration: grid, scale, geometry, schemes, algorithms and seed."""

    snr_db_grid: tuple[float, ...] = field(default_factory=env_snr_grid)
    trials_per_point: int = field(
        default_factory=lambda: _env_int("BLINDMC_TRIALS", _DEFAULT_TRIALS),
    )
    n_symbols: int = field(
        default_factory=lambda: _env_int("BLINDMC_SYMBOLS", _DEFAULT_SYMBOLS),
    )
    m_t: int = field(
        default_factory=lambda: _env_int("BLINDMC_MT", _DEFAULT_MT),
    )
    m_r: int = field(
        default_factory=lambda: _env_int("BLINDMC_MR", _DEFAULT_MR),
    )
    candidates: tuple[SchemeId, ...] = field(
        default_factory=lambda: _env_list("BLINDMC_MODS", _DEFAULT_MODS),
    )
    algorithms: tuple[Algorithm, ...] = field(
        default_factory=lambda: _env_list("BLINDMC_ALGOS", _DEFAULT_ALGOS),
    )
    master_seed: int = field(
        default_factory=lambda: _env_int("BLINDMC_SEED", _DEFAULT_SEED),
    )
    threads: int = field(
        default_factory=lambda: _env_int("BLINDMC_THREADS", 1),
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "snr_db_grid", tuple(float(snr) for snr in self.snr_db_grid))
        object.__setattr__(self, "candidates", _parse_all("candidates", tuple(self.candidates), SchemeId.parse))
        object.__setattr__(self, "algorithms", _parse_all("algorithms", tuple(self.algorithms), Algorithm.parse))
        self._validate()

    def _validate(self) -> None:
        if not self.snr_db_grid:
            raise ConfigurationError("snr_db_grid", "SNR grid is empty")
        if not all(np.isfinite(self.snr_db_grid)):
            raise ConfigurationError("snr_db_grid", "SNR values must be finite")
        if self.trials_per_point < 1:
            raise ConfigurationError("trials_per_point", f"must be >= 1, got {self.trials_per_point}")
        if self.m_t < 1 or self.m_r < self.m_t:
            raise ConfigurationError("m_r", f"requires m_r >= m_t >= 1, got m_t={self.m_t}, m_r={self.m_r}")
        minimum = _MIN_SAMPLES_PER_PAIR * self.m_t * self.m_t
        if self.n_symbols < minimum:
            raise ConfigurationError("n_symbols", f"must be >= {minimum} for m_t={self.m_t}, got {self.n_symbols}")
        if not self.candidates:
            raise ConfigurationError("candidates", "at least one modulation scheme is required")
        if len(set(self.candidates)) != len(self.candidates):
            raise ConfigurationError("candidates", "duplicate modulation schemes")
        if not self.algorithms:
            raise ConfigurationError("algorithms", "at least one algorithm is required")
        if len(set(self.algorithms)) != len(self.algorithms):
            raise ConfigurationError("algorithms", "duplicate algorithms")
        if self.master_seed < 0:
            raise ConfigurationError("master_seed", f"must be non-negative, got {self.master_seed}")
        if self.threads < 1:
            raise ConfigurationError("threads", f"must be >= 1, got {self.threads}")

    @classmethod
    def reference_default(cls) -> SweepConfig:
        """Reference experiment setting: -10..15 dB in 2.5 dB steps, 500 trials, N=512, 2x4, four schemes.

        Environment overrides are ignored.
        """
        return cls(
            snr_db_grid=snr_grid(_DEFAULT_SNR_MIN, _DEFAULT_SNR_MAX, _DEFAULT_SNR_STEP),
            trials_per_point=_REFERENCE_TRIALS,
            n_symbols=_DEFAULT_SYMBOLS,
            m_t=_DEFAULT_MT,
            m_r=_DEFAULT_MR,
            candidates=DEFAULT_CANDIDATES,
            algorithms=(Algorithm.PROPOSED,),
            master_seed=_DEFAULT_SEED,
            threads=1,
        )

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready echo of the configuration.

        Returns:
            Dict with plain lists, ints and floats.
        """
        return {
            "snr_db_grid": list(self.snr_db_grid),
            "trials_per_point": self.trials_per_point,
            "n_symbols": self.n_symbols,
            "m_t": self.m_t,
            "m_r": self.m_r,
            "candidates": [scheme.value for scheme in self.candidates],
            "algorithms": [algorithm.value for algorithm in self.algorithms],
            "master_seed": self.master_seed,
            "threads": self.threads,
        }
