"""Monte-Carlo sweeps over SNR x scheme x trial, and their aggregation into P_cc curves."""

from __future__ import annotations

import logging
import time
from collections import Counter
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from blindmc.classify.likelihood import inner_terms
from blindmc.core.errors import InvalidParameterError
from blindmc.harness.trial import run_cell
from blindmc.modem.constellation import build_constellation


if TYPE_CHECKING:
    from collections.abc import Iterable

    from blindmc.config import SweepConfig
    from blindmc.core.types import Algorithm
    from blindmc.core.types import SchemeId
    from blindmc.harness.trial import TrialRecord


logger = logging.getLogger(__name__)

FAILED_LABEL = "failed"


def binomial_stderr(p: float, n: int) -> float:
    """Standard error sqrt(p (1 - p) / n) of a proportion estimated from n trials.

    Raises:
        InvalidParameterError: If n < 1 or p is outside [0, 1].
    """
    if n < 1:
        raise InvalidParameterError("n", n, "needs at least one trial")
    if not 0.0 <= p <= 1.0:
        raise InvalidParameterError("p", p, "must be a probability")
    return float(np.sqrt(p * (1.0 - p) / n))


@dataclass(frozen=True, slots=True)
class SweepResult:
    """Aggregated sweep outcome keyed by (snr_db, algorithm, scheme_true).

    ``decisions`` counts decided labels (scheme names or "failed") per cell.
    """

    config: SweepConfig
    decisions: dict[tuple[float, Algorithm, SchemeId], Counter[str]]
    runtime: dict[Algorithm, float]
    records: tuple[TrialRecord, ...] = ()

    def trials(self, snr_db: float, algorithm: Algorithm, scheme: SchemeId) -> int:
        """Return the number of trials recorded for one cell."""
        return sum(self.decisions.get((snr_db, algorithm, scheme), Counter()).values())

    def correct(self, snr_db: float, algorithm: Algorithm, scheme: SchemeId) -> int:
        """Return the number of correct decisions for one cell."""
        return self.decisions.get((snr_db, algorithm, scheme), Counter())[scheme.value]

    def accuracy(self, snr_db: float, algorithm: Algorithm, scheme: SchemeId) -> float:
        """Fraction of trials of ``scheme`` classified correctly.

        Raises:
            InvalidParameterError: If the cell has no trials.
        """
        total = self.trials(snr_db, algorithm, scheme)
        if total == 0:
            raise InvalidParameterError("cell", (snr_db, algorithm.value, scheme.value), "no trials recorded")
        return self.correct(snr_db, algorithm, scheme) / total

    def pcc(self, snr_db: float, algorithm: Algorithm) -> float:
        """Probability of correct classification averaged over the candidate schemes."""
        return float(np.mean([self.accuracy(snr_db, algorithm, scheme) for scheme in self.config.candidates]))

    def pcc_stderr(self, snr_db: float, algorithm: Algorithm) -> float:
        """Binomial standard error of P_cc over all trials at one grid point."""
        trials = sum(self.trials(snr_db, algorithm, scheme) for scheme in self.config.candidates)
        return binomial_stderr(self.pcc(snr_db, algorithm), trials)

    def pcc_curve(self, algorithm: Algorithm) -> list[tuple[float, float]]:
        """Return [(snr_db, P_cc)] over the grid."""
        return [(snr, self.pcc(snr, algorithm)) for snr in self.config.snr_db_grid]

    def confusion(self, snr_db: float, algorithm: Algorithm) -> dict[SchemeId, Counter[str]]:
        """Return true scheme -> Counter of decided labels at one grid point."""
        return {
            scheme: Counter(self.decisions.get((snr_db, algorithm, scheme), Counter()))
            for scheme in self.config.candidates
        }

    def failures(self, snr_db: float, algorithm: Algorithm) -> int:
        """Return the number of failed estimations at one grid point."""
        return sum(counts[FAILED_LABEL] for counts in self.confusion(snr_db, algorithm).values())

    def crossing_snr(self, algorithm: Algorithm, level: float = 0.9) -> float | None:
        """First SNR where P_cc reaches ``level``, linearly interpolated between grid points.

        Returns:
            SNR in dB, or None if the curve never reaches the level.
        """
        curve = self.pcc_curve(algorithm)
        if curve[0][1] >= level:
            return curve[0][0]
        for (snr0, p0), (snr1, p1) in zip(curve, curve[1:], strict=False):
            if p0 < level <= p1:
                return snr0 + (level - p0) * (snr1 - snr0) / (p1 - p0)
        return None

    def inner_terms(self, algorithm: Algorithm) -> dict[SchemeId, int]:
        """Per-time-instant hypothesis-evaluation work for each candidate."""
        return {
            scheme: inner_terms(algorithm, build_constellation(scheme), self.config.m_t)
            for scheme in self.config.candidates
        }


def aggregate(records: Iterable[TrialRecord], config: SweepConfig) -> SweepResult:
    """Accumulate trial records into a SweepResult.

    Records are sorted by cell key first, so the result does not depend on execution order.

    Returns:
        SweepResult holding the sorted records.
    """
    ordered = tuple(sorted(records, key=lambda record: record.sort_key(config.algorithms)))
    decisions: dict[tuple[float, Algorithm, SchemeId], Counter[str]] = defaultdict(Counter)
    runtime: dict[Algorithm, float] = dict.fromkeys(config.algorithms, 0.0)
    for record in ordered:
        decisions[(record.snr_db, record.algorithm, record.scheme_true)][record.decided_label] += 1
        runtime[record.algorithm] += record.elapsed
    return SweepResult(config=config, decisions=dict(decisions), runtime=runtime, records=ordered)


def _cells(config: SweepConfig) -> list[tuple[int, int, int]]:
    return [
        (snr_index, scheme_index, trial_index)
        for snr_index in range(len(config.snr_db_grid))
        for scheme_index in range(len(config.candidates))
        for trial_index in range(config.trials_per_point)
    ]


def run_sweep(config: SweepConfig) -> SweepResult:
    """Run every (SNR, scheme, trial) cell with every configured algorithm.

    Cells run on a thread pool when config.threads > 1; seeds depend only on cell indices.

    Returns:
        Aggregated SweepResult.
    """
    cells = _cells(config)
    logger.info(
        "Sweep: %d cells x %d algorithms, N=%d, %dx%d, %d thread(s)",
        len(cells),
        len(config.algorithms),
        config.n_symbols,
        config.m_t,
        config.m_r,
        config.threads,
    )
    start = time.monotonic()
    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            batches = list(pool.map(lambda cell: run_cell(config, *cell), cells))
    else:
        batches = [run_cell(config, *cell) for cell in cells]

    result = aggregate((record for batch in batches for record in batch), config)
    logger.info("Sweep finished in %.1fs", time.monotonic() - start)
    for algorithm in config.algorithms:
        for snr in config.snr_db_grid:
            logger.info("%s @ %.1f dB: P_cc=%.3f", algorithm.value, snr, result.pcc(snr, algorithm))
    return result
