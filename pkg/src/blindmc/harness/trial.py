"""Single Monte-Carlo trials: seeded frame synthesis and classification.

All algorithms in a cell see the same frame, and the blind ones share one JADE estimate, so
comparisons between them are paired.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from dataclasses import field
from typing import TYPE_CHECKING

import numpy as np

from blindmc.channel.simulate import derive_seed
from blindmc.channel.simulate import draw_channel
from blindmc.channel.simulate import noise_variance_from_snr
from blindmc.channel.simulate import synthesize_frame
from blindmc.classify.alrt import classify_alrt_ub
from blindmc.classify.hlrt import HlrtClassifier
from blindmc.classify.hlrt import JointHlrtClassifier
from blindmc.classify.hlrt import blind_estimate
from blindmc.classify.hlrt import evaluate_hypotheses
from blindmc.classify.hlrt import failed_result
from blindmc.core.errors import EstimationFailedError
from blindmc.core.errors import InvalidParameterError
from blindmc.core.types import Algorithm
from blindmc.core.types import SchemeId
from blindmc.modem.constellation import build_candidates
from blindmc.modem.constellation import build_constellation


if TYPE_CHECKING:
    from blindmc.config import SweepConfig
    from blindmc.core.types import BlindEstimate
    from blindmc.core.types import ClassificationResult
    from blindmc.core.types import ConstellationSpec
    from blindmc.core.types import HypothesisEvaluation
    from blindmc.core.types import MimoFrame


logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class TrialRecord:
    """Outcome of one algorithm on one synthesized frame."""

    snr_db: float
    scheme_true: SchemeId
    scheme_decided: SchemeId | None
    algorithm: Algorithm
    seed: int
    n: int
    m_t: int
    m_r: int
    failed: bool
    elapsed: float
    snr_index: int = 0
    scheme_index: int = 0
    trial_index: int = 0

    @property
    def correct(self) -> bool:
        """Return True when the decision matches the transmitted scheme."""
        return not self.failed and self.scheme_decided is self.scheme_true

    @property
    def decided_label(self) -> str:
        """Return the decided scheme's name, or "failed"."""
        return "failed" if self.scheme_decided is None else self.scheme_decided.value

    def sort_key(self, algorithm_order: tuple[Algorithm, ...]) -> tuple[int, int, int, int]:
        """Key identifying the record's cell independently of execution order."""
        return (self.snr_index, self.scheme_index, self.trial_index, algorithm_order.index(self.algorithm))


def synthesize_trial_frame(
    config: SweepConfig,
    snr_index: int,
    scheme_index: int,
    trial_index: int,
) -> tuple[MimoFrame, int]:
    """Draw the channel and frame for one cell from its derived seed.

    Returns:
        Tuple of (frame with ground truth, seed).

    Raises:
        InvalidParameterError: If an index is out of range.
    """
    _check_index("snr_index", snr_index, len(config.snr_db_grid))
    _check_index("scheme_index", scheme_index, len(config.candidates))
    _check_index("trial_index", trial_index, config.trials_per_point)

    seed = derive_seed(config.master_seed, trial_index, snr_index, scheme_index)
    rng = np.random.default_rng(seed)
    spec = build_constellation(config.candidates[scheme_index])
    noise_variance = noise_variance_from_snr(config.snr_db_grid[snr_index], config.m_t)
    channel = draw_channel(config.m_t, config.m_r, rng)
    return synthesize_frame(spec, channel, noise_variance, config.n_symbols, rng), seed


def _check_index(name: str, value: int, size: int) -> None:
    if not 0 <= value < size:
        raise InvalidParameterError(name, value, f"must be in 0..{size - 1}")


@dataclass
class _SharedFrameWork:
    """Lazily computed blind estimate and per-stream evaluations for one frame."""

    frame: MimoFrame
    candidates: list[ConstellationSpec]
    estimate: BlindEstimate | None = None
    evaluations: tuple[HypothesisEvaluation, ...] | None = None
    error: EstimationFailedError | None = None
    estimate_elapsed: float = 0.0
    evaluate_elapsed: float = 0.0
    _estimated: bool = field(default=False, repr=False)

    def ensure_estimate(self) -> None:
        if self._estimated:
            return
        self._estimated = True
        start = time.perf_counter()
        try:
            self.estimate = blind_estimate(self.frame)
        except EstimationFailedError as exc:
            self.error = exc
        self.estimate_elapsed = time.perf_counter() - start

    def ensure_evaluations(self) -> None:
        self.ensure_estimate()
        if self.evaluations is not None or self.error is not None or self.estimate is None:
            return
        start = time.perf_counter()
        try:
            self.evaluations = evaluate_hypotheses(self.frame, self.estimate, self.candidates)
        except EstimationFailedError as exc:
            self.error = exc
        self.evaluate_elapsed = time.perf_counter() - start


def _classify_shared(algorithm: Algorithm, work: _SharedFrameWork) -> tuple[ClassificationResult, float]:
    """Classify with one algorithm, reusing the frame's shared blind work.

    Returns:
        Tuple of (result, seconds of shared work attributed to this algorithm).
    """
    if algorithm.uses_perfect_csi:
        return classify_alrt_ub(work.frame, work.candidates), 0.0
    if algorithm.is_joint:
        work.ensure_estimate()
        if work.estimate is None:
            return failed_result(algorithm, work.error), work.estimate_elapsed  # type: ignore[arg-type]
        result = JointHlrtClassifier().classify(work.frame, work.candidates, estimate=work.estimate)
        return result, work.estimate_elapsed
    work.ensure_evaluations()
    shared = work.estimate_elapsed + work.evaluate_elapsed
    if work.evaluations is None:
        return failed_result(algorithm, work.error), shared  # type: ignore[arg-type]
    return HlrtClassifier(algorithm).decide(work.evaluations), shared


def run_cell(
    config: SweepConfig,
    snr_index: int,
    scheme_index: int,
    trial_index: int,
) -> list[TrialRecord]:
    """Run every configured algorithm on one synthesized frame.

    Elapsed time per record includes the shared blind-estimation work the algorithm depends on.

    Returns:
        One TrialRecord per algorithm, in config order.
    """
    frame, seed = synthesize_trial_frame(config, snr_index, scheme_index, trial_index)
    work = _SharedFrameWork(frame=frame, candidates=build_candidates(config.candidates))
    records = []
    for algorithm in config.algorithms:
        computed_before = work.estimate_elapsed + work.evaluate_elapsed
        start = time.perf_counter()
        result, shared = _classify_shared(algorithm, work)
        own = time.perf_counter() - start - (work.estimate_elapsed + work.evaluate_elapsed - computed_before)
        records.append(
            TrialRecord(
                snr_db=config.snr_db_grid[snr_index],
                scheme_true=config.candidates[scheme_index],
                scheme_decided=result.decided,
                algorithm=algorithm,
                seed=seed,
                n=frame.n,
                m_t=frame.m_t,
                m_r=frame.m_r,
                failed=result.failed,
                elapsed=max(own, 0.0) + shared,
                snr_index=snr_index,
                scheme_index=scheme_index,
                trial_index=trial_index,
            )
        )
    return records


def run_trial(
    config: SweepConfig,
    snr_index: int,
    scheme_index: int,
    trial_index: int,
    algorithm: Algorithm | str,
) -> TrialRecord:
    """Run a single algorithm on one cell's frame.

    Returns:
        TrialRecord; estimation failures are recorded as failed, never raised.
    """
    resolved = Algorithm.parse(algorithm)
    frame, seed = synthesize_trial_frame(config, snr_index, scheme_index, trial_index)
    work = _SharedFrameWork(frame=frame, candidates=build_candidates(config.candidates))
    start = time.perf_counter()
    result, _ = _classify_shared(resolved, work)
    elapsed = time.perf_counter() - start
    logger.debug(
        "Trial snr=%s scheme=%s trial=%d %s -> %s",
        config.snr_db_grid[snr_index],
        config.candidates[scheme_index].value,
        trial_index,
        resolved.value,
        "failed" if result.decided is None else result.decided.value,
    )
    return TrialRecord(
        snr_db=config.snr_db_grid[snr_index],
        scheme_true=config.candidates[scheme_index],
        scheme_decided=result.decided,
        algorithm=resolved,
        seed=seed,
        n=frame.n,
        m_t=frame.m_t,
        m_r=frame.m_r,
        failed=result.failed,
        elapsed=elapsed,
        snr_index=snr_index,
        scheme_index=scheme_index,
        trial_index=trial_index,
    )
