"""HLRT classification from a blind channel estimate.

Per frame: JADE once, then for every candidate scheme the power-law phase correction of the
channel estimate, MMSE splitting into sub-channels, per-stream likelihoods and a fusion rule.
The joint variant skips the MMSE split and scores the whole received block with the
phase-corrected estimate.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from blindmc.classify.fusion import fusion_rule
from blindmc.classify.likelihood import joint_log_likelihood
from blindmc.classify.likelihood import stream_log_likelihood
from blindmc.core.errors import EstimationFailedError
from blindmc.core.errors import InvalidParameterError
from blindmc.core.types import Algorithm
from blindmc.core.types import ClassificationResult
from blindmc.core.types import HypothesisEvaluation
from blindmc.core.types import HypothesisScore
from blindmc.equalize.mmse import equalize_streams
from blindmc.estimation.jade import jade_separate
from blindmc.estimation.phase import estimate_phases
from blindmc.estimation.phase import phase_correct


if TYPE_CHECKING:
    from collections.abc import Sequence

    from blindmc.core.protocols import FusionRule
    from blindmc.core.types import BlindEstimate
    from blindmc.core.types import ConstellationSpec
    from blindmc.core.types import MimoFrame


logger = logging.getLogger(__name__)


def blind_estimate(frame: MimoFrame) -> BlindEstimate:
    """Run JADE on a frame's received block.

    Raises:
        EstimationFailedError: If separation fails.
    """
    return jade_separate(frame.received, frame.m_t, frame.noise_variance)


def evaluate_hypotheses(
    frame: MimoFrame,
    estimate: BlindEstimate,
    candidates: Sequence[ConstellationSpec],
) -> tuple[HypothesisEvaluation, ...]:
    """Per-stream log-likelihoods of every candidate, independent of the fusion rule.

    Returns:
        One HypothesisEvaluation per candidate, in candidate order.

    Raises:
        EstimationFailedError: If the MMSE stage finds an inconsistent estimate.
    """
    evaluations = []
    for spec in candidates:
        phases = estimate_phases(estimate, spec)
        channel_hyp = phase_correct(estimate.channel_estimate, phases)
        streams = equalize_streams(channel_hyp, frame.received, frame.noise_variance, spec.scheme)
        loglik = tuple(
            stream_log_likelihood(s.estimates, s.effective_gain, s.distortion_variance, spec)
            for s in streams
        )
        evaluations.append(
            HypothesisEvaluation(
                hypothesis=spec.scheme,
                stream_loglik=loglik,
                phases=phases,
                gains=tuple(s.effective_gain for s in streams),
            )
        )
    return tuple(evaluations)


def rank_hypotheses(
    evaluations: Sequence[HypothesisEvaluation],
    rule: FusionRule,
) -> tuple[HypothesisScore, ...]:
    """Fuse and sort hypotheses by combined log-likelihood, descending.

    The sort is stable, so ties keep candidate order.

    Returns:
        Ranked HypothesisScore tuple.
    """
    scores = []
    for evaluation in evaluations:
        combined, weights = rule(evaluation.stream_loglik)
        scores.append(
            HypothesisScore(
                hypothesis=evaluation.hypothesis,
                stream_loglik=evaluation.stream_loglik,
                weights=weights,
                combined_log=combined,
                phases_used=evaluation.phases,
                gains=evaluation.gains,
            )
        )
    return tuple(sorted(scores, key=lambda score: -score.combined_log))


def failed_result(algorithm: Algorithm, error: EstimationFailedError) -> ClassificationResult:
    """Convert an estimation failure into a result with no decision.

    Returns:
        ClassificationResult with failed=True and an empty ranking.
    """
    logger.warning("%s: %s; frame scored as failed", algorithm.value, error)
    logger.debug("Estimation failure detail", exc_info=error)
    return ClassificationResult(decided=None, ranked=(), algorithm=algorithm, failed=True, detail=str(error))


def _decided(ranked: tuple[HypothesisScore, ...], algorithm: Algorithm) -> ClassificationResult:
    if not ranked:
        raise InvalidParameterError("candidates", [], "at least one candidate scheme is required")
    return ClassificationResult(decided=ranked[0].hypothesis, ranked=ranked, algorithm=algorithm)


class HlrtClassifier:
    """Blind HLRT with per-stream MMSE likelihoods and a selectable fusion rule."""

    def __init__(self, algorithm: Algorithm = Algorithm.PROPOSED) -> None:
        self._rule = fusion_rule(algorithm)
        self._algorithm = algorithm

    @property
    def algorithm(self) -> Algorithm:
        """Return the fusion variant this classifier implements."""
        return self._algorithm

    def classify(
        self,
        frame: MimoFrame,
        candidates: Sequence[ConstellationSpec],
        estimate: BlindEstimate | None = None,
    ) -> ClassificationResult:
        """Classify one frame, reusing ``estimate`` when the caller already ran JADE.

        Returns:
            ClassificationResult; failed when blind estimation breaks down.
        """
        try:
            if estimate is None:
                estimate = blind_estimate(frame)
            evaluations = evaluate_hypotheses(frame, estimate, candidates)
        except EstimationFailedError as exc:
            return failed_result(self._algorithm, exc)
        return self.decide(evaluations)

    def decide(self, evaluations: Sequence[HypothesisEvaluation]) -> ClassificationResult:
        """Apply this classifier's fusion rule to precomputed evaluations.

        Returns:
            ClassificationResult for the best fused hypothesis.
        """
        return _decided(rank_hypotheses(evaluations, self._rule), self._algorithm)


class JointHlrtClassifier:
    """Blind HLRT scoring the whole received block with the phase-corrected channel estimate."""

    @property
    def algorithm(self) -> Algorithm:
        """Return Algorithm.HLRT_JOINT."""
        return Algorithm.HLRT_JOINT

    def classify(
        self,
        frame: MimoFrame,
        candidates: Sequence[ConstellationSpec],
        estimate: BlindEstimate | None = None,
    ) -> ClassificationResult:
        """Classify one frame by exhaustive joint likelihood under the blind estimate.

        Returns:
            ClassificationResult; failed when blind estimation breaks down.
        """
        try:
            if estimate is None:
                estimate = blind_estimate(frame)
        except EstimationFailedError as exc:
            return failed_result(self.algorithm, exc)

        scores = []
        for spec in candidates:
            phases = estimate_phases(estimate, spec)
            channel_hyp = phase_correct(estimate.channel_estimate, phases)
            loglik = joint_log_likelihood(frame.received, channel_hyp, frame.noise_variance, spec)
            scores.append(
                HypothesisScore(
                    hypothesis=spec.scheme,
                    stream_loglik=(loglik,),
                    weights=(1.0,),
                    combined_log=loglik,
                    phases_used=phases,
                )
            )
        return _decided(tuple(sorted(scores, key=lambda score: -score.combined_log)), self.algorithm)


def classify(
    frame: MimoFrame,
    candidates: Sequence[ConstellationSpec],
    algorithm: Algorithm = Algorithm.PROPOSED,
) -> ClassificationResult:
    """Blindly classify one frame with a per-stream fusion rule or the joint HLRT.

    Returns:
        ClassificationResult.

    Raises:
        InvalidParameterError: If the algorithm needs perfect channel knowledge.
    """
    match algorithm:
        case Algorithm.HLRT_JOINT:
            return JointHlrtClassifier().classify(frame, candidates)
        case Algorithm.ALRT_UB:
            raise InvalidParameterError("algorithm", algorithm.value, "needs the true channel; use classify_alrt_ub")
        case _:
            return HlrtClassifier(algorithm).classify(frame, candidates)
