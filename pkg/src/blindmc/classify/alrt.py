"""Perfect-CSI average likelihood ratio test, the benchmark upper bound."""

from __future__ import annotations

from typing import TYPE_CHECKING

from blindmc.classify.likelihood import alrt_ub_log_likelihood
from blindmc.core.errors import InvalidParameterError
from blindmc.core.types import Algorithm
from blindmc.core.types import ClassificationResult
from blindmc.core.types import HypothesisScore


if TYPE_CHECKING:
    from collections.abc import Sequence

    from blindmc.core.types import ConstellationSpec
    from blindmc.core.types import MimoFrame


def classify_alrt_ub(frame: MimoFrame, candidates: Sequence[ConstellationSpec]) -> ClassificationResult:
    """Pick the candidate with the largest true-channel joint log-likelihood.

    Returns:
        ClassificationResult ranked by log-likelihood, ties toward the earlier candidate.

    Raises:
        MissingChannelError: If the frame has no true channel.
        InvalidParameterError: If candidates is empty.
    """
    if not candidates:
        raise InvalidParameterError("candidates", [], "at least one candidate scheme is required")
    scores = []
    for spec in candidates:
        loglik = alrt_ub_log_likelihood(frame, spec)
        scores.append(
            HypothesisScore(hypothesis=spec.scheme, stream_loglik=(loglik,), weights=(1.0,), combined_log=loglik)
        )
    ranked = tuple(sorted(scores, key=lambda score: -score.combined_log))
    return ClassificationResult(decided=ranked[0].hypothesis, ranked=ranked, algorithm=Algorithm.ALRT_UB)


class AlrtUpperBound:
    """FrameClassifier wrapper around classify_alrt_ub."""

    @property
    def algorithm(self) -> Algorithm:
        """Return Algorithm.ALRT_UB."""
        return Algorithm.ALRT_UB

    def classify(self, frame: MimoFrame, candidates: Sequence[ConstellationSpec]) -> ClassificationResult:
        """Classify with the true channel carried by the frame."""
        return classify_alrt_ub(frame, candidates)
