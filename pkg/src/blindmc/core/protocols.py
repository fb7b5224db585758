"""Protocol definitions for frame classifiers and fusion rules."""

from __future__ import annotations

from typing import TYPE_CHECKING
from typing import Protocol
from typing import runtime_checkable


if TYPE_CHECKING:
    from collections.abc import Sequence

    from blindmc.core.types import Algorithm
    from blindmc.core.types import ClassificationResult
    from blindmc.core.types import ConstellationSpec
    from blindmc.core.types import MimoFrame


@runtime_checkable
class FrameClassifier(Protocol):
    """Structural interface for anything that decides a frame's modulation scheme."""

    @property
    def algorithm(self) -> Algorithm:
        """Return the algorithm this classifier implements."""
        ...

    def classify(
        self,
        frame: MimoFrame,
        candidates: Sequence[ConstellationSpec],
    ) -> ClassificationResult:
        """Rank the candidates for one frame."""
        ...


class FusionRule(Protocol):
    """Combines per-stream log-likelihoods into one hypothesis score."""

    def __call__(self, stream_loglik: Sequence[float]) -> tuple[float, tuple[float, ...]]:
        """Return (combined_log, weights)."""
        ...
