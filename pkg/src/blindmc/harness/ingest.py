"""One-shot classification of a recorded capture."""

from __future__ import annotations

from typing import TYPE_CHECKING

from blindmc.channel.capture import read_capture
from blindmc.classify.registry import build_classifier
from blindmc.modem.constellation import DEFAULT_CANDIDATES
from blindmc.modem.constellation import build_candidates


if TYPE_CHECKING:
    from collections.abc import Sequence
    from pathlib import Path

    from blindmc.core.types import Algorithm
    from blindmc.core.types import ClassificationResult
    from blindmc.core.types import SchemeId


def classify_file(
    metadata_path: str | Path,
    payload_path: str | Path,
    candidates: Sequence[SchemeId | str] = DEFAULT_CANDIDATES,
    algorithm: Algorithm | str = "proposed",
) -> ClassificationResult:
    """Read a capture and classify it.

    Returns:
        ClassificationResult for the capture.

    Raises:
        ConfigurationError: If the metadata is missing or invalid.
        CaptureFormatError: If the payload is malformed.
        MissingChannelError: If a perfect-CSI algorithm is requested.
    """
    frame = read_capture(metadata_path, payload_path)
    return build_classifier(algorithm).classify(frame, build_candidates(tuple(candidates)))


def format_ranking(result: ClassificationResult) -> str:
    """Render a result as text: the decision, then one line per hypothesis with its weights and gains."""
    if result.failed:
        return f"{result.algorithm.value}: estimation failed ({result.detail})\n"
    lines = [f"decided: {result.decided.value if result.decided else '-'} ({result.algorithm.value})"]
    for rank, score in enumerate(result.ranked, start=1):
        weights = ", ".join(f"{w:.4f}" for w in score.weights)
        line = f"{rank}. {score.hypothesis.value:<6} combined_log={score.combined_log:.6f}  beta=[{weights}]"
        if score.gains:
            line += "  c=[" + ", ".join(f"{c:.4f}" for c in score.gains) + "]"
        lines.append(line)
    return "\n".join(lines) + "\n"
