"""Algorithm name -> FrameClassifier."""

from __future__ import annotations

from typing import TYPE_CHECKING

from blindmc.classify.alrt import AlrtUpperBound
from blindmc.classify.hlrt import HlrtClassifier
from blindmc.classify.hlrt import JointHlrtClassifier
from blindmc.core.types import Algorithm


if TYPE_CHECKING:
    from blindmc.core.protocols import FrameClassifier


def build_classifier(algorithm: Algorithm | str) -> FrameClassifier:
    """Build the classifier implementing an algorithm.

    Returns:
        HlrtClassifier, JointHlrtClassifier or AlrtUpperBound.

    Raises:
        InvalidParameterError: If the name matches no algorithm.
    """
    resolved = Algorithm.parse(algorithm)
    match resolved:
        case Algorithm.ALRT_UB:
            return AlrtUpperBound()
        case Algorithm.HLRT_JOINT:
            return JointHlrtClassifier()
        case _:
            return HlrtClassifier(resolved)
