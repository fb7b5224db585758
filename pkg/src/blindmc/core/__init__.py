from blindmc.core.errors import CaptureFormatError
from blindmc.core.errors import ClassifierError
from blindmc.core.errors import ConfigurationError
from blindmc.core.errors import DimensionMismatchError
from blindmc.core.errors import EstimationFailedError
from blindmc.core.errors import InvalidParameterError
from blindmc.core.errors import MissingChannelError
from blindmc.core.errors import ReportWriteError
from blindmc.core.errors import UnsupportedSchemeError
from blindmc.core.protocols import FrameClassifier
from blindmc.core.protocols import FusionRule
from blindmc.core.types import Algorithm
from blindmc.core.types import BlindEstimate
from blindmc.core.types import ChannelMatrix
from blindmc.core.types import ClassificationResult
from blindmc.core.types import ConstellationSpec
from blindmc.core.types import EqualizedStream
from blindmc.core.types import HypothesisEvaluation
from blindmc.core.types import HypothesisScore
from blindmc.core.types import MimoFrame
from blindmc.core.types import PhaseCorrection
from blindmc.core.types import SchemeId
from blindmc.core.types import SymbolSequence


__all__ = [
    "Algorithm",
    "BlindEstimate",
    "CaptureFormatError",
    "ChannelMatrix",
    "ClassificationResult",
    "ClassifierError",
    "ConfigurationError",
    "ConstellationSpec",
    "DimensionMismatchError",
    "EqualizedStream",
    "EstimationFailedError",
    "FrameClassifier",
    "FusionRule",
    "HypothesisEvaluation",
    "HypothesisScore",
    "InvalidParameterError",
    "MimoFrame",
    "MissingChannelError",
    "PhaseCorrection",
    "ReportWriteError",
    "SchemeId",
    "SymbolSequence",
    "UnsupportedSchemeError",
]
