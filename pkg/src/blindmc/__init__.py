"""blindmc: blind modulation classification for spatial-multiplexing MIMO."""

from blindmc.channel.capture import read_capture
from blindmc.channel.capture import write_capture
from blindmc.channel.simulate import derive_seed
from blindmc.channel.simulate import draw_channel
from blindmc.channel.simulate import noise_variance_from_snr
from blindmc.channel.simulate import synthesize_frame
from blindmc.classify.alrt import AlrtUpperBound
from blindmc.classify.alrt import classify_alrt_ub
from blindmc.classify.fusion import fuse_equal_weight
from blindmc.classify.fusion import fuse_product
from blindmc.classify.fusion import fuse_weighted_sum
from blindmc.classify.hlrt import HlrtClassifier
from blindmc.classify.hlrt import JointHlrtClassifier
from blindmc.classify.hlrt import classify
from blindmc.classify.hlrt import evaluate_hypotheses
from blindmc.classify.likelihood import alrt_ub_log_likelihood
from blindmc.classify.likelihood import inner_terms
from blindmc.classify.likelihood import joint_log_likelihood
from blindmc.classify.likelihood import stream_log_likelihood
from blindmc.classify.registry import build_classifier
from blindmc.config import SweepConfig
from blindmc.config import env_snr_grid
from blindmc.config import snr_grid
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
from blindmc.equalize.mmse import distortion_variance
from blindmc.equalize.mmse import effective_gain
from blindmc.equalize.mmse import equalize
from blindmc.equalize.mmse import mmse_filter
from blindmc.estimation.jade import jade_separate
from blindmc.estimation.phase import estimate_phase
from blindmc.estimation.phase import phase_correct
from blindmc.estimation.whitening import whiten
from blindmc.harness.figures import figure_presets
from blindmc.harness.figures import reproduce
from blindmc.harness.ingest import classify_file
from blindmc.harness.report import emit_results
from blindmc.harness.report import pcc_from_rows
from blindmc.harness.report import read_results_csv
from blindmc.harness.sweep import SweepResult
from blindmc.harness.sweep import aggregate
from blindmc.harness.sweep import binomial_stderr
from blindmc.harness.sweep import run_sweep
from blindmc.harness.trial import TrialRecord
from blindmc.harness.trial import run_cell
from blindmc.harness.trial import run_trial
from blindmc.modem.constellation import DEFAULT_CANDIDATES
from blindmc.modem.constellation import build_candidates
from blindmc.modem.constellation import build_constellation
from blindmc.modem.constellation import constellation_moment
from blindmc.modem.constellation import draw_symbols


__all__ = [
    "DEFAULT_CANDIDATES",
    "Algorithm",
    "AlrtUpperBound",
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
    "HlrtClassifier",
    "HypothesisEvaluation",
    "HypothesisScore",
    "InvalidParameterError",
    "JointHlrtClassifier",
    "MimoFrame",
    "MissingChannelError",
    "PhaseCorrection",
    "ReportWriteError",
    "SchemeId",
    "SweepConfig",
    "SweepResult",
    "SymbolSequence",
    "TrialRecord",
    "UnsupportedSchemeError",
    "aggregate",
    "alrt_ub_log_likelihood",
    "binomial_stderr",
    "build_candidates",
    "build_classifier",
    "build_constellation",
    "classify",
    "classify_alrt_ub",
    "classify_file",
    "constellation_moment",
    "derive_seed",
    "distortion_variance",
    "draw_channel",
    "draw_symbols",
    "effective_gain",
    "emit_results",
    "env_snr_grid",
    "equalize",
    "estimate_phase",
    "evaluate_hypotheses",
    "figure_presets",
    "fuse_equal_weight",
    "fuse_product",
    "fuse_weighted_sum",
    "inner_terms",
    "jade_separate",
    "joint_log_likelihood",
    "mmse_filter",
    "noise_variance_from_snr",
    "pcc_from_rows",
    "phase_correct",
    "read_capture",
    "read_results_csv",
    "reproduce",
    "run_cell",
    "run_sweep",
    "run_trial",
    "snr_grid",
    "stream_log_likelihood",
    "synthesize_frame",
    "whiten",
    "write_capture",
]
