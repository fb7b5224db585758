from blindmc.classify.alrt import AlrtUpperBound
from blindmc.classify.alrt import classify_alrt_ub
from blindmc.classify.fusion import fuse_equal_weight
from blindmc.classify.fusion import fuse_product
from blindmc.classify.fusion import fuse_weighted_sum
from blindmc.classify.fusion import fusion_rule
from blindmc.classify.hlrt import HlrtClassifier
from blindmc.classify.hlrt import JointHlrtClassifier
from blindmc.classify.hlrt import blind_estimate
from blindmc.classify.hlrt import classify
from blindmc.classify.hlrt import evaluate_hypotheses
from blindmc.classify.hlrt import failed_result
from blindmc.classify.hlrt import rank_hypotheses
from blindmc.classify.likelihood import alrt_ub_log_likelihood
from blindmc.classify.likelihood import inner_terms
from blindmc.classify.likelihood import joint_log_likelihood
from blindmc.classify.likelihood import joint_symbol_vectors
from blindmc.classify.likelihood import stream_log_likelihood
from blindmc.classify.registry import build_classifier


__all__ = [
    "AlrtUpperBound",
    "HlrtClassifier",
    "JointHlrtClassifier",
    "alrt_ub_log_likelihood",
    "blind_estimate",
    "build_classifier",
    "classify",
    "classify_alrt_ub",
    "evaluate_hypotheses",
    "failed_result",
    "fuse_equal_weight",
    "fuse_product",
    "fuse_weighted_sum",
    "fusion_rule",
    "inner_terms",
    "joint_log_likelihood",
    "joint_symbol_vectors",
    "rank_hypotheses",
    "stream_log_likelihood",
]
