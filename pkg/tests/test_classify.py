"""Tests for blind HLRT classification and the classifier registry."""

import numpy as np
import pytest
from scipy.special import logsumexp

from blindmc.classify import AlrtUpperBound
from blindmc.classify import HlrtClassifier
from blindmc.classify import JointHlrtClassifier
from blindmc.classify import blind_estimate
from blindmc.classify import build_classifier
from blindmc.classify import classify
from blindmc.classify import evaluate_hypotheses
from blindmc.classify.fusion import fuse_product
from blindmc.classify.fusion import fuse_weighted_sum
from blindmc.core.errors import InvalidParameterError
from blindmc.core.protocols import FrameClassifier
from blindmc.core.types import Algorithm
from blindmc.core.types import BlindEstimate
from blindmc.core.types import MimoFrame
from blindmc.core.types import SchemeId
from tests.conftest import ALL_SCHEMES
from tests.conftest import make_frame


def test_high_snr_decisions(candidates):
    correct = 0
    for scheme in ALL_SCHEMES:
        for seed in range(3):
            result = classify(make_frame(scheme, snr_db=20.0, seed=seed), candidates)
            correct += result.decided is scheme
    assert correct >= 11


def test_ranking_is_consistent(candidates):
    result = classify(make_frame("8psk", snr_db=15.0, seed=4), candidates)
    assert not result.failed
    assert result.algorithm is Algorithm.PROPOSED
    assert result.decided is result.ranked[0].hypothesis
    assert len(result.ranked) == len(candidates)
    combined = [s.combined_log for s in result.ranked]
    assert combined == sorted(combined, reverse=True)
    for score in result.ranked:
        assert np.linalg.norm(score.weights) == pytest.approx(1.0, abs=1e-9)
        expected = 0.5 * logsumexp(2 * np.array(score.stream_loglik))
        assert score.combined_log == pytest.approx(expected, abs=1e-9)
        assert score.phases_used.hypothesis is score.hypothesis


def test_receive_antenna_order_does_not_matter(candidates):
    for seed in range(4):
        frame = make_frame("qpsk", snr_db=15.0, seed=seed)
        permuted = MimoFrame(
            received=frame.received[::-1],
            m_t=frame.m_t,
            noise_variance=frame.noise_variance,
        )
        assert classify(frame, candidates).decided is classify(permuted, candidates).decided


def test_estimation_failure_yields_failed_result(candidates):
    rng = np.random.default_rng(0)
    row = rng.standard_normal(128) + 1j * rng.standard_normal(128)
    frame = MimoFrame(received=np.vstack([row, row, row, row]), m_t=2, noise_variance=1e-3)
    result = classify(frame, candidates)
    assert result.failed
    assert result.decided is None
    assert result.ranked == ()
    assert "whitening" in result.detail


def test_shared_evaluations_match_direct_classification(candidates):
    frame = make_frame("16qam", snr_db=12.0, seed=9)
    estimate = blind_estimate(frame)
    evaluations = evaluate_hypotheses(frame, estimate, candidates)
    for algorithm in (Algorithm.PROPOSED, Algorithm.PRODUCT, Algorithm.EQUAL_WEIGHT):
        shared = HlrtClassifier(algorithm).decide(evaluations)
        direct = HlrtClassifier(algorithm).classify(frame, candidates, estimate=estimate)
        assert shared == direct


def test_joint_hlrt_at_high_snr(candidates):
    result = JointHlrtClassifier().classify(make_frame("qpsk", snr_db=20.0, n=256, seed=1), candidates)
    assert result.algorithm is Algorithm.HLRT_JOINT
    assert result.decided is SchemeId.QPSK


def test_classify_rejects_perfect_csi_algorithm(candidates):
    with pytest.raises(InvalidParameterError):
        classify(make_frame("bpsk", n=64), candidates, Algorithm.ALRT_UB)


def test_empty_candidates_rejected():
    with pytest.raises(InvalidParameterError):
        classify(make_frame("bpsk", n=64), [])


def test_registry():
    assert isinstance(build_classifier("alrt_ub"), AlrtUpperBound)
    assert isinstance(build_classifier("hlrt-joint"), JointHlrtClassifier)
    for name in ("proposed", "product", "equal_weight"):
        classifier = build_classifier(name)
        assert isinstance(classifier, HlrtClassifier)
        assert classifier.algorithm is Algorithm.parse(name)
    for name in ("proposed", "alrt_ub", "hlrt_joint"):
        assert isinstance(build_classifier(name), FrameClassifier)
    with pytest.raises(InvalidParameterError):
        build_classifier("majority_vote")


def test_scores_carry_effective_gains(candidates):
    frame = make_frame("16qam", snr_db=10.0, seed=6)
    result = classify(frame, candidates)
    for score in result.ranked:
        assert len(score.gains) == frame.m_t
        assert all(0.0 < c < 1.0 for c in score.gains)


def test_stream_order_of_estimate_does_not_change_scores(candidates):
    frame = make_frame("8psk", snr_db=12.0, seed=8)
    estimate = blind_estimate(frame)
    swapped = BlindEstimate(
        channel_estimate=estimate.channel_estimate[:, ::-1],
        separated_streams=estimate.separated_streams[::-1],
        whitening_matrix=estimate.whitening_matrix,
        sweeps=estimate.sweeps,
    )
    original = evaluate_hypotheses(frame, estimate, candidates)
    reordered = evaluate_hypotheses(frame, swapped, candidates)
    for a, b in zip(original, reordered, strict=True):
        assert b.stream_loglik == pytest.approx(a.stream_loglik[::-1], abs=1e-9)
        assert fuse_weighted_sum(b.stream_loglik)[0] == pytest.approx(fuse_weighted_sum(a.stream_loglik)[0], abs=1e-9)
        assert fuse_product(b.stream_loglik) == pytest.approx(fuse_product(a.stream_loglik), abs=1e-9)
