"""Tests for result artifacts."""

import csv
from collections import Counter

import pytest

from blindmc.core.errors import InvalidParameterError
from blindmc.core.errors import ReportWriteError
from blindmc.core.types import Algorithm
from blindmc.core.types import SchemeId
from blindmc.harness import SweepResult
from blindmc.harness import emit_results
from blindmc.harness import load_summary
from blindmc.harness import pcc_from_rows
from blindmc.harness import read_results_csv
from blindmc.harness import run_sweep
from blindmc.harness.report import CONFUSION_HEADER
from blindmc.harness.report import RESULTS_HEADER
from tests.conftest import tiny_config


@pytest.fixture(scope="module")
def sweep_result():
    return run_sweep(tiny_config(snr_db_grid=(0.0, 10.0), algorithms=("proposed", "product")))


def test_csv_artifacts(sweep_result, tmp_path):
    written = emit_results(sweep_result, tmp_path / "out" / "run.csv")
    assert [p.name for p in written] == ["run.csv", "run_confusion.csv", "run.json"]
    with written[0].open(newline="") as handle:
        assert tuple(next(csv.reader(handle))) == RESULTS_HEADER
    with written[1].open(newline="") as handle:
        rows = list(csv.DictReader(handle))
    assert tuple(rows[0]) == CONFUSION_HEADER
    # 2 SNR x 2 algorithms x 4 true schemes x (4 decided labels + failed)
    assert len(rows) == 2 * 2 * 4 * 5
    assert sum(int(r["count"]) for r in rows) == 2 * 2 * 4 * 2


def test_csv_round_trip(sweep_result, tmp_path):
    path = emit_results(sweep_result, tmp_path / "run.csv")[0]
    rows = read_results_csv(path)
    assert len(rows) == 2 * 2 * 4
    for snr in (0.0, 10.0):
        for algorithm in (Algorithm.PROPOSED, Algorithm.PRODUCT):
            assert abs(pcc_from_rows(rows, snr, algorithm) - sweep_result.pcc(snr, algorithm)) < 1e-12


def test_summary_contents(sweep_result, tmp_path):
    path = emit_results(sweep_result, tmp_path / "run.json", fmt="json")
    assert [p.name for p in path] == ["run.json"]
    summary = load_summary(path[0])
    assert summary["master_seed"] == 7
    assert summary["config"]["algorithms"] == ["proposed", "product"]
    assert len(summary["cells"]) == 4
    assert summary["inner_terms"]["proposed"]["16qam"] == 32
    cell = summary["cells"][0]
    assert cell["pcc"] == pytest.approx(sweep_result.pcc(0.0, Algorithm.PROPOSED))
    assert set(cell["accuracy"]) == {"bpsk", "qpsk", "8psk", "16qam"}


def test_json_format_replaces_suffix(sweep_result, tmp_path):
    written = emit_results(sweep_result, tmp_path / "run.csv", fmt="json")
    assert [p.name for p in written] == ["run.json"]
    assert not (tmp_path / "run.csv").exists()
    summary = load_summary(written[0])
    assert summary["master_seed"] == 7
    assert "alrt_ub_gap_db" not in summary


def test_summary_reports_benchmark_gap(tmp_path):
    config = tiny_config(snr_db_grid=(0.0, 2.0), candidates=("qpsk",), algorithms=("proposed", "alrt_ub"))
    hits = {(0.0, Algorithm.PROPOSED): 1, (2.0, Algorithm.PROPOSED): 2, (0.0, Algorithm.ALRT_UB): 2}
    hits[(2.0, Algorithm.ALRT_UB)] = 2
    decisions = {
        (snr, algorithm, SchemeId.QPSK): Counter({"qpsk": count, "bpsk": 2 - count})
        for (snr, algorithm), count in hits.items()
    }
    result = SweepResult(config=config, decisions=decisions, runtime=dict.fromkeys(config.algorithms, 0.0))
    summary = load_summary(emit_results(result, tmp_path / "gap.json", fmt="json")[0])
    assert summary["crossing_snr_90"] == {"proposed": pytest.approx(1.6), "alrt_ub": 0.0}
    assert summary["alrt_ub_gap_db"] == pytest.approx(1.6)


def test_unwritable_target(sweep_result, tmp_path):
    blocker = tmp_path / "file.txt"
    blocker.write_text("x")
    with pytest.raises(ReportWriteError):
        emit_results(sweep_result, blocker / "run.csv")


def test_unknown_format(sweep_result, tmp_path):
    with pytest.raises(InvalidParameterError):
        emit_results(sweep_result, tmp_path / "run.xml", fmt="xml")


def test_read_rejects_foreign_csv(tmp_path):
    path = tmp_path / "other.csv"
    path.write_text("a,b\n1,2\n")
    with pytest.raises(ReportWriteError, match="unexpected header"):
        read_results_csv(path)
    with pytest.raises(ReportWriteError):
        load_summary(tmp_path / "missing.json")
