from blindmc.harness.figures import figure_presets
from blindmc.harness.figures import reproduce
from blindmc.harness.ingest import classify_file
from blindmc.harness.ingest import format_ranking
from blindmc.harness.report import emit_results
from blindmc.harness.report import load_summary
from blindmc.harness.report import pcc_from_rows
from blindmc.harness.report import read_results_csv
from blindmc.harness.sweep import SweepResult
from blindmc.harness.sweep import aggregate
from blindmc.harness.sweep import binomial_stderr
from blindmc.harness.sweep import run_sweep
from blindmc.harness.trial import TrialRecord
from blindmc.harness.trial import run_cell
from blindmc.harness.trial import run_trial
from blindmc.harness.trial import synthesize_trial_frame


__all__ = [
    "SweepResult",
    "TrialRecord",
    "aggregate",
    "binomial_stderr",
    "classify_file",
    "emit_results",
    "figure_presets",
    "format_ranking",
    "load_summary",
    "pcc_from_rows",
    "read_results_csv",
    "reproduce",
    "run_cell",
    "run_sweep",
    "run_trial",
    "synthesize_trial_frame",
]
