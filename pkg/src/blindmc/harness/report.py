"""Result artifacts: per-cell CSV, flattened confusion CSV and a JSON summary.

Floats are written with repr so re-reading reproduces them exactly.
"""

from __future__ import annotations

import csv
import json
import logging
from pathlib import Path
from typing import TYPE_CHECKING
from typing import Any
from typing import Final

import numpy as np

from blindmc.core.errors import InvalidParameterError
from blindmc.core.errors import ReportWriteError
from blindmc.core.types import Algorithm
from blindmc.harness.sweep import FAILED_LABEL


if TYPE_CHECKING:
    from blindmc.harness.sweep import SweepResult


logger = logging.getLogger(__name__)

RESULTS_HEADER: Final = ("snr_db", "algorithm", "scheme_true", "trials", "correct", "accuracy")
CONFUSION_HEADER: Final = ("snr_db", "algorithm", "scheme_true", "scheme_decided", "count")
_CROSSING_LEVEL: Final = 0.9


def result_rows(result: SweepResult) -> list[dict[str, Any]]:
    """One row per (snr, algorithm, true scheme), in grid, algorithm and candidate order."""
    rows = []
    for snr in result.config.snr_db_grid:
        for algorithm in result.config.algorithms:
            for scheme in result.config.candidates:
                rows.append(
                    {
                        "snr_db": snr,
                        "algorithm": algorithm.value,
                        "scheme_true": scheme.value,
                        "trials": result.trials(snr, algorithm, scheme),
                        "correct": result.correct(snr, algorithm, scheme),
                        "accuracy": result.accuracy(snr, algorithm, scheme),
                    }
                )
    return rows


def confusion_rows(result: SweepResult) -> list[dict[str, Any]]:
    """Flattened confusion counts; decided labels follow candidate order, then "failed"."""
    labels = [scheme.value for scheme in result.config.candidates] + [FAILED_LABEL]
    rows = []
    for snr in result.config.snr_db_grid:
        for algorithm in result.config.algorithms:
            for scheme, counts in result.confusion(snr, algorithm).items():
                rows.extend(
                    {
                        "snr_db": snr,
                        "algorithm": algorithm.value,
                        "scheme_true": scheme.value,
                        "scheme_decided": label,
                        "count": counts[label],
                    }
                    for label in labels
                )
    return rows


def build_summary(result: SweepResult) -> dict[str, Any]:
    """JSON-ready summary with config echo, P_cc, accuracy, confusion, runtime and inner terms.

    Returns:
        Summary dict.
    """
    cells = []
    for snr in result.config.snr_db_grid:
        for algorithm in result.config.algorithms:
            cells.append(
                {
                    "snr_db": snr,
                    "algorithm": algorithm.value,
                    "pcc": result.pcc(snr, algorithm),
                    "pcc_stderr": result.pcc_stderr(snr, algorithm),
                    "accuracy": {
                        scheme.value: result.accuracy(snr, algorithm, scheme) for scheme in result.config.candidates
                    },
                    "confusion": {
                        scheme.value: dict(counts) for scheme, counts in result.confusion(snr, algorithm).items()
                    },
                    "failures": result.failures(snr, algorithm),
                }
            )

    crossings = {
        algorithm.value: result.crossing_snr(algorithm, _CROSSING_LEVEL) for algorithm in result.config.algorithms
    }
    summary: dict[str, Any] = {
        "config": result.config.to_dict(),
        "master_seed": result.config.master_seed,
        "cells": cells,
        "runtime_s": {algorithm.value: seconds for algorithm, seconds in result.runtime.items()},
        "inner_terms": {
            algorithm.value: {scheme.value: terms for scheme, terms in result.inner_terms(algorithm).items()}
            for algorithm in result.config.algorithms
        },
        "crossing_snr_90": crossings,
    }
    proposed = crossings.get(Algorithm.PROPOSED.value)
    bound = crossings.get(Algorithm.ALRT_UB.value)
    if proposed is not None and bound is not None:
        summary["alrt_ub_gap_db"] = proposed - bound
    return summary


def _write_csv(path: Path, header: tuple[str, ...], rows: list[dict[str, Any]]) -> None:
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=header)
        writer.writeheader()
        for row in rows:
            writer.writerow(
                {key: repr(float(value)) if isinstance(value, float) else value for key, value in row.items()}
            )


def emit_results(result: SweepResult, path: str | Path, fmt: str = "csv") -> list[Path]:
    """Write sweep artifacts.

    ``csv`` writes the results CSV at ``path`` plus ``<stem>_confusion.csv`` and ``<stem>.json``
    beside it; ``json`` writes only the summary, at ``path`` with its suffix replaced by ``.json``.

    Returns:
        Paths written, results first.

    Raises:
        InvalidParameterError: If fmt is neither csv nor json.
        ReportWriteError: If any file cannot be written.
    """
    target = Path(path)
    summary_path = target.with_suffix(".json")
    written: list[Path] = []
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        match fmt:
            case "csv":
                confusion_path = target.with_name(f"{target.stem}_confusion.csv")
                _write_csv(target, RESULTS_HEADER, result_rows(result))
                _write_csv(confusion_path, CONFUSION_HEADER, confusion_rows(result))
                written += [target, confusion_path]
            case "json":
                pass
            case _:
                raise InvalidParameterError("format", fmt, "expected csv or json")
        summary_path.write_text(json.dumps(build_summary(result), indent=2), encoding="utf-8")
        written.append(summary_path)
    except OSError as exc:
        raise ReportWriteError(str(target), str(exc)) from exc
    logger.info("Wrote %s", ", ".join(str(p) for p in written))
    return written


def read_results_csv(path: str | Path) -> list[dict[str, Any]]:
    """Parse a results CSV back into typed rows.

    Raises:
        ReportWriteError: If the file is unreadable or its header differs from RESULTS_HEADER.
    """
    source = Path(path)
    try:
        with source.open(newline="", encoding="utf-8") as handle:
            reader = csv.DictReader(handle)
            if tuple(reader.fieldnames or ()) != RESULTS_HEADER:
                raise ReportWriteError(str(source), f"unexpected header {reader.fieldnames}")
            return [
                {
                    "snr_db": float(row["snr_db"]),
                    "algorithm": row["algorithm"],
                    "scheme_true": row["scheme_true"],
                    "trials": int(row["trials"]),
                    "correct": int(row["correct"]),
                    "accuracy": float(row["accuracy"]),
                }
                for row in reader
            ]
    except (OSError, ValueError) as exc:
        raise ReportWriteError(str(source), str(exc)) from exc


def pcc_from_rows(rows: list[dict[str, Any]], snr_db: float, algorithm: Algorithm | str) -> float:
    """Mean per-scheme accuracy at one grid point, from re-read CSV rows.

    Raises:
        InvalidParameterError: If no row matches.
    """
    name = Algorithm.parse(algorithm).value
    accuracies = [row["accuracy"] for row in rows if row["snr_db"] == snr_db and row["algorithm"] == name]
    if not accuracies:
        raise InvalidParameterError("snr_db", snr_db, f"no rows for {name}")
    return float(np.mean(accuracies))


def load_summary(path: str | Path) -> dict[str, Any]:
    """Read a JSON summary written by emit_results.

    Raises:
        ReportWriteError: If the file is unreadable or not valid JSON.
    """
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ReportWriteError(str(path), str(exc)) from exc
