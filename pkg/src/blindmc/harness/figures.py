"""Sweep presets for the four published experiments, and a runner that writes their artifacts.

1: observation length N in {256, 512, 1024}
2: receive antennas M_R in {4, 6, 8}
3: fusion rules (weighted sum, equal weight, product) on paired frames
4: proposed vs the perfect-CSI ALRT upper bound on a 1 dB grid
"""

from __future__ import annotations

import dataclasses
import logging
from pathlib import Path
from typing import TYPE_CHECKING
from typing import Final

from blindmc.config import SweepConfig
from blindmc.config import snr_grid
from blindmc.core.errors import ConfigurationError
from blindmc.core.types import Algorithm
from blindmc.harness.report import emit_results
from blindmc.harness.sweep import run_sweep


if TYPE_CHECKING:
    from blindmc.harness.sweep import SweepResult


logger = logging.getLogger(__name__)

FIGURES: Final = (1, 2, 3, 4)
_FINE_STEP_DB: Final = 1.0


def figure_presets(
    figure: int,
    trials: int | None = None,
    seed: int | None = None,
    threads: int = 1,
) -> dict[str, SweepConfig]:
    """Ordered label -> SweepConfig for one experiment, derived from SweepConfig.reference_default().

    Raises:
        ConfigurationError: If figure is not 1..4.
    """
    base = SweepConfig.reference_default()
    overrides: dict[str, int] = {"threads": threads}
    if trials is not None:
        overrides["trials_per_point"] = trials
    if seed is not None:
        overrides["master_seed"] = seed
    base = dataclasses.replace(base, **overrides)

    match figure:
        case 1:
            return {f"n{n}": dataclasses.replace(base, n_symbols=n) for n in (256, 512, 1024)}
        case 2:
            return {f"mr{m_r}": dataclasses.replace(base, m_r=m_r) for m_r in (4, 6, 8)}
        case 3:
            algorithms = (Algorithm.PROPOSED, Algorithm.EQUAL_WEIGHT, Algorithm.PRODUCT)
            return {"fusion": dataclasses.replace(base, algorithms=algorithms)}
        case 4:
            grid = snr_grid(base.snr_db_grid[0], base.snr_db_grid[-1], _FINE_STEP_DB)
            algorithms = (Algorithm.PROPOSED, Algorithm.ALRT_UB)
            return {"benchmark": dataclasses.replace(base, snr_db_grid=grid, algorithms=algorithms)}
        case _:
            raise ConfigurationError("figure", f"expected one of {FIGURES}, got {figure}")


def reproduce(
    figure: int,
    out_dir: str | Path,
    trials: int | None = None,
    seed: int | None = None,
    threads: int = 1,
) -> dict[str, SweepResult]:
    """Run every preset of one experiment and write ``<out_dir>/fig<k>_<label>.csv`` artifacts.

    Returns:
        Label -> SweepResult, in preset order.
    """
    results = {}
    for label, config in figure_presets(figure, trials, seed, threads).items():
        logger.info("Reproducing figure %d, preset %s", figure, label)
        result = run_sweep(config)
        emit_results(result, Path(out_dir) / f"fig{figure}_{label}.csv", "csv")
        results[label] = result
    return results
