"""blindmc CLI -- Monte-Carlo sweeps, capture classification and experiment reproduction."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any
from typing import Final

from blindmc.config import SweepConfig
from blindmc.config import env_snr_grid
from blindmc.core.errors import ClassifierError
from blindmc.harness.figures import FIGURES
from blindmc.harness.figures import reproduce
from blindmc.harness.ingest import classify_file
from blindmc.harness.ingest import format_ranking
from blindmc.harness.report import emit_results
from blindmc.harness.sweep import run_sweep


_DEFAULT_OUT: Final = "results.csv"
_DEFAULT_REPRODUCE_DIR: Final = "results"
_DEFAULT_MODS: Final = "bpsk,qpsk,8psk,16qam"


def main(argv: list[str] | None = None) -> None:
    """Entry point for the blindmc CLI."""
    parser = argparse.ArgumentParser(
        prog="blindmc",
        description="blindmc -- blind modulation classification for MIMO",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    sub = parser.add_subparsers(dest="command")

    _add_sweep_cmd(sub)
    _add_classify_file_cmd(sub)
    _add_reproduce_cmd(sub)

    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    try:
        if args.command == "sweep":
            _run_sweep(args)
        elif args.command == "classify-file":
            _run_classify_file(args)
        elif args.command == "reproduce":
            _run_reproduce(args)
        else:
            parser.print_help()
    except ClassifierError as exc:
        sys.stderr.write(f"blindmc: error: {exc}\n")
        sys.exit(1)


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def _split(raw: str) -> list[str]:
    return [item.strip() for item in raw.split(",") if item.strip()]


def _add_sweep_cmd(sub: argparse._SubParsersAction) -> None:  # type: ignore[type-arg]
    """Register the sweep subcommand."""
    cmd = sub.add_parser("sweep", help="Run a Monte-Carlo P_cc sweep")
    cmd.add_argument("--snr-min", type=float, help="Lowest SNR in dB")
    cmd.add_argument("--snr-max", type=float, help="Highest SNR in dB")
    cmd.add_argument("--snr-step", type=float, help="SNR step in dB")
    cmd.add_argument("--trials", type=int, help="Trials per (SNR, scheme)")
    cmd.add_argument("--symbols", type=int, help="Observation length N")
    cmd.add_argument("--mt", type=int, help="Transmit antennas")
    cmd.add_argument("--mr", type=int, help="Receive antennas")
    cmd.add_argument("--mods", help="Comma-separated candidate schemes")
    cmd.add_argument("--algos", help="Comma-separated algorithms")
    cmd.add_argument("--seed", type=int, help="Master seed")
    cmd.add_argument("--threads", type=int, help="Worker threads")
    cmd.add_argument("--out", default=_DEFAULT_OUT, help="Output path")
    cmd.add_argument("--format", choices=("csv", "json"), default="csv", help="Output format")


def _add_classify_file_cmd(sub: argparse._SubParsersAction) -> None:  # type: ignore[type-arg]
    """Register the classify-file subcommand."""
    cmd = sub.add_parser("classify-file", help="Classify a recorded IQ capture")
    cmd.add_argument("--meta", required=True, help="JSON metadata sidecar")
    cmd.add_argument("--data", required=True, help="Binary complex128 payload")
    cmd.add_argument("--mods", default=_DEFAULT_MODS, help="Comma-separated candidate schemes")
    cmd.add_argument("--algo", default="proposed", help="Algorithm")


def _add_reproduce_cmd(sub: argparse._SubParsersAction) -> None:  # type: ignore[type-arg]
    """Register the reproduce subcommand."""
    cmd = sub.add_parser("reproduce", help="Re-run one of the published experiments")
    cmd.add_argument("--figure", type=int, choices=FIGURES, required=True, help="Experiment number")
    cmd.add_argument("--trials", type=int, help="Trials per (SNR, scheme); default 500")
    cmd.add_argument("--seed", type=int, help="Master seed")
    cmd.add_argument("--threads", type=int, default=1, help="Worker threads")
    cmd.add_argument("--out", default=_DEFAULT_REPRODUCE_DIR, help="Output directory")


def _sweep_config(args: argparse.Namespace) -> SweepConfig:
    """Build the sweep config from the given flags; only fields without a flag fall back to the environment."""
    overrides: dict[str, Any] = {}
    if any(value is not None for value in (args.snr_min, args.snr_max, args.snr_step)):
        overrides["snr_db_grid"] = env_snr_grid(args.snr_min, args.snr_max, args.snr_step)
    for flag, key in (
        ("trials", "trials_per_point"),
        ("symbols", "n_symbols"),
        ("mt", "m_t"),
        ("mr", "m_r"),
        ("seed", "master_seed"),
        ("threads", "threads"),
    ):
        value = getattr(args, flag)
        if value is not None:
            overrides[key] = value
    if args.mods is not None:
        overrides["candidates"] = tuple(_split(args.mods))
    if args.algos is not None:
        overrides["algorithms"] = tuple(_split(args.algos))
    return SweepConfig(**overrides)


def _run_sweep(args: argparse.Namespace) -> None:
    """Run a sweep and write its artifacts."""
    result = run_sweep(_sweep_config(args))
    for path in emit_results(result, args.out, args.format):
        sys.stdout.write(f"Wrote {path}\n")
    for algorithm in result.config.algorithms:
        for snr, pcc in result.pcc_curve(algorithm):
            sys.stdout.write(f"{algorithm.value:<13} {snr:7.2f} dB  P_cc={pcc:.4f}\n")


def _run_classify_file(args: argparse.Namespace) -> None:
    """Classify a capture and print the ranked hypotheses."""
    result = classify_file(args.meta, args.data, _split(args.mods), args.algo)
    sys.stdout.write(format_ranking(result))


def _run_reproduce(args: argparse.Namespace) -> None:
    """Run the presets of one experiment."""
    results = reproduce(args.figure, args.out, trials=args.trials, seed=args.seed, threads=args.threads)
    for label, result in results.items():
        for algorithm in result.config.algorithms:
            crossing = result.crossing_snr(algorithm)
            shown = "never" if crossing is None else f"{crossing:.2f} dB"
            sys.stdout.write(f"fig{args.figure} {label} {algorithm.value}: P_cc=0.9 at {shown}\n")


if __name__ == "__main__":
    main()
