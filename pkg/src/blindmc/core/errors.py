"""ClassifierError hierarchy for blindmc."""

from __future__ import annotations

from typing import Any


class ClassifierError(Exception):
    """Base exception for all blindmc errors."""


class UnsupportedSchemeError(ClassifierError):
    """Requested modulation scheme is not one of the supported candidates."""

    def __init__(self, scheme: object) -> None:
        self.scheme = scheme
        super().__init__(
            f"Unsupported modulation scheme: {scheme!r} (expected one of bpsk, qpsk, 8psk, 16qam)"
        )


class DimensionMismatchError(ClassifierError):
    """Array shapes are inconsistent with each other."""

    def __init__(self, expected: object, found: object, what: str = "array") -> None:
        self.expected = expected
        self.found = found
        self.what = what
        super().__init__(f"Dimension mismatch for {what}: expected {expected}, found {found}")


class InvalidParameterError(ClassifierError):
    """A scalar or array argument is outside its valid range."""

    def __init__(self, name: str, value: Any, detail: str) -> None:
        self.name = name
        self.value = value
        self.detail = detail
        super().__init__(f"Invalid {name}={value!r}: {detail}")


class EstimationFailedError(ClassifierError):
    """Blind channel estimation could not produce a usable estimate."""

    def __init__(self, stage: str, detail: str) -> None:
        self.stage = stage
        self.detail = detail
        super().__init__(f"Estimation failed during {stage}: {detail}")


class MissingChannelError(ClassifierError):
    """A perfect-CSI algorithm was given a frame without the true channel."""

    def __init__(self, algorithm: str) -> None:
        self.algorithm = algorithm
        super().__init__(f"{algorithm} requires the true channel matrix, but the frame has none")


class CaptureFormatError(ClassifierError):
    """IQ capture payload is malformed."""

    def __init__(self, path: str, detail: str) -> None:
        self.path = path
        self.detail = detail
        super().__init__(f"Malformed capture at {path}: {detail}")


class ConfigurationError(ClassifierError):
    """A configuration value or metadata key is missing or invalid."""

    def __init__(self, key: str, detail: str) -> None:
        self.key = key
        self.detail = detail
        super().__init__(f"Configuration error for '{key}': {detail}")


class ReportWriteError(ClassifierError):
    """Writing or reading a result artifact failed."""

    def __init__(self, path: str, detail: str) -> None:
        self.path = path
        self.detail = detail
        super().__init__(f"Result artifact error at {path}: {detail}")
