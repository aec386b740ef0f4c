"""Exception hierarchy shared across the toolchain.

Each class carries the process exit code the CLI uses for that failure
category, so library errors map onto documented exit statuses without a
translation table.
"""

from __future__ import annotations


class HarkitError(Exception):
    """Base class for all toolchain errors."""

    exit_code = 1


class InputFileError(HarkitError):
    """A required input file is missing or unreadable."""

    exit_code = 2


class CsvParseError(HarkitError):
    """Malformed CSV content (wrong column count, non-numeric field)."""

    exit_code = 3

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ValidationError(HarkitError):
    """Well-formed input that violates a data contract."""

    exit_code = 4


class ConfigError(HarkitError):
    """Invalid deployable configuration (bad directive, bad tree, bad encoding)."""

    exit_code = 5


class DatasetError(HarkitError):
    """Dataset unusable for training or ranking (degenerate classes, empty)."""

    exit_code = 6
