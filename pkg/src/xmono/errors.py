"""Exception types shared by all modules."""

from __future__ import annotations


class InputError(ValueError):
    """Malformed input: bad file, dangling vertex id, missing order, ..."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(ValueError):
    """The input is well formed but violates an algorithm's precondition."""


class OracleRefusal(RuntimeError):
    """An exact oracle declined to answer rather than risk a wrong value."""
