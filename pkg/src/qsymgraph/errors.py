"""Exception hierarchy shared by every module of the toolkit."""

from __future__ import annotations


class QSymError(Exception):
    """Base class for all toolkit errors."""


class InvalidModulusError(QSymError, ValueError):
    pass


class NoSuchSubgroupError(QSymError, ValueError):
    pass


class InvalidSymbolSetError(QSymError, ValueError):
    pass


class NotEvenSubgroupError(QSymError, ValueError):
    pass


class GraphValidationError(QSymError, ValueError):
    """Raised for malformed graph input; carries an optional position."""

    def __init__(self, message: str, *, source: str | None = None,
                 line: int | None = None, column: int | None = None):
        self.source = source
        self.line = line
        self.column = column
        where = []
        if source:
            where.append(source)
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"col {column}")
        prefix = ":".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class ResourceLimitError(QSymError, RuntimeError):
    pass


class UnsupportedGraphError(QSymError, ValueError):
    pass


class DimensionMismatchError(QSymError, ValueError):
    pass


class WitnessError(QSymError, ValueError):
    """A witness failed its singleton invariants."""


class ContradictionError(QSymError, AssertionError):
    """A computation contradicted a proven statement; never swallowed."""
