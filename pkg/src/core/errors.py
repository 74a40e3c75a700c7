"""
Error hierarchy shared by the library and the command line.

Library functions raise these; only ``src.cli`` turns them into exit codes.
"""
from enum import IntEnum
from typing import Optional

from src.config.config import Config
from src.config.logging_config import log_capacity_refusal


class ExitCode(IntEnum):
    """Process exit codes of the command line."""
    OK = 0
    NEGATIVE = 1
    USAGE = 2
    CAPACITY = 3
    INCONSISTENT = 4


class ForestLabError(Exception):
    """Base class for every error raised by this package."""
    exit_code = ExitCode.USAGE


class GraphError(ForestLabError, ValueError):
    """Malformed graph or invalid use of a graph."""


class UnknownVertexError(GraphError):
    def __init__(self, vertices, context: str = ''):
        self.vertices = tuple(sorted(str(v) for v in vertices))
        where = f" in {context}" if context else ''
        super().__init__(f"Unknown vertex id(s){where}: {', '.join(self.vertices)}")


class NotAForestError(GraphError):
    """Raised where an operation is only defined on acyclic graphs."""

    def __init__(self, cycle=None, context: str = ''):
        self.cycle = tuple(cycle or ())
        msg = f"{context}: graph contains a cycle" if context else "Graph contains a cycle"
        if self.cycle:
            msg += f" through {', '.join(self.cycle)}"
        super().__init__(msg)


class GraphFormatError(GraphError):
    """Graph JSON rejected at parse time; ``position`` locates the offending entry."""

    def __init__(self, message: str, position: Optional[str] = None):
        self.position = position
        super().__init__(f"{position}: {message}" if position else message)


class PreconditionError(ForestLabError, ValueError):
    """An operation was called outside its stated precondition."""


class NoPathError(PreconditionError):
    pass


class EnumerationExhaustedError(PreconditionError):
    pass


class FormulaError(ForestLabError, ValueError):
    pass


class FormulaSyntaxError(FormulaError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"Syntax error at line {line}, column {column}: {message}")


class UnassignedVariableError(FormulaError):
    def __init__(self, variables):
        self.variables = tuple(sorted(variables))
        super().__init__(f"Unassigned free variable(s): {', '.join(self.variables)}")


class CapacityError(ForestLabError):
    """An instance exceeded a configured size guard (see ``Config.capacity``)."""
    exit_code = ExitCode.CAPACITY

    def __init__(self, guard: str, requested: int, limit: int):
        self.guard = guard
        self.requested = requested
        self.limit = limit
        super().__init__(
            f"Capacity exceeded for {guard}: requested {requested}, limit {limit}"
        )


class InternalInconsistencyError(ForestLabError):
    """Two computations that must agree did not."""
    exit_code = ExitCode.INCONSISTENT


class UsageError(ForestLabError):
    exit_code = ExitCode.USAGE


class UnboundVariableWarning(UserWarning):
    """A sentence was expected but the parsed formula has free variables."""


def require_capacity(guard: str, requested: int) -> None:
    """Raise ``CapacityError`` (and log the refusal) when ``requested`` exceeds the guard."""
    limit = Config.capacity(guard)
    if requested > limit:
        log_capacity_refusal(guard, requested, limit)
        raise CapacityError(guard, requested, limit)
