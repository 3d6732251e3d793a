"""
Exception hierarchy shared by every kernel of the toolkit.

Kernels raise these types; the CLI layer (`app.cli.deps`) translates them
into process exit codes, the same way route handlers translate service
failures into HTTP statuses.
"""
from typing import Any


class MarkovError(Exception):
    """Base class for all toolkit errors."""


class ArgumentError(MarkovError, ValueError):
    """An argument is malformed or does not fit the graph it is used with."""


class ParseError(ArgumentError):
    """
    An input file could not be parsed.

    Attributes:
        line (int | None): 1-based line number of the offending line, when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class CapabilityError(MarkovError):
    """The input lies outside a documented size cap or graph class."""


class PreconditionViolation(MarkovError):
    """An operation precondition does not hold (e.g. an incomplete lower move set)."""


class BudgetExceeded(MarkovError):
    """
    A brute-force kernel produced more results than its budget allows.

    Attributes:
        count (int): Number of results produced before stopping.
        partial (Any): Whatever was computed before the budget ran out.
    """

    def __init__(self, message: str, count: int, partial: Any = None):
        self.count = count
        self.partial = partial
        super().__init__(f"{message} (stopped after {count})")
