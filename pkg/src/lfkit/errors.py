"""Exception hierarchy and structured diagnostics shared by all modules."""

from dataclasses import dataclass
from typing import Optional, Tuple


@dataclass(frozen=True)
class Span:
    """Source position of a token or node (1-based line and column)."""

    line: int
    column: int

    def __str__(self):
        return "%d:%d" % (self.line, self.column)


@dataclass(frozen=True)
class Diagnostic:
    """A structured rejection report.

    Diagnostics are values rather than strings so that tests and the CLI
    can assert on individual fields.
    """

    judgment: str
    reason: str
    expected: Optional[str] = None
    found: Optional[str] = None
    span: Optional[Span] = None
    path: Tuple[str, ...] = ()

    def __str__(self):
        parts = []
        if self.span is not None:
            parts.append("%s:" % self.span)
        parts.append("[%s] %s" % (self.judgment, self.reason))
        if self.expected is not None:
            parts.append("(expected %s, found %s)" % (self.expected, self.found))
        if self.path:
            parts.append("at " + ".".join(self.path))
        return " ".join(parts)


class LfError(Exception):
    """Base class for every error raised by this package."""


class UnboundVariableError(LfError):
    """A simultaneous substitution was applied outside its domain."""

    def __init__(self, name):
        super().__init__("variable '%s' is not in the substitution domain" % name)
        self.name = name


class FuelExhaustedError(LfError):
    """A reduction budget ran out; the input term does not normalize."""

    def __init__(self, budget):
        super().__init__("reduction budget of %d steps exhausted" % budget)
        self.budget = budget


class CheckError(LfError):
    """A typing or validity judgment failed; carries one Diagnostic."""

    def __init__(self, diagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


class NotEqualError(LfError):
    """Quasi-canonical extraction was asked for terms that are not equal."""

    def __init__(self, mismatch):
        super().__init__("terms are not equal: %s" % (mismatch,))
        self.mismatch = mismatch


class ParseError(LfError):
    """Lexical or syntactic error in concrete syntax."""

    def __init__(self, message, span=None):
        if span is not None:
            message = "%s: %s" % (span, message)
        super().__init__(message)
        self.span = span


class ScopeError(ParseError):
    """An identifier is unknown, or appears at the wrong syntactic level."""
