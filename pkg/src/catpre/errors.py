"""Exception types shared by every module of the package."""

from dataclasses import dataclass
from typing import Optional


class CatError(Exception):
    """Base class for all errors raised by catpre."""


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    line: Optional[int] = None

    def __str__(self):
        where = f"line {self.line}: " if self.line is not None else ""
        return f"{where}{self.kind}: {self.message}"


class ValidationError(CatError):
    """A category or functor description broke one or more invariants.

    All violations found are collected in ``violations``; validation does not
    stop at the first problem.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))

    @property
    def kinds(self):
        return {v.kind for v in self.violations}


class UnknownObject(CatError, LookupError):
    pass


class UnknownNode(CatError, LookupError):
    pass


class UnknownCategory(CatError, LookupError):
    pass


class NotTrivial(CatError, ValueError):
    pass


class SourceTargetMismatch(CatError, ValueError):
    pass


class MalformedWord(CatError, ValueError):
    pass


class NotComposable(CatError, ValueError):
    pass


class BoundExceeded(CatError):
    pass


class PreconditionViolated(CatError, ValueError):
    pass


class NoFunctorExists(CatError):
    pass


class InternalAssertionFailure(CatError, AssertionError):
    pass


class ParseError(CatError):
    """Syntax error in a ``.cat``/``.fun`` document, with 1-based position."""

    def __init__(self, message, line, column, expected=None):
        self.line = line
        self.column = column
        self.expected = expected
        text = f"{line}:{column}: {message}"
        if expected:
            text += f" (expected {expected})"
        super().__init__(text)


class InfinitePresentation(CatError, ValueError):
    pass
