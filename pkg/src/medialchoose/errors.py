"""Exception hierarchy shared by the library and the command line.

Each family carries the process exit code the CLI maps it to.
"""

from __future__ import annotations


class MedialChooseError(Exception):
    exit_code = 1


class InputError(MedialChooseError):
    """The input was rejected before any computation started."""

    exit_code = 2


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedLineError(ParseError):
    pass


class DuplicateDartError(ParseError):
    pass


class DanglingDartError(ParseError):
    pass


class DartRangeError(ParseError):
    pass


class VertexOrderError(ParseError):
    pass


class OuterDartError(ParseError):
    pass


class NotPlaneError(InputError):
    pass


class NotEulerianError(InputError):
    pass


class EmptyGraphError(InputError):
    pass


class LoopError(InputError):
    pass


class NonSimpleGraphError(InputError):
    pass


class MissingListError(InputError):
    pass


class NotACycleError(InputError):
    pass


class ResourceGuardError(MedialChooseError):
    """A search would exceed a configured cap; nothing was computed."""

    exit_code = 3


class ClaimViolation(MedialChooseError):
    """A property the theory guarantees failed on a concrete instance.

    ``details`` holds a JSON-friendly description of the counterexample.
    """

    exit_code = 4

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}
