"""Exception hierarchy shared by the whole package.

The CLI maps these onto exit codes: input problems (parsing, mismatched
rings, bad arguments) exit 1, verification failures exit 2, requests the
library refuses on principle (e.g. Hilbert functions with weight-0
variables) exit 3.
"""


class QuasigorError(Exception):
    """Base class for all errors raised by this package."""


class InputError(QuasigorError):
    """A caller-supplied value violates a precondition (bad ring, zero
    divisor polynomial, mismatched rings, non-homogeneous input, ...)."""


class ParseError(InputError):
    """Malformed text input; carries 1-based line/column of the offender."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class RingMismatchError(InputError):
    """Operands live in different polynomial rings."""


class UnsupportedRequestError(QuasigorError):
    """The request is well-formed but outside what the library computes."""


class VerificationError(QuasigorError):
    """A verification pipeline step produced a value other than the one it
    asserts; carries the label of the failing step."""

    def __init__(self, step: str, message: str):
        super().__init__(f"step '{step}': {message}")
        self.step = step
