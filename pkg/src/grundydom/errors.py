"""Error taxonomy shared by the library and the command line tool.

ParameterError covers bad input values and domain violations (exit code 1).
CapacityError covers configured resource caps such as solver order limits or
subset-enumeration guards (exit code 2).
"""


class ParameterError(ValueError):
    """Invalid parameter or domain violation."""


class CapacityError(RuntimeError):
    """A configured resource cap would be exceeded."""


class ParseError(ParameterError):
    """Malformed text input; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
