"""Exception hierarchy shared by the enumeration engine and the CLI."""


class OAError(ValueError):
    """Base class for every error raised by oaenum."""


class ParameterError(OAError):
    """A parameter (m, d, lambda, n) is outside the supported range."""


class MalformedDesignError(OAError):
    """A design has entries outside {-1, +1} or ragged rows."""


class InfeasibleJError(OAError):
    """A J-vector does not correspond to any design (some N_s < 0 or non-integral)."""


class ShapeError(OAError):
    """Design shape or strength does not fit the requested operation."""


class UnsupportedDropError(OAError):
    """The sign system cannot leave the requested position unconstrained."""


class SizeError(OAError):
    """The brute-force oracle was asked for an intractable instance."""


class ParseError(OAError):
    """An array or solution file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
