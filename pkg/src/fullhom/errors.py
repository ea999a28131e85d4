"""Exception types shared across the package."""


class FullhomError(Exception):
    """Base class for package-specific failures."""


class ParseError(FullhomError):
    """Malformed input text; carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CostGuardError(FullhomError):
    """An enumeration or search would exceed its built-in size bound."""


class UnsupportedArityError(FullhomError):
    """Gap decisions are only defined for languages of arity at most 2."""


class InvariantError(FullhomError):
    """An internal consistency guarantee failed; indicates a library bug."""
