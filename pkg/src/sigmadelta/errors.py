"""Exception types shared across the package."""


class InvalidArgumentError(ValueError):
    """An argument violates a documented precondition (bad vertex, bad size, ...)."""


class ResourceLimitError(RuntimeError):
    """A documented resource cap would be exceeded (exponential enumeration guard)."""


class ParseError(InvalidArgumentError):
    """Malformed graph input.

    ``offset`` is a 0-based byte offset (graph6), ``line`` a 1-based line
    number (edge lists); whichever applies is embedded in the message.
    """

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
        self.offset = offset
        self.line = line
