"""Exception types shared across the toolkit."""


class SpecError(ValueError):
    """A set description or parameter is out of range."""


class ParseError(SpecError):
    """DSL syntax error; ``position`` is the 0-based offset into the source."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class WindowError(ValueError):
    """Invalid window, box, or range argument."""


class OutOfWindowError(IndexError):
    """A membership query fell outside the materialized window."""


class MaterializationError(RuntimeError):
    """A set could not be evaluated on the windows an operation needs."""
