"""Exception types shared across the package."""


class InputError(ValueError):
    """An argument violates an operation's precondition."""


class NotationError(InputError):
    """Transformation-notation text cannot be parsed."""


class DocumentError(InputError):
    """An automaton document is malformed or inconsistent."""


class LimitError(RuntimeError):
    """A configured size limit would be exceeded."""
