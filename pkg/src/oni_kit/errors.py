"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed input or a violated precondition (CLI exit code 2)."""


class CapExceeded(RuntimeError):
    """An instance exceeded a documented resource cap; the message names the cap."""
