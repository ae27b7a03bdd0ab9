"""Exception types shared across modules."""


class GuardError(ValueError):
    """An input is valid but exceeds a configured size limit."""
