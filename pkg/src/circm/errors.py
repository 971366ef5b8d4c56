"""Shared exception types."""


class GuardError(Exception):
    """A size guard was exceeded without an explicit override."""


class InconsistencyError(Exception):
    """Two independent computations that must agree disagreed.

    This always signals a bug in the library, never bad user input.
    """
