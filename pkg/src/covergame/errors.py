"""Shared exception types."""


class CapExceededError(ValueError):
    """An instance is too large for a configured exact-search or oracle budget."""
