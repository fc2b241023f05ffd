"""Shared exception types."""


class ResourceLimitError(RuntimeError):
    """An input is structurally fine but exceeds the configured size cap."""
