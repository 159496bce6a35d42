"""Shared exception types."""


class SizeLimitError(ValueError):
    """Raised when a requested computation exceeds a configured size limit."""
