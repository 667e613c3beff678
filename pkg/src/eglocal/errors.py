"""Exception types shared across the package."""


class Graph6Error(ValueError):
    """Malformed graph6 record."""


class SizeCapError(ValueError):
    """Input exceeds the exact-search vertex cap; we refuse rather than approximate."""


class ClosureCapError(RuntimeError):
    """Transform-closure enumeration exceeded its path cap; result would be partial."""
