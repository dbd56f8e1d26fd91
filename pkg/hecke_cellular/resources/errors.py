class HeckeCellularError(Exception):
    """Base class for every error raised by hecke_cellular."""


class RingError(HeckeCellularError, ValueError):
    """Bad ring descriptor, a field required but not given, or a failed integrality certificate."""


class ShapeError(HeckeCellularError, ValueError):
    """Composition, tableau or rank mismatch."""


class SizeCapExceeded(HeckeCellularError):
    """The requested rank is above the configured computation cap."""


class InvariantViolation(HeckeCellularError, RuntimeError):
    """A contract that holds by construction has failed."""


class UsageError(HeckeCellularError, ValueError):
    """A missing or inconsistent command argument."""
