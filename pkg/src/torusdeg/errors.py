"""Exception hierarchy shared by the whole package."""


class TorusDegError(Exception):
    """Base class for every error raised by torusdeg."""


class DimensionMismatch(TorusDegError, ValueError):
    """Two objects disagree on the number of variables, or a point has the wrong length."""


class MalformedInput(TorusDegError, ValueError):
    """A file, string or record does not follow the documented format."""


class SizeLimitExceeded(TorusDegError):
    """A search or enumeration would exceed a configured cap."""


class NotFoundWithin(TorusDegError):
    """No feasible degree exists up to the requested maximum."""

    def __init__(self, d_max, message=None):
        self.d_max = d_max
        super().__init__(message or f"no feasible degree d <= {d_max}")


class SamplingFailed(TorusDegError):
    """Every sampling attempt violated the empirical disagreement bound."""


class CertificateViolation(TorusDegError):
    """An ACC certificate does not have the claimed bit structure."""
