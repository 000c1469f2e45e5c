"""Exception hierarchy shared by every module."""


class PrimeProxError(ValueError):
    """Base class; subclasses ValueError so callers can catch either."""


class CapacityError(PrimeProxError):
    """An integer does not fit in the requested number of digits."""


class DimensionError(PrimeProxError):
    """Two digit strings have different radix or length."""


class RangeError(PrimeProxError):
    """An argument lies outside the supported range."""


class EmptyCodeError(PrimeProxError):
    """A code parameter is undefined because the code is too small."""


class InfeasibleError(PrimeProxError):
    """The request would exceed a configured exhaustive-search limit."""


class SoundnessError(PrimeProxError):
    """A reported record failed independent re-verification."""
