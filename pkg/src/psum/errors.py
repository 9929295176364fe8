"""Exception hierarchy shared by every psum module."""


class PsumError(Exception):
    """Base class for all psum errors."""


class InvalidDigit(PsumError, ValueError):
    pass


class EmptyInput(PsumError, ValueError):
    pass


class LeadingZero(PsumError, ValueError):
    pass


class InvalidBase(PsumError, ValueError):
    pass


class CutOutOfRange(PsumError, ValueError):
    pass


class CutNotPresent(PsumError, ValueError):
    pass


class AlreadySingleDigit(PsumError, ValueError):
    pass


class NotBase2(PsumError, ValueError):
    pass


class NotBase3(PsumError, ValueError):
    pass


class PreconditionViolated(PsumError, ValueError):
    pass


class CacheBaseMismatch(PsumError, ValueError):
    pass


class StrategyAssertionFailed(PsumError, AssertionError):
    """A constructive strategy missed its guaranteed target.

    Never expected to fire; raised instead of silently returning a bad step.
    """
