"""Exception hierarchy shared by every module of the package."""


class LineDigraphError(Exception):
    """Base class for all errors raised by :mod:`linedigraph`."""


class IndexOutOfRange(LineDigraphError, IndexError):
    pass


class SizeLimitExceeded(LineDigraphError):
    pass


class PartitionMismatch(LineDigraphError, ValueError):
    pass


class NotRegular(LineDigraphError, ValueError):
    pass


class DimensionMismatch(LineDigraphError, ValueError):
    pass


class InsufficientPrefix(LineDigraphError, ValueError):
    pass


class HorizonTooSmall(LineDigraphError, ValueError):
    pass


class ParameterOutOfRange(LineDigraphError, ValueError):
    pass


class ParseError(LineDigraphError, ValueError):
    pass


class UnsupportedFormat(LineDigraphError, ValueError):
    pass
