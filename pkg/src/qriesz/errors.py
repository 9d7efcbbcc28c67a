"""Exception types raised by qriesz."""


class QRieszError(Exception):
    """Base class for all library errors."""


class DomainError(QRieszError, ValueError):
    """An argument lies outside the domain of the operation."""


class SingularParameterError(DomainError):
    """A parameter value makes the operation singular (e.g. csc at a zero of sin)."""


class FormatError(QRieszError, ValueError):
    """A file could not be parsed; the message names the offending field."""
