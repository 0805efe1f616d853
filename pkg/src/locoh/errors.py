"""Exception types shared across the package."""


class LocohError(Exception):
    """Base class for all errors raised by this package."""


class DomainMismatch(LocohError):
    """A value does not belong to the declared scalar domain or ring."""


class NotSquare(LocohError):
    """Determinant requested for a non-square matrix."""


class LengthMismatch(LocohError):
    """Exponent tuples of unequal length were compared."""


class NotHomogeneous(LocohError):
    """A polynomial expected to be homogeneous has mixed degrees."""


class RingMismatch(LocohError):
    """Operands built over different rings."""


class DegreeTooSmall(LocohError):
    """Requested degree d < s, where the module component is zero."""


class SizeTooLarge(LocohError):
    """Requested minor size exceeds the matrix dimensions."""


class TooManyMinors(LocohError):
    """Minor enumeration would exceed the hard subset cap."""


class NotAField(LocohError):
    """An operation requiring field coefficients got a non-field domain."""


class GradingViolation(LocohError):
    """A matrix entry fails the homogeneity required by its grading data."""


class NotFiniteLength(LocohError):
    """The module component is (or may be) of infinite length.

    ``partial`` carries whatever per-degree table was accumulated before
    the computation was abandoned; ``diagnosis`` is a human-readable cause.
    """

    def __init__(self, diagnosis, partial=None):
        super().__init__(diagnosis)
        self.diagnosis = diagnosis
        self.partial = partial


class CapTooSmall(LocohError):
    """A truncated cokernel count was requested below the stabilization degree."""


class RouteDisagreement(LocohError):
    """The cokernel route and the content route disagree about vanishing.

    This is an internal consistency failure, never a data error.
    """


class TheoremViolation(LocohError):
    """A proved identity failed on concrete data; signals an implementation bug."""


class InsufficientData(LocohError):
    """Not enough table rows to run the requested interpolation."""


class OutOfRange(LocohError):
    """Argument outside the valid range of a closed-form evaluation."""


class ParseError(LocohError):
    """Polynomial text could not be parsed; carries the offending column."""

    def __init__(self, message, column=None):
        if column is not None:
            message = f"{message} (column {column})"
        super().__init__(message)
        self.column = column
