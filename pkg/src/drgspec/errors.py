"""Exception hierarchy.

Two families: :class:`InputError` for malformed or out-of-contract inputs
(the CLI maps these to exit code 2) and :class:`NumericalError` for failures
of the floating-point machinery (exit code 3).
"""


class DrgSpecError(Exception):
    """Base class for every error raised by this package."""


class InputError(DrgSpecError):
    pass


class NumericalError(DrgSpecError):
    pass


# graph construction / parsing
class MalformedGraph6(InputError):
    pass


class MalformedEdgeList(InputError):
    pass


class DisconnectedGraph(InputError):
    pass


class SelfLoop(InputError):
    pass


class UnknownFamily(InputError):
    pass


class ParameterOutOfRange(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class NotRegular(InputError):
    pass


# spectra
class InvariantViolation(InputError):
    pass


class NonIntegerMultiplicity(InputError):
    pass


class NonConvergence(NumericalError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ClusterAmbiguity(NumericalError):
    pass


class DegenerateSpectrum(NumericalError):
    pass


# polynomials / bounds
class NumericalBreakdown(NumericalError):
    pass


class DegreeTooHigh(InputError):
    pass


class InvalidIndexSet(InputError):
    pass


class BoundViolation(NumericalError):
    """An observed mean exceeded a bound that the theory says cannot be exceeded."""
