"""Exception hierarchy shared by every module."""


class GaloisLinError(Exception):
    """Base class for all errors raised by galoislin."""


class InputError(GaloisLinError):
    """Bad user input: the CLI maps these to exit code 2."""


class DivisionByZero(GaloisLinError, ZeroDivisionError):
    pass


class MixedGroundFields(InputError, TypeError):
    pass


class MixedFields(InputError, TypeError):
    pass


class NotPrime(InputError, ValueError):
    pass


class FactorBoundExceeded(GaloisLinError):
    pass


class DegreeTooLarge(InputError, ValueError):
    pass


class NotIrreducible(InputError, ValueError):
    pass


class InvalidGaloisGroup(InputError, ValueError):
    """Custom automorphism data is not a closed group of the right order."""


class NonAbelianGroup(InvalidGaloisGroup):
    pass


class NotCyclic(InputError):
    pass


class TooManyElements(InputError, ValueError):
    pass


class ZeroElement(InputError, ValueError):
    pass


class ZeroLeadingElement(ZeroElement):
    pass


class NotABasis(InputError, ValueError):
    pass


class NotRankOne(InputError, ValueError):
    pass


class NotSquare(InputError, ValueError):
    pass


class DimensionMismatch(InputError, ValueError):
    pass


class Singular(GaloisLinError, ValueError):
    pass


class SingularGram(Singular):
    pass


class Inconsistent(GaloisLinError, ValueError):
    pass


class InternalInconsistency(GaloisLinError, AssertionError):
    """A computed value violated a structural invariant of the context."""


class TheoremViolation(InternalInconsistency):
    """An unconditional theorem failed to hold: always an implementation bug."""


class MismatchWithOracle(InternalInconsistency):
    pass
