"""Exception hierarchy shared by all modules.

The CLI reports ``type(exc).__name__`` for any :class:`TwoMoritaError`, so the
class names double as stable error codes.
"""


class TwoMoritaError(Exception):
    """Base class for domain errors."""


# nnimat
class DimensionMismatch(TwoMoritaError):
    pass


class IntegerOverflow(TwoMoritaError):
    pass


class NotIdempotent(TwoMoritaError):
    pass


class MalformedDiagonal(TwoMoritaError):
    pass


class VerificationFailed(TwoMoritaError):
    pass


class NoWitness(TwoMoritaError):
    pass


class TooLarge(TwoMoritaError):
    pass


# twocat
class TypeMismatch(TwoMoritaError):
    pass


class UnknownObject(TwoMoritaError):
    pass


class UnknownMorphism(TwoMoritaError):
    pass


class InvalidPresentation(TwoMoritaError):
    pass


# endodecomp
class SubtractionUnderflow(TwoMoritaError):
    pass


class SummandMismatch(TwoMoritaError):
    pass


class UniquenessViolated(TwoMoritaError):
    pass


class MultiplicityViolated(TwoMoritaError):
    pass


class InternalDisagreement(TwoMoritaError):
    pass


# projclass
class DescriptorInvalid(TwoMoritaError):
    pass


# projfun
class ParseError(TwoMoritaError):
    pass


class InfiniteDimensional(TwoMoritaError):
    pass


class IllTypedRelation(TwoMoritaError):
    pass


# soergel
class NonCrystallographic(TwoMoritaError):
    pass


class CapExceeded(TwoMoritaError):
    pass


class PositivityViolated(TwoMoritaError):
    pass


class BarInvarianceViolated(TwoMoritaError):
    pass


class ConversionResidue(TwoMoritaError):
    pass


class NegativeStructureConstant(TwoMoritaError):
    pass
