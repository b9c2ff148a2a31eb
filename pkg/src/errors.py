"""
Exception types raised by the decomposition engine.

Everything derives from ValueError so callers that only know about
bad input can still catch the whole family.
"""


class DecompositionError(ValueError):
    """Root of all engine errors."""


# Scalars and linear algebra
class NonPositive(DecompositionError):
    pass


class ZeroVector(DecompositionError):
    pass


class AmbientMismatch(DecompositionError):
    pass


class SizeMismatch(DecompositionError):
    pass


class NotNilpotent(DecompositionError):
    pass


class NotSelfConjugate(DecompositionError):
    pass


class NotCommuting(DecompositionError):
    pass


class NotInvariant(DecompositionError):
    pass


class NotSemisimpleOperator(DecompositionError):
    """An operator restricted to a subspace is not diagonalizable."""


class NotInSpan(DecompositionError):
    pass


class EigenvalueOutsideField(DecompositionError):
    """A characteristic polynomial does not split over the Gaussian rationals."""


UnsupportedField = EigenvalueOutsideField


# Lie structure
class NotClosed(DecompositionError):
    pass


class NotCartan(DecompositionError):
    pass


class DegenerateRoot(DecompositionError):
    pass


class NonTerminating(DecompositionError):
    pass


class NotHomomorphism(DecompositionError):
    pass


# Decomposition
class WeightNotInOrbit2(DecompositionError):
    pass


class NotScalar(DecompositionError):
    pass


class ZeroD(DecompositionError):
    pass


class ExhaustionFailure(DecompositionError):
    pass


class NotDominant(DecompositionError):
    pass


# Builders and front end
class BadSignature(DecompositionError):
    pass


class ParseError(DecompositionError):
    pass


class ValidationError(DecompositionError):
    pass
