"""Exception hierarchy.

Every error raised for bad input derives from ``BfwalshError`` so the CLI can
map it to exit code 2 with a single ``except``.
"""


class BfwalshError(ValueError):
    pass


# field setup / arithmetic
class ReduciblePolynomialError(BfwalshError):
    pass


class NonPrimitivePolynomialError(BfwalshError):
    pass


class KNotDivisorError(BfwalshError):
    pass


class SubfieldViolationError(BfwalshError):
    pass


class ShapeMismatchError(BfwalshError):
    pass


class IndicesNotDistinctError(BfwalshError):
    pass


class TooLargeError(BfwalshError):
    pass


class NotBentError(BfwalshError):
    pass


# construction parameters
class ZeroParameterError(BfwalshError):
    pass


class InvalidTripleError(BfwalshError):
    pass


class InvalidPairError(BfwalshError):
    pass


class LambdaNotInSubfieldError(BfwalshError):
    pass


class InvalidLambdaError(BfwalshError):
    pass


class BadFieldDegreeError(BfwalshError):
    pass


class GcdViolationError(BfwalshError):
    pass


class NotInSubfieldError(BfwalshError):
    pass


class NotAPermutationError(BfwalshError):
    pass


class NotLinearizedError(BfwalshError):
    pass


class BadDivisorError(BfwalshError):
    pass


class CrossConditionViolatedError(BfwalshError):
    pass


class NoDInverseError(BfwalshError):
    pass


class NonIntegralResultError(ArithmeticError):
    """A combined spectral prediction came out fractional (caller bug)."""
