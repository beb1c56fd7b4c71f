"""Exception taxonomy shared by all weilzeta modules.

Every error derives from WeilZetaError and carries an ``exit_code`` used by
the command line driver: 2 for invalid input or violated preconditions,
1 for a mathematical check that ran and failed, 3 for exceeded enumeration
budgets.
"""


class WeilZetaError(Exception):
    """Base class for all library errors."""

    exit_code = 2


class MathCheckError(WeilZetaError):
    """A verification ran to completion and the property did not hold."""

    exit_code = 1


class BudgetError(WeilZetaError):
    """Requested work exceeds the enumeration budget."""

    exit_code = 3


class EnumerationBudgetExceeded(BudgetError):
    pass


# --- input and precondition errors (exit code 2) ---

class InvalidPrime(WeilZetaError):
    pass


class InvalidDegree(WeilZetaError):
    pass


class FieldMismatch(WeilZetaError):
    pass


class DivisionByZero(WeilZetaError):
    pass


class NotHomogeneous(WeilZetaError):
    pass


class SingularCurve(WeilZetaError):
    pass


class UnsupportedCharacteristic(WeilZetaError):
    pass


class EmptySeries(WeilZetaError):
    pass


class InsufficientPrecision(WeilZetaError):
    pass


class NotNormalized(WeilZetaError):
    pass


class DimensionMismatch(WeilZetaError):
    pass


class NotIrreducible(WeilZetaError):
    pass


class InvalidInterval(WeilZetaError):
    pass


class DependentGenerators(WeilZetaError):
    pass


class NotPrimitive(WeilZetaError):
    pass


class DegenerateSpectrum(WeilZetaError):
    pass


class ParseError(WeilZetaError):
    """Malformed input text; message carries line and column."""


class InvalidInput(WeilZetaError):
    """Precondition violation not covered by a more specific class."""


class InternalError(WeilZetaError):
    """Invariant that cannot fail for valid inputs did fail."""


# --- mathematical check failures (exit code 1) ---

class NoRationalFit(MathCheckError):
    pass


class NotIntegral(MathCheckError):
    pass


class FunctionalEquationViolated(MathCheckError):
    """Carries the residual polynomials of the cross-multiplied identity."""

    def __init__(self, message, residual_plus=None, residual_minus=None):
        super().__init__(message)
        self.residual_plus = residual_plus
        self.residual_minus = residual_minus


class MixedWeightFactor(MathCheckError):
    pass


class WeightOutOfRange(MathCheckError):
    pass


class HasseViolation(MathCheckError):
    pass


class NotEndomorphism(WeilZetaError):
    pass


class NotRepresentable(MathCheckError):
    pass
