"""Domain failures expressed as natural Python exceptions.

Each class derives from the builtin that best describes it, so callers can keep
catching ``ValueError`` or ``ArithmeticError``. ``translate_error`` turns any
of them into the one-line diagnostic printed by the command line.
"""


class NotDivisible(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class DivisionByZero(ZeroDivisionError):
    """A polynomial, series or rational function denominator is zero."""


class NotNumerical(ValueError):
    """The generators have a common divisor, so infinitely many gaps."""


class EmptyGenerators(ValueError):
    """No generators were supplied for a semigroup."""


class TruncationTooShort(ValueError):
    """A series was asked for a coefficient it does not know."""


class InvalidCurveSpec(ValueError):
    """The singularities use up more genus than the curve has."""


class DecompositionFailure(ArithmeticError):
    """An Euler series does not expand in powers of q/(1-q)^2 with integers."""


class InversionFailure(ArithmeticError):
    """The Severi linear system has no exact solution."""


class InvalidInput(ValueError):
    """An argument lies outside the supported domain."""


class UnknownSingularity(InvalidInput):
    """A singularity tag outside A1, A2d(d), E6, E8."""


ERROR_TO_PRECONDITION = {
    NotDivisible: "divisor must divide exactly",
    DivisionByZero: "denominator must be nonzero",
    NotNumerical: "gcd ≠ 1: generators must be coprime",
    EmptyGenerators: "at least one generator is required",
    TruncationTooShort: "truncation order too short",
    InvalidCurveSpec: "geometric genus must be ≥ 0",
    DecompositionFailure: "series must decompose with integral BPS numbers",
    InversionFailure: "Severi system must have zero residual",
    UnknownSingularity: "singularity tag must be one of A1, A2d(d), E6, E8",
    InvalidInput: "invalid input",
}


def translate_error(error):
    """Render a domain exception as a one-line diagnostic.

    Parameters
    ----------
    error : Exception
        Any exception raised by zetaforge.

    Returns
    -------
    str, or None if the exception is not a zetaforge domain error.
    """
    for cls in type(error).__mro__:
        if cls in ERROR_TO_PRECONDITION:
            message = str(error)
            precondition = ERROR_TO_PRECONDITION[cls]
            if message and message != precondition:
                return "%s: %s" % (precondition, message)
            return precondition
    return None
