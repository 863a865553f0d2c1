
class LatticeCrossException(Exception):
    """Base exception class for latticecross
    """
    code = "LATTICECROSS_ERROR"

# Exceptions related to polynomial arithmetic

class PolynomialError(LatticeCrossException):
    """General exception class for polynomial arithmetic.
    """
    code = "POLYNOMIAL_ERROR"

class NonDivisible(PolynomialError):
    """Thrown when an exact division leaves a nonzero remainder.
    """
    code = "NON_DIVISIBLE"

class NegativeExponent(PolynomialError):
    """Thrown when a monomial with a negative exponent would be constructed.
    """
    code = "NEGATIVE_EXPONENT"

class FormulaMismatch(PolynomialError):
    """Thrown when two evaluation routes of the same closed form disagree.
    """
    code = "FORMULA_MISMATCH"

# Exceptions related to lattice paths

class PathError(LatticeCrossException):
    """General exception class for malformed lattice paths.
    """
    code = "PATH_ERROR"

class MixedAlphabet(PathError):
    """Thrown when a step word mixes the N/E and U/D alphabets.
    """
    code = "MIXED_ALPHABET"

class InvalidStep(PathError):
    """Thrown when a step word contains a letter outside both alphabets.
    """
    code = "INVALID_STEP"

# Exceptions related to two-rowed arrays

class ArrayError(LatticeCrossException):
    """General exception class for two-rowed arrays.
    """
    code = "ARRAY_ERROR"

class InvalidArray(ArrayError):
    """Thrown when a row is not strictly increasing or leaves its bounds.
    """
    code = "INVALID_ARRAY"

class ShapeMismatch(ArrayError):
    """Thrown when the row lengths do not fit the requested operation.
    """
    code = "SHAPE_MISMATCH"

# Exceptions related to bijections

class BijectionError(LatticeCrossException):
    """General exception class for inputs outside the domain of a bijection.
    """
    code = "BIJECTION_ERROR"

class NoSuchCrossing(BijectionError):
    """Thrown when the requested crossing does not exist.
    """
    code = "NO_SUCH_CROSSING"

class WrongKind(BijectionError):
    """Thrown when the requested crossing has the wrong kind for the map.
    """
    code = "WRONG_KIND"

class ImproperCrossing(BijectionError):
    """Thrown when the requested crossing sits on an upper bound.
    """
    code = "IMPROPER_CROSSING"

class NotInDomain(BijectionError):
    """Thrown when a pair is outside the domain of the zero-crossing swap.
    """
    code = "NOT_IN_DOMAIN"

class ImproperPosition(BijectionError):
    """Thrown when the swap position of the zero-crossing swap sits on an upper bound.
    """
    code = "IMPROPER_POSITION"

# Exceptions related to queries

class QueryError(LatticeCrossException):
    """General exception class for enumeration queries no closed form answers.
    """
    code = "QUERY_ERROR"

class UnsupportedConfiguration(QueryError):
    """Thrown when the endpoints of a pair query match none of the closed forms.
    """
    code = "UNSUPPORTED_CONFIGURATION"

class Condition13Violated(QueryError):
    """Thrown when the two start points do not lie on a common anti-diagonal.
    """
    code = "CONDITION_13_VIOLATED"

# Python <= 3.8 RTD fix
def merge(d1, d2): return {**d1, **d2}

_ALL_EXCEPTIONS = (
    LatticeCrossException,
    PolynomialError, NonDivisible, NegativeExponent, FormulaMismatch,
    PathError, MixedAlphabet, InvalidStep,
    ArrayError, InvalidArray, ShapeMismatch,
    BijectionError, NoSuchCrossing, WrongKind, ImproperCrossing, NotInDomain, ImproperPosition,
    QueryError, UnsupportedConfiguration, Condition13Violated,
)

ERROR_CODE_LOOKUP = {exc.code: exc for exc in _ALL_EXCEPTIONS}

# exit statuses used by the command line front end
GENERIC_EXIT_STATUS_LOOKUP = {
    LatticeCrossException: 2,
}

EXIT_STATUS_LOOKUP = merge(GENERIC_EXIT_STATUS_LOOKUP, {
    NonDivisible: 1,
    FormulaMismatch: 1,
})

def exit_status(exc: BaseException) -> int:
    """Return the CLI exit status for a library exception.
    """
    for cls in type(exc).__mro__:
        if cls in EXIT_STATUS_LOOKUP:
            return EXIT_STATUS_LOOKUP[cls]
    return 2
