"""Exception types shared across the library."""


class TorsionError(Exception):
    """Base class for every error raised by this package."""


# --- scalar layer ---

class MalformedNumber(TorsionError):
    pass


class ZeroDenominator(TorsionError):
    pass


class MalformedExpression(TorsionError):
    pass


class DivisionByZeroPolynomial(TorsionError):
    pass


# --- linear algebra ---

class NotSquare(TorsionError):
    pass


class DimensionMismatch(TorsionError):
    pass


class NotSameSpan(TorsionError):
    pass


class NoSolution(TorsionError):
    pass


class Singular(TorsionError):
    pass


# --- complexes and chain maps ---

class ShapeMismatch(TorsionError):
    pass


class NotAComplex(TorsionError):
    """The boundary composite is nonzero at some degree."""

    def __init__(self, degree: int, message: str | None = None):
        self.degree = degree
        super().__init__(message or f"NotAComplex at degree {degree}")


class FieldMismatch(TorsionError):
    pass


class DegreeOutOfRange(TorsionError):
    pass


class NotChainMap(TorsionError):
    """A commuting square fails at some degree."""

    def __init__(self, degree: int, message: str | None = None):
        self.degree = degree
        super().__init__(message or f"NotChainMap at degree {degree}")


class ComplexMismatch(TorsionError):
    pass


# --- torsion ---

class NotQuasiIsomorphism(TorsionError):
    pass


class NotAcyclic(TorsionError):
    pass


class NotSelfMap(TorsionError):
    pass


class InvalidBasisChoice(TorsionError):
    pass


# --- polynomial-ring layer ---

class PositiveRankHomology(TorsionError):
    pass


class NotQuasiIsomorphismAfterTensor(TorsionError):
    pass


# --- documents and CLI ---

class ParseError(TorsionError):
    """Bad input file; carries a locus describing where parsing failed."""

    def __init__(self, message: str, locus: str = ""):
        self.locus = locus
        super().__init__(f"{locus}: {message}" if locus else message)


class ValidationError(TorsionError):
    """A parsed document violates a structural invariant."""

    def __init__(self, message: str, invariant: str = "", degree: int | None = None):
        self.invariant = invariant
        self.degree = degree
        super().__init__(message)


class UsageError(TorsionError):
    pass


class ParamOutOfRange(TorsionError):
    pass
