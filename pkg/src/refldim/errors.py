"""Exception hierarchy.

Every error carries a short ``code`` that the command line reports verbatim
(exit status 3 for precondition failures).
"""


class RefldimError(ValueError):
    code = "Error"

    def __init__(self, message=None):
        super().__init__(message or self.code)


class ZeroVectorError(RefldimError):
    code = "ZeroVector"


class NotSquareError(RefldimError):
    code = "NotSquare"


class EmptyInputError(RefldimError):
    code = "EmptyInput"


class DimensionMismatchError(RefldimError):
    code = "DimensionMismatch"


class UnboundedError(RefldimError):
    code = "Unbounded"


class EmptyPolytopeError(RefldimError):
    code = "EmptyPolytope"


class BadDimensionError(RefldimError):
    code = "BadDimension"


class NotFullDimError(RefldimError):
    code = "NotFullDim"


class NotAnEdgeError(RefldimError):
    code = "NotAnEdge"


class BadScaleError(RefldimError):
    code = "BadScale"


class OriginNotInteriorError(RefldimError):
    code = "OriginNotInterior"


class NotInteriorError(RefldimError):
    code = "NotInterior"


class InteriorNotUniqueError(RefldimError):
    code = "InteriorNotUnique"


class BadFacetError(RefldimError):
    code = "BadFacet"


class NotDecomposableError(RefldimError):
    code = "NotDecomposable"


class BadLengthError(RefldimError):
    code = "BadLength"


class NotReflexiveInputError(RefldimError):
    code = "NotReflexiveInput"


class ParseError(RefldimError):
    """Malformed polytope file; ``line`` and ``column`` are 1-based."""

    code = "Parse"

    def __init__(self, message, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line, self.column = line, column
