"""Exception hierarchy shared by every module of the package."""


class PolyhedralError(Exception):
    """Base class for all errors raised by mixhull."""


class SingularMatrix(PolyhedralError, ArithmeticError):
    pass


class EmptyList(PolyhedralError, ValueError):
    pass


class EmptyInput(PolyhedralError, ValueError):
    pass


class DimensionMismatch(PolyhedralError, ValueError):
    pass


class ZeroRay(PolyhedralError, ValueError):
    pass


class EmptyPolyhedron(PolyhedralError):
    pass


class ImplicitLineality(PolyhedralError):
    """The polyhedron contains a line; only pointed polyhedra are supported."""


class EmptyGenerators(PolyhedralError, ValueError):
    pass


class PNotInCandidates(PolyhedralError, ValueError):
    pass


class TooFewPoints(PolyhedralError, ValueError):
    pass


class UnboundedInput(PolyhedralError):
    pass


class MixedInfeasible(PolyhedralError):
    """P contains no point whose first n coordinates are integral."""


class FiberEmpty(PolyhedralError):
    pass


class NonPolytopeInput(PolyhedralError, ValueError):
    pass


class BadDimension(PolyhedralError, ValueError):
    pass


class ParseError(PolyhedralError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
