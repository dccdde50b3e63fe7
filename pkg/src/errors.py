class LatticeError(Exception):
    """Base class for every error raised by the analyzer"""


class ZeroVectorError(LatticeError):
    def __init__(self, message="no primitive direction"):
        super().__init__(message)


class ShapeError(LatticeError):
    pass


class NotUnimodularError(LatticeError):
    def __init__(self, message="not unimodular"):
        super().__init__(message)


class DegeneratePolytopeError(LatticeError):
    def __init__(self, message="degenerate: not full-dimensional"):
        super().__init__(message)


class NotLatticePolytopeError(LatticeError):
    def __init__(self, message="dual is not a lattice polytope"):
        super().__init__(message)


class InvalidInputError(LatticeError):
    pass


class InternalConsistencyError(LatticeError):
    """A derived quantity contradicts its defining identity (construction bug)"""


class PalpParseError(LatticeError):
    def __init__(self, message, line_no=None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
