"""Exception hierarchy shared by all lincomp modules."""


class LincompError(Exception):
    """Base class for all errors raised by this package."""


# field construction / arithmetic
class NotPrime(LincompError):
    pass


class DivisionByZero(LincompError):
    pass


class FieldMismatch(LincompError):
    pass


# network files and validation
class ParseError(LincompError):
    pass


class CyclicGraph(LincompError):
    pass


class ReceiverIsSource(LincompError):
    pass


class UnreachableNode(LincompError):
    pass


class OrphanNonSource(LincompError):
    pass


class UnknownNode(LincompError):
    pass


# codes and simulation
class InconsistentCode(LincompError):
    pass


class ArityMismatch(LincompError):
    pass


class DimensionMismatch(LincompError):
    pass


class ShapeMismatch(LincompError):
    pass


# polynomial engine
class UnknownIndeterminate(LincompError):
    pass


class Aborted(LincompError):
    """Buchberger exceeded its pair-reduction safety cap."""


# classification / factorization
class RankDeficient(LincompError):
    pass


class NotBinary(LincompError):
    pass


class AllOnesColumnVector(LincompError):
    pass


class NotInClass(LincompError):
    pass


class ClassMismatch(LincompError):
    pass


# synthesis
class CutViolation(LincompError):
    """Raised when the necessary min-cut condition fails.

    Carries the violating cut so callers can report a witness.
    """

    def __init__(self, message, witness=None, separated=None):
        super().__init__(message)
        self.witness = witness
        self.separated = separated


class RandomBudgetExhausted(LincompError):
    pass


# counterexample generation
class ConstructionMismatch(LincompError):
    pass
