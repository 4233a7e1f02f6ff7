"""Exception hierarchy. Every error raised by the package derives from ``MatklsError``."""


class MatklsError(Exception):
    pass


class MatroidError(MatklsError, ValueError):
    pass


class EmptyBases(MatroidError):
    pass


class UnequalBasisSizes(MatroidError):
    pass


class ExchangeAxiomViolated(MatroidError):
    def __init__(self, b1, b2, element):
        self.b1 = b1
        self.b2 = b2
        self.element = element
        super().__init__(
            f"basis exchange fails: B1={b1}, B2={b2}, no f in B2-B1 replaces {element}"
        )


class ElementOutOfRange(MatroidError):
    pass


class CapacityExceeded(MatroidError):
    pass


class NotPrime(MatroidError):
    pass


class TooManyColumns(CapacityExceeded):
    pass


class DeletesEverything(MatroidError):
    pass


class ContractsEverything(MatroidError):
    pass


class NotSimple(MatroidError):
    pass


class NotConnected(MatroidError):
    pass


class ParseError(MatklsError, ValueError):
    pass


class UnsupportedField(ParseError):
    pass


class MalformedFile(ParseError):
    pass


class DegreeExceedsRank(MatklsError, ValueError):
    pass


class NotComparable(MatklsError, ValueError):
    pass


class TooLarge(MatklsError, ValueError):
    pass


class RankZero(MatklsError, ValueError):
    pass


class InconsistentModularityChecks(MatklsError, AssertionError):
    """Two modularity tests disagreed; this is a bug, not bad input."""


class UnknownCheck(MatklsError, KeyError):
    pass
