"""Exception hierarchy shared by all qfcycle modules."""


class QFError(Exception):
    """Base class for every error raised by qfcycle."""


class InvalidInput(QFError, ValueError):
    pass


class SquareDiscriminant(InvalidInput):
    pass


class NotIndefinite(InvalidInput):
    pass


class NotPositiveDefinite(InvalidInput):
    pass


class InvalidDiscriminant(InvalidInput):
    pass


class SingularMatrix(InvalidInput):
    pass


class NotPrime(InvalidInput):
    pass


class EvenLevel(InvalidInput):
    pass


class NotReduced(InvalidInput):
    pass


class NotNReduced(InvalidInput):
    pass


class NotNearlyReduced(InvalidInput):
    pass


class CuspProximal(InvalidInput):
    pass


class BasePointElliptic(InvalidInput):
    pass


class IncompatibleRadicands(QFError, ArithmeticError):
    pass


class NotNormalisable(QFError):
    pass


class IterationCap(QFError):
    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial


class Unsupported(QFError):
    pass


class NormPlusOne(Unsupported):
    pass
