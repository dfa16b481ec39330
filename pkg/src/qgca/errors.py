"""Exception hierarchy shared by all modules."""


class QGCAError(Exception):
    """Base class for every error raised by this package."""


# coefficients
class ZDependentInverse(QGCAError, ArithmeticError):
    pass


class CoeffZeroDivision(QGCAError, ZeroDivisionError):
    pass


class PoleAtOne(QGCAError, ArithmeticError):
    pass


class UnboundZ(QGCAError, KeyError):
    pass


class NumericPole(QGCAError, ArithmeticError):
    pass


# torus / series
class MixedAlgebra(QGCAError, ValueError):
    """Operands live in quantum tori with different skew forms."""


class NotConeEmbeddable(QGCAError, ValueError):
    pass


class PrefactorMisaligned(QGCAError, ValueError):
    pass


class NonUnitConstantTerm(QGCAError, ArithmeticError):
    pass


class NonPositiveArgument(QGCAError, ValueError):
    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


# seeds
class SkewSymmetrizabilityError(QGCAError, ValueError):
    pass


class ReciprocityError(QGCAError, ValueError):
    pass


class SignCoherenceViolated(QGCAError, ValueError):
    def __init__(self, message, step=None, index=None):
        super().__init__(message)
        self.step = step
        self.index = index


# analytic
class BranchAmbiguity(QGCAError, ArithmeticError):
    pass


class PoleOnPath(QGCAError, ArithmeticError):
    pass


class SeedFileError(QGCAError, ValueError):
    """Seed file could not be parsed or violates the exchange-data invariants."""

    def __init__(self, message, field=None, line=None):
        where = []
        if field is not None:
            where.append(f"field '{field}'")
        if line is not None:
            where.append(f"line {line}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
        self.field = field
        self.line = line
