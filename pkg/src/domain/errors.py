"""
Exception hierarchy for the algebra, counting and index-2 layers.

Every error raised on purpose by this package derives from AlgebraError, so the
CLI can tell bad input apart from genuine bugs.
"""


class AlgebraError(Exception):
    """Base class for all domain errors."""


class ParseError(AlgebraError):
    """Text could not be parsed as a field descriptor, polynomial or bit vector."""


class NotPrime(AlgebraError):
    """A characteristic (or prime power) argument failed the primality check."""


class NotIrreducible(AlgebraError):
    """A supplied field modulus is reducible over the prime field."""


class BadDegree(AlgebraError):
    """A degree argument is out of range."""


class BadRange(AlgebraError):
    """An index argument (such as j in p(n, j)) is out of range."""


class SpecMismatch(AlgebraError):
    """Operands belong to different fields."""


class DivisionByZero(AlgebraError, ZeroDivisionError):
    """Inversion of zero or division by the zero polynomial."""


class BothZero(AlgebraError):
    """gcd of two zero polynomials."""


class ZeroPolynomial(AlgebraError):
    """Operation undefined on the zero polynomial."""


class ZeroConstantTerm(AlgebraError):
    """Reciprocal operations need a nonzero constant coefficient."""


class NotMonic(AlgebraError):
    """Operation needs a monic polynomial."""


class FactorIsX(AlgebraError):
    """x has no reciprocal, so it cannot be classified."""


class NonDivisible(AlgebraError):
    """An exact integer division in a closed form left a remainder (a bug)."""


class BudgetExceeded(AlgebraError):
    """A brute-force run would enumerate more polynomials than allowed."""


class OrderTooSmall(AlgebraError):
    """An index-2 operation needs m >= 2."""


class OracleMismatch(AlgebraError):
    """The constructive maximal self-reciprocal factor disagrees with the oracle."""

    def __init__(self, message: str, polynomial: str):
        super().__init__(f"{message} (polynomial {polynomial})")
        self.polynomial = polynomial


class ResidualMismatch(AlgebraError):
    """An index-2 solution fails one of the guard equations."""
