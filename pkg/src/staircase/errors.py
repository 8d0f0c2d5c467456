"""Exception hierarchy shared by every module of the package."""


class StaircaseError(Exception):
    """Base class for all errors raised by :mod:`staircase`."""


class DegenerateParameters(StaircaseError, ZeroDivisionError):
    """A denominator vanishes at the requested evaluation point.

    The message names the offending factor, e.g. ``(abcd;q)_3``.
    """

    def __init__(self, factor, detail=""):
        self.factor = factor
        msg = f"degenerate parameters: {factor} vanishes"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class IrrationalResidual(StaircaseError):
    """A quantity that must be rational kept a nonzero sqrt(y) component."""


class NonrealResult(StaircaseError):
    """A quantity that must be real kept a nonzero imaginary part."""


class BudgetExceeded(StaircaseError):
    """Requested size is above the enumeration budget."""


class OutOfShape(StaircaseError, IndexError):
    """A cell index lies outside the staircase diagram."""


class IncompleteRule(StaircaseError):
    """A blank box could not be assigned q or u."""


class NonInvertible(StaircaseError):
    """A series has a non-invertible leading coefficient."""


class NonzeroConstantTerm(StaircaseError):
    """Series composition needs an inner series with zero constant term."""


class NotCoarser(StaircaseError):
    """The composition J is not obtained from I by merging parts."""


class NoncancelingDenominator(StaircaseError):
    """A tracked power of alpha failed to cancel from a polynomial result."""


class IrrationalDiscriminant(StaircaseError):
    """A discriminant is not the square of a rational number."""


class ZeroDenominator(StaircaseError, ZeroDivisionError):
    """Division by zero in a closed-form inversion."""


class ZeroVariable(StaircaseError, ZeroDivisionError):
    """A variable that gets inverted is zero."""


class NonUniqueStationary(StaircaseError):
    """The Markov chain has more than one stationary distribution."""


class NotATree(StaircaseError):
    """The staircase forest has more than one component."""
