"""Error types raised across the package."""


class ModmacdError(Exception):
    """Base class for all package-specific errors."""


class NonUnitIntoNegativeExponent(ModmacdError):
    """Substitution of a non-invertible value into a negative exponent."""


class ZeroDenominator(ModmacdError):
    """Rational function with a zero denominator."""


class NegativeLength(ModmacdError):
    """Pochhammer symbol of negative length."""


class NegativeLambdaZero(ModmacdError):
    """Fusion normalizer with sum of multiplicities exceeding J."""


class MismatchedTops(ModmacdError):
    """Sequence pair whose last entries differ."""


class TruncationResidual(ModmacdError):
    """Nonzero series coefficient above the proven degree bound."""


class NegativeDifference(ModmacdError):
    """Positive-form evaluation on a pair needing rotation first."""


class IndexOutOfRange(ModmacdError):
    """Rotation index outside 1..N."""


class NegativeInput(ModmacdError):
    """Negative argument where nonnegative integers are required."""


class InfeasibleMultiplicities(ModmacdError):
    """Fusion multiplicities that no word of the given length realizes."""


class TopMismatch(ModmacdError):
    """Column data whose tops disagree with the partition multiplicities."""


class InsufficientVariables(ModmacdError):
    """Too few lattice rows for the requested partition."""


class TooFewVariables(ModmacdError):
    """Too few variables for a faithful symmetric-function expansion."""


class SingularConversion(ModmacdError):
    """Defensive: basis-conversion system unexpectedly singular."""


class NonPolynomialCoefficient(ModmacdError):
    """Integral-form coefficient failed to clear to a polynomial."""


class NegativeCoefficient(ModmacdError):
    """A coefficient that is guaranteed nonnegative came out negative."""


class TruncationTooSmall(ModmacdError):
    """Series comparison requested at truncation degree < 1."""
