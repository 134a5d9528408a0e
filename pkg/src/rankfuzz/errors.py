"""Exception types shared across the package.

Every domain error derives from RankfuzzError so callers can catch the
whole family at once; most also derive from the matching builtin
(ValueError, ZeroDivisionError) so generic handling keeps working.
"""


class RankfuzzError(Exception):
    """Base class for all errors raised by this package."""


class NonPrimeQ(RankfuzzError, ValueError):
    """The base field size q is not a prime in the supported range."""


class DegreeOutOfRange(RankfuzzError, ValueError):
    """Extension degree m outside the supported range 1..64."""


class MismatchedField(RankfuzzError, ValueError):
    """Operands belong to different fields, or an element is out of range."""


class TwistMismatch(RankfuzzError, ValueError):
    """Two linearized polynomials use different twist exponents."""


class DivisionByZero(RankfuzzError, ZeroDivisionError):
    """Inverse or division by the zero field element."""


class DivisionByZeroPoly(RankfuzzError, ZeroDivisionError):
    """Division by the zero linearized polynomial."""


class LengthMismatch(RankfuzzError, ValueError):
    """Vector or point-list length differs from what the operation needs."""


class DimensionMismatch(RankfuzzError, ValueError):
    """Matrix or system shapes are inconsistent."""


class DependentPoints(RankfuzzError, ValueError):
    """Evaluation points are linearly dependent over F_q."""


class DependentFeatures(RankfuzzError, ValueError):
    """A feature set is linearly dependent over F_q."""


class DuplicateFeatures(RankfuzzError, ValueError):
    """A feature set contains a repeated element."""


class DependentRestriction(RankfuzzError, ValueError):
    """A restriction basis for a rank computation is dependent."""


class BadTwist(RankfuzzError, ValueError):
    """Twist exponent s violates 1 <= s and gcd(s, m) = 1."""


class BadDimensions(RankfuzzError, ValueError):
    """Code or scheme dimensions violate their constraints."""


class BadDistance(RankfuzzError, ValueError):
    """Distance argument outside 1..min(n, m)."""


class BadRange(RankfuzzError, ValueError):
    """A numeric parameter is outside its allowed range."""


class TooLarge(RankfuzzError, ValueError):
    """The requested exhaustive computation exceeds the feasibility guard."""


class ParamMismatch(RankfuzzError, ValueError):
    """Stored parameters do not match the objects they are used with."""


class InfeasibleShape(RankfuzzError, RuntimeError):
    """Requested random shape could not be sampled (impossible or retries exhausted)."""


class NotNormal(RankfuzzError, ValueError):
    """Element is not normal: its Frobenius orbit does not span the field."""


class DecodingFailure(RankfuzzError):
    """No codeword within the decoding radius could be recovered."""


class ClaimViolation(RankfuzzError, AssertionError):
    """A hard inequality that must hold on every trial was violated."""
