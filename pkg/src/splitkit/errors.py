"""Exception types shared across the library."""


class SplitkitError(Exception):
    """Base class for all library errors."""


class DivisionByZero(SplitkitError):
    pass


class FieldMismatch(SplitkitError):
    pass


class CharTwo(SplitkitError):
    pass


class DegreeMismatch(SplitkitError):
    pass


class AmbientMismatch(SplitkitError):
    pass


class BothZero(SplitkitError):
    pass


class IndexOutOfRange(SplitkitError):
    pass


class BetaOutOfRange(SplitkitError):
    pass


class NotInIdeal(SplitkitError):
    """Raised when a polynomial does not vanish on the curve.

    Carries the nonzero normal form that witnesses non-membership.
    """

    def __init__(self, normal_form, message="polynomial is not in the curve ideal"):
        super().__init__(message)
        self.normal_form = normal_form


class ZeroMap(SplitkitError):
    """The evaluation map vanishes identically (the polynomial is double along the curve)."""


class InadmissibleType(SplitkitError):
    pass


class VerificationFailed(SplitkitError):
    """A constructed polynomial failed its own splitting/smoothness verification."""


class SurgeryVerificationFailed(VerificationFailed):
    """A rank-surgery modification changed the splitting type."""


class LSearchExhausted(SplitkitError):
    """The randomized search for an invertible completion block ran out of attempts."""


class ParseError(SplitkitError):
    pass
