"""Exception hierarchy."""


class ExtautoError(Exception):
    """Base class for all library errors."""


class NotAGroup(ExtautoError):
    pass


class UnsupportedSpec(ExtautoError):
    pass


class CapExceeded(ExtautoError):
    """A configured resource cap would be exceeded."""


class OrderCapExceeded(CapExceeded):
    pass


class SearchCapExceeded(CapExceeded):
    pass


class NotNormal(ExtautoError):
    pass


class InvalidFactorSystem(ExtautoError):
    pass


class IncompatiblePair(ExtautoError):
    """(alpha, beta) fails Phi*beta == c_[alpha]*Phi."""


class NotACocycle(ExtautoError):
    pass


class NotSameFiber(ExtautoError):
    pass


class ActionIncompatible(ExtautoError):
    pass


class NotRelative(ExtautoError):
    """Automorphism does not map the normal subgroup onto itself."""


class UnknownExample(ExtautoError):
    pass


class HeavyExampleDisabled(ExtautoError):
    """A heavy catalog entry was requested without opting in."""


class ParseError(ExtautoError):
    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)


class VerificationFailure(ExtautoError):
    """A theorem check failed; this indicates a defect, not bad input."""
