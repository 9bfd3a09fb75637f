"""Exception hierarchy for ngcurves."""


class NgcurvesError(Exception):
    """Base class for all ngcurves errors."""


class ValidationError(NgcurvesError, ValueError):
    """Invalid input data: bad generators, bad sequences, bad arguments."""


class NonPositiveError(ValidationError):
    pass


class NotStrictlyIncreasingError(ValidationError):
    pass


class GcdNotOneError(ValidationError):
    pass


class SequenceTooShortError(ValidationError):
    pass


class CapExceededError(ValidationError):
    """An input exceeds a configured size cap."""


class BaseNotInSemigroupError(ValidationError):
    pass


class OutOfFamilyRangeError(ValidationError):
    pass


class NotCohenMacaulayError(NgcurvesError):
    """The operation is only defined for Cohen-Macaulay curves."""


class AperyBoundExceededError(NgcurvesError):
    """Internal guard: an Apery column search ran past its provable bound."""


class DegreeTooLargeForOracleError(NgcurvesError):
    pass


class OracleRangeExceededError(NgcurvesError):
    pass
