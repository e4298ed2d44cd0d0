"""Exception hierarchy shared by all modules."""


class IwasawaError(Exception):
    """Base class for every error raised by the library."""


class PrecisionError(IwasawaError):
    pass


class NotAUnit(IwasawaError):
    pass


class NotPrincipalUnit(IwasawaError):
    pass


class OutsideConvergenceDisk(IwasawaError):
    pass


class BadConductor(IwasawaError):
    pass


class RingTooSmall(IwasawaError):
    pass


class RingMismatch(IwasawaError):
    pass


class TruncationExceeded(IwasawaError):
    pass


class BadSmoothing(IwasawaError):
    pass


class PoleAtTrivialCharacter(IwasawaError):
    """Evaluation hit the pole of a pseudo-measure.

    ``numerator`` is the (finite) numerator integral and ``denominator`` the
    vanished smoothing factor, so callers can inspect the residue data.
    """

    def __init__(self, message, numerator=None, denominator=None):
        super().__init__(message)
        self.numerator = numerator
        self.denominator = denominator


class PoleAtTrivialBranch(PoleAtTrivialCharacter):
    pass


class OddCharacter(IwasawaError):
    pass


class ConfigurationGated(IwasawaError):
    """A documented configuration that is deliberately not supported."""


class DescentFailure(IwasawaError):
    pass


class InsufficientDepth(IwasawaError):
    pass


class NotNormInvariant(IwasawaError):
    pass


class NotPsiFixed(IwasawaError):
    pass


class BadParameter(IwasawaError):
    pass


class IndeterminateInvariants(IwasawaError):
    pass


class NotCoprime(IwasawaError):
    pass


class FitFailure(IwasawaError):
    pass


class LevelTooSmall(IwasawaError):
    pass


class BadWeight(IwasawaError):
    pass
