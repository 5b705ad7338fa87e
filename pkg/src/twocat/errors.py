"""Exception hierarchy shared by every module."""


class TwoCatError(Exception):
    """Base class for library errors."""


class WitnessError(TwoCatError):
    """An error that carries the offending tuple."""

    def __init__(self, message, witness=()):
        super().__init__(f"{message}: {witness!r}" if witness != () else message)
        self.witness = witness


class GroupAxiomError(WitnessError):
    pass


class NotAssociative(GroupAxiomError):
    pass


class NoUnit(GroupAxiomError):
    pass


class NoInverse(GroupAxiomError):
    pass


class NotComposable(WitnessError):
    pass


class ShapeMismatch(WitnessError):
    pass


class SourceTargetMismatch(ShapeMismatch):
    pass


class NotUnital(WitnessError):
    pass


class NotHomomorphism(WitnessError):
    pass


class NotStrictAction(WitnessError):
    pass


class RequiresTwoFunctors(WitnessError):
    """Raised by constructors that only accept actions by 2-functors."""


class SearchBudgetExceeded(TwoCatError):
    def __init__(self, what, cap):
        super().__init__(f"{what}: more than {cap} candidates; raise the cap to continue")
        self.what = what
        self.cap = cap
