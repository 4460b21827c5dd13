"""Exception types shared across the toolkit."""


class PcskitError(Exception):
    pass


class NotAssociative(PcskitError):
    """Cayley table violates (i*j)*k = i*(j*k); carries the first bad triple."""

    def __init__(self, i, j, k):
        self.triple = (i, j, k)
        super().__init__(f"not associative at ({i},{j},{k})")


class IndexOutOfRange(PcskitError):
    pass


class TooLarge(PcskitError):
    pass


class NotAGroup(PcskitError):
    pass


class InvalidMatrix(PcskitError):
    pass


class UnknownVariety(PcskitError):
    pass


class UnknownName(PcskitError):
    pass


class TermSyntaxError(PcskitError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at offset {position})")


class EmptyTerm(PcskitError):
    pass


class UnboundVariable(PcskitError):
    pass


class FreshVariableExhausted(PcskitError):
    pass


class MethodDisagreement(PcskitError):
    """The membership deciders returned different answers: an implementation
    bug, never a property of the input semigroup."""

    def __init__(self, details):
        self.details = details
        super().__init__(f"decider disagreement: {details}")


class NotCompletelySimple(PcskitError):
    pass


class NotInPCS(PcskitError):
    pass


class CoverNotFunctional(PcskitError):
    pass
