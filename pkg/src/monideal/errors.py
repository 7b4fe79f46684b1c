"""Exception hierarchy shared by the library and the command line."""


class MonomialIdealError(ValueError):
    """Base class for every error raised by monideal.

    ``operation`` names the library call that failed and ``ideal`` (when
    set) is the offending input, so that front ends can echo it back.
    """

    def __init__(self, message, operation=None, ideal=None):
        super().__init__(message)
        self.operation = operation
        self.ideal = ideal


class DimensionMismatch(MonomialIdealError):
    pass


class NotPrimaryError(MonomialIdealError):
    pass


class NotCompleteError(MonomialIdealError):
    pass


class NotFinitelySupported(MonomialIdealError):
    """A transform left the monomial world (height < d), or the base point
    tree did not terminate within the depth budget."""


class ReconstructionError(MonomialIdealError):
    pass


class ParseError(MonomialIdealError):
    def __init__(self, message, position=None, text=None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message, operation="parse")
        self.position = position
        self.text = text
