"""Exception types shared across the toolkit."""


class SnarklabError(Exception):
    """Base class for all toolkit errors."""


class MalformedRotation(SnarklabError):
    """An edge-end is missing from or duplicated in the rotation lists."""


class IllegalContraction(SnarklabError):
    """An edge-deletion set violates the degree preconditions of surgery."""


class NotTorus(SnarklabError):
    """Operation requires a torus embedding."""


class NotTriangulation(SnarklabError):
    """Operation requires a (loopless) triangulation."""


class BudgetExceeded(SnarklabError):
    """Search node budget was hit before a definitive answer."""


class RingTooLarge(SnarklabError):
    """Ring length exceeds the dense-encoding limit."""


class NoCompletion(SnarklabError):
    """No simple free completion realizes the prescribed degrees."""


class BadIndices(SnarklabError):
    """Match indices fall outside the ring range or collide."""


class BadChoice(SnarklabError):
    """Invalid site selection for a graph product."""


class BadOrdering(SnarklabError):
    """Ring vertices were not supplied in clockwise order."""


class CertificateExhausted(SnarklabError):
    """Replay of a reducibility certificate exceeded its recorded depth."""


class ParseError(SnarklabError):
    """A text-format input could not be parsed."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
