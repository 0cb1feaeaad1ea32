"""Exception hierarchy for quantum_owa.

Every error raised by the library derives from :class:`QuantumOWAError`,
which is itself a :class:`ValueError`, so callers can catch broadly or
narrowly.
"""


class QuantumOWAError(ValueError):
    """Base class for all library errors."""


class InvalidProbability(QuantumOWAError):
    """A quantum probability has non-finite components."""


class ModulusExceedsOne(InvalidProbability):
    """The modulus of a quantum probability is larger than 1."""

    def __init__(self, message, label=None, modulus=None):
        super().__init__(message)
        self.label = label
        self.modulus = modulus


class NegativeAmplitude(InvalidProbability):
    """A polar amplitude below zero was supplied."""


class InvalidAlpha(QuantumOWAError):
    """Attitude parameter outside (0, 1) and not a limit marker."""


class InvalidLength(QuantumOWAError):
    """Requested weight vector length is below 1."""


class LengthMismatch(QuantumOWAError):
    """Values and weights have different lengths."""


class DegenerateLength(QuantumOWAError):
    """A measure needs at least two weights."""


class EmptyEvidence(QuantumOWAError):
    """An evidence set with no entries."""


class DuplicateLabel(QuantumOWAError):
    """Two evidence sources share a label."""


class ValueOutOfRange(QuantumOWAError):
    """A classical probability outside [0, 1]."""


class InvalidRange(QuantumOWAError):
    """Malformed alpha sweep range."""


class ParseError(QuantumOWAError):
    """A document could not be read into library types.

    ``location`` is either ``"line L, column C"`` for syntax errors or a
    field path such as ``"sources[2].im"`` for schema errors.
    """

    def __init__(self, message, location=None):
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
        self.location = location
